#pragma once

#include <stdexcept>
#include <string>

namespace revring {

// Base class for all workbench errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linalg
struct SingularMatrix : Error { using Error::Error; };
struct ZeroDiagonal : Error { using Error::Error; };
struct NotTriangular : Error { using Error::Error; };

// poly
struct EmptySet : Error { using Error::Error; };
struct DivisionByZeroPoly : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct DegreeBoundExceeded : Error { using Error::Error; };
struct NotUnivariate : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };

// ring / ideal
struct WrongRing : Error { using Error::Error; };
struct UnsupportedRing : Error { using Error::Error; };
struct UndecidableBackend : Error { using Error::Error; };
struct NotFiniteRing : Error { using Error::Error; };
struct NotMonomialIdeal : Error { using Error::Error; };

// fractions / localization
struct ZeroDenominator : Error { using Error::Error; };
struct ZeroDivisorInM : Error { using Error::Error; };
struct StageBudgetExhausted : Error { using Error::Error; };
struct SeparationViolation : Error { using Error::Error; };

// gcd / bezout / norms
struct AxiomViolation : Error { using Error::Error; };
struct HorizonTooSmall : Error { using Error::Error; };
struct InconsistentWitness : Error { using Error::Error; };
struct NotAWitness : Error { using Error::Error; };

// pid-T
struct DenominatorNotInM : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct AllZero : Error { using Error::Error; };

// stage simulations
struct GeneratorNotFound : Error { using Error::Error; };
struct NoFreshWitness : Error { using Error::Error; };
struct ChainViolation : Error { using Error::Error; };
struct BadSchedule : Error { using Error::Error; };

struct StabilizedWithinBudget : Error {
    size_t stage;
    explicit StabilizedWithinBudget(size_t s)
        : Error("chain stabilized within budget at stage " + std::to_string(s)), stage(s) {}
};

// text formats
struct SyntaxError : Error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownSuite : Error { using Error::Error; };

} // namespace revring
