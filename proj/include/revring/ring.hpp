#pragma once

#include "revring/integer.hpp"
#include "revring/multipoly.hpp"
#include "revring/t_ring.hpp"

#include <memory>
#include <string>
#include <variant>

namespace revring {

class StagedRing;  // staged_ring.hpp

enum class RingKind {
    Integers,       // Z
    Modular,        // Z/n, elements are least non-negative residues
    RationalPoly,   // Q[x], univariate
    MultiPolyQ,     // Q[x0, x1, ...]
    IntegerPoly,    // Z[x0, x1, ...] (carrier of the staged construction)
    PidT,           // the localized PID T
    Staged,         // staged quotient-style ring handle
};

struct RingId {
    RingKind kind = RingKind::Integers;
    unsigned long modulus = 0;                  // Modular only, >= 1
    std::shared_ptr<const StagedRing> staged;   // Staged only

    static RingId integers() { return {RingKind::Integers, 0, nullptr}; }
    static RingId modular(unsigned long n);
    static RingId rational_poly() { return {RingKind::RationalPoly, 0, nullptr}; }
    static RingId multipoly() { return {RingKind::MultiPolyQ, 0, nullptr}; }
    static RingId integer_poly() { return {RingKind::IntegerPoly, 0, nullptr}; }
    static RingId pid_t_ring() { return {RingKind::PidT, 0, nullptr}; }

    bool operator==(const RingId& o) const {
        return kind == o.kind && modulus == o.modulus && staged == o.staged;
    }

    std::string str() const;  // "Z", "Z/12", "Q[x]", "T", ...
};

// CLI ring literals: Z, Z/<n>, Q[x], Q[xbar], T.
RingId parse_ring_literal(const std::string& text);

// A ring element value. Which alternative is valid depends on the ring:
// Int for Z and Z/n, MultiPoly for the polynomial rings and staged carriers,
// TElement for T.
using Value = std::variant<Int, MultiPoly, TElement>;

const Int& as_int(const Value& v);
const MultiPoly& as_poly(const Value& v);
const TElement& as_t(const Value& v);

std::string value_str(const Value& v);

// Element validity for the given ring (residues in range, right alternative).
void check_element(const RingId& ring, const Value& v);

Value ring_zero(const RingId& ring);
Value ring_one(const RingId& ring);
Value ring_add(const RingId& ring, const Value& a, const Value& b);
Value ring_sub(const RingId& ring, const Value& a, const Value& b);
Value ring_mul(const RingId& ring, const Value& a, const Value& b);
Value ring_neg(const RingId& ring, const Value& a);
bool ring_eq(const RingId& ring, const Value& a, const Value& b);

// a^n by repeated squaring; a^0 = 1.
Value power(const RingId& ring, const Value& a, unsigned long n);

enum class Flag { No, Yes, Undecided };
inline bool is_yes(Flag f) { return f == Flag::Yes; }

// Element-level predicates. Backends without a decision procedure report
// Undecided rather than guessing.
struct ElementClass {
    Flag unit = Flag::Undecided;
    Flag zero_divisor = Flag::Undecided;
    Flag nilpotent = Flag::Undecided;
    Flag irreducible = Flag::Undecided;
    Flag prime = Flag::Undecided;
};

// Exact classification over Z (via factorization), Z/n (exhaustive residue
// checks) and Q[x] (via factor()).
ElementClass classify(const RingId& ring, const Value& a);

// Associate relation: a = u*b for a unit u. Decidable over Z (sign), Z/n
// (exhaustive) and Q[x] (nonzero scalar ratio); T via equal exponent parts.
bool associates(const RingId& ring, const Value& a, const Value& b);

// x invertible mod n (n = 1 counts as the zero ring, where 0 is the unit).
bool modular_unit(unsigned long n, const Int& x);

} // namespace revring
