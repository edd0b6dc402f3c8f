#pragma once

#include "revring/multipoly.hpp"

#include <vector>

namespace revring {

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

// Standard long division of univariate polynomials over Q:
// p = d*q + r with deg(r) < deg(d). Throws DivisionByZeroPoly.
DivisionResult divide_long(const MultiPoly& p, const MultiPoly& d);

// Division via the upper-triangular linear system solved with
// triangular_solve: the unknowns are the remainder coefficients e_0..e_{m-1}
// followed by the quotient coefficients c_0..c_{n-m}; the right-hand side is
// the coefficient vector of p. Requires deg(p) >= deg(d) (DegreeTooSmall
// otherwise; callers use the trivial q=0, r=p branch).
DivisionResult divide_matrix(const MultiPoly& p, const MultiPoly& d);

// Monic gcd over Q via Euclid's algorithm on the degree norm.
MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q);

struct ContentResult {
    Int content;          // > 0
    MultiPoly primitive;  // p = content * primitive, cont(primitive) = 1
};

// Content/primitive split of a nonzero univariate polynomial over Z.
ContentResult content_primitive(const MultiPoly& p);

enum class CoeffRing { Integers, Rationals };

struct PolyFactorization {
    Rat unit;
    std::vector<MultiPoly> factors;  // sorted canonically

    MultiPoly product() const;
};

// Complete factorization of a univariate polynomial by Kronecker
// interpolation (evaluate at 0, 1, -1, 2, -2, ...; enumerate divisor
// tuples). Irreducibility of every emitted factor is certified by
// exhausting all candidate divisors of lower degree.
//
// Over Z: the integer content is factored into primes (emitted as constant
// factors) and every polynomial factor is primitive with positive leading
// coefficient; the unit is +-1. Over Q: factors are monic and the unit
// absorbs all constants. Throws ZeroPolynomial / DegreeBoundExceeded /
// NotIntegral (Z mode on non-integer input).
PolyFactorization factor(const MultiPoly& p, CoeffRing ring, unsigned degree_bound = 8);

// Convenience: monic normalization of a nonzero univariate polynomial.
MultiPoly make_monic(const MultiPoly& p);

struct PolyExtGcd {
    MultiPoly d;  // monic gcd
    MultiPoly x, y;  // p*x + q*y = d
};

// Extended Euclid over Q[x]; throws BothZero.
PolyExtGcd poly_extended_gcd(const MultiPoly& p, const MultiPoly& q);

} // namespace revring
