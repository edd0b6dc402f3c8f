#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace revring {

// Arbitrary-precision signed integer. All integer arithmetic in the workbench
// is exact; no floating point anywhere.
using Int = mpz_class;

inline Int int_abs(const Int& a) { return abs(a); }
inline int int_sign(const Int& a) { return sgn(a); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor-mod into [0, n).
Int int_mod(const Int& a, const Int& n);

bool int_is_prime(const Int& a);

// Prime factorization of |a| by trial division, multiplicities expanded:
// 12 -> {2, 2, 3}. Requires a != 0; returns {} for |a| = 1.
std::vector<Int> int_factor(const Int& a);

// Squarefree kernel of |a|: product of the distinct primes dividing a.
// rad(12) = 6, rad(1) = 1. Requires a != 0.
Int int_radical(const Int& a);

// Number of prime factors of |a| counted with multiplicity; 0 for units.
size_t int_omega(const Int& a);

// d = gcd(a, b) together with x, y such that a*x + b*y = d, d >= 0.
struct ExtGcd {
    Int d, x, y;
};
ExtGcd int_extended_gcd(const Int& a, const Int& b);

std::vector<Int> int_divisors(const Int& a);  // positive divisors of |a|, ascending

inline std::string int_str(const Int& a) { return a.get_str(); }

} // namespace revring
