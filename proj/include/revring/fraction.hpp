#pragma once

#include "revring/ring.hpp"

namespace revring {

// A formal fraction num/den over a base ring, with equality by
// cross-multiplication: (r,s) ~ (r',s') iff r s' = r' s.
struct Fraction {
    RingId ring;
    Value num;
    Value den;

    static Fraction of(const RingId& r, Value n, Value d);
    static Fraction embed(const RingId& r, Value n);  // n/1

    std::string str() const;
};

bool fraction_eq(const Fraction& a, const Fraction& b);

// Reduced form over Z (divide by gcd, positive denominator) or Q[x]
// (divide by the monic gcd, monic denominator). Throws ZeroDenominator.
Fraction fraction_normalize(const Fraction& f);

Fraction fraction_add(const Fraction& a, const Fraction& b);
Fraction fraction_sub(const Fraction& a, const Fraction& b);
Fraction fraction_mul(const Fraction& a, const Fraction& b);
Fraction fraction_neg(const Fraction& a);

} // namespace revring
