#include "revring/fraction.hpp"

#include "revring/errors.hpp"
#include "revring/poly_ops.hpp"

namespace revring {

Fraction Fraction::of(const RingId& r, Value n, Value d) {
    check_element(r, n);
    check_element(r, d);
    // in the zero ring 0 = 1 and the only fraction is 0/0
    if (ring_eq(r, d, ring_zero(r)) && !ring_eq(r, ring_zero(r), ring_one(r)))
        throw ZeroDenominator("Fraction: zero denominator");
    return {r, std::move(n), std::move(d)};
}

Fraction Fraction::embed(const RingId& r, Value n) {
    return of(r, std::move(n), ring_one(r));
}

std::string Fraction::str() const {
    if (ring_eq(ring, den, ring_one(ring))) return value_str(num);
    return "(" + value_str(num) + ")/(" + value_str(den) + ")";
}

bool fraction_eq(const Fraction& a, const Fraction& b) {
    return ring_eq(a.ring, ring_mul(a.ring, a.num, b.den), ring_mul(a.ring, b.num, a.den));
}

Fraction fraction_normalize(const Fraction& f) {
    if (ring_eq(f.ring, f.den, ring_zero(f.ring)))
        throw ZeroDenominator("fraction_normalize: zero denominator");
    switch (f.ring.kind) {
        case RingKind::Integers: {
            Int n = as_int(f.num), d = as_int(f.den);
            if (n == 0) return {f.ring, Int(0), Int(1)};
            Int g = int_gcd(n, d);
            n /= g;
            d /= g;
            if (d < 0) { n = -n; d = -d; }
            return {f.ring, n, d};
        }
        case RingKind::RationalPoly: {
            const MultiPoly& n = as_poly(f.num);
            const MultiPoly& d = as_poly(f.den);
            if (n.is_zero()) return {f.ring, MultiPoly{}, MultiPoly::constant(1)};
            MultiPoly g = gcd_univariate(n, d);
            MultiPoly n2 = divide_long(n, g).quotient;
            MultiPoly d2 = divide_long(d, g).quotient;
            Rat lc = d2.lead_coeff().inverse();  // monic denominator
            return {f.ring, n2.scale(lc), d2.scale(lc)};
        }
        default:
            throw UnsupportedRing("fraction_normalize: supported over Z and Q[x]");
    }
}

Fraction fraction_add(const Fraction& a, const Fraction& b) {
    // (r/s) + (r'/s') = (rs' + r's)/(ss')
    return {a.ring,
            ring_add(a.ring, ring_mul(a.ring, a.num, b.den), ring_mul(a.ring, b.num, a.den)),
            ring_mul(a.ring, a.den, b.den)};
}

Fraction fraction_sub(const Fraction& a, const Fraction& b) {
    return fraction_add(a, fraction_neg(b));
}

Fraction fraction_mul(const Fraction& a, const Fraction& b) {
    return {a.ring, ring_mul(a.ring, a.num, b.num), ring_mul(a.ring, a.den, b.den)};
}

Fraction fraction_neg(const Fraction& a) {
    return {a.ring, ring_neg(a.ring, a.num), a.den};
}

} // namespace revring
