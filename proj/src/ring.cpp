#include "revring/ring.hpp"

#include "revring/errors.hpp"
#include "revring/poly_ops.hpp"

namespace revring {

RingId RingId::modular(unsigned long n) {
    if (n < 1) throw WrongRing("Z/n requires n >= 1");
    return {RingKind::Modular, n, nullptr};
}

std::string RingId::str() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Modular: return "Z/" + std::to_string(modulus);
        case RingKind::RationalPoly: return "Q[x]";
        case RingKind::MultiPolyQ: return "Q[xbar]";
        case RingKind::IntegerPoly: return "Z[xbar]";
        case RingKind::PidT: return "T";
        case RingKind::Staged: return "staged";
    }
    return "?";
}

RingId parse_ring_literal(const std::string& text) {
    if (text == "Z") return RingId::integers();
    if (text == "Q[x]") return RingId::rational_poly();
    if (text == "Q[xbar]") return RingId::multipoly();
    if (text == "T") return RingId::pid_t_ring();
    if (text.rfind("Z/", 0) == 0) {
        unsigned long n = std::stoul(text.substr(2));
        return RingId::modular(n);
    }
    throw WrongRing("unknown ring literal: " + text);
}

const Int& as_int(const Value& v) {
    const Int* p = std::get_if<Int>(&v);
    if (!p) throw WrongRing("expected an integer element");
    return *p;
}

const MultiPoly& as_poly(const Value& v) {
    const MultiPoly* p = std::get_if<MultiPoly>(&v);
    if (!p) throw WrongRing("expected a polynomial element");
    return *p;
}

const TElement& as_t(const Value& v) {
    const TElement* p = std::get_if<TElement>(&v);
    if (!p) throw WrongRing("expected a T element");
    return *p;
}

std::string value_str(const Value& v) {
    if (const Int* i = std::get_if<Int>(&v)) return int_str(*i);
    if (const MultiPoly* p = std::get_if<MultiPoly>(&v)) return p->str();
    return std::get<TElement>(v).str();
}

namespace {

bool is_int_ring(const RingId& r) {
    return r.kind == RingKind::Integers || r.kind == RingKind::Modular;
}

bool is_poly_ring(const RingId& r) {
    return r.kind == RingKind::RationalPoly || r.kind == RingKind::MultiPolyQ ||
           r.kind == RingKind::IntegerPoly || r.kind == RingKind::Staged;
}

Int reduce_mod(const RingId& r, const Int& a) { return int_mod(a, Int(r.modulus)); }

} // namespace

void check_element(const RingId& ring, const Value& v) {
    if (is_int_ring(ring)) {
        const Int& a = as_int(v);
        if (ring.kind == RingKind::Modular && (a < 0 || a >= Int(ring.modulus)))
            throw WrongRing("residue out of range for " + ring.str());
        return;
    }
    if (is_poly_ring(ring)) {
        const MultiPoly& p = as_poly(v);
        if (ring.kind == RingKind::RationalPoly && !p.is_univariate())
            throw WrongRing("Q[x] element must be univariate");
        if (ring.kind == RingKind::IntegerPoly && !p.is_integral())
            throw WrongRing("Z[xbar] element must have integer coefficients");
        return;
    }
    as_t(v);
}

Value ring_zero(const RingId& ring) {
    if (is_int_ring(ring)) return Int(0);
    if (is_poly_ring(ring)) return MultiPoly{};
    return TElement{};
}

Value ring_one(const RingId& ring) {
    if (is_int_ring(ring)) return ring.kind == RingKind::Modular && ring.modulus == 1
                                      ? Int(0)
                                      : Int(1);
    if (is_poly_ring(ring)) return MultiPoly::constant(1);
    return TElement::one();
}

Value ring_add(const RingId& ring, const Value& a, const Value& b) {
    if (is_int_ring(ring)) {
        Int s = as_int(a) + as_int(b);
        return ring.kind == RingKind::Modular ? reduce_mod(ring, s) : s;
    }
    if (is_poly_ring(ring)) return as_poly(a) + as_poly(b);
    return as_t(a) + as_t(b);
}

Value ring_sub(const RingId& ring, const Value& a, const Value& b) {
    if (is_int_ring(ring)) {
        Int s = as_int(a) - as_int(b);
        return ring.kind == RingKind::Modular ? reduce_mod(ring, s) : s;
    }
    if (is_poly_ring(ring)) return as_poly(a) - as_poly(b);
    return as_t(a) - as_t(b);
}

Value ring_mul(const RingId& ring, const Value& a, const Value& b) {
    if (is_int_ring(ring)) {
        Int s = as_int(a) * as_int(b);
        return ring.kind == RingKind::Modular ? reduce_mod(ring, s) : s;
    }
    if (is_poly_ring(ring)) return as_poly(a) * as_poly(b);
    return as_t(a) * as_t(b);
}

Value ring_neg(const RingId& ring, const Value& a) {
    return ring_sub(ring, ring_zero(ring), a);
}

bool ring_eq(const RingId& ring, const Value& a, const Value& b) {
    if (is_int_ring(ring)) return as_int(a) == as_int(b);
    if (is_poly_ring(ring)) return as_poly(a) == as_poly(b);
    return as_t(a) == as_t(b);
}

Value power(const RingId& ring, const Value& a, unsigned long n) {
    check_element(ring, a);
    Value acc = ring_one(ring);
    Value base = a;
    while (n > 0) {
        if (n & 1) acc = ring_mul(ring, acc, base);
        base = ring_mul(ring, base, base);
        n >>= 1;
    }
    return acc;
}

bool modular_unit(unsigned long n, const Int& x) {
    if (n == 1) return true;
    const Int N(n);
    return int_gcd(x, N) == 1;
}

namespace {

ElementClass classify_integers(const Int& a) {
    ElementClass c;
    c.unit = int_abs(a) == 1 ? Flag::Yes : Flag::No;
    // 0 is a zero-divisor of Z (b = 1 works); nothing else is.
    c.zero_divisor = a == 0 ? Flag::Yes : Flag::No;
    c.nilpotent = a == 0 ? Flag::Yes : Flag::No;
    bool irr = int_is_prime(a);
    c.irreducible = irr ? Flag::Yes : Flag::No;
    c.prime = irr ? Flag::Yes : Flag::No;
    return c;
}

ElementClass classify_modular(unsigned long n, const Int& a) {
    ElementClass c;
    const Int N(n);
    auto mul = [&](const Int& x, const Int& y) { return int_mod(x * y, N); };

    bool unit = false, zd = false;
    for (Int b = 0; b < N; ++b) {
        if (mul(a, b) == 1 % N) unit = true;
        if (b != 0 && mul(a, b) == 0) zd = true;
    }
    if (n == 1) unit = true;  // zero ring: 0 = 1
    c.unit = unit ? Flag::Yes : Flag::No;
    c.zero_divisor = zd ? Flag::Yes : Flag::No;

    bool nil = false;
    {
        Int p = int_mod(a, N);
        for (unsigned long k = 0; k < n + 1 && !nil; ++k) {
            if (p == 0) nil = true;
            p = mul(p, a);
        }
    }
    c.nilpotent = nil ? Flag::Yes : Flag::No;

    auto divides = [&](const Int& r, const Int& x) {
        for (Int t = 0; t < N; ++t)
            if (mul(r, t) == x) return true;
        return false;
    };

    bool proper = a != 0 && !divides(a, 1 % N);
    if (n == 1) proper = false;
    bool irr = proper;
    if (proper) {
        for (Int x = 0; x < N && irr; ++x)
            for (Int y = 0; y < N && irr; ++y)
                if (mul(x, y) == a && !modular_unit(n, x) && !modular_unit(n, y)) irr = false;
    }
    c.irreducible = irr ? Flag::Yes : Flag::No;

    bool prime = proper;
    if (proper) {
        for (Int x = 0; x < N && prime; ++x)
            for (Int y = 0; y < N && prime; ++y)
                if (divides(a, mul(x, y)) && !divides(a, x) && !divides(a, y)) prime = false;
    }
    c.prime = prime ? Flag::Yes : Flag::No;
    return c;
}

ElementClass classify_rational_poly(const MultiPoly& p) {
    ElementClass c;
    c.unit = (!p.is_zero() && p.is_constant()) ? Flag::Yes : Flag::No;
    c.zero_divisor = p.is_zero() ? Flag::Yes : Flag::No;
    c.nilpotent = p.is_zero() ? Flag::Yes : Flag::No;
    if (p.is_zero() || p.is_constant()) {
        c.irreducible = Flag::No;
        c.prime = Flag::No;
        return c;
    }
    PolyFactorization f = factor(p, CoeffRing::Rationals);
    bool irr = f.factors.size() == 1;
    c.irreducible = irr ? Flag::Yes : Flag::No;
    c.prime = irr ? Flag::Yes : Flag::No;  // Q[x] is a UFD: irreducible = prime
    return c;
}

} // namespace

ElementClass classify(const RingId& ring, const Value& a) {
    check_element(ring, a);
    switch (ring.kind) {
        case RingKind::Integers: return classify_integers(as_int(a));
        case RingKind::Modular: return classify_modular(ring.modulus, as_int(a));
        case RingKind::RationalPoly: return classify_rational_poly(as_poly(a));
        default: break;
    }
    ElementClass c;  // all Undecided
    if (ring.kind == RingKind::PidT) {
        const TElement& t = as_t(a);
        c.unit = t.is_unit() ? Flag::Yes : Flag::No;
        c.zero_divisor = t.is_zero() ? Flag::Yes : Flag::No;
        c.nilpotent = t.is_zero() ? Flag::Yes : Flag::No;
        // Irreducibility in T is horizon-relative (see pi2_simulate): no
        // total decision procedure is claimed here.
    }
    return c;
}

bool associates(const RingId& ring, const Value& a, const Value& b) {
    check_element(ring, a);
    check_element(ring, b);
    switch (ring.kind) {
        case RingKind::Integers:
            return int_abs(as_int(a)) == int_abs(as_int(b));
        case RingKind::Modular: {
            const Int N(ring.modulus);
            for (Int u = 0; u < N; ++u)
                if (modular_unit(ring.modulus, u) && int_mod(as_int(b) * u, N) == as_int(a))
                    return true;
            if (ring.modulus == 1) return true;
            return false;
        }
        case RingKind::RationalPoly: {
            const MultiPoly& p = as_poly(a);
            const MultiPoly& q = as_poly(b);
            if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
            Rat ratio = p.lead_coeff() / q.lead_coeff();
            return q.scale(ratio) == p;
        }
        case RingKind::PidT: {
            const TElement& s = as_t(a);
            const TElement& t = as_t(b);
            if (s.is_zero() || t.is_zero()) return s.is_zero() && t.is_zero();
            return s.beta() == t.beta();
        }
        default:
            throw UndecidableBackend("associates: no decision procedure for " + ring.str());
    }
}

} // namespace revring
