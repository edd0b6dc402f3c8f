#include "revring/gcd_bezout.hpp"

#include "revring/errors.hpp"
#include "revring/poly_ops.hpp"

#include <algorithm>

namespace revring {

namespace {

bool is_zero_value(const RingId& ring, const Value& v) {
    return ring_eq(ring, v, ring_zero(ring));
}

void require_gcd_ring(const RingId& ring) {
    if (ring.kind != RingKind::Integers && ring.kind != RingKind::RationalPoly)
        throw UnsupportedRing("gcd calculus supports Z and Q[x]");
}

} // namespace

bool BezoutCertificate::verify() const {
    Value acc = ring_zero(ring);
    for (size_t i = 0; i < inputs.size(); ++i)
        acc = ring_add(ring, acc, ring_mul(ring, coefficients[i], inputs[i]));
    if (!ring_eq(ring, acc, d)) return false;
    for (const Value& a : inputs) {
        if (is_zero_value(ring, a)) continue;
        if (ring.kind == RingKind::Integers) {
            if (as_int(a) % as_int(d) != 0) return false;
        } else {
            if (!divide_long(as_poly(a), as_poly(d)).remainder.is_zero()) return false;
        }
    }
    return true;
}

std::pair<Value, Value> gcd_lcm(const RingId& ring, const Value& a, const Value& b) {
    require_gcd_ring(ring);
    if (ring.kind == RingKind::Integers) {
        const Int &x = as_int(a), &y = as_int(b);
        if (x == 0 && y == 0) throw BothZero("gcd_lcm: both zero");
        Int g = int_gcd(x, y);
        Int l = (x == 0 || y == 0) ? Int(0) : int_abs(x * y) / g;
        return {g, l};
    }
    const MultiPoly &p = as_poly(a), &q = as_poly(b);
    if (p.is_zero() && q.is_zero()) throw BothZero("gcd_lcm: both zero");
    MultiPoly g = gcd_univariate(p, q);
    MultiPoly l;
    if (!p.is_zero() && !q.is_zero())
        l = make_monic(divide_long(p * q, g).quotient);
    return {g, l};
}

std::pair<Value, Value> gcd_lcm_via_factoring(const RingId& ring, const Value& a,
                                              const Value& b) {
    require_gcd_ring(ring);
    if (is_zero_value(ring, a) && is_zero_value(ring, b)) throw BothZero("gcd_lcm: both zero");
    if (is_zero_value(ring, a) || is_zero_value(ring, b)) return gcd_lcm(ring, a, b);

    // Group both factor lists into associate classes and pair exponents.
    Factorization fa = factor_element(ring, a, 16);
    Factorization fb = factor_element(ring, b, 16);
    std::vector<Value> reps;
    auto class_of = [&](const Value& f) -> size_t {
        for (size_t i = 0; i < reps.size(); ++i)
            if (associates(ring, reps[i], f)) return i;
        reps.push_back(f);
        return reps.size() - 1;
    };
    std::vector<unsigned> ea, eb;
    for (const Value& f : fa.factors) {
        size_t c = class_of(f);
        if (ea.size() <= c) ea.resize(c + 1, 0);
        ++ea[c];
    }
    for (const Value& f : fb.factors) {
        size_t c = class_of(f);
        if (eb.size() <= c) eb.resize(c + 1, 0);
        ++eb[c];
    }
    ea.resize(reps.size(), 0);
    eb.resize(reps.size(), 0);

    Value g = ring_one(ring), l = ring_one(ring);
    for (size_t c = 0; c < reps.size(); ++c) {
        for (unsigned k = 0; k < std::min(ea[c], eb[c]); ++k) g = ring_mul(ring, g, reps[c]);
        for (unsigned k = 0; k < std::max(ea[c], eb[c]); ++k) l = ring_mul(ring, l, reps[c]);
    }
    // canonical: positive over Z, monic over Q[x]
    if (ring.kind == RingKind::Integers) return {int_abs(as_int(g)), int_abs(as_int(l))};
    return {make_monic(as_poly(g)), make_monic(as_poly(l))};
}

BezoutCertificate extended_gcd(const RingId& ring, const Value& a, const Value& b) {
    require_gcd_ring(ring);
    BezoutCertificate cert;
    cert.ring = ring;
    cert.inputs = {a, b};
    if (ring.kind == RingKind::Integers) {
        const Int &x = as_int(a), &y = as_int(b);
        if (x == 0 && y == 0) throw BothZero("extended_gcd: both zero");
        ExtGcd e = int_extended_gcd(x, y);
        cert.d = e.d;
        cert.coefficients = {Value(e.x), Value(e.y)};
        return cert;
    }
    const MultiPoly &p = as_poly(a), &q = as_poly(b);
    if (p.is_zero() && q.is_zero()) throw BothZero("extended_gcd: both zero");
    PolyExtGcd e = poly_extended_gcd(p, q);
    cert.d = e.d;
    cert.coefficients = {Value(e.x), Value(e.y)};
    return cert;
}

BezoutCertificate principal_generator(const FgIdeal& ideal) {
    if (ideal.backend != IdealBackend::Integers && ideal.backend != IdealBackend::RationalPoly)
        throw UnsupportedRing("principal_generator: Bezout backends are Z and Q[x]");
    const RingId& ring = ideal.ring;
    BezoutCertificate cert;
    cert.ring = ring;
    cert.inputs = ideal.generators;
    cert.coefficients.assign(ideal.generators.size(), ring_zero(ring));
    cert.d = ideal.generators[0];
    cert.coefficients[0] = ring_one(ring);
    for (size_t i = 1; i < ideal.generators.size(); ++i) {
        const Value& next = ideal.generators[i];
        if (is_zero_value(ring, cert.d) && is_zero_value(ring, next)) continue;
        BezoutCertificate step = extended_gcd(ring, cert.d, next);
        for (Value& c : cert.coefficients) c = ring_mul(ring, c, step.coefficients[0]);
        cert.coefficients[i] = step.coefficients[1];
        cert.d = step.d;
    }
    // canonical sign for a single generator over Z
    if (ring.kind == RingKind::Integers && as_int(cert.d) < 0) {
        cert.d = -as_int(cert.d);
        for (Value& c : cert.coefficients) c = -as_int(c);
    }
    if (ring.kind == RingKind::RationalPoly && !as_poly(cert.d).is_zero()) {
        Rat lc = as_poly(cert.d).lead_coeff().inverse();
        cert.d = as_poly(cert.d).scale(lc);
        for (Value& c : cert.coefficients) c = as_poly(c).scale(lc);
    }
    return cert;
}

Factorization factor_element(const RingId& ring, const Value& a, unsigned degree_bound) {
    require_gcd_ring(ring);
    Factorization f;
    f.ring = ring;
    if (ring.kind == RingKind::Integers) {
        const Int& x = as_int(a);
        if (x == 0) throw ZeroElement("factor_element: zero");
        f.unit = Int(x < 0 ? -1 : 1);
        for (const Int& p : int_factor(x)) f.factors.emplace_back(p);
        return f;
    }
    PolyFactorization pf = factor(as_poly(a), CoeffRing::Rationals, degree_bound);
    f.unit = MultiPoly::constant(pf.unit);
    for (MultiPoly& q : pf.factors) f.factors.emplace_back(std::move(q));
    return f;
}

std::optional<std::vector<size_t>> factorization_equal(const Factorization& f1,
                                                       const Factorization& f2) {
    if (!(f1.ring == f2.ring)) return std::nullopt;
    if (f1.factors.size() != f2.factors.size()) return std::nullopt;
    // Associateness is an equivalence, so greedy matching with removal is a
    // complete decision procedure.
    std::vector<size_t> h(f1.factors.size());
    std::vector<bool> used(f2.factors.size(), false);
    for (size_t i = 0; i < f1.factors.size(); ++i) {
        bool matched = false;
        for (size_t j = 0; j < f2.factors.size(); ++j) {
            if (used[j]) continue;
            if (associates(f1.ring, f1.factors[i], f2.factors[j])) {
                h[i] = j;
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    return h;
}

unsigned DHNorm::norm(const Value& r) const {
    if (ring.kind == RingKind::Integers) {
        const Int& x = as_int(r);
        if (x == 0) return 0;
        return 1 + static_cast<unsigned>(int_omega(x));
    }
    const MultiPoly& p = as_poly(r);
    if (p.is_zero()) return 0;
    if (p.is_constant()) return 1;
    return 1 + static_cast<unsigned>(factor(p, CoeffRing::Rationals, degree_bound).factors.size());
}

DHReport dh_build_check(const RingId& ring, const std::vector<Value>& sample,
                        unsigned degree_bound) {
    require_gcd_ring(ring);
    DHReport report;
    report.norm = {ring, degree_bound};
    const DHNorm& f = report.norm;

    // axiom (i) on the sample
    for (const Value& r : sample) {
        bool zero = is_zero_value(ring, r);
        if ((f.norm(r) == 0) != zero)
            throw AxiomViolation("DH axiom (i) fails at " + value_str(r));
        if (f.norm(r) == 1) report.units.push_back(r);
    }

    auto divides = [&](const Value& b, const Value& a) {
        if (ring.kind == RingKind::Integers) return as_int(a) % as_int(b) == 0;
        return divide_long(as_poly(a), as_poly(b)).remainder.is_zero();
    };

    for (const Value& a : sample) {
        if (is_zero_value(ring, a)) continue;
        for (const Value& b : sample) {
            if (is_zero_value(ring, b)) continue;
            ++report.pairs_checked;
            // axiom (iii): f(a) <= f(ab)
            if (f.norm(a) > f.norm(ring_mul(ring, a, b)))
                throw AxiomViolation("DH axiom (iii) fails at " + value_str(a) + ", " +
                                     value_str(b));
            // axiom (ii): either b | a or the gcd witnesses 0 < f(ax+by) < f(b)
            if (divides(b, a)) continue;
            BezoutCertificate e = extended_gcd(ring, a, b);
            unsigned fd = f.norm(e.d);
            if (!(0 < fd && fd < f.norm(b)))
                throw AxiomViolation("DH axiom (ii) fails at " + value_str(a) + ", " +
                                     value_str(b));
            if (report.witnesses.size() < 32)
                report.witnesses.push_back(
                    {a, b, e.coefficients[0], e.coefficients[1], e.d});
        }
    }
    return report;
}

Value dh_generator(const FgIdeal& ideal, const DHNorm& norm, unsigned horizon) {
    if (ideal.backend != IdealBackend::Integers && ideal.backend != IdealBackend::RationalPoly)
        throw UnsupportedRing("dh_generator: Z and Q[x] ideals only");
    const RingId& ring = ideal.ring;

    // Enumerate the ideal by closing the generators under subtraction and
    // the elementary division step; a Euclidean run is embedded in this
    // closure, so the minimum norm is reached once the horizon covers it.
    std::vector<Value> pool;
    auto push = [&](const Value& v) {
        if (is_zero_value(ring, v)) return;
        for (const Value& w : pool)
            if (ring_eq(ring, w, v)) return;
        pool.push_back(v);
    };
    for (const Value& g : ideal.generators) push(g);
    if (pool.empty()) throw HorizonTooSmall("dh_generator: zero ideal");

    for (unsigned round = 0; round < horizon; ++round) {
        std::vector<Value> snapshot = pool;
        for (size_t i = 0; i < snapshot.size(); ++i) {
            for (size_t j = 0; j < snapshot.size(); ++j) {
                if (i == j) continue;
                if (ring.kind == RingKind::Integers) {
                    push(Value(as_int(snapshot[i]) % as_int(snapshot[j])));
                } else {
                    push(Value(divide_long(as_poly(snapshot[i]), as_poly(snapshot[j])).remainder));
                }
            }
        }
        if (pool.size() == snapshot.size()) break;  // closure reached
        if (pool.size() > 4096) break;              // desk-scale cap
    }

    const Value* best = nullptr;
    for (const Value& v : pool)
        if (!best || norm.norm(v) < norm.norm(*best)) best = &v;
    return *best;
}

Value princ_ext(const PrincExtData& data) {
    const RingId& ring = data.ideal.ring;
    // witnesses: a = b*(a/b); b = i + a*d with i in I; c generates (I : a)
    if (!ring_eq(ring, data.a, ring_mul(ring, data.b, data.a_over_b)))
        throw InconsistentWitness("princ_ext: a != b * (a/b)");
    if (!contains(data.ideal, data.i_part))
        throw InconsistentWitness("princ_ext: witness i is not in I");
    if (!ring_eq(ring, data.b,
                 ring_add(ring, data.i_part, ring_mul(ring, data.a, data.d))))
        throw InconsistentWitness("princ_ext: b != i + a*d");
    if (contains(data.ideal, data.a))
        throw InconsistentWitness("princ_ext: a must lie outside I");
    FgIdeal quot = ideal_quotient(data.ideal, data.a);
    if (!contains(quot, data.c))
        throw InconsistentWitness("princ_ext: c not in (I : a)");

    Value bc = ring_mul(ring, data.b, data.c);
    if (!contains(data.ideal, bc))
        throw InconsistentWitness("princ_ext: bc does not lie in I");

    // sampled converse: small multiples of the ideal's generator all lie in (bc)
    if (data.ideal.backend == IdealBackend::Integers ||
        data.ideal.backend == IdealBackend::RationalPoly) {
        Value g = data.ideal.principal_value();
        FgIdeal principal_bc =
            data.ideal.backend == IdealBackend::Integers
                ? FgIdeal::integers({as_int(bc)})
                : FgIdeal::rational_poly({as_poly(bc)});
        for (long k = 1; k <= 8; ++k) {
            Value sample = ring_mul(ring, g, ring.kind == RingKind::Integers
                                                 ? Value(Int(k))
                                                 : Value(MultiPoly::constant(Rat(k))));
            if (!contains(principal_bc, sample))
                throw InconsistentWitness("princ_ext: I element escapes (bc)");
        }
    }
    return bc;
}

std::pair<FgIdeal, FgIdeal> prime_branch_step(const FgIdeal& ideal, const Value& a,
                                              const Value& b) {
    if (!contains(ideal, ring_mul(ideal.ring, a, b)))
        throw NotAWitness("prime_branch_step: ab not in I");
    if (contains(ideal, a) || contains(ideal, b))
        throw NotAWitness("prime_branch_step: a and b must lie outside I");

    FgIdeal extended = ideal;
    extended.generators.push_back(a);
    FgIdeal quotient = ideal_quotient(ideal, a);

    if (!contains(extended, a)) throw Error("prime_branch_step: a not in (I, a)");
    if (!contains(quotient, b)) throw Error("prime_branch_step: b not in (I : a)");
    return {extended, quotient};
}

} // namespace revring
