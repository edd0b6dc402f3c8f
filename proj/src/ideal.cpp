#include "revring/ideal.hpp"

#include "revring/errors.hpp"
#include "revring/poly_ops.hpp"
#include "revring/staged_ring.hpp"

#include <algorithm>
#include <set>

namespace revring {

namespace {

void require_nonempty(const std::vector<Value>& gens) {
    if (gens.empty()) throw Error("FgIdeal: empty generator list");
}

// Generator of a Z/n ideal as a positive divisor of n; n encodes the zero ideal.
Int modular_gen(const FgIdeal& ideal) {
    const Int n(ideal.ring.modulus);
    Int g = n;
    for (const Value& v : ideal.generators) g = int_gcd(g, as_int(v));
    return g == 0 ? n : g;
}

Int integer_gen(const FgIdeal& ideal) {
    Int g = 0;
    for (const Value& v : ideal.generators) g = int_gcd(g, as_int(v));
    return g;
}

MultiPoly poly_gen(const FgIdeal& ideal) {
    MultiPoly g;
    for (const Value& v : ideal.generators) {
        const MultiPoly& p = as_poly(v);
        if (p.is_zero()) continue;
        g = g.is_zero() ? make_monic(p) : gcd_univariate(g, p);
    }
    return g;
}

std::vector<ExponentVector> monomial_exponents(const FgIdeal& ideal) {
    std::vector<ExponentVector> out;
    for (const Value& v : ideal.generators) {
        const MultiPoly& p = as_poly(v);
        if (p.is_zero()) continue;
        out.push_back(p.lead_exponent());
    }
    return out;
}

// Drop exponents divisible by another (minimal generating set); duplicates
// keep their first occurrence.
std::vector<ExponentVector> minimal_monomials(const std::vector<ExponentVector>& es) {
    std::vector<ExponentVector> out;
    for (size_t i = 0; i < es.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < es.size() && !redundant; ++j) {
            if (i == j) continue;
            if (es[j] == es[i]) redundant = j < i;
            else if (es[j].divides(es[i])) redundant = true;
        }
        if (!redundant) out.push_back(es[i]);
    }
    return out;
}

TIdeal t_ideal_of(const FgIdeal& ideal) {
    TIdeal t;
    for (const Value& v : ideal.generators) t.generators.push_back(as_t(v));
    return t;
}

} // namespace

FgIdeal FgIdeal::integers(std::vector<Int> gens) {
    FgIdeal f{RingId::integers(), {}, IdealBackend::Integers};
    for (Int& g : gens) f.generators.emplace_back(std::move(g));
    require_nonempty(f.generators);
    return f;
}

FgIdeal FgIdeal::modular(unsigned long n, std::vector<Int> gens) {
    FgIdeal f{RingId::modular(n), {}, IdealBackend::Modular};
    for (Int& g : gens) f.generators.emplace_back(int_mod(g, Int(n)));
    require_nonempty(f.generators);
    return f;
}

FgIdeal FgIdeal::rational_poly(std::vector<MultiPoly> gens) {
    FgIdeal f{RingId::rational_poly(), {}, IdealBackend::RationalPoly};
    for (MultiPoly& g : gens) {
        if (!g.is_univariate()) throw WrongRing("Q[x] ideal generator must be univariate");
        f.generators.emplace_back(std::move(g));
    }
    require_nonempty(f.generators);
    return f;
}

FgIdeal FgIdeal::monomial(std::vector<MultiPoly> gens) {
    FgIdeal f{RingId::multipoly(), {}, IdealBackend::Monomial};
    for (MultiPoly& g : gens) {
        if (g.term_count() > 1) throw NotMonomialIdeal("monomial ideal generator has several terms");
        f.generators.emplace_back(std::move(g));
    }
    require_nonempty(f.generators);
    return f;
}

FgIdeal FgIdeal::pid_t(std::vector<TElement> gens) {
    FgIdeal f{RingId::pid_t_ring(), {}, IdealBackend::PidT};
    for (TElement& g : gens) f.generators.emplace_back(std::move(g));
    require_nonempty(f.generators);
    return f;
}

FgIdeal FgIdeal::staged(std::shared_ptr<const StagedRing> handle) {
    RingId rid{RingKind::Staged, 0, std::move(handle)};
    FgIdeal f{rid, {}, IdealBackend::Staged};
    f.generators.emplace_back(staged_product_generator());
    return f;
}

Value FgIdeal::principal_value() const {
    switch (backend) {
        case IdealBackend::Integers: return integer_gen(*this);
        case IdealBackend::Modular: return int_mod(modular_gen(*this), Int(ring.modulus));
        case IdealBackend::RationalPoly: return poly_gen(*this);
        default: throw UndecidableBackend("principal_value: not a principal backend");
    }
}

bool contains(const FgIdeal& ideal, const Value& r) {
    check_element(ideal.ring, r);
    switch (ideal.backend) {
        case IdealBackend::Integers: {
            Int g = integer_gen(ideal);
            if (g == 0) return as_int(r) == 0;
            return as_int(r) % g == 0;
        }
        case IdealBackend::Modular: {
            // Finite definition: the subgroup generated by the generators.
            Int g = modular_gen(ideal);
            return int_mod(as_int(r), g) == 0;
        }
        case IdealBackend::RationalPoly: {
            MultiPoly g = poly_gen(ideal);
            const MultiPoly& p = as_poly(r);
            if (g.is_zero()) return p.is_zero();
            return divide_long(p, g).remainder.is_zero();
        }
        case IdealBackend::Monomial: {
            const MultiPoly& p = as_poly(r);
            auto gens = monomial_exponents(ideal);
            for (const auto& [e, c] : p.terms()) {
                bool covered = false;
                for (const auto& ge : gens)
                    if (ge.divides(e)) { covered = true; break; }
                if (!covered) return false;
            }
            return true;
        }
        case IdealBackend::PidT: {
            TIdeal t = t_ideal_of(ideal);
            bool all_zero = true;
            for (const TElement& g : t.generators) all_zero = all_zero && g.is_zero();
            if (all_zero) return as_t(r).is_zero();
            return t_divides(t_principal_generator(t).generator, as_t(r));
        }
        case IdealBackend::Staged:
            return ideal.ring.staged->staged_membership(as_poly(r));
    }
    throw UndecidableBackend("contains: unsupported backend");
}

FgIdeal ideal_quotient(const FgIdeal& ideal, const Value& a) {
    check_element(ideal.ring, a);
    switch (ideal.backend) {
        case IdealBackend::Integers: {
            Int m = integer_gen(ideal);
            const Int& av = as_int(a);
            if (av == 0) return FgIdeal::integers({Int(1)});  // r*0 = 0 in I always
            if (m == 0) return FgIdeal::integers({Int(0)});
            return FgIdeal::integers({m / int_gcd(m, av)});
        }
        case IdealBackend::Modular: {
            const unsigned long n = ideal.ring.modulus;
            const Int N(n);
            std::vector<Int> members;
            for (Int r = 0; r < N; ++r)
                if (contains(ideal, Value(int_mod(r * as_int(a), N)))) members.push_back(r);
            Int g = N;
            for (const Int& r : members) g = int_gcd(g, r);
            return FgIdeal::modular(n, {int_mod(g, N)});
        }
        case IdealBackend::RationalPoly: {
            MultiPoly f = poly_gen(ideal);
            const MultiPoly& av = as_poly(a);
            if (av.is_zero()) return FgIdeal::rational_poly({MultiPoly::constant(1)});
            if (f.is_zero()) return FgIdeal::rational_poly({MultiPoly{}});
            MultiPoly g = gcd_univariate(f, av);
            return FgIdeal::rational_poly({divide_long(f, g).quotient});
        }
        case IdealBackend::Monomial: {
            const MultiPoly& av = as_poly(a);
            if (av.is_zero()) return FgIdeal::monomial({MultiPoly::constant(1)});
            if (av.term_count() > 1)
                throw NotMonomialIdeal("monomial ideal quotient by a non-monomial");
            ExponentVector gamma = av.lead_exponent();
            std::vector<MultiPoly> gens;
            for (const auto& e : monomial_exponents(ideal))
                gens.push_back(MultiPoly::monomial(e.minus(ExponentVector::meet(e, gamma)), 1));
            if (gens.empty()) gens.push_back(MultiPoly{});
            return FgIdeal::monomial(std::move(gens));
        }
        default:
            throw UndecidableBackend("ideal_quotient: unsupported backend");
    }
}

FgIdeal radical(const FgIdeal& ideal) {
    switch (ideal.backend) {
        case IdealBackend::Integers: {
            Int m = integer_gen(ideal);
            if (m == 0 || m == 1) return FgIdeal::integers({m});
            return FgIdeal::integers({int_radical(m)});
        }
        case IdealBackend::Modular: {
            const unsigned long n = ideal.ring.modulus;
            const Int N(n);
            Int g = N;
            for (Int a = 0; a < N; ++a) {
                // a in sqrt(I) iff some power lands in I; powers cycle within n steps
                Int p = int_mod(a, N);
                for (unsigned long k = 0; k < n; ++k) {
                    if (contains(ideal, Value(p))) { g = int_gcd(g, a); break; }
                    p = int_mod(p * a, N);
                }
            }
            return FgIdeal::modular(n, {int_mod(g, N)});
        }
        case IdealBackend::Monomial: {
            std::vector<MultiPoly> gens;
            for (const auto& e : monomial_exponents(ideal)) {
                ExponentVector sqfree;
                for (uint32_t v : e.support()) sqfree.set(v, 1);
                gens.push_back(MultiPoly::monomial(sqfree, 1));
            }
            if (gens.empty()) gens.push_back(MultiPoly{});
            return FgIdeal::monomial(std::move(gens));
        }
        default:
            throw UndecidableBackend("radical: unsupported backend");
    }
}

namespace {

IdealClass classify_integer_ideal(const FgIdeal& ideal) {
    IdealClass c;
    Int m = integer_gen(ideal);
    if (m == 0) {
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = Flag::Yes;  // adjoint of {0} in a domain is {0}
        return c;
    }
    if (m == 1) {
        // The whole ring: the bare conditions hold vacuously; the adjoint is
        // empty, hence not an ideal.
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = Flag::No;
        return c;
    }
    auto primes = int_factor(m);
    bool single_prime = std::all_of(primes.begin(), primes.end(),
                                    [&](const Int& p) { return p == primes[0]; });
    bool squarefree = int_radical(m) == m;
    c.prime = (primes.size() == 1) ? Flag::Yes : Flag::No;
    c.maximal = c.prime;
    c.primary = single_prime ? Flag::Yes : Flag::No;
    c.semiprime = squarefree ? Flag::Yes : Flag::No;
    c.primal = single_prime ? Flag::Yes : Flag::No;
    return c;
}

IdealClass classify_modular_ideal(const FgIdeal& ideal) {
    IdealClass c;
    const unsigned long n = ideal.ring.modulus;
    const long ln = static_cast<long>(n);
    const Int N(n);
    const long d = modular_gen(ideal).get_si();  // ideal = (d), d | n (n = zero ideal)

    // residue tables keep the exhaustive checks quadratic
    std::vector<bool> in(n, false);
    for (long a = 0; a < ln; ++a) in[static_cast<size_t>(a)] = (a % d == 0);
    std::vector<bool> hits(n, false);  // some positive power lands in the ideal
    for (long a = 0; a < ln; ++a) {
        long p = a % ln;
        for (unsigned long k = 0; k < n; ++k) {
            if (in[static_cast<size_t>(p)]) { hits[static_cast<size_t>(a)] = true; break; }
            p = (p * a) % ln;
        }
    }

    const bool proper = (n != 1) && !in[1 % n];

    bool prime = true, primary = true, semiprime = true;
    for (long a = 0; a < ln; ++a) {
        if (hits[static_cast<size_t>(a)] && !in[static_cast<size_t>(a)]) semiprime = false;
        for (long b = 0; b < ln; ++b) {
            if (!in[static_cast<size_t>((a * b) % ln)]) continue;
            if (!in[static_cast<size_t>(a)] && !in[static_cast<size_t>(b)]) prime = false;
            if (!in[static_cast<size_t>(a)] && !hits[static_cast<size_t>(b)]) primary = false;
        }
    }
    c.prime = prime ? Flag::Yes : Flag::No;
    c.primary = primary ? Flag::Yes : Flag::No;
    c.semiprime = semiprime ? Flag::Yes : Flag::No;
    c.maximal = (proper && int_is_prime(Int(d))) ? Flag::Yes : Flag::No;

    // adjoint = { a : exists b not in I with ab in I }
    std::set<long> adjoint;
    for (long a = 0; a < ln; ++a)
        for (long b = 0; b < ln; ++b)
            if (!in[static_cast<size_t>(b)] && in[static_cast<size_t>((a * b) % ln)]) {
                adjoint.insert(a);
                break;
            }
    c.adjoint_known = true;
    for (long a : adjoint) c.adjoint.emplace_back(Int(a));

    bool ideal_closed = !adjoint.empty();  // the empty set is not an ideal
    for (auto ai = adjoint.begin(); ideal_closed && ai != adjoint.end(); ++ai) {
        for (long b : adjoint)
            if (!adjoint.count((*ai + b) % ln)) { ideal_closed = false; break; }
        for (long r = 0; r < ln && ideal_closed; ++r)
            if (!adjoint.count((*ai * r) % ln)) ideal_closed = false;
    }
    c.primal = ideal_closed ? Flag::Yes : Flag::No;
    return c;
}

IdealClass classify_monomial_ideal(const FgIdeal& ideal) {
    IdealClass c;
    auto gens = minimal_monomials(monomial_exponents(ideal));
    bool whole_ring = std::any_of(gens.begin(), gens.end(),
                                  [](const ExponentVector& e) { return e.is_zero(); });
    bool zero_ideal = gens.empty();
    if (whole_ring || zero_ideal) {
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = zero_ideal ? Flag::Yes : Flag::No;
        return c;
    }

    bool prime = std::all_of(gens.begin(), gens.end(),
                             [](const ExponentVector& e) { return e.total_degree() == 1; });
    bool semiprime = std::all_of(gens.begin(), gens.end(), [](const ExponentVector& e) {
        for (const auto& [v, k] : e.entries())
            if (k > 1) return false;
        return true;
    });

    // Primary iff every variable occurring in a minimal generator occurs as a
    // pure power generator; fine grading reduces the general test to
    // monomials.
    std::set<uint32_t> vars, pure;
    for (const auto& e : gens) {
        for (uint32_t v : e.support()) vars.insert(v);
        if (e.support().size() == 1) pure.insert(e.support()[0]);
    }
    bool primary = std::all_of(vars.begin(), vars.end(),
                               [&](uint32_t v) { return pure.count(v) > 0; });

    c.prime = prime ? Flag::Yes : Flag::No;
    c.primary = primary ? Flag::Yes : Flag::No;
    c.semiprime = semiprime ? Flag::Yes : Flag::No;
    c.maximal = Flag::No;  // countably many variables: some x_i is always missing
    c.primal = primary ? Flag::Yes : Flag::Undecided;
    return c;
}

IdealClass classify_rational_poly_ideal(const FgIdeal& ideal) {
    IdealClass c;
    MultiPoly f = poly_gen(ideal);
    if (f.is_zero()) {
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = Flag::Yes;
        return c;
    }
    if (f.is_constant()) {  // the whole ring
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = Flag::No;
        return c;
    }
    PolyFactorization fac = factor(f, CoeffRing::Rationals, 16);
    bool single = true;
    for (const MultiPoly& q : fac.factors) single = single && (q == fac.factors[0]);
    bool squarefree = true;
    for (size_t i = 0; i + 1 < fac.factors.size(); ++i)
        squarefree = squarefree && fac.factors[i] != fac.factors[i + 1];
    c.prime = fac.factors.size() == 1 ? Flag::Yes : Flag::No;
    c.maximal = c.prime;
    c.primary = single ? Flag::Yes : Flag::No;
    c.semiprime = squarefree ? Flag::Yes : Flag::No;
    c.primal = single ? Flag::Yes : Flag::No;
    return c;
}

IdealClass classify_t_ideal(const FgIdeal& ideal) {
    IdealClass c;
    TIdeal t = t_ideal_of(ideal);
    bool all_zero = std::all_of(t.generators.begin(), t.generators.end(),
                                [](const TElement& g) { return g.is_zero(); });
    if (all_zero) {
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = Flag::Yes;
        return c;
    }
    ExponentVector alpha = t_principal_generator(t).generator.beta();
    if (alpha.is_zero()) {  // unit ideal
        c.prime = c.primary = c.semiprime = Flag::Yes;
        c.maximal = Flag::No;
        c.primal = Flag::No;
        return c;
    }
    bool prime = alpha.total_degree() == 1;
    bool primary = alpha.support().size() == 1;
    bool squarefree = true;
    for (const auto& [v, k] : alpha.entries()) squarefree = squarefree && k == 1;
    c.prime = prime ? Flag::Yes : Flag::No;
    c.maximal = c.prime;  // nonzero primes are maximal in a PID
    c.primary = primary ? Flag::Yes : Flag::No;
    c.semiprime = squarefree ? Flag::Yes : Flag::No;
    c.primal = primary ? Flag::Yes : Flag::Undecided;
    return c;
}

} // namespace

IdealClass classify_ideal(const FgIdeal& ideal) {
    switch (ideal.backend) {
        case IdealBackend::Integers: return classify_integer_ideal(ideal);
        case IdealBackend::Modular: return classify_modular_ideal(ideal);
        case IdealBackend::Monomial: return classify_monomial_ideal(ideal);
        case IdealBackend::RationalPoly: return classify_rational_poly_ideal(ideal);
        case IdealBackend::PidT: return classify_t_ideal(ideal);
        default:
            throw UndecidableBackend("classify_ideal: unsupported backend");
    }
}

ComaximalResult comaximal(const FgIdeal& i, const FgIdeal& j) {
    if (i.backend != j.backend) throw WrongRing("comaximal: ideals in different rings");
    switch (i.backend) {
        case IdealBackend::Integers: {
            Int gi = integer_gen(i), gj = integer_gen(j);
            ExtGcd e = int_extended_gcd(gi, gj);
            if (e.d != 1) return {false, std::nullopt};
            return {true, std::make_pair(Value(e.x * gi), Value(e.y * gj))};
        }
        case IdealBackend::RationalPoly: {
            MultiPoly gi = poly_gen(i), gj = poly_gen(j);
            if (gi.is_zero() && gj.is_zero()) return {false, std::nullopt};
            PolyExtGcd e = poly_extended_gcd(gi, gj);
            if (!(e.d == MultiPoly::constant(1))) return {false, std::nullopt};
            return {true, std::make_pair(Value(e.x * gi), Value(e.y * gj))};
        }
        default:
            throw UndecidableBackend("comaximal: unsupported backend");
    }
}

QuotientRing::QuotientRing(RingId base, FgIdeal ideal)
    : base_(std::move(base)), ideal_(std::move(ideal)) {
    if (base_.kind == RingKind::Integers && ideal_.backend == IdealBackend::Integers) return;
    if (base_.kind == RingKind::RationalPoly && ideal_.backend == IdealBackend::RationalPoly) return;
    throw UndecidableBackend("quotient_ring: supported bases are Z and Q[x]");
}

Value QuotientRing::q(const Value& r) const {
    check_element(base_, r);
    if (base_.kind == RingKind::Integers) {
        Int m = integer_gen(ideal_);
        if (m == 0) return r;
        return int_mod(as_int(r), m);
    }
    MultiPoly f = poly_gen(ideal_);
    if (f.is_zero()) return r;
    return divide_long(as_poly(r), f).remainder;
}

QuotientRing quotient_ring(const RingId& base, const FgIdeal& ideal) {
    return QuotientRing(base, ideal);
}

std::vector<std::pair<FgIdeal, FgIdeal>> ideal_correspondence(unsigned long n) {
    if (n < 1) throw WrongRing("ideal_correspondence: n >= 1 required");
    std::vector<std::pair<FgIdeal, FgIdeal>> out;
    for (const Int& d : int_divisors(Int(static_cast<long>(n))))
        out.emplace_back(FgIdeal::integers({d}), FgIdeal::modular(n, {d}));
    return out;
}

std::optional<FgIdeal> proper_extension(const RingId& ring, const FgIdeal& ideal) {
    if (ring.kind != RingKind::Modular)
        throw NotFiniteRing("proper_extension: ring must be Z/n");
    FgIdeal rad = radical(ideal);
    Int r = modular_gen(rad);
    // Ideals of Z/n are (d) for divisors d | n; (d) strictly contains (r)
    // exactly when d properly divides r; proper means d != 1.
    for (const Int& d : int_divisors(r)) {
        if (d == 1 || d == r) continue;
        return FgIdeal::modular(ring.modulus, {d});
    }
    return std::nullopt;
}

} // namespace revring
