#include "revring/suites.hpp"

#include "revring/errors.hpp"
#include "revring/gcd_bezout.hpp"
#include "revring/linear_ring.hpp"
#include "revring/localize.hpp"
#include "revring/matrix.hpp"
#include "revring/poly_ops.hpp"
#include "revring/priority_merge.hpp"
#include "revring/t_ring.hpp"
#include "revring/zorn.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace revring {

namespace {

// ---- helpers -------------------------------------------------------------

struct Ctx {
    Rng rng;
    unsigned long scale;
    unsigned long cases = 0;
    std::vector<std::string>* failures;

    void fail(const std::string& msg) {
        if (failures->size() < 24) failures->push_back(msg);
    }
    void check(bool ok, const std::string& msg) {
        ++cases;
        if (!ok) fail(msg);
    }
};

MultiPoly random_univariate(Rng& rng, long maxdeg, long span, bool exact_degree = false) {
    long d = exact_degree ? maxdeg : rng.range(0, maxdeg);
    MultiPoly p;
    for (long k = 0; k < d; ++k)
        p += MultiPoly::monomial(ExponentVector::variable(0, static_cast<uint32_t>(k)),
                                 Rat(rng.range(-span, span)));
    long lead = rng.range(1, span);
    if (rng.below(2)) lead = -lead;
    p += MultiPoly::monomial(ExponentVector::variable(0, static_cast<uint32_t>(d)), Rat(lead));
    return p;
}

MultiPoly random_rational_univariate(Rng& rng, long maxdeg, long span) {
    MultiPoly p = random_univariate(rng, maxdeg, span);
    return p.scale(Rat(1, rng.range(1, 3)));
}

StageEnumeration random_schedule(Rng& rng, long max_element, unsigned max_stage, size_t count) {
    std::vector<StageEnumeration::Entry> entries;
    std::vector<bool> used(static_cast<size_t>(max_element) + 1, false);
    for (size_t i = 0; i < count; ++i) {
        long e = rng.range(0, max_element);
        if (used[static_cast<size_t>(e)]) continue;
        used[static_cast<size_t>(e)] = true;
        entries.push_back({e, static_cast<unsigned>(rng.range(1, static_cast<long>(max_stage)))});
    }
    return StageEnumeration::from_entries(std::move(entries));
}

// ---- 1. division equivalence ---------------------------------------------

void suite_division(Ctx& c) {
    for (unsigned long t = 0; t < c.scale; ++t) {
        MultiPoly d = random_rational_univariate(c.rng, 8, 9);
        while (d.is_zero()) d = random_rational_univariate(c.rng, 8, 9);
        long dd = d.degree_in(0);
        MultiPoly p = random_rational_univariate(c.rng, 8, 9);
        if (p.degree_in(0) < dd) std::swap(p, d);
        if (d.is_zero()) { d = MultiPoly::constant(1); }
        DivisionResult lhs = divide_matrix(p, d);
        DivisionResult rhs = divide_long(p, d);
        c.check(lhs.quotient == rhs.quotient && lhs.remainder == rhs.remainder,
                "divide_matrix != divide_long for p = " + p.str() + ", d = " + d.str());
        c.check(d * lhs.quotient + lhs.remainder == p,
                "division identity fails for p = " + p.str());
    }
}

// ---- 2. appendix linear-algebra identities ---------------------------------

void suite_appendix(Ctx& c) {
    for (unsigned long t = 0; t < c.scale; ++t) {
        size_t n = 1 + c.rng.below(5);
        Matrix a(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                a.at(i, j) = Rat(c.rng.range(-9, 9), c.rng.range(1, 3));
        Rat det = determinant(a);
        Matrix adj = adjugate(a);
        Matrix expect(n);
        for (size_t i = 0; i < n; ++i) expect.at(i, i) = det;
        c.check(a * adj == expect && adj * a == expect, "A*adj(A) != det(A)*I at size " +
                                                            std::to_string(n));

        Matrix u(n);
        Rat prod = 1;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i; j < n; ++j) u.at(i, j) = Rat(c.rng.range(-7, 7));
            prod *= u.at(i, i);
        }
        c.check(determinant(u) == prod, "triangular determinant != diagonal product");
    }
}

// ---- 3. radical / primary identities ---------------------------------------

void suite_radical(Ctx& c) {
    const long bz = static_cast<long>(c.scale);           // Z bound
    const unsigned long bm = std::min<unsigned long>(100, c.scale / 3);  // Z/n bound

    auto rad = [](long m) { return int_radical(Int(m)); };
    for (long m = 1; m <= bz; ++m)
        for (long n = 1; n <= bz; ++n) {
            Int lhs = rad(int_lcm(Int(m), Int(n)).get_si());
            Int rhs = int_lcm(rad(m), rad(n));
            c.check(lhs == rhs, "radical of intersection fails at m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
        }

    for (long m = 0; m <= bz; ++m) {
        IdealClass cl = classify_ideal(FgIdeal::integers({Int(m)}));
        c.check(is_yes(cl.prime) == (is_yes(cl.primary) && is_yes(cl.semiprime)),
                "prime <=> primary & semiprime fails at mZ, m=" + std::to_string(m));
        if (is_yes(cl.primary))
            c.check(is_yes(classify_ideal(radical(FgIdeal::integers({Int(m)}))).prime),
                    "primary => radical prime fails at mZ, m=" + std::to_string(m));
    }

    const long comax_bound = std::min<long>(100, bz);
    for (long m = 1; m <= comax_bound; ++m)
        for (long n = 1; n <= comax_bound; ++n) {
            FgIdeal im = FgIdeal::integers({Int(m)}), in_ = FgIdeal::integers({Int(n)});
            if (comaximal(radical(im), radical(in_)).comaximal) {
                ComaximalResult r = comaximal(im, in_);
                bool cert_ok = r.comaximal && r.certificate &&
                               as_int(r.certificate->first) + as_int(r.certificate->second) == 1 &&
                               as_int(r.certificate->first) % m == 0 &&
                               as_int(r.certificate->second) % n == 0;
                c.check(cert_ok, "comaximality lift fails at m=" + std::to_string(m) +
                                     " n=" + std::to_string(n));
            } else {
                ++c.cases;
            }
        }

    for (unsigned long n = 2; n <= bm; ++n) {
        const long ln = static_cast<long>(n);
        for (const Int& dd : int_divisors(Int(ln))) {
            FgIdeal ideal = FgIdeal::modular(n, {int_mod(dd, Int(ln))});
            IdealClass cl = classify_ideal(ideal);
            c.check(is_yes(cl.prime) == (is_yes(cl.primary) && is_yes(cl.semiprime)),
                    "prime <=> primary & semiprime fails in Z/" + std::to_string(n));
            if (is_yes(cl.primary))
                c.check(is_yes(classify_ideal(radical(ideal)).prime),
                        "primary => radical prime fails in Z/" + std::to_string(n));
        }

        // {0} primary <=> every proper ideal strictly above sqrt(0) contains
        // a non-zero-divisor; both sides exhaustively
        FgIdeal zero = FgIdeal::modular(n, {Int(0)});
        bool primary = is_yes(classify_ideal(zero).primary);
        FgIdeal sqrt0 = radical(zero);
        long r0 = 0;
        {
            Int g(ln);
            for (long a = 0; a < ln; ++a)
                if (contains(sqrt0, Value(Int(a)))) g = int_gcd(g, Int(a));
            r0 = g.get_si();
        }
        bool all_nzd = true;
        for (const Int& dd : int_divisors(Int(r0))) {
            long dv = dd.get_si();
            if (dv == 1 || dv == r0) continue;  // J = (dv) strictly contains (r0), proper
            bool has_nzd = false;
            for (long a = 0; a < ln; a += dv == 0 ? ln : dv) {
                if (a == 0) continue;
                bool zd = false;
                for (long b = 1; b < ln; ++b)
                    if ((a * b) % ln == 0) { zd = true; break; }
                if (!zd) { has_nzd = true; break; }
            }
            all_nzd = all_nzd && has_nzd;
        }
        c.check(primary == all_nzd,
                "zero-primary/non-zero-divisor equivalence fails in Z/" + std::to_string(n));
    }
}

// ---- 4. gcd / Bezout --------------------------------------------------------

void suite_gcd(Ctx& c) {
    const RingId Z = RingId::integers();
    const RingId QX = RingId::rational_poly();

    // Lemma identity gcd(ac, bc) = gcd(a, b) * c, exhaustive up to 30
    for (long a = 1; a <= 30; ++a)
        for (long b = 1; b <= 30; ++b)
            for (long cc = 1; cc <= 30; ++cc) {
                Int lhs = as_int(gcd_lcm(Z, Value(Int(a * cc)), Value(Int(b * cc))).first);
                Int rhs = as_int(gcd_lcm(Z, Value(Int(a)), Value(Int(b))).first) * cc;
                if (lhs != rhs) {
                    c.fail("n-gcd identity fails at " + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(cc));
                }
                ++c.cases;
            }

    for (unsigned long t = 0; t < c.scale; ++t) {
        // gcd * lcm ~ ab
        long a = c.rng.range(1, 4000), b = c.rng.range(1, 4000);
        auto [g, l] = gcd_lcm(Z, Value(Int(a)), Value(Int(b)));
        c.check(as_int(g) * as_int(l) == Int(a) * Int(b), "gcd*lcm != ab over Z");

        // Bezout certificates on random generator lists (Z and Q[x] alternate)
        if (t % 2 == 0) {
            std::vector<Int> gens;
            for (int k = 0; k < 1 + static_cast<int>(c.rng.below(5)); ++k)
                gens.push_back(Int(c.rng.range(-100000, 100000)));
            bool allzero = true;
            for (const Int& gg : gens) allzero = allzero && gg == 0;
            if (allzero) gens.push_back(Int(1));
            BezoutCertificate cert = principal_generator(FgIdeal::integers(gens));
            c.check(cert.verify(), "Z Bezout certificate fails");
        } else {
            std::vector<MultiPoly> gens;
            for (int k = 0; k < 1 + static_cast<int>(c.rng.below(3)); ++k)
                gens.push_back(random_rational_univariate(c.rng, 4, 5));
            bool allzero = true;
            for (const MultiPoly& gg : gens) allzero = allzero && gg.is_zero();
            if (allzero) gens.push_back(MultiPoly::constant(1));
            BezoutCertificate cert = principal_generator(FgIdeal::rational_poly(gens));
            c.check(cert.verify(), "Q[x] Bezout certificate fails");
        }

        // UFD-grouping gcd equals Euclid gcd
        if (t % 5 == 0) {
            long x = c.rng.range(1, 2000), y = c.rng.range(1, 2000);
            auto euclid = gcd_lcm(Z, Value(Int(x)), Value(Int(y)));
            auto grouped = gcd_lcm_via_factoring(Z, Value(Int(x)), Value(Int(y)));
            c.check(as_int(euclid.first) == as_int(grouped.first) &&
                        as_int(euclid.second) == as_int(grouped.second),
                    "UFD-grouping gcd != Euclid gcd over Z");
        }
        if (t % 25 == 0) {
            MultiPoly x = random_univariate(c.rng, 3, 3), y = random_univariate(c.rng, 3, 3);
            auto euclid = gcd_lcm(QX, Value(x), Value(y));
            auto grouped = gcd_lcm_via_factoring(QX, Value(x), Value(y));
            c.check(as_poly(euclid.first) == as_poly(grouped.first),
                    "UFD-grouping gcd != Euclid gcd over Q[x]");
        }
    }
}

// ---- 5. the PID T ----------------------------------------------------------

void suite_pid_t(Ctx& c) {
    auto random_m_elem = [&](Rng& rng) {
        if (rng.below(3) == 0) return MultiPoly::constant(Rat(rng.range(1, 4)));
        MultiPoly p = MultiPoly::constant(Rat(rng.range(1, 3)));
        for (int i = 0; i < 2; ++i) {
            ExponentVector e;
            for (uint32_t v = 0; v < 4; ++v)
                if (rng.below(2)) e.set(v, 1 + static_cast<uint32_t>(rng.below(2)));
            p += MultiPoly::monomial(e, Rat(rng.range(1, 5)));
        }
        return p;
    };

    for (unsigned long t = 0; t < c.scale; ++t) {
        TIdeal ideal;
        size_t k = 1 + c.rng.below(5);
        for (size_t i = 0; i < k; ++i) {
            ExponentVector beta;
            for (uint32_t v = 0; v < 4; ++v)
                if (c.rng.below(2)) beta.set(v, static_cast<uint32_t>(c.rng.below(7)));
            ideal.generators.push_back(
                TElement(MultiPoly::monomial(beta, 1) * random_m_elem(c.rng),
                         random_m_elem(c.rng)));
        }
        TPrincipal p = t_principal_generator(ideal);

        // brute-force pointwise-minimum oracle over dense arrays
        uint32_t mins[4] = {UINT32_MAX, UINT32_MAX, UINT32_MAX, UINT32_MAX};
        for (const TElement& g : ideal.generators) {
            ExponentVector b = g.beta();
            for (uint32_t v = 0; v < 4; ++v) mins[v] = std::min(mins[v], b.get(v));
        }
        bool beta_ok = true;
        for (uint32_t v = 0; v < 4; ++v)
            beta_ok = beta_ok && p.generator.beta().get(v) == mins[v];
        c.check(beta_ok, "T principal generator differs from the pointwise-minimum oracle");

        TElement acc = TElement::from_poly(MultiPoly{});
        for (size_t i = 0; i < ideal.generators.size(); ++i)
            acc = acc + p.combination[i] * ideal.generators[i];
        c.check(acc == p.generator, "T combination certificate fails");

        bool divides_all = true;
        for (const TElement& g : ideal.generators)
            divides_all = divides_all && t_divides(p.generator, g);
        c.check(divides_all, "T principal generator does not divide a generator");

        // x_i does not divide x_j for i != j (sampled)
        uint32_t i = static_cast<uint32_t>(c.rng.below(4));
        uint32_t j = static_cast<uint32_t>(c.rng.below(4));
        if (i != j)
            c.check(!t_divides(TElement::from_poly(MultiPoly::variable(i)),
                               TElement::from_poly(MultiPoly::variable(j))),
                    "x_i | x_j in T");
    }
}

// ---- 6. Dedekind-Hasse norms -------------------------------------------------

void suite_dh(Ctx& c) {
    const RingId Z = RingId::integers();
    const RingId QX = RingId::rational_poly();

    // all pairs |a|, |b| <= 50 over Z (axioms via dh_build_check)
    std::vector<Value> grid;
    for (long a = -50; a <= 50; ++a) grid.emplace_back(Int(a));
    DHReport zrep = dh_build_check(Z, grid);
    c.cases += zrep.pairs_checked;

    // the unit report equals classify's unit flags
    for (const Value& v : grid) {
        bool reported = false;
        for (const Value& u : zrep.units)
            if (as_int(u) == as_int(v)) reported = true;
        c.check(reported == is_yes(classify(Z, v).unit), "DH unit set != classify units");
    }

    // random Q[x] pairs deg <= 5, axioms (i)-(iii) honestly on the products
    unsigned long poly_pairs = c.scale;
    for (unsigned long t = 0; t < poly_pairs; ++t) {
        std::vector<Value> sample = {Value(random_univariate(c.rng, 5, 4, true)),
                                     Value(random_univariate(c.rng, 5, 4, true))};
        try {
            DHReport prep = dh_build_check(QX, sample, 12);
            c.cases += prep.pairs_checked;
        } catch (const AxiomViolation& e) {
            c.fail(std::string("DH axiom violation over Q[x]: ") + e.what());
        }
    }

    // dh_generator returns a true generator on random finitely generated ideals
    DHNorm fz{Z, 12};
    DHNorm fq{QX, 12};
    for (unsigned long t = 0; t < c.scale; ++t) {
        if (t % 2 == 0) {
            std::vector<Int> gens;
            for (int k = 0; k < 1 + static_cast<int>(c.rng.below(3)); ++k)
                gens.push_back(Int(c.rng.range(-300, 300)));
            bool allzero = true;
            for (const Int& g : gens) allzero = allzero && g == 0;
            if (allzero) gens.push_back(Int(7));
            FgIdeal ideal = FgIdeal::integers(gens);
            Value got = dh_generator(ideal, fz, 32);
            Int fold = 0;
            for (const Int& g : gens) fold = int_gcd(fold, g);
            c.check(int_abs(as_int(got)) == fold, "dh_generator not a generator over Z");
        } else {
            std::vector<MultiPoly> gens;
            for (int k = 0; k < 1 + static_cast<int>(c.rng.below(2)); ++k)
                gens.push_back(random_univariate(c.rng, 3, 3));
            bool allzero = true;
            for (const MultiPoly& g : gens) allzero = allzero && g.is_zero();
            if (allzero) gens.push_back(MultiPoly::variable(0));
            FgIdeal ideal = FgIdeal::rational_poly(gens);
            Value got = dh_generator(ideal, fq, 32);
            MultiPoly fold;
            for (const MultiPoly& g : gens) {
                if (g.is_zero()) continue;
                fold = fold.is_zero() ? make_monic(g) : gcd_univariate(fold, g);
            }
            c.check(associates(QX, got, Value(fold)), "dh_generator not a generator over Q[x]");
        }
    }
}

// ---- 7. priority merge -------------------------------------------------------

void suite_priority(Ctx& c) {
    for (unsigned long t = 0; t < c.scale; ++t) {
        // seeded non-stabilizing monomial chain with plateaus
        unsigned plateau = 1 + static_cast<unsigned>(c.rng.below(3));
        uint64_t salt = c.rng.next();
        Sigma1IdealChain chain;
        chain.ring = RingId::multipoly();
        chain.enumerate = [plateau, salt](size_t n, size_t i) -> Value {
            size_t top = n / plateau;
            uint32_t var = static_cast<uint32_t>(i % (top + 1));
            size_t code = i / (top + 1);
            MultiPoly coeff = MultiPoly::constant(Rat(1 + static_cast<long>((code + salt) % 3)));
            if ((code + salt) % 7 == 3)
                coeff = MultiPoly::variable(static_cast<uint32_t>((code + salt) % 5));
            return Value(coeff * MultiPoly::variable(var));
        };

        unsigned stages = 20 * plateau + 26;
        PriorityMergeResult r = priority_merge(chain, stages);

        for (size_t n = 1; n <= 20; ++n) {
            if (n >= r.settled.size()) { c.fail("missing index"); break; }
            c.check(r.settled[n], "index " + std::to_string(n) + " unsettled");
            if (!r.settled[n]) continue;
            // witness lies in J_n and outside J_{n-1}
            bool in_n = false, in_prev = false;
            for (const Value& w : r.output_chain[n])
                if (ring_eq(chain.ring, w, *r.witnesses[n])) in_n = true;
            for (const Value& w : r.output_chain[n - 1])
                if (ring_eq(chain.ring, w, *r.witnesses[n])) in_prev = true;
            c.check(in_n && !in_prev, "witness fails membership at " + std::to_string(n));
        }
        // markers settle monotonically: histories nondecreasing
        for (const auto& hist : r.marker_history)
            for (size_t k = 1; k < hist.size(); ++k)
                c.check(hist[k].second >= hist[k - 1].second, "marker decreased");
    }
}

// ---- 8. dense set / domination ------------------------------------------------

void suite_dense(Ctx& c) {
    for (unsigned long t = 0; t < c.scale; ++t) {
        StageEnumeration k = random_schedule(c.rng, 12, 40, 8);
        const unsigned horizon = 120;
        DenseSetResult d = dense_set_build(k, horizon, 20);

        c.check(d.stable_count >= 16, "unstable complement prefix");
        for (size_t i = 0; i <= 15 && i < d.stable_count; ++i) {
            unsigned mu = modulus(k, static_cast<long>(i), horizon);
            c.check(d.complement_prefix[i] >= static_cast<long>(mu),
                    "b_" + std::to_string(i) + " < mu_K(" + std::to_string(i) + ")");
        }
        // domination decides K below the horizon: ask n in K_{b_{n+1}}
        for (long n = 0; n <= 14; ++n) {
            long f = d.complement_prefix[static_cast<size_t>(n) + 1];
            bool decided = k.contains_at(n, static_cast<unsigned>(f));
            c.check(decided == k.contains_ever(n),
                    "domination fails to decide " + std::to_string(n));
        }
    }
}

// ---- 9. the linear quotient ring ----------------------------------------------

void suite_linear_ring(Ctx& c) {
    auto to_poly = [](const LinearRingElement& e) {
        MultiPoly p = MultiPoly::constant(e.constant);
        for (const auto& [i, cc] : e.coeffs) p += MultiPoly::variable(i).scale(cc);
        return p;
    };
    for (unsigned long t = 0; t < c.scale; ++t) {
        LinearRingElement x = LinearRingElement::scalar(Rat(c.rng.range(-4, 4)));
        LinearRingElement y = LinearRingElement::scalar(Rat(c.rng.range(-4, 4)));
        for (uint32_t v = 0; v < 5; ++v) {
            if (c.rng.below(2)) x = lin_add(x, LinearRingElement::variable(v, Rat(c.rng.range(-5, 5))));
            if (c.rng.below(2)) y = lin_add(y, LinearRingElement::variable(v, Rat(c.rng.range(-5, 5))));
        }
        MultiPoly expanded = to_poly(x) * to_poly(y);
        MultiPoly truncated;
        for (const auto& [e, cc] : expanded.terms())
            if (e.total_degree() < 2) truncated += MultiPoly::monomial(e, cc);
        c.check(to_poly(lin_mul(x, y)) == truncated, "linear-ring product != symbolic expansion");
    }

    // rank preservation through normalization
    unsigned long rank_trials = std::max<unsigned long>(1, c.scale / 10);
    for (unsigned long t = 0; t < rank_trials; ++t) {
        std::vector<LinearRingElement> seq;
        size_t len = 3 + c.rng.below(3);
        for (size_t i = 0; i < len; ++i) {
            LinearRingElement e = LinearRingElement::scalar(Rat(c.rng.range(-2, 2)));
            e = lin_add(e, LinearRingElement::variable(static_cast<uint32_t>(i),
                                                       Rat(c.rng.range(1, 3))));
            if (c.rng.below(2))
                e = lin_add(e, LinearRingElement::variable(static_cast<uint32_t>(c.rng.below(8)),
                                                           Rat(c.rng.range(-2, 2))));
            seq.push_back(e);
        }
        // ensure full rank including constants: append the constant as a
        // pseudo-variable for the rank check of the input
        std::vector<LinearRingElement> with_const = seq;
        for (auto& e : with_const) {
            if (!e.constant.is_zero()) e.coeffs[100] = e.constant;
            e.constant = Rat(0);
        }
        if (coefficient_rank(with_const) != seq.size()) { ++c.cases; continue; }
        auto norm = normalize_independent(seq);
        for (const auto& e : norm) c.check(e.constant.is_zero(), "normalized constant nonzero");
        c.check(coefficient_rank(norm) == norm.size(),
                "normalization broke linear independence");
    }

    // dominating function vs the dense stand-in complement
    StageEnumeration k = random_schedule(c.rng, 8, 30, 5);
    DenseSetResult dense = dense_set_build(k, 80, 16);
    std::vector<LinearRingElement> seq;
    for (size_t i = 0; i < 13; ++i)
        seq.push_back(LinearRingElement::variable(
            static_cast<uint32_t>(dense.complement_prefix[i])));
    DominationTable table = dominating_f(seq, dense.a, 80, 10);
    c.check(table.dominates, "dominating_f fails on the complement sequence");
}

// ---- 10. Zorn constructions -----------------------------------------------------

void suite_zorn(Ctx& c) {
    for (unsigned long t = 0; t < c.scale; ++t) {
        // staged order: ranked elements, comparabilities revealed with delay
        uint64_t salt = c.rng.next();
        unsigned delay = static_cast<unsigned>(c.rng.below(6));
        auto rank = [salt](long x) { return (static_cast<uint64_t>(x) * 2654435761u + salt) % 97; };
        StagedOrder order{[rank, delay](long a, long b, unsigned k) {
            if (a == b) return true;
            if (k < delay) return false;
            return rank(a) < rank(b);
        }};
        std::vector<StageEnumeration::Entry> ents;
        for (long i = 0; i < 40; ++i) ents.push_back({i, static_cast<unsigned>(i / 2)});
        StageEnumeration carrier = StageEnumeration::from_entries(std::move(ents));
        GreedyChainResult r = zorn_greedy_chain(carrier, order, 20000);
        for (size_t i = 1; i < r.chain.size(); ++i) {
            c.check(order.leq_at(r.chain[i - 1].element, r.chain[i].element, r.chain[i].stage) &&
                        !order.leq_at(r.chain[i].element, r.chain[i - 1].element, 1000),
                    "greedy chain not strict with stage certificate");
        }
        if (r.chain.size() < 2) {
            // acceptable only when the start is genuinely maximal by the end
            bool above_exists = false;
            for (long e = 0; e < 40; ++e)
                if (order.leq_at(r.chain[0].element, e, 1000) &&
                    !order.leq_at(e, r.chain[0].element, 1000))
                    above_exists = true;
            c.check(r.maximal_so_far && !above_exists, "greedy chain stopped early");
        }

        // block-merge: chains dominate the modulus; partition invariants
        StageEnumeration k = random_schedule(c.rng, 10, 30, 6);
        const unsigned stages = 200;
        BlockMergePoset poset(k, stages);
        std::vector<long> f = poset.greedy_chain(12);
        auto chk = poset.check_chain(f, k, stages, 10);
        c.check(chk.dominates, "block-merge chain fails to dominate the modulus");

        if (t == 0) {
            // exhaustive partition invariants below 200 (once per run)
            for (long a = 0; a < 200; ++a)
                for (long b = a + 1; b < 200; ++b) {
                    bool same = poset.block_of(a) == poset.block_of(b);
                    bool comparable = poset.less(a, b) || poset.less(b, a);
                    if (same == comparable) {
                        c.fail("block partition invariant fails at " + std::to_string(a) + "," +
                               std::to_string(b));
                    }
                    ++c.cases;
                }
        }
    }
}

// ---- 11. factorization -----------------------------------------------------------

void suite_factorization(Ctx& c) {
    for (unsigned long t = 0; t < c.scale; ++t) {
        // integer polynomials re-multiply exactly
        MultiPoly p = random_univariate(c.rng, 6, 9);
        PolyFactorization f = factor(p, CoeffRing::Integers, 8);
        c.check(f.product() == p, "Z[x] factorization does not re-multiply: " + p.str());
        for (const MultiPoly& q : f.factors)
            if (q.total_degree() >= 1)
                c.check(content_primitive(q).content == 1 && q.lead_coeff() > Rat(0),
                        "Z[x] factor not primitive-positive");

        // rational polynomials: monic factors, unit absorbs constants
        MultiPoly pq = random_rational_univariate(c.rng, 6, 9);
        while (pq.is_zero()) pq = random_rational_univariate(c.rng, 6, 9);
        PolyFactorization fq = factor(pq, CoeffRing::Rationals, 8);
        c.check(fq.product() == pq, "Q[x] factorization does not re-multiply");

        // permutation / unit invariance through factorization_equal
        MultiPoly a = random_univariate(c.rng, 3, 5, true);
        MultiPoly b = random_univariate(c.rng, 3, 5, true);
        PolyFactorization fa = factor(a, CoeffRing::Rationals, 8);
        PolyFactorization fb = factor(b, CoeffRing::Rationals, 8);
        PolyFactorization fab = factor(a * b, CoeffRing::Rationals, 8);
        Factorization concat{RingId::rational_poly(), Value(MultiPoly::constant(fa.unit * fb.unit)), {}};
        for (const MultiPoly& q : fa.factors) concat.factors.emplace_back(q);
        for (const MultiPoly& q : fb.factors) {
            // unit-rescale some entries to exercise associate matching
            MultiPoly entry = c.rng.below(2) ? q.scale(Rat(3, 2)) : q;
            concat.factors.emplace_back(entry);
        }
        Factorization whole{RingId::rational_poly(), Value(MultiPoly::constant(fab.unit)), {}};
        for (const MultiPoly& q : fab.factors) whole.factors.emplace_back(q);
        c.check(factorization_equal(whole, concat).has_value(),
                "factor lists of ab and a,b do not match");
    }

    // Gauss content multiplicativity
    unsigned long gauss_pairs = c.scale * 5 / 2;
    for (unsigned long t = 0; t < gauss_pairs; ++t) {
        MultiPoly a = random_univariate(c.rng, 5, 9);
        MultiPoly b = random_univariate(c.rng, 5, 9);
        auto ca = content_primitive(a), cb = content_primitive(b), cab = content_primitive(a * b);
        c.check(cab.content == ca.content * cb.content, "content multiplicativity fails");
        c.check(content_primitive(ca.primitive * cb.primitive).content == 1,
                "product of primitives not primitive");
    }
}

// ---- registry ---------------------------------------------------------------------

struct SuiteEntry {
    SuiteInfo info;
    std::function<void(Ctx&)> run;
};

const std::vector<SuiteEntry>& entries() {
    static const std::vector<SuiteEntry> table = {
        {{"division-equivalence", 1000, 10000, "matrix division == long division"}, suite_division},
        {{"appendix-identities", 500, 5000, "adjugate and triangular determinant laws"}, suite_appendix},
        {{"radical-identities", 300, 30000, "radical/primary identities, exhaustive"}, suite_radical},
        {{"gcd-bezout", 1000, 20000, "gcd/lcm laws and Bezout certificates"}, suite_gcd},
        {{"pid-t", 500, 10000, "principal generators in the PID T"}, suite_pid_t},
        {{"dh-norm", 200, 20000, "Dedekind-Hasse norm axioms and generators"}, suite_dh},
        {{"priority-merge", 20, 30000, "moving-marker chain strictification"}, suite_priority},
        {{"dense-domination", 10, 10000, "dense stand-in complement dominates the modulus"}, suite_dense},
        {{"conidis", 500, 10000, "linear quotient ring and independent sequences"}, suite_linear_ring},
        {{"zorn", 20, 10000, "greedy chains and block-merge posets"}, suite_zorn},
        {{"factorization", 200, 60000, "Kronecker factorization round trips"}, suite_factorization},
    };
    return table;
}

} // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

std::string SuiteReport::json() const {
    std::ostringstream os;
    os << "{\"suite\":\"" << suite << "\",\"seed\":" << seed << ",\"scale\":" << scale
       << ",\"cases\":" << cases << ",\"failures\":[";
    for (size_t i = 0; i < failures.size(); ++i) {
        if (i) os << ",";
        os << "\"";
        for (char ch : failures[i]) {
            if (ch == '"' || ch == '\\') os << '\\';
            os << ch;
        }
        os << "\"";
    }
    os << "],\"elapsed_ms\":" << elapsed_ms << "}";
    return os.str();
}

SuiteReport run_suite(const std::string& name, uint64_t seed, unsigned long scale) {
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        SuiteReport report;
        report.suite = name;
        report.seed = seed;
        report.scale = scale == 0 ? e.info.default_scale : scale;
        Ctx ctx{Rng(seed), report.scale, 0, &report.failures};
        auto start = std::chrono::steady_clock::now();
        try {
            e.run(ctx);
        } catch (const Error& err) {
            ctx.fail(std::string("exception: ") + err.what());
        }
        auto end = std::chrono::steady_clock::now();
        report.cases = ctx.cases;
        report.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
        return report;
    }
    throw UnknownSuite("unknown suite: " + name);
}

} // namespace revring
