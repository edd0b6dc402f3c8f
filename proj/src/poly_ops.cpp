#include "revring/poly_ops.hpp"

#include "revring/errors.hpp"
#include "revring/matrix.hpp"

#include <algorithm>

namespace revring {

namespace {

// Trailing degree: multiplicity of the variable itself as a factor.
uint32_t trailing_degree(const MultiPoly& p, uint32_t var) {
    uint32_t t = UINT32_MAX;
    for (const auto& [e, c] : p.terms()) t = std::min(t, e.get(var));
    return t;
}

} // namespace

MultiPoly make_monic(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("make_monic: zero polynomial");
    return p.scale(p.lead_coeff().inverse());
}

DivisionResult divide_long(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw DivisionByZeroPoly("divide_long: zero divisor");
    const MultiPoly ps[] = {p, d};
    const uint32_t var = common_univariate_variable(ps);
    const long dd = d.degree_in(var);
    MultiPoly q, r = p;
    while (!r.is_zero() && r.degree_in(var) >= dd) {
        const long shift = r.degree_in(var) - dd;
        MultiPoly t = MultiPoly::monomial(
            ExponentVector::variable(var, static_cast<uint32_t>(shift)),
            r.lead_coeff() / d.lead_coeff());
        q += t;
        r -= t * d;
    }
    return {q, r};
}

DivisionResult divide_matrix(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw DivisionByZeroPoly("divide_matrix: zero divisor");
    const MultiPoly ps[] = {p, d};
    const uint32_t var = common_univariate_variable(ps);
    const long n = p.degree_in(var);
    const long m = d.degree_in(var);
    if (n < m) throw DegreeTooSmall("divide_matrix: deg(p) < deg(d)");

    // Unknown layout: e_0..e_{m-1}, c_0..c_{n-m}. Row i encodes the x^i
    // coefficient of dq + r = p, giving an upper-triangular system with
    // diagonal 1 (rows < m) and b_m (rows >= m).
    const size_t size = static_cast<size_t>(n) + 1;
    Matrix a(size);
    std::vector<Rat> rhs(size);
    for (long i = 0; i <= n; ++i) {
        rhs[static_cast<size_t>(i)] = p.coeff_of(var, static_cast<uint32_t>(i));
        if (i < m) a.at(static_cast<size_t>(i), static_cast<size_t>(i)) = 1;
        for (long j = std::max<long>(0, i - m); j <= std::min(n - m, i); ++j) {
            a.at(static_cast<size_t>(i), static_cast<size_t>(m + j)) =
                d.coeff_of(var, static_cast<uint32_t>(i - j));
        }
    }
    std::vector<Rat> x = triangular_solve(a, rhs);

    std::vector<Rat> rem(x.begin(), x.begin() + m);
    std::vector<Rat> quo(x.begin() + m, x.end());
    return {MultiPoly::from_coeffs(var, quo), MultiPoly::from_coeffs(var, rem)};
}

MultiPoly gcd_univariate(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero("gcd_univariate: both zero");
    MultiPoly a = p, b = q;
    while (!b.is_zero()) {
        MultiPoly r = divide_long(a, b).remainder;
        a = b;
        b = r;
    }
    return make_monic(a);
}

PolyExtGcd poly_extended_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero("poly_extended_gcd: both zero");
    MultiPoly r0 = p, r1 = q;
    MultiPoly x0 = MultiPoly::constant(1), x1;
    MultiPoly y0, y1 = MultiPoly::constant(1);
    while (!r1.is_zero()) {
        DivisionResult dr = divide_long(r0, r1);
        MultiPoly r2 = dr.remainder;
        MultiPoly x2 = x0 - dr.quotient * x1;
        MultiPoly y2 = y0 - dr.quotient * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    Rat lc = r0.lead_coeff().inverse();
    return {r0.scale(lc), x0.scale(lc), y0.scale(lc)};
}

ContentResult content_primitive(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("content_primitive: zero polynomial");
    if (!p.is_integral()) throw NotIntegral("content_primitive: coefficients not integers");
    Int g = 0;
    for (const auto& [e, c] : p.terms()) g = int_gcd(g, c.num());
    return {g, p.scale(Rat(Int(1), g))};
}

namespace {

// ---- Kronecker factorization ------------------------------------------

// Evaluation points 0, 1, -1, 2, -2, ...
Int kronecker_point(size_t i) {
    if (i == 0) return 0;
    Int k((i + 1) / 2);
    return (i % 2 == 1) ? k : -k;
}

Int eval_int(const MultiPoly& p, uint32_t var, const Int& t) {
    Rat v = p.eval(var, Rat(t));
    return v.num();  // integral input, integral value
}

// Signed divisors of a nonzero integer; first-position candidates restricted
// to positive values by the caller (h and -h divide the same polynomials).
std::vector<Int> signed_divisors(const Int& v) {
    std::vector<Int> ds = int_divisors(v);
    std::vector<Int> out;
    out.reserve(ds.size() * 2);
    for (const Int& d : ds) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// Interpolating candidate built incrementally in Newton form. Every divided
// difference of an integer polynomial at integer nodes is an integer, so
// each new triangle entry is a pruning point. The triangle runs in native
// 128-bit arithmetic; callers guard the value sizes.
struct KroneckerSearch {
    uint32_t var;
    std::vector<long> points;
    std::vector<std::vector<__int128>> dd;  // dd[k] = order-k divided differences

    // Extend with value w at points[depth]; false when some new divided
    // difference fails to be an integer.
    bool push(size_t depth, long w) {
        dd.resize(depth + 1);
        std::vector<__int128>& row0 = dd[0];
        row0.resize(depth + 1);
        row0[depth] = w;
        for (size_t k = 1; k <= depth; ++k) {
            dd[k].resize(depth + 1);
            size_t i = depth - k;
            __int128 num = dd[k - 1][depth] - dd[k - 1][depth - 1];
            __int128 den = points[depth] - points[i];
            if (num % den != 0) return false;
            dd[k][depth] = num / den;
        }
        return true;
    }

    // Newton form -> polynomial, using the first depth+1 divided differences.
    MultiPoly build(size_t depth) const {
        MultiPoly h;
        MultiPoly basis = MultiPoly::constant(1);
        for (size_t k = 0; k <= depth; ++k) {
            h += basis.scale(Rat(static_cast<long>(dd[k][k])));
            basis *= MultiPoly::variable(var) - MultiPoly::constant(Rat(points[k]));
        }
        return h;
    }
};

// Exact fallback triangle for values outside the native range.
struct KroneckerSearchExact {
    uint32_t var;
    std::vector<Int> points;
    std::vector<std::vector<Rat>> dd;

    bool push(size_t depth, const Int& w) {
        dd.resize(depth + 1);
        dd[0].resize(depth + 1);
        dd[0][depth] = Rat(w);
        for (size_t k = 1; k <= depth; ++k) {
            dd[k].resize(depth + 1);
            size_t i = depth - k;
            dd[k][depth] =
                (dd[k - 1][depth] - dd[k - 1][depth - 1]) / Rat(points[depth] - points[i]);
            if (!dd[k][depth].is_integer()) return false;
        }
        return true;
    }

    MultiPoly build(size_t depth) const {
        MultiPoly h;
        MultiPoly basis = MultiPoly::constant(1);
        for (size_t k = 0; k <= depth; ++k) {
            h += basis.scale(dd[k][k]);
            basis *= MultiPoly::variable(var) - MultiPoly::constant(Rat(points[k]));
        }
        return h;
    }
};

bool divides_exactly(const MultiPoly& h, const MultiPoly& g, MultiPoly* quotient) {
    DivisionResult dr = divide_long(g, h);
    if (!dr.remainder.is_zero()) return false;
    *quotient = dr.quotient;
    return true;
}

// DFS over divisor tuples with the Newton-triangle pruning (exact fallback:
// d+1 value slots, leading coefficient read off the top difference).
std::optional<MultiPoly> kronecker_dfs_exact(KroneckerSearchExact& ks,
                                             const std::vector<std::vector<Int>>& choices,
                                             const MultiPoly& g, uint32_t var, long d,
                                             const Int& lc_g) {
    std::vector<size_t> idx(choices.size(), 0);
    size_t depth = 0;
    while (true) {
        if (idx[depth] == choices[depth].size()) {
            if (depth == 0) break;
            idx[depth] = 0;
            ++idx[--depth];
            continue;
        }
        if (!ks.push(depth, choices[depth][idx[depth]])) {
            ++idx[depth];
            continue;
        }
        if (depth + 1 < choices.size()) {
            ++depth;
            continue;
        }
        // Full tuple: the top divided difference is the leading coefficient;
        // it must be nonzero (degree exactly d: lower degrees were exhausted
        // earlier) and divide lc(g).
        Int lead = ks.dd[depth][depth].num();
        if (lead != 0 && lc_g % lead == 0) {
            MultiPoly h = ks.build(depth);
            MultiPoly quotient;
            if (h.degree_in(var) == d && divides_exactly(h, g, &quotient)) {
                MultiPoly hp = content_primitive(h).primitive;
                if (hp.lead_coeff().sign() < 0) hp = -hp;
                return hp;
            }
        }
        ++idx[depth];
    }
    return std::nullopt;
}

// Native search for one degree level. The candidate h is pinned by its
// values at the d points with the fewest divisors plus its leading
// coefficient L | lc(g): h = L*omega + r with omega the monic product over
// the slot points and r the Newton interpolant. The remaining (worst) point
// only has to pass a divisibility test, which avoids enumerating its
// divisors altogether.
std::optional<MultiPoly> kronecker_level_native(const MultiPoly& g, uint32_t var, long d,
                                                const std::vector<long>& slot_points,
                                                const std::vector<std::vector<long>>& choices,
                                                const std::vector<std::pair<long, long>>& checks,
                                                const std::vector<long>& lead_choices) {
    KroneckerSearch ks;
    ks.var = var;
    ks.points = slot_points;

    // omega(t) = prod (t - slot) for every check point
    std::vector<__int128> omega_at(checks.size());
    for (size_t c = 0; c < checks.size(); ++c) {
        __int128 w = 1;
        for (long t : slot_points) w *= (checks[c].first - t);
        omega_at[c] = w;
    }

    std::vector<size_t> idx(choices.size(), 0);
    size_t depth = 0;
    while (true) {
        if (idx[depth] == choices[depth].size()) {
            if (depth == 0) break;
            idx[depth] = 0;
            ++idx[--depth];
            continue;
        }
        if (!ks.push(depth, choices[depth][idx[depth]])) {
            ++idx[depth];
            continue;
        }
        if (depth + 1 < choices.size()) {
            ++depth;
            continue;
        }
        // Candidate = Newton interpolant + lead * omega. Every check point
        // must divide its value of g before any polynomial is materialized.
        std::vector<__int128> r_at(checks.size());
        for (size_t c = 0; c < checks.size(); ++c) {
            __int128 r_star = 0, basis = 1;
            for (size_t k = 0; k < choices.size(); ++k) {
                r_star += ks.dd[k][k] * basis;
                basis *= (checks[c].first - slot_points[k]);
            }
            r_at[c] = r_star;
        }
        for (long lead : lead_choices) {
            bool viable = true;
            for (size_t c = 0; c < checks.size() && viable; ++c) {
                __int128 h_star = r_at[c] + static_cast<__int128>(lead) * omega_at[c];
                __int128 v = checks[c].second;
                __int128 av = v < 0 ? -v : v;
                __int128 ah = h_star < 0 ? -h_star : h_star;
                if (h_star == 0 || ah > av || (v % h_star) != 0) viable = false;
            }
            if (!viable) continue;
            MultiPoly h = ks.build(choices.size() - 1);
            MultiPoly omega = MultiPoly::constant(1);
            for (long t : slot_points)
                omega *= MultiPoly::variable(var) - MultiPoly::constant(Rat(t));
            h += omega.scale(Rat(lead));
            MultiPoly quotient;
            if (h.degree_in(var) == d && divides_exactly(h, g, &quotient)) {
                MultiPoly hp = content_primitive(h).primitive;
                if (hp.lead_coeff().sign() < 0) hp = -hp;
                return hp;
            }
        }
        ++idx[depth];
    }
    return std::nullopt;
}

// Search for an irreducible factor of degree in [1, deg(g)/2] of a primitive
// g over Z with g(0) != 0. Returns the factor (primitive, positive leading
// coefficient) or nullopt when g is irreducible. Scanning degrees in
// ascending order certifies irreducibility of whatever is found: any proper
// factor of the found factor would itself divide g at a lower degree.
std::optional<MultiPoly> kronecker_find_factor(const MultiPoly& g, uint32_t var) {
    const long n = g.degree_in(var);
    const Int lc_g = g.lead_coeff().num();
    const Int native_bound = Int(1) << 48;  // native triangle safety margin
    std::vector<std::vector<Int>> divisor_cache;  // per point index

    for (long d = 1; d <= n / 2; ++d) {
        std::vector<Int> points, values;
        bool native = true;
        for (long i = 0; i <= d; ++i) {
            Int t = kronecker_point(static_cast<size_t>(i));
            Int v = eval_int(g, var, t);
            if (v == 0) {
                // Root found: x - t is a degree-1 factor.
                return MultiPoly::variable(var) - MultiPoly::constant(Rat(t));
            }
            points.push_back(t);
            values.push_back(v);
            if (int_abs(v) >= native_bound) native = false;
            if (divisor_cache.size() <= static_cast<size_t>(i))
                divisor_cache.push_back(signed_divisors(v));
        }

        // Enumerate positions with the fewest divisors first: the branching
        // at the top of the tree dominates the search.
        std::vector<size_t> order(points.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return divisor_cache[a].size() < divisor_cache[b].size();
        });

        std::optional<MultiPoly> found;
        if (native && int_abs(lc_g) < native_bound) {
            // slots = the d points with the fewest divisors; the worst point
            // and a few extra sequence points become divisibility checks;
            // the leading coefficient runs over the divisors of lc(g)
            std::vector<long> slot_points;
            std::vector<std::vector<long>> choices(static_cast<size_t>(d));
            for (long pos = 0; pos < d; ++pos) {
                slot_points.push_back(points[order[static_cast<size_t>(pos)]].get_si());
                for (const Int& w : divisor_cache[order[static_cast<size_t>(pos)]]) {
                    if (pos == 0 && w <= 0) continue;  // h and -h interchangeable
                    choices[static_cast<size_t>(pos)].push_back(w.get_si());
                }
            }
            std::vector<std::pair<long, long>> checks = {
                {points[order[static_cast<size_t>(d)]].get_si(),
                 values[order[static_cast<size_t>(d)]].get_si()}};
            for (size_t extra = static_cast<size_t>(d) + 1;
                 extra < static_cast<size_t>(d) + 4; ++extra) {
                Int t = kronecker_point(extra);
                Int v = eval_int(g, var, t);
                if (v == 0)  // a root beyond the slots is still a factor
                    return MultiPoly::variable(var) - MultiPoly::constant(Rat(t));
                if (int_abs(v) >= native_bound) continue;
                checks.push_back({t.get_si(), v.get_si()});
            }
            std::vector<long> lead_choices;
            for (const Int& w : signed_divisors(lc_g)) lead_choices.push_back(w.get_si());
            found = kronecker_level_native(g, var, d, slot_points, choices, checks,
                                           lead_choices);
        } else {
            KroneckerSearchExact ks;
            ks.var = var;
            std::vector<std::vector<Int>> choices(points.size());
            for (size_t pos = 0; pos < order.size(); ++pos) {
                ks.points.push_back(points[order[pos]]);
                for (const Int& w : divisor_cache[order[pos]]) {
                    if (pos == 0 && w <= 0) continue;
                    choices[pos].push_back(w);
                }
            }
            found = kronecker_dfs_exact(ks, choices, g, var, d, lc_g);
        }
        if (found) return found;
    }
    return std::nullopt;
}

// Factor a primitive univariate integer polynomial of degree >= 1 into
// primitive irreducibles with positive leading coefficients; `sign` collects
// the leading-sign flips.
void factor_primitive(MultiPoly g, uint32_t var, std::vector<MultiPoly>* out, int* sign) {
    if (g.lead_coeff().sign() < 0) {
        g = -g;
        *sign = -*sign;
    }
    // Strip powers of the variable itself.
    uint32_t t = trailing_degree(g, var);
    for (uint32_t k = 0; k < t; ++k) out->push_back(MultiPoly::variable(var));
    if (t > 0) g = g.divide_monomial(ExponentVector::variable(var, t));

    while (g.degree_in(var) >= 1) {
        std::optional<MultiPoly> h = kronecker_find_factor(g, var);
        if (!h) {
            out->push_back(g);
            return;
        }
        out->push_back(*h);
        MultiPoly q = divide_long(g, *h).quotient;
        // h is primitive, so the quotient of the primitive g stays integral
        // and primitive (Gauss); the sign convention is restored below.
        if (q.lead_coeff().sign() < 0) {
            q = -q;
            *sign = -*sign;
        }
        g = q;
    }
    // Leftover constant must be +-1 for a primitive input.
    if (!g.is_constant() || g.constant_value().abs() != Rat(1))
        throw Error("factor: internal primitive invariant violated");
    if (g.constant_value().sign() < 0) *sign = -*sign;
}

bool factor_order(const MultiPoly& a, const MultiPoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    if (a.is_constant() && b.is_constant()) return a.constant_value() < b.constant_value();
    auto at = a.terms().rbegin(), bt = b.terms().rbegin();
    for (; at != a.terms().rend() && bt != b.terms().rend(); ++at, ++bt) {
        if (at->first != bt->first) return grlex_less(at->first, bt->first);
        if (at->second != bt->second) return at->second < bt->second;
    }
    return a.term_count() < b.term_count();
}

} // namespace

MultiPoly PolyFactorization::product() const {
    MultiPoly p = MultiPoly::constant(unit);
    for (const MultiPoly& f : factors) p *= f;
    return p;
}

PolyFactorization factor(const MultiPoly& p, CoeffRing ring, unsigned degree_bound) {
    if (p.is_zero()) throw ZeroPolynomial("factor: zero polynomial");
    const uint32_t var = p.sole_variable().value_or(0);
    if (p.degree_in(var) > static_cast<long>(degree_bound))
        throw DegreeBoundExceeded("factor: degree exceeds bound " + std::to_string(degree_bound));

    PolyFactorization result;
    result.unit = 1;

    if (ring == CoeffRing::Integers) {
        if (!p.is_integral()) throw NotIntegral("factor over Z: coefficients not integers");
        ContentResult cp = content_primitive(p);
        for (const Int& q : int_factor(cp.content))
            result.factors.push_back(MultiPoly::constant(Rat(q)));
        int sign = 1;
        if (cp.primitive.is_constant()) {
            // Primitive constant is +-1.
            if (cp.primitive.constant_value().sign() < 0) sign = -sign;
        } else {
            factor_primitive(cp.primitive, var, &result.factors, &sign);
        }
        result.unit = Rat(sign);
    } else {
        // Over Q: clear denominators, factor the primitive integer part,
        // return monic factors with the constants folded into the unit.
        Int den = 1;
        for (const auto& [e, c] : p.terms()) den = int_lcm(den, c.den());
        MultiPoly scaled = p.scale(Rat(den));
        if (scaled.is_constant()) {
            result.unit = p.constant_value();
            return result;
        }
        ContentResult cp = content_primitive(scaled);
        Rat unit = Rat(cp.content, den);
        std::vector<MultiPoly> prim;
        int sign = 1;
        factor_primitive(cp.primitive, var, &prim, &sign);
        unit *= Rat(sign);
        for (MultiPoly& f : prim) {
            unit *= f.lead_coeff();
            result.factors.push_back(make_monic(f));
        }
        result.unit = unit;
    }
    std::sort(result.factors.begin(), result.factors.end(), factor_order);
    return result;
}

} // namespace revring
