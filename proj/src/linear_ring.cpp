#include "revring/linear_ring.hpp"

#include "revring/errors.hpp"
#include "revring/matrix.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace revring {

LinearRingElement LinearRingElement::variable(uint32_t i, const Rat& c) {
    LinearRingElement e;
    if (!c.is_zero()) e.coeffs[i] = c;
    return e;
}

LinearRingElement LinearRingElement::scalar(const Rat& q) {
    LinearRingElement e;
    e.constant = q;
    return e;
}

std::string LinearRingElement::str() const {
    std::string s = constant.str();
    for (const auto& [i, c] : coeffs)
        s += " + " + c.str() + "*x" + std::to_string(i);
    return s;
}

LinearRingElement lin_add(const LinearRingElement& a, const LinearRingElement& b) {
    LinearRingElement r = a;
    r.constant += b.constant;
    for (const auto& [i, c] : b.coeffs) {
        Rat v = (r.coeffs.count(i) ? r.coeffs[i] : Rat(0)) + c;
        if (v.is_zero()) r.coeffs.erase(i);
        else r.coeffs[i] = v;
    }
    return r;
}

LinearRingElement lin_sub(const LinearRingElement& a, const LinearRingElement& b) {
    return lin_add(a, lin_scale(b, Rat(-1)));
}

LinearRingElement lin_scale(const LinearRingElement& a, const Rat& c) {
    LinearRingElement r;
    if (c.is_zero()) return r;
    r.constant = a.constant * c;
    for (const auto& [i, v] : a.coeffs) r.coeffs[i] = v * c;
    return r;
}

LinearRingElement lin_mul(const LinearRingElement& a, const LinearRingElement& b) {
    LinearRingElement r;
    r.constant = a.constant * b.constant;
    for (const auto& [i, v] : a.coeffs) {
        Rat c = v * b.constant;
        if (!c.is_zero()) r.coeffs[i] = c;
    }
    for (const auto& [i, v] : b.coeffs) {
        Rat c = (r.coeffs.count(i) ? r.coeffs[i] : Rat(0)) + v * a.constant;
        if (c.is_zero()) r.coeffs.erase(i);
        else r.coeffs[i] = c;
    }
    return r;
}

std::vector<LinearRingElement> normalize_independent(const std::vector<LinearRingElement>& seq) {
    size_t n = seq.size();
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i)
        if (!seq[i].constant.is_zero()) { pivot = i; break; }
    if (pivot == n) return seq;  // already inside the constant-free ideal

    const Rat q = seq[pivot].constant;
    std::vector<LinearRingElement> out;
    for (size_t i = 0; i < pivot; ++i) out.push_back(seq[i]);
    for (size_t i = pivot; i + 1 < n; ++i) {
        const Rat r_next = seq[i + 1].constant;
        out.push_back(lin_sub(lin_scale(seq[i + 1], q), lin_scale(seq[pivot], r_next)));
    }
    return out;
}

size_t coefficient_rank(const std::vector<LinearRingElement>& seq) {
    // columns = all variables that occur
    std::set<uint32_t> varset;
    for (const auto& e : seq)
        for (const auto& [i, c] : e.coeffs) varset.insert(i);
    std::vector<uint32_t> vars(varset.begin(), varset.end());

    const size_t rows = seq.size(), cols = vars.size();
    size_t best = 0;
    // nonzero-minor search, smallest sizes first
    for (size_t k = 1; k <= std::min(rows, cols); ++k) {
        bool found = false;
        std::vector<size_t> ri(k), ci(k);
        // enumerate k-subsets of rows and columns
        std::function<bool(size_t, size_t)> pick_rows = [&](size_t pos, size_t from) -> bool {
            if (pos == k) {
                std::function<bool(size_t, size_t)> pick_cols = [&](size_t cpos,
                                                                    size_t cfrom) -> bool {
                    if (cpos == k) {
                        Matrix m(k);
                        for (size_t a = 0; a < k; ++a)
                            for (size_t b = 0; b < k; ++b) {
                                const auto& cf = seq[ri[a]].coeffs;
                                auto it = cf.find(vars[ci[b]]);
                                m.at(a, b) = it == cf.end() ? Rat(0) : it->second;
                            }
                        return !determinant(m).is_zero();
                    }
                    for (size_t c = cfrom; c < cols; ++c) {
                        ci[cpos] = c;
                        if (pick_cols(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (size_t r = from; r < rows; ++r) {
                ri[pos] = r;
                if (pick_rows(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) {
            best = k;
            found = true;
        }
        if (!found) break;  // no nonzero k-minor, so none larger either
    }
    return best;
}

DominationTable dominating_f(const std::vector<LinearRingElement>& normalized,
                             const StageEnumeration& a, unsigned horizon, size_t check_upto) {
    DominationTable t;
    // f(n) = largest variable index appearing in a'_0 .. a'_{n+1}
    long running = -1;
    std::vector<long> maxvar(normalized.size());
    for (size_t i = 0; i < normalized.size(); ++i) {
        for (const auto& [v, c] : normalized[i].coeffs)
            running = std::max(running, static_cast<long>(v));
        maxvar[i] = running;
    }
    for (size_t n = 0; n + 1 < normalized.size(); ++n) t.f.push_back(maxvar[n + 1]);

    // complement of A at the horizon
    std::vector<long> members = a.members_at(horizon);
    std::set<long> mem(members.begin(), members.end());
    for (long x = 0; t.complement.size() < check_upto + 2 && x < 100000; ++x)
        if (!mem.count(x)) t.complement.push_back(x);

    t.dominates = true;
    for (size_t n = 0; n < t.f.size() && n < check_upto && n < t.complement.size(); ++n)
        if (t.f[n] < t.complement[n]) t.dominates = false;
    return t;
}

} // namespace revring
