#include "revring/zorn.hpp"

#include "revring/errors.hpp"

#include <algorithm>

namespace revring {

GreedyChainResult zorn_greedy_chain(const StageEnumeration& carrier, const StagedOrder& order,
                                    size_t steps) {
    GreedyChainResult r;
    if (carrier.entries().empty()) return r;

    // carrier elements in enumeration order (stage, then value)
    std::vector<StageEnumeration::Entry> elems = carrier.entries();
    r.chain.push_back({elems[0].element, 0, elems[0].stage});

    auto strictly_above = [&](long a, long b, unsigned k) {
        return order.leq_at(b, a, k) && !order.leq_at(a, b, k);
    };

    while (r.probes_used < steps) {
        long end = r.chain.back().element;
        bool extended = false;
        // fair diagonal search over pairs <n, k>
        for (size_t diag = 0; diag < steps && !extended; ++diag) {
            for (size_t n = 0; n <= diag && !extended; ++n) {
                unsigned k = static_cast<unsigned>(diag - n);
                ++r.probes_used;
                if (r.probes_used > steps) break;
                if (n >= elems.size()) continue;
                if (elems[n].stage > k) continue;  // not yet enumerated at stage k
                if (strictly_above(elems[n].element, end, k)) {
                    r.chain.push_back({elems[n].element, n, k});
                    extended = true;
                }
            }
            if (r.probes_used > steps) break;
        }
        if (!extended) {
            r.maximal_so_far = true;
            return r;
        }
    }
    r.maximal_so_far = true;  // ran out of probe budget
    return r;
}

BlockMergePoset::BlockMergePoset(const StageEnumeration& k, unsigned stages) : stages_(stages) {
    // marker recursion: m_{n,0} = n; when n enters K at stage s, the least j
    // with m_j > s replaces the tail: m_{n+1} <- m_j, m_{n+2} <- m_{j+1}, ...
    const long width = static_cast<long>(stages) + 64;
    std::vector<long> m(static_cast<size_t>(width));
    for (long i = 0; i < width; ++i) m[static_cast<size_t>(i)] = i;

    for (unsigned s = 0; s <= stages; ++s) {
        for (const auto& e : k.entries()) {
            if (e.stage != s) continue;
            long n = e.element;
            if (n < 0 || n + 1 >= width) continue;
            size_t j = 0;
            while (j < m.size() && m[j] <= static_cast<long>(s)) ++j;
            if (j <= static_cast<size_t>(n) + 1) continue;  // s already below B_{n+1}
            std::vector<long> nm(m.begin(), m.begin() + n + 1);
            for (size_t t = j; t < m.size(); ++t) nm.push_back(m[t]);
            // keep the marker array long enough
            while (nm.size() < m.size()) nm.push_back(nm.back() + 1);
            m = std::move(nm);
        }
    }
    markers_ = std::move(m);
}

size_t BlockMergePoset::block_of(long a) const {
    if (a < 0) throw Error("BlockMergePoset: negative element");
    size_t blk = 0;
    for (size_t i = 0; i + 1 < markers_.size(); ++i)
        if (markers_[i] <= a && a < markers_[i + 1]) { blk = i; break; }
    if (a >= markers_.back()) blk = markers_.size() - 1;
    return blk;
}

bool BlockMergePoset::less(long a, long b) const { return block_of(a) < block_of(b); }

BlockMergePoset::ChainCheck BlockMergePoset::check_chain(const std::vector<long>& f,
                                                         const StageEnumeration& k,
                                                         unsigned horizon, size_t upto) const {
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (!less(f[i], f[i + 1]))
            throw ChainViolation("chain not strictly increasing at index " + std::to_string(i));
    ChainCheck c;
    c.dominates = true;
    for (size_t n = 0; n < upto && n + 1 < f.size(); ++n) {
        long mu = static_cast<long>(modulus(k, static_cast<long>(n), horizon));
        c.mu.push_back(mu);
        if (f[n + 1] < mu) c.dominates = false;
    }
    return c;
}

std::vector<long> BlockMergePoset::greedy_chain(size_t length) const {
    std::vector<long> f;
    for (size_t i = 0; i < length && i < markers_.size(); ++i) f.push_back(markers_[i]);
    return f;
}

} // namespace revring
