#pragma once

#include "revring/stage_enum.hpp"

#include <functional>
#include <vector>

namespace revring {

// A partial order revealed in stages: leq_at(a, b, k) decides a <= b as seen
// by stage k, monotone in k (pairs only ever get added).
struct StagedOrder {
    std::function<bool(long a, long b, unsigned k)> leq_at;
};

struct GreedyChainStep {
    long element;
    size_t carrier_index;  // position in the carrier enumeration
    unsigned stage;        // stage at which the extension was certified
};

struct GreedyChainResult {
    std::vector<GreedyChainStep> chain;  // strictly increasing
    bool maximal_so_far = false;         // no extension found within the budget
    size_t probes_used = 0;
};

// Greedy chain through an enumerated carrier: f(0) is the first enumerated
// element; each extension is found by searching pairs <n, k> for a carrier
// element strictly above the current end as certified at stage k. A bounded
// run: after `steps` fruitless probes the current end is reported as
// maximal-so-far.
GreedyChainResult zorn_greedy_chain(const StageEnumeration& carrier, const StagedOrder& order,
                                    size_t steps);

// Partial order on an initial segment of N built by merging marker-delimited
// blocks as the stand-in schedule fires: when n enters K at stage s, the
// blocks from B_n through the block containing s merge. In the final order,
// a < b iff a sits in a strictly earlier block; within a block elements are
// incomparable. Any chain through the final order must step past every
// block, so it dominates the modulus of K.
class BlockMergePoset {
public:
    BlockMergePoset(const StageEnumeration& k, unsigned stages);

    // final marker values m_0 < m_1 < ... (block n = [m_n, m_{n+1}))
    const std::vector<long>& block_starts() const { return markers_; }
    size_t block_of(long a) const;
    bool less(long a, long b) const;  // strict comparability
    bool leq(long a, long b) const { return a == b || less(a, b); }

    struct ChainCheck {
        bool dominates = false;          // f(n+1) >= mu_K(n) at all checked n
        std::vector<long> mu;            // the modulus values checked against
    };

    // Verifies a supplied chain is strictly increasing (ChainViolation with
    // the first bad index otherwise) and checks the domination bound.
    ChainCheck check_chain(const std::vector<long>& f, const StageEnumeration& k,
                           unsigned horizon, size_t upto) const;

    // A canonical chain through the final order: the block start points.
    std::vector<long> greedy_chain(size_t length) const;

private:
    std::vector<long> markers_;
    unsigned stages_;
};

} // namespace revring
