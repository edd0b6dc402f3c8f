#pragma once

#include "revring/chains.hpp"

#include <optional>

namespace revring {

// State of the moving-marker construction after a bounded run. Markers are
// nondecreasing; each settled index n carries a witness x_n lying in J_n but
// not in J_{n-1}, certifying strictness there.
struct PriorityMergeResult {
    std::vector<std::vector<Value>> output_chain;  // J_0 .. J_stages (element lists)
    std::vector<size_t> markers;                   // final marker values m_i
    std::vector<std::vector<std::pair<unsigned, size_t>>> marker_history;  // (stage, value)
    std::vector<std::optional<Value>> witnesses;   // x_i (unset for i = 0)
    std::vector<bool> settled;                     // witness still outside J_{i-1} at the end
    std::vector<unsigned> settle_stage;            // last stage the marker moved
    unsigned stages_run = 0;
};

// The stage loop: at stage s, J_s is created copying J_{s-1} with marker
// m_s = m_{s-1} + 1; every tracked J_i receives exactly one new element of
// I_{m_i}; then indices are scanned in increasing order for injured
// witnesses (x_i seen in J_{i-1}), whose markers advance and whose
// enumeration is pushed until a fresh witness appears. Elements enumerated
// into J_i also enter every J_m, m > i.
//
// Throws NoFreshWitness when a witness search exhausts the per-stage budget
// (which happens when the input chain has stabilized).
PriorityMergeResult priority_merge(const Sigma1IdealChain& chain, unsigned stages,
                                   size_t per_search_budget = 20000);

} // namespace revring
