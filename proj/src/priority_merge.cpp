#include "revring/priority_merge.hpp"

#include "revring/errors.hpp"

namespace revring {

namespace {

bool in_list(const RingId& ring, const std::vector<Value>& list, const Value& v) {
    for (const Value& w : list)
        if (ring_eq(ring, w, v)) return true;
    return false;
}

} // namespace

PriorityMergeResult priority_merge(const Sigma1IdealChain& chain, unsigned stages,
                                   size_t per_search_budget) {
    PriorityMergeResult r;
    const RingId& ring = chain.ring;

    std::vector<std::vector<Value>> j;     // J_0 .. J_current
    std::vector<size_t> m;                 // markers
    std::vector<size_t> cursor;            // enumeration position into I_{m_i}
    std::vector<std::optional<Value>> x;   // witnesses
    std::vector<std::vector<std::pair<unsigned, size_t>>> hist;
    std::vector<unsigned> settle;

    auto deliver = [&](size_t i, const Value& v) {
        // an element enumerated into J_i also enters J_k for all k > i
        for (size_t k = i; k < j.size(); ++k)
            if (!in_list(ring, j[k], v)) j[k].push_back(v);
    };

    // stage 0: m_0 = 0, first element of I_0 into J_0
    j.push_back({});
    m.push_back(0);
    cursor.push_back(0);
    x.push_back(std::nullopt);
    hist.push_back({{0u, 0u}});
    settle.push_back(0);
    deliver(0, chain.enumerate(0, cursor[0]++));

    for (unsigned s = 1; s <= stages; ++s) {
        // J_s starts as the current value of J_{s-1}; m_s = m_{s-1} + 1
        j.push_back(j.back());
        m.push_back(m.back() + 1);
        cursor.push_back(0);
        x.emplace_back();
        hist.push_back({{s, m.back()}});
        settle.push_back(s);

        // each tracked column receives exactly one new element of I_{m_i}
        for (size_t i = 0; i + 1 < j.size(); ++i) {
            Value v = chain.enumerate(m[i], cursor[i]++);
            deliver(i, v);
            if (i + 2 == j.size()) x[s] = v;  // delivered into J_{s-1}: placeholder witness
        }
        deliver(j.size() - 1, chain.enumerate(m.back(), cursor.back()++));

        // injury scan in increasing order
        for (size_t i = 1; i < j.size(); ++i) {
            if (!x[i] || !in_list(ring, j[i - 1], *x[i])) continue;
            ++m[i];
            cursor[i] = 0;
            hist[i].push_back({s, m[i]});
            settle[i] = s;
            bool fresh = false;
            for (size_t probe = 0; probe < per_search_budget; ++probe) {
                Value v = chain.enumerate(m[i], cursor[i]++);
                deliver(i, v);
                if (!in_list(ring, j[i - 1], v)) {
                    x[i] = v;
                    fresh = true;
                    break;
                }
            }
            if (!fresh)
                throw NoFreshWitness("priority_merge: no fresh witness for index " +
                                     std::to_string(i) + " at stage " + std::to_string(s) +
                                     " (input chain stabilized?)");
        }
    }

    r.output_chain = std::move(j);
    r.markers = std::move(m);
    r.marker_history = std::move(hist);
    r.witnesses = x;
    r.settle_stage = std::move(settle);
    r.stages_run = stages;
    r.settled.assign(x.size(), false);
    for (size_t i = 1; i < x.size(); ++i)
        r.settled[i] = x[i].has_value() &&
                       !in_list(ring, r.output_chain[i - 1], *x[i]) &&
                       in_list(ring, r.output_chain[i], *x[i]);
    return r;
}

} // namespace revring
