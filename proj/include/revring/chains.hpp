#pragma once

#include "revring/ring.hpp"

#include <functional>
#include <vector>

namespace revring {

// A uniformly decidable chain of ideals I_0 <= I_1 <= ... inside a ring whose
// elements are listed a_0, a_1, ...
struct DecidableChain {
    RingId ring;
    std::function<Value(size_t)> element;              // the ring listing a_j
    std::function<bool(size_t, const Value&)> member;  // I_n membership
};

struct StrictChainResult {
    std::vector<size_t> indices;   // n_0 < n_1 < ...
    std::vector<Value> witnesses;  // witnesses[k] in I_{n_k} minus I_{n_{k-1}} (k >= 1)
};

// Extracts a strictly increasing subchain with membership witnesses by
// scanning pairs <n, j> in the standard order: each link gets `budget`
// search probes, and at most max_links links are collected. Throws
// StabilizedWithinBudget when a link's search comes up empty.
StrictChainResult strictify_chain(const DecidableChain& chain, size_t budget,
                                  size_t max_links = 16);

// A chain of stage-enumerated ideals: enumerate(n, i) is the i-th element of
// the enumeration of I_n. Enumerations may repeat elements; they are
// monotone in the sense that everything listed for I_n is an element of
// every later ideal of the chain.
struct Sigma1IdealChain {
    RingId ring;
    std::function<Value(size_t n, size_t i)> enumerate;
};

// The generated-ideal chain (a_0) <= (a_0, a_1) <= ... of a sequence, each
// ideal enumerated through ring-coefficient combinations of its generators.
// The inverse of the witness extraction: a bad sequence yields a chain whose
// strictness is witnessed by each next element.
Sigma1IdealChain bad_seq_to_chain(const RingId& ring, std::vector<Value> seq);

// Stage at which the chain provably contains all the listed generators of
// the union: the maximum over the generators of the least chain index whose
// enumeration reveals the generator within the budget.
// Throws GeneratorNotFound when some generator stays hidden.
size_t chain_stabilization(const Sigma1IdealChain& chain,
                           const std::vector<Value>& union_generators, size_t budget);

} // namespace revring
