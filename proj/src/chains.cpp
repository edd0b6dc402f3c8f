#include "revring/chains.hpp"

#include "revring/errors.hpp"

namespace revring {

StrictChainResult strictify_chain(const DecidableChain& chain, size_t budget,
                                  size_t max_links) {
    StrictChainResult out;
    // n_0 = 0 with the least j such that a_j lies in I_0.
    size_t n0 = 0;
    bool found0 = false;
    for (size_t j = 0; j < budget && !found0; ++j)
        if (chain.member(n0, chain.element(j))) {
            out.indices.push_back(n0);
            out.witnesses.push_back(chain.element(j));
            found0 = true;
        }
    if (!found0) throw StabilizedWithinBudget(0);

    while (out.indices.size() < max_links) {
        size_t last = out.indices.back();
        bool extended = false;
        // least pair <n, j> (diagonal order) with a_j in I_n \ I_last
        for (size_t diag = 0; diag < budget && !extended; ++diag) {
            for (size_t n = last + 1; n <= last + 1 + diag && !extended; ++n) {
                size_t j = diag - (n - last - 1);
                Value a = chain.element(j);
                if (chain.member(n, a) && !chain.member(last, a)) {
                    out.indices.push_back(n);
                    out.witnesses.push_back(a);
                    extended = true;
                }
            }
        }
        if (!extended) throw StabilizedWithinBudget(last);
    }
    return out;
}

Sigma1IdealChain bad_seq_to_chain(const RingId& ring, std::vector<Value> seq) {
    Sigma1IdealChain chain;
    chain.ring = ring;
    chain.enumerate = [ring, seq = std::move(seq)](size_t n, size_t i) -> Value {
        // combinations of a_0..a_n, coefficients drawn from a small palette
        // walked in base 4 so every combination has an index
        size_t gens = std::min(n + 1, seq.size());
        if (gens == 0) return ring_zero(ring);
        Value acc = ring_zero(ring);
        size_t code = i;
        for (size_t g = 0; g < gens; ++g) {
            size_t ci = code % 4;
            code /= 4;
            Value coeff;
            switch (ring.kind) {
                case RingKind::Integers:
                case RingKind::Modular: {
                    static const long palette[4] = {0, 1, -1, 2};
                    coeff = Int(palette[ci]);
                    break;
                }
                default:
                    // 0, 1, -1 and one monomial multiplier per generator
                    if (ci == 0) coeff = MultiPoly{};
                    else if (ci == 1) coeff = MultiPoly::constant(1);
                    else if (ci == 2) coeff = MultiPoly::constant(-1);
                    else coeff = MultiPoly::variable(static_cast<uint32_t>(g % 3));
                    break;
            }
            if (ring.kind == RingKind::Modular)
                coeff = int_mod(as_int(coeff), Int(ring.modulus));
            acc = ring_add(ring, acc, ring_mul(ring, coeff, seq[g]));
        }
        return acc;
    };
    return chain;
}

size_t chain_stabilization(const Sigma1IdealChain& chain,
                           const std::vector<Value>& union_generators, size_t budget) {
    size_t stage = 0;
    for (const Value& g : union_generators) {
        bool found = false;
        for (size_t n = 0; n < budget && !found; ++n) {
            for (size_t i = 0; i < budget && !found; ++i) {
                if (ring_eq(chain.ring, chain.enumerate(n, i), g)) {
                    stage = std::max(stage, n);
                    found = true;
                }
            }
        }
        if (!found)
            throw GeneratorNotFound("chain_stabilization: generator " + value_str(g) +
                                    " not enumerated within budget");
    }
    return stage;
}

} // namespace revring
