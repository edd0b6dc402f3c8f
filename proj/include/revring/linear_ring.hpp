#pragma once

#include "revring/rational.hpp"
#include "revring/stage_enum.hpp"

#include <map>
#include <string>
#include <vector>

namespace revring {

// Element q + sum a_i x_i of Q[x0, x1, ...]/(x_i x_j : i, j), the ring of
// linear polynomials with squared variables killed.
struct LinearRingElement {
    Rat constant;
    std::map<uint32_t, Rat> coeffs;  // no zero entries

    static LinearRingElement variable(uint32_t i, const Rat& c = Rat(1));
    static LinearRingElement scalar(const Rat& q);

    bool is_zero() const { return constant.is_zero() && coeffs.empty(); }
    bool operator==(const LinearRingElement& o) const {
        return constant == o.constant && coeffs == o.coeffs;
    }

    std::string str() const;
};

LinearRingElement lin_add(const LinearRingElement& a, const LinearRingElement& b);
LinearRingElement lin_sub(const LinearRingElement& a, const LinearRingElement& b);
LinearRingElement lin_scale(const LinearRingElement& a, const Rat& c);

// (q + sum a_i x_i)(r + sum b_i x_i) = qr + sum (r a_i + q b_i) x_i.
LinearRingElement lin_mul(const LinearRingElement& a, const LinearRingElement& b);

// Push a sequence into the ideal of constant-free elements: entries are kept
// until the first one with a nonzero constant q appears at position n; from
// there a'_i = q * a_{i+1} - r_{i+1} * a_n (r_j the constant of a_j). An
// all-constant-zero sequence is returned unchanged.
std::vector<LinearRingElement> normalize_independent(const std::vector<LinearRingElement>& seq);

// Exact rank of the coefficient vectors (constants ignored), by exhaustive
// nonzero-minor search through the linalg determinant.
size_t coefficient_rank(const std::vector<LinearRingElement>& seq);

struct DominationTable {
    std::vector<long> f;           // f(n) = largest variable in a'_0..a'_{n+1}
    std::vector<long> complement;  // leading elements of the complement of A
    bool dominates = false;        // f(n) >= complement[n] at every checked n
};

// The variable-index bound extracted from a normalized independent sequence,
// checked against the complement of the stand-in dense set A.
DominationTable dominating_f(const std::vector<LinearRingElement>& normalized,
                             const StageEnumeration& a, unsigned horizon, size_t check_upto);

} // namespace revring
