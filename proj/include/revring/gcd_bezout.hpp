#pragma once

#include "revring/ideal.hpp"

#include <functional>
#include <optional>

namespace revring {

struct BezoutCertificate {
    RingId ring;
    Value d;                         // the gcd, canonical (positive / monic)
    std::vector<Value> inputs;       // the generators a_i
    std::vector<Value> coefficients; // d = sum coefficients[i] * inputs[i]

    bool verify() const;  // exact: the combination reproduces d, and d | a_i
};

// gcd and lcm with canonical normalization; gcd*lcm is an associate of ab.
// Supported over Z and Q[x]. (a, 0) -> (|a|, 0).
std::pair<Value, Value> gcd_lcm(const RingId& ring, const Value& a, const Value& b);

// Same pair computed through complete factorizations, grouping associate
// factors and taking exponent minima/maxima. Independent of the Euclidean
// route; the two must agree up to the canonical normalization.
std::pair<Value, Value> gcd_lcm_via_factoring(const RingId& ring, const Value& a, const Value& b);

// Extended Euclid over Z or Q[x]; throws BothZero.
BezoutCertificate extended_gcd(const RingId& ring, const Value& a, const Value& b);

// Fold of extended_gcd across all generators: (generators) = (d) with a
// spanning certificate.
BezoutCertificate principal_generator(const FgIdeal& ideal);

struct Factorization {
    RingId ring;
    Value unit;
    std::vector<Value> factors;
};

// Complete factorization of a nonzero element of Z or Q[x].
Factorization factor_element(const RingId& ring, const Value& a, unsigned degree_bound = 8);

// A bijection h with factors1[i] ~ factors2[h(i)] (associates), if one
// exists. Lengths must match; pairing is by associate classes.
std::optional<std::vector<size_t>> factorization_equal(const Factorization& f1,
                                                       const Factorization& f2);

// Dedekind-Hasse norm f(0) = 0, f(r) = 1 + (number of irreducible factors).
struct DHNorm {
    RingId ring;
    unsigned degree_bound = 12;

    unsigned norm(const Value& r) const;
};

struct DHWitness {
    Value a, b;      // the checked pair
    Value x, y;      // 0 < f(ax + by) < f(b) when b does not divide a
    Value combination;
};

struct DHReport {
    DHNorm norm;
    size_t pairs_checked = 0;
    std::vector<DHWitness> witnesses;   // sampled axiom (ii) certificates
    std::vector<Value> units;           // { r in sample : f(r) = f(1) }
};

// Builds the norm and verifies axioms (i)-(iii) on the given sample of
// elements; axiom (ii) witnesses come from extended_gcd. Throws
// AxiomViolation with a counterexample if any check fails.
DHReport dh_build_check(const RingId& ring, const std::vector<Value>& sample,
                        unsigned degree_bound = 12);

// Minimal-norm nonzero element of the ideal among those enumerated within
// the horizon. The enumeration closes the generators under subtraction and
// the elementary division step, so it reaches the true minimum for Z and
// Q[x] once the horizon covers the Euclidean run. Throws HorizonTooSmall.
Value dh_generator(const FgIdeal& ideal, const DHNorm& norm, unsigned horizon);

// Data for the principal-extension recombination: (I, a) = (b) with
// witnesses a = b * a_over_b and b = i + a * d, plus (I : a) = (c).
struct PrincExtData {
    FgIdeal ideal;
    Value a;
    Value b;
    Value a_over_b;
    Value i_part;  // element of I
    Value d;
    Value c;
};

// Returns b*c and verifies it generates I: bc must lie in I and sampled
// I-elements must lie in (bc). Throws InconsistentWitness.
Value princ_ext(const PrincExtData& data);

// One branching step: from a witness pair ab in I, a not in I, b not in I,
// produce ((I, a), (I : a)); a lands in the first, b in the second.
// Throws NotAWitness when the pair does not witness non-primality.
std::pair<FgIdeal, FgIdeal> prime_branch_step(const FgIdeal& ideal, const Value& a,
                                              const Value& b);

} // namespace revring
