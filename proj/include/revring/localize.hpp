#pragma once

#include "revring/fraction.hpp"
#include "revring/stage_enum.hpp"

#include <functional>
#include <vector>

namespace revring {

// Decidable multiplicative set: contains 1, closed under products, no zero
// divisors (checked where detectable).
struct MultiplicativeSet {
    enum class Tag {
        UnitsOnly,        // {1} (and the units it forces)
        PowersOf,         // { a^k : k >= 0 }
        FiniteClosure,    // multiplicative closure of an explicit list
        ComplementOfVariableIdeals,  // M = Q[xbar] minus the union of (x_i)
    };

    RingId ring;
    Tag tag = Tag::UnitsOnly;
    std::vector<Value> basis;  // PowersOf: {a}; FiniteClosure: the list

    static MultiplicativeSet units_only(const RingId& r);
    static MultiplicativeSet powers_of(const RingId& r, Value a);  // ZeroDivisorInM on a = 0
    static MultiplicativeSet finite_closure(const RingId& r, std::vector<Value> list);
    static MultiplicativeSet variable_complement();  // over Q[xbar], for T

    bool contains(const Value& v) const;
};

// Exact saturation of M over Z restricted to |r| <= bound: the signed
// integers whose prime support lies in the prime support of M.
std::vector<Int> saturate(const MultiplicativeSet& m, unsigned long bound);

// Enumerated structure: a stage-indexed, monotone, duplicate-free listing of
// fraction values together with the induced partial operations. Plain rings
// embed via r -> r/1. Single-owner stateful cache; produced values immutable.
class EnumeratedStructure {
public:
    using Enumerator = std::function<std::vector<Fraction>(unsigned stage)>;

    EnumeratedStructure(RingId ring, Enumerator enumerate);

    const RingId& ring() const { return ring_; }

    // Elements enumerated by the given stage, in discovery order (the
    // listing is injective: equal fractions are listed once, at their first
    // appearance).
    std::vector<Fraction> elements_at(unsigned stage);

    // Discovery log access: everything seen so far and the stage at which
    // each element first appeared.
    void grow(unsigned stage);
    const std::vector<Fraction>& discovered() const { return cache_; }
    unsigned first_stage(size_t index) const { return first_stage_.at(index); }

    Fraction op_add(const Fraction& a, const Fraction& b) const { return fraction_add(a, b); }
    Fraction op_mul(const Fraction& a, const Fraction& b) const { return fraction_mul(a, b); }

private:
    RingId ring_;
    Enumerator enumerate_;
    std::vector<Fraction> cache_;
    std::vector<unsigned> first_stage_;
    unsigned cached_stage_ = 0;
    bool primed_ = false;
};

// The base ring itself as an enumerated structure (Z: 0, 1, -1, 2, -2, ...).
EnumeratedStructure enumerate_ring(const RingId& ring);

// The c.e. ring of fractions r/m for m in M, enumerated by interleaving
// numerators with discovered denominators.
EnumeratedStructure localize(const RingId& ring, const MultiplicativeSet& m);

// Renaming of an enumerated structure onto the initial segment {0..k-1}:
// carrier index i corresponds to iso[i], and each operation is answered by
// enumerate-until-found, reporting the stage consumed.
class IndexedRing {
public:
    IndexedRing(EnumeratedStructure structure, unsigned stage_budget);

    size_t size() const { return iso_.size(); }
    const Fraction& iso(size_t index) const { return iso_.at(index); }
    std::optional<size_t> index_of(const Fraction& f) const;

    struct OpResult {
        size_t index;
        unsigned stage_used;
    };
    OpResult add(size_t a, size_t b);  // StageBudgetExhausted
    OpResult mul(size_t a, size_t b);

private:
    OpResult locate(const Fraction& f);

    EnumeratedStructure structure_;
    unsigned budget_;
    std::vector<Fraction> iso_;
};

// Carrier = the elements enumerated within the stage budget; throws
// StageBudgetExhausted when nothing appears in time.
IndexedRing index_structure(EnumeratedStructure structure, unsigned stages);

} // namespace revring
