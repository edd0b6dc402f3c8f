#pragma once

#include "revring/errors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace revring {

// Finitely-supported exponent vector: sorted (variable index, exponent) pairs,
// strictly increasing indices, no zero exponents stored. The empty vector is
// the exponent of the constant monomial 1.
class ExponentVector {
public:
    using Entry = std::pair<uint32_t, uint32_t>;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<Entry> entries);

    static ExponentVector variable(uint32_t index, uint32_t exp = 1);

    uint32_t get(uint32_t index) const;
    void set(uint32_t index, uint32_t exp);  // exp 0 erases

    bool is_zero() const { return entries_.empty(); }
    uint64_t total_degree() const;
    uint32_t max_index() const;  // requires !is_zero()

    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<uint32_t> support() const;

    // Pointwise order: this <= other in every coordinate. Under the monomial
    // reading this is exactly "x^this divides x^other".
    bool divides(const ExponentVector& other) const;

    ExponentVector operator+(const ExponentVector& o) const;
    // Pointwise difference; requires o.divides(*this).
    ExponentVector minus(const ExponentVector& o) const;

    static ExponentVector meet(const ExponentVector& a, const ExponentVector& b);
    static ExponentVector join(const ExponentVector& a, const ExponentVector& b);

    bool operator==(const ExponentVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const ExponentVector& o) const { return !(*this == o); }

    std::string str() const;  // "x0^2*x1", "1" for the zero vector

private:
    std::vector<Entry> entries_;
};

// Graded lexicographic order: higher total degree first; ties broken
// lexicographically with x0 > x1 > ... (first differing index, larger
// exponent wins).
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return grlex_less(a, b);
    }
};

// Pointwise minimum of a nonempty set; throws EmptySet otherwise.
ExponentVector meet_exponents(std::span<const ExponentVector> s);

} // namespace revring
