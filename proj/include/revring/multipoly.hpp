#pragma once

#include "revring/exponent.hpp"
#include "revring/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace revring {

// Sparse exact polynomial over Q, in countably many variables x0, x1, ...
// Only finitely many variables appear in any value. The term map holds no
// zero coefficients; its key set is exactly the support. The zero polynomial
// is the empty map. Terms are kept in graded-lex order, so the leading term
// is the last entry of the map.
class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, Rat, GrlexLess>;

    MultiPoly() = default;

    static MultiPoly constant(const Rat& c);
    static MultiPoly variable(uint32_t index, uint32_t exp = 1);
    static MultiPoly monomial(const ExponentVector& e, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // coefficient of the empty exponent

    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const ExponentVector& e) const;

    // Total degree; -1 for the zero polynomial (sentinel below all naturals).
    long total_degree() const;

    const ExponentVector& lead_exponent() const;  // grlex-maximal; requires nonzero
    const Rat& lead_coeff() const;

    std::vector<ExponentVector> support() const;
    std::vector<uint32_t> variables() const;  // sorted, distinct

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Rat& c) const;
    MultiPoly pow(unsigned long k) const;

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    bool is_integral() const;  // all coefficients integers

    // --- univariate view -------------------------------------------------
    // A polynomial is univariate if it mentions at most one variable.
    bool is_univariate() const { return variables().size() <= 1; }
    // The variable of a nonconstant univariate polynomial.
    std::optional<uint32_t> sole_variable() const;
    long degree_in(uint32_t var) const;          // -1 for zero polynomial
    Rat coeff_of(uint32_t var, uint32_t k) const;
    static MultiPoly from_coeffs(uint32_t var, std::span<const Rat> coeffs);
    Rat eval(uint32_t var, const Rat& point) const;  // requires univariate in var

    // Divide every term by x^e; requires e to divide each term's exponent.
    MultiPoly divide_monomial(const ExponentVector& e) const;

    void add_term(const ExponentVector& e, const Rat& c);  // accumulate, drop zeros

    std::string str() const;  // canonical text form, grlex-descending

private:
    TermMap terms_;
};

// Shared variable of a set of univariate polynomials (constants are
// compatible with any variable). Throws NotUnivariate on a genuine mismatch
// or a multivariate input. Returns fallback when all are constants.
uint32_t common_univariate_variable(std::span<const MultiPoly> ps, uint32_t fallback = 0);

} // namespace revring
