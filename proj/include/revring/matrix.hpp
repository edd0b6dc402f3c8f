#pragma once

#include "revring/rational.hpp"

#include <vector>

namespace revring {

// Square matrix over Q with exact entries.
class Matrix {
public:
    explicit Matrix(size_t n) : n_(n), a_(n * n, Rat(0)) {}
    Matrix(size_t n, std::vector<Rat> entries);  // row-major, n*n entries

    static Matrix identity(size_t n);

    size_t dim() const { return n_; }
    const Rat& at(size_t i, size_t j) const { return a_[i * n_ + j]; }
    Rat& at(size_t i, size_t j) { return a_[i * n_ + j]; }

    // Minor submatrix: row i and column j removed (0-based).
    Matrix minor_submatrix(size_t i, size_t j) const;

    Matrix operator*(const Matrix& o) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // A * v

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool is_upper_triangular() const;

private:
    size_t n_;
    std::vector<Rat> a_;
};

// Determinant by cofactor expansion along the last row (the inductive
// definition). Exponential, fine at the sizes used here.
Rat determinant(const Matrix& a);

// Cofactor expansion along an arbitrary row/column; agrees with
// determinant() (Laplace expansion), used by the property tests.
Rat determinant_along_row(const Matrix& a, size_t row);
Rat determinant_along_col(const Matrix& a, size_t col);

// adj(A): the transpose-of-cofactors matrix with A*adj(A) = det(A)*I.
Matrix adjugate(const Matrix& a);

// A^{-1} = adj(A)/det(A); throws SingularMatrix when det(A) = 0.
Matrix adjugate_inverse(const Matrix& a);

// Back-substitution for upper-triangular A with nonzero diagonal.
// Throws NotTriangular / ZeroDiagonal.
std::vector<Rat> triangular_solve(const Matrix& a, const std::vector<Rat>& b);

} // namespace revring
