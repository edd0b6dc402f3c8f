#include "revring/matrix.hpp"

#include "revring/errors.hpp"

namespace revring {

Matrix::Matrix(size_t n, std::vector<Rat> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw Error("Matrix: wrong entry count");
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::minor_submatrix(size_t i, size_t j) const {
    Matrix m(n_ - 1);
    for (size_t r = 0, mr = 0; r < n_; ++r) {
        if (r == i) continue;
        for (size_t c = 0, mc = 0; c < n_; ++c) {
            if (c == j) continue;
            m.at(mr, mc) = at(r, c);
            ++mc;
        }
        ++mr;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (n_ != o.n_) throw Error("Matrix multiply: dimension mismatch");
    Matrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            Rat s = 0;
            for (size_t k = 0; k < n_; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != n_) throw Error("Matrix apply: dimension mismatch");
    std::vector<Rat> r(n_, Rat(0));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::is_upper_triangular() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

Rat determinant(const Matrix& a) {
    const size_t n = a.dim();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Rat det = 0;
    // sum_{i=1}^n (-1)^{n+i} A_{n,i} det(minor A_{n,i})
    for (size_t i = 0; i < n; ++i) {
        if (a.at(n - 1, i).is_zero()) continue;
        Rat term = a.at(n - 1, i) * determinant(a.minor_submatrix(n - 1, i));
        if ((n - 1 + i) % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

Rat determinant_along_row(const Matrix& a, size_t row) {
    const size_t n = a.dim();
    if (n == 1) return a.at(0, 0);
    Rat det = 0;
    for (size_t j = 0; j < n; ++j) {
        if (a.at(row, j).is_zero()) continue;
        Rat term = a.at(row, j) * determinant(a.minor_submatrix(row, j));
        if ((row + j) % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

Rat determinant_along_col(const Matrix& a, size_t col) {
    const size_t n = a.dim();
    if (n == 1) return a.at(0, 0);
    Rat det = 0;
    for (size_t i = 0; i < n; ++i) {
        if (a.at(i, col).is_zero()) continue;
        Rat term = a.at(i, col) * determinant(a.minor_submatrix(i, col));
        if ((i + col) % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

Matrix adjugate(const Matrix& a) {
    const size_t n = a.dim();
    Matrix adj(n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat c = determinant(a.minor_submatrix(j, i));
            if ((i + j) % 2 == 1) c = -c;
            adj.at(i, j) = c;
        }
    return adj;
}

Matrix adjugate_inverse(const Matrix& a) {
    Rat det = determinant(a);
    if (det.is_zero()) throw SingularMatrix("adjugate_inverse: determinant is zero");
    Matrix adj = adjugate(a);
    Matrix inv(a.dim());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) inv.at(i, j) = adj.at(i, j) / det;
    return inv;
}

std::vector<Rat> triangular_solve(const Matrix& a, const std::vector<Rat>& b) {
    const size_t n = a.dim();
    if (b.size() != n) throw Error("triangular_solve: dimension mismatch");
    if (!a.is_upper_triangular()) throw NotTriangular("triangular_solve: matrix not upper-triangular");
    for (size_t i = 0; i < n; ++i)
        if (a.at(i, i).is_zero()) throw ZeroDiagonal("triangular_solve: zero diagonal entry");
    std::vector<Rat> x(n, Rat(0));
    for (size_t ii = n; ii-- > 0;) {
        Rat s = b[ii];
        for (size_t j = ii + 1; j < n; ++j) s -= a.at(ii, j) * x[j];
        x[ii] = s / a.at(ii, ii);
    }
    return x;
}

} // namespace revring
