#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revring/matrix.hpp"
#include "revring/errors.hpp"

#include <numeric>
#include <random>

using namespace revring;

namespace {

// Independent oracle: determinant as the signed permutation sum.
Rat det_permanent_style(const Matrix& a) {
    const size_t n = a.dim();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat det = 0;
    do {
        // parity by counting inversions
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rat term = 1;
        for (size_t i = 0; i < n; ++i) term *= a.at(i, perm[i]);
        det += (inv % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Matrix random_matrix(std::mt19937_64& eng, size_t n) {
    Matrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = Rat(static_cast<long>(eng() % 19) - 9, 1 + static_cast<long>(eng() % 3));
    return m;
}

} // namespace

TEST_CASE("determinant: frozen examples") {
    CHECK(determinant(Matrix::identity(3)) == Rat(1));

    Matrix a(2, {Rat(1), Rat(2), Rat(3), Rat(4)});
    CHECK(determinant(a) == Rat(-2));
    CHECK(det_permanent_style(a) == Rat(-2));

    Matrix t(3);
    t.at(0, 0) = 2; t.at(1, 1) = 3; t.at(2, 2) = 4;
    t.at(0, 1) = 7; t.at(0, 2) = -1; t.at(1, 2) = 5;
    CHECK(determinant(t) == Rat(24));
}

TEST_CASE("determinant agrees with the permutation-sum oracle and any-line expansion") {
    std::mt19937_64 eng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 1 + eng() % 5;
        Matrix a = random_matrix(eng, n);
        Rat d = determinant(a);
        CHECK(d == det_permanent_style(a));
        for (size_t i = 0; i < n; ++i) {
            CHECK(determinant_along_row(a, i) == d);
            CHECK(determinant_along_col(a, i) == d);
        }
    }
}

TEST_CASE("adjugate inverse: frozen examples") {
    CHECK(adjugate_inverse(Matrix::identity(3)) == Matrix::identity(3));

    Matrix d(2);
    d.at(0, 0) = 2; d.at(1, 1) = 4;
    Matrix dinv = adjugate_inverse(d);
    CHECK(dinv.at(0, 0) == Rat(1, 2));
    CHECK(dinv.at(1, 1) == Rat(1, 4));
    CHECK(dinv.at(0, 1) == Rat(0));

    Matrix u(2);
    u.at(0, 0) = 1; u.at(0, 1) = 1; u.at(1, 1) = 1;
    Matrix uinv = adjugate_inverse(u);
    CHECK(uinv.at(0, 1) == Rat(-1));
    CHECK(u * uinv == Matrix::identity(2));

    Matrix sing(2, {Rat(1), Rat(2), Rat(2), Rat(4)});
    CHECK_THROWS_AS(adjugate_inverse(sing), SingularMatrix);
}

TEST_CASE("A*adj(A) = adj(A)*A = det(A)*I") {
    std::mt19937_64 eng(77);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + eng() % 5;
        Matrix a = random_matrix(eng, n);
        Rat d = determinant(a);
        Matrix adj = adjugate(a);
        Matrix left = a * adj;
        Matrix right = adj * a;
        Matrix expect(n);
        for (size_t i = 0; i < n; ++i) expect.at(i, i) = d;
        CHECK(left == expect);
        CHECK(right == expect);
    }
}

TEST_CASE("upper-triangular determinant equals the diagonal product") {
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + eng() % 5;
        Matrix a(n);
        Rat prod = 1;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i; j < n; ++j)
                a.at(i, j) = Rat(static_cast<long>(eng() % 15) - 7);
            prod *= a.at(i, i);
        }
        CHECK(determinant(a) == prod);
    }
}

TEST_CASE("triangular solve") {
    std::vector<Rat> b = {Rat(5), Rat(-3)};
    CHECK(triangular_solve(Matrix::identity(2), b) == b);

    Matrix a(2);
    a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 1) = 3;
    auto x = triangular_solve(a, {Rat(4), Rat(6)});
    CHECK(x == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(a.apply(x) == std::vector<Rat>{Rat(4), Rat(6)});

    Matrix diag(3);
    diag.at(0, 0) = 1; diag.at(1, 1) = 1; diag.at(2, 2) = 5;
    auto y = triangular_solve(diag, {Rat(0), Rat(0), Rat(10)});
    CHECK(y == std::vector<Rat>{Rat(0), Rat(0), Rat(2)});

    Matrix zero_diag(2);
    zero_diag.at(0, 1) = 1;
    CHECK_THROWS_AS(triangular_solve(zero_diag, {Rat(1), Rat(1)}), ZeroDiagonal);

    Matrix lower(2);
    lower.at(0, 0) = 1; lower.at(1, 0) = 2; lower.at(1, 1) = 1;
    CHECK_THROWS_AS(triangular_solve(lower, {Rat(1), Rat(1)}), NotTriangular);

    // equals adjugate_inverse(A) * b on random triangular systems
    std::mt19937_64 eng(8);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + eng() % 5;
        Matrix a2(n);
        for (size_t i = 0; i < n; ++i) {
            a2.at(i, i) = Rat(1 + static_cast<long>(eng() % 6));
            for (size_t j = i + 1; j < n; ++j) a2.at(i, j) = Rat(static_cast<long>(eng() % 9) - 4);
        }
        std::vector<Rat> rhs(n);
        for (auto& v : rhs) v = Rat(static_cast<long>(eng() % 21) - 10);
        auto sol = triangular_solve(a2, rhs);
        CHECK(a2.apply(sol) == rhs);
        CHECK(adjugate_inverse(a2).apply(rhs) == sol);
    }
}
