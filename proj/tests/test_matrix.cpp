#include <doctest.h>

#include "parrondo/matrix.hpp"

#include <cmath>

using namespace parrondo;

TEST_CASE("exact LU solve and inverse") {
    Matrix<Rational> a(3, 3);
    int vals[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = Rational(vals[i][j]);
    Vector<Rational> b{Rational(4), Rational(5), Rational(6)};
    auto x = solve_linear(a, b);
    CHECK(a * x == b);

    Matrix<Rational> inv = inverse(a);
    CHECK(a * inv == Matrix<Rational>::identity(3));
    CHECK(inv * a == Matrix<Rational>::identity(3));
}

TEST_CASE("singular matrices are reported") {
    Matrix<Rational> a(2, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(2);
    a(1, 0) = Rational(2);
    a(1, 1) = Rational(4);
    CHECK_THROWS_AS(inverse(a), SingularMatrixError);
}

TEST_CASE("float pivot tolerance flags near-singular systems") {
    Matrix<double> a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 1.0;
    a(1, 0) = 1.0;
    a(1, 1) = 1.0 + 1e-14;  // pivot after elimination ~1e-14 < 1e-12
    CHECK_THROWS_AS(solve_linear(a, Vector<double>{1.0, 1.0}), SingularMatrixError);
}

TEST_CASE("float and exact solves agree") {
    Matrix<Rational> aq(3, 3);
    Matrix<double> ad(3, 3);
    int vals[3][3] = {{5, 1, 2}, {1, 7, 1}, {2, 1, 9}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            aq(i, j) = Rational(vals[i][j]);
            ad(i, j) = vals[i][j];
        }
    Vector<Rational> bq{Rational(1), Rational(2), Rational(3)};
    Vector<double> bd{1, 2, 3};
    auto xq = solve_linear(aq, bq);
    auto xd = solve_linear(ad, bd);
    for (int i = 0; i < 3; ++i)
        CHECK(std::fabs(xd[static_cast<size_t>(i)] - scalar_traits<Rational>::to_double(xq[static_cast<size_t>(i)])) <
              1e-14);
}

TEST_CASE("matrix algebra basics") {
    auto eye = Matrix<Rational>::identity(4);
    CHECK(eye * eye == eye);
    CHECK(eye.pow(7) == eye);
    Matrix<Rational> m(2, 2);
    m(0, 1) = Rational(1);
    m(1, 0) = Rational(1);
    CHECK(m.pow(2) == Matrix<Rational>::identity(2));
    CHECK(m.transpose() == m);
    auto sums = row_sums(m);
    CHECK(sums[0] == Rational(1));
}
