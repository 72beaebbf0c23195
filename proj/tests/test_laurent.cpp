#include <doctest.h>

#include "parrondo/chains.hpp"
#include "parrondo/laurent.hpp"
#include "parrondo/markov.hpp"
#include "parrondo/params.hpp"

using namespace parrondo;

namespace {
const Laurent h = Laurent::generator();
}

TEST_CASE("laurent basic arithmetic") {
    Laurent one(Rational(1));
    Laurent x = one + h;  // 1 + h
    CHECK(x.coeff(0) == 1);
    CHECK(x.coeff(1) == 1);
    CHECK(x.coeff(2) == 0);

    Laurent sq = x * x;
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(2) == 1);

    CHECK((x - x).is_zero());
    CHECK((h * h / h) == h);
}

TEST_CASE("laurent inversion produces the geometric series") {
    Laurent inv = (Laurent(Rational(1)) + h).inverse();
    for (int k = 0; k < 8; ++k) CHECK(inv.coeff(k) == (k % 2 == 0 ? Rational(1) : Rational(-1)));
}

TEST_CASE("laurent poles shift valuation") {
    Laurent n = h.inverse();  // N = 1/h
    CHECK(n.valuation() == -1);
    CHECK(n.coeff(-1) == 1);
    Laurent y = (h * h + h * h * h) / h;
    CHECK(y.coeff(1) == 1);
    CHECK(y.coeff(2) == 1);
    CHECK(y.valuation() == 1);
}

TEST_CASE("reading past the tracked precision throws") {
    Laurent inv = (Laurent(Rational(1)) + h).inverse();
    CHECK_THROWS_AS(inv.coeff(Laurent::series_terms() + 5), PrecisionError);
}

TEST_CASE("division by zero-within-precision throws") {
    Laurent zero;
    CHECK_THROWS_AS(zero.inverse(), Error);
}

TEST_CASE("2x2 laurent matrix inverse") {
    // [[h, 1], [1, h]]^-1 = 1/(h^2-1) [[h, -1], [-1, h]]
    Matrix<Laurent> m(2, 2);
    m(0, 0) = h;
    m(0, 1) = Laurent(Rational(1));
    m(1, 0) = Laurent(Rational(1));
    m(1, 1) = h;
    Matrix<Laurent> inv = inverse(m);
    Laurent det = h * h - Laurent(Rational(1));
    CHECK((inv(0, 0) - h / det).is_zero());
    CHECK((inv(0, 1) + Laurent(Rational(1)) / det).is_zero());
    CHECK((inv(1, 1) - h / det).is_zero());
}

TEST_CASE("lazy-chain fundamental identity holds over the laurent field") {
    // With N = 1/h formal, Z_lazy - Pi must equal exactly h^-1 (Z_P - Pi).
    ModelParams p;
    p.rho = Rational(1, 3);
    auto coins = derive_coin_probs(p);

    auto base = build_one_player_B<Rational>(coins);
    auto pi_q = stationary(base.P);
    auto f_q = fundamental(base.P, pi_q);
    Matrix<Rational> expect = f_q.Z - f_q.Pi;

    auto coins_l = coin_probs_as<Laurent>(coins);
    auto lazy = build_lumped_one<Laurent>(h.inverse(), coins_l, GameKind::b);
    auto pi_l = stationary(lazy.P);
    auto f_l = fundamental(lazy.P, pi_l);
    Matrix<Laurent> diff = f_l.Z - f_l.Pi;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Laurent want = Laurent::monomial(expect(i, j), -1);
            CHECK((diff(i, j) - want).is_zero());
        }
}
