#include <doctest.h>

#include "parrondo/formulas.hpp"
#include "parrondo/params.hpp"

using namespace parrondo;

namespace {
ModelParams make(const Rational& rho, const Rational& eps = Rational(0)) {
    ModelParams p;
    p.rho = rho;
    p.eps = eps;
    return p;
}
}  // namespace

TEST_CASE("coin probabilities at the classic parameter point") {
    auto c = derive_coin_probs(make(Rational(1, 3)));
    CHECK(c.p0 == Rational(1, 10));
    CHECK(c.p1 == Rational(3, 4));
    CHECK(c.p2 == Rational(3, 4));
    CHECK(c.q0 == Rational(9, 10));
}

TEST_CASE("coin probabilities at rho = 1 are fair") {
    auto c = derive_coin_probs(make(Rational(1)));
    CHECK(c.p0 == Rational(1, 2));
    CHECK(c.p1 == Rational(1, 2));
}

TEST_CASE("bias subtracts from each coin") {
    auto c = derive_coin_probs(make(Rational(1, 3), Rational(1, 1000)));
    CHECK(c.p0 == Rational(99, 1000));
    CHECK(c.p1 == Rational(749, 1000));
    CHECK(c.p2 == Rational(749, 1000));
}

TEST_CASE("complements are exact") {
    for (const Rational& rho : {Rational(1, 10), Rational(1, 3), Rational(7, 5), Rational(9)}) {
        for (const Rational& eps : {Rational(0), Rational(1, 1000)}) {
            auto c = derive_coin_probs(make(rho, eps));
            CHECK(c.p0 + c.q0 == Rational(1));
            CHECK(c.p1 + c.q1 == Rational(1));
            CHECK(c.p2 + c.q2 == Rational(1));
        }
    }
}

TEST_CASE("out-of-range parameters are rejected") {
    CHECK_THROWS_AS(derive_coin_probs(make(Rational(0))), ValidationError);
    CHECK_THROWS_AS(derive_coin_probs(make(Rational(-1, 3))), ValidationError);
    // eps = 1/10 drives p0 at rho=1/3 to zero
    CHECK_THROWS_AS(derive_coin_probs(make(Rational(1, 3), Rational(1, 10))), ValidationError);
    CHECK_THROWS_AS(derive_coin_probs(make(Rational(1, 3), Rational(-1, 100))), ValidationError);
    ModelParams p = make(Rational(1, 3));
    p.players = 0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("unbiased game B is fair under its stationary law") {
    for (const Rational& rho : {Rational(1, 3), Rational(2, 5), Rational(3)}) {
        auto c = derive_coin_probs(make(rho));
        auto pi = formulas::pi_B1<Rational>(rho);
        Rational drift = pi[0] * (c.p0 - c.q0) + pi[1] * (c.p1 - c.q1) + pi[2] * (c.p2 - c.q2);
        CHECK(drift == Rational(0));
    }
}

TEST_CASE("scalar conversion of coin probabilities") {
    auto c = derive_coin_probs(make(Rational(1, 3)));
    auto cd = coin_probs_as<double>(c);
    CHECK(cd.p0 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(cd.p1 == doctest::Approx(0.75).epsilon(1e-15));
}
