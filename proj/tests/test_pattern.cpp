#include <doctest.h>

#include "parrondo/formulas.hpp"
#include "parrondo/pattern.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace parrondo;

namespace {

CoinProbs<Rational> coins(const Rational& rho) {
    ModelParams p;
    p.rho = rho;
    return derive_coin_probs(p);
}

}  // namespace

TEST_CASE("cycle sums equal the phase chain on exact chains") {
    // rho = 1/3 over the full grid runs in the acceptance suite; the other
    // sample points from the dual-path property run here.
    for (const Rational& rho : {Rational(1, 2), Rational(2)}) {
        auto c = coins(rho);
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s)
                for (int n : {2, 4, 6}) {
                    auto cyc = pattern_ensemble_stats<Rational>(r, s, Rational(n), c, PatternMethod::cycle);
                    auto ph = pattern_ensemble_stats<Rational>(r, s, Rational(n), c, PatternMethod::phase);
                    CHECK(cyc.ensemble_mu == ph.ensemble_mu);
                    CHECK(cyc.ensemble_sigma2 == ph.ensemble_sigma2);
                    CHECK(cyc.pair_cov == ph.pair_cov);
                }
    }
}

TEST_CASE("pattern [1,1] at two players reproduces the exact values") {
    auto c = coins(Rational(1, 3));
    auto e = pattern_ensemble_stats<Rational>(1, 1, Rational(2), c);
    CHECK(e.ensemble_mu == Rational(48, 1609));
    CHECK(e.ensemble_sigma2 == Rational("74176355601/141627323986"));
}

TEST_CASE("direct type-count route agrees with the pair decomposition") {
    auto c = coins(Rational(1, 3));
    for (int n : {2, 3})
        for (int r = 1; r <= 2; ++r)
            for (int s = 1; s <= 2; ++s) {
                auto direct = pattern_ensemble_direct<Rational>(r, s, n, c);
                auto assembled = pattern_ensemble_stats<Rational>(r, s, Rational(n), c);
                CHECK(*direct.mu == assembled.ensemble_mu);
                CHECK(*direct.sigma2 == assembled.ensemble_sigma2);
                // and the phase oracle on the type-count chains agrees too
                auto direct_phase = pattern_ensemble_direct<Rational>(r, s, n, c, PatternMethod::phase);
                CHECK(*direct_phase.mu == *direct.mu);
                CHECK(*direct_phase.sigma2 == *direct.sigma2);
            }
}

TEST_CASE("patterns are fair at rho = 1") {
    auto c = coins(Rational(1));
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int n : {2, 5}) {
                auto e = pattern_ensemble_stats<Rational>(r, s, Rational(n), c);
                CHECK(e.ensemble_mu == Rational(0));
            }
}

TEST_CASE("pattern variances are nonnegative") {
    for (const Rational& rho : {Rational(1, 3), Rational(2)}) {
        auto c = coins(rho);
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                auto e = pattern_ensemble_stats<Rational>(r, s, Rational(4), c);
                CHECK(e.ensemble_sigma2 >= 0);
                CHECK(e.per_player_sigma2 >= 0);
            }
    }
}

TEST_CASE("pattern sign law at sampled points") {
    CHECK(pattern_sign(3, 2, 5, Rational(1, 2)) == 1);
    CHECK(pattern_sign(3, 2, 5, Rational(1)) == 0);
    CHECK(pattern_sign(3, 2, 5, Rational(2)) == -1);
}

TEST_CASE("pattern statistics agree with a finite-horizon oracle") {
    auto cd = coin_probs_as<double>(coins(Rational(1, 3)));
    const int r = 2, s = 1, n = 3;
    auto one_a = build_lumped_one<double>(n, cd, GameKind::a_prime);
    auto one_b = build_lumped_one<double>(n, cd, GameKind::b);
    auto engine = pattern_stats_cycle(one_a, one_b, r, s);
    // start the oracle from the stationary law of the one-period product
    auto cx_pi = stationary((one_a.P.pow(r) * one_b.P.pow(s)));
    double mu_o = testing::oracle_pattern_mean_slope(one_a, one_b, r, s, cx_pi, 400);
    double var_o = testing::oracle_pattern_variance_slope(one_a, one_b, r, s, cx_pi, 400);
    CHECK(std::fabs(*engine.mu - mu_o) < 1e-10);
    CHECK(std::fabs(*engine.sigma2 - var_o) < 1e-8);

    auto pair_a = build_lumped_pair<double>(n, cd, GameKind::a_prime);
    auto pair_b = build_lumped_pair<double>(n, cd, GameKind::b);
    auto engine_pair = pattern_stats_cycle(pair_a, pair_b, r, s);
    auto pair_pi = stationary((pair_a.P.pow(r) * pair_b.P.pow(s)));
    double cov_o = testing::oracle_pattern_covariance_slope(pair_a, pair_b, r, s, pair_pi, 2000);
    CHECK(std::fabs(*engine_pair.sigma12 - cov_o) < 1e-8);
}

TEST_CASE("reducible one-period products are reported") {
    // a two-state deterministic flip composed with itself is periodic but
    // irreducible; a block chain is not
    GameChain<Rational> blocks;
    blocks.label = "blocks";
    blocks.P = Matrix<Rational>(4, 4);
    blocks.P(0, 1) = Rational(1);
    blocks.P(1, 0) = Rational(1);
    blocks.P(2, 3) = Rational(1);
    blocks.P(3, 2) = Rational(1);
    blocks.W = Matrix<Rational>(4, 4);
    detail::finish_ensemble(blocks);
    CHECK_THROWS_AS(pattern_stats_cycle(blocks, blocks, 1, 1), ReducibleChainError);
}

TEST_CASE("one-player original pattern [2,1] ties to the mixture mean") {
    for (const Rational& rho : {Rational(1, 3), Rational(1, 2), Rational(3)}) {
        auto c = coins(rho);
        auto stats = pattern_stats_cycle(build_one_player_A<Rational>(), build_one_player_B<Rational>(c), 2, 1);
        CHECK(Rational(3, 2) * *stats.mu == formulas::mu_mixture_half<Rational>(rho));
    }
}

TEST_CASE("pattern ensemble limits") {
    auto c = coins(Rational(1, 3));
    auto lim = pattern_ensemble_limit(1, 1, c);
    CHECK(lim.mu == Rational(48, 1609));
    CHECK(lim.sigma2 == Rational("5935929718185/13404609664322"));
    // the limit mean coincides with the closed form for every tested (r,s)
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            CHECK(pattern_ensemble_limit(r, s, c).mu == formulas::pattern_mean_limit<Rational>(r, s, Rational(1, 3)));
}

TEST_CASE("mixture-pattern relation report") {
    auto r21 = mixture_pattern_relation(2, 1, Rational(1, 3));
    CHECK(r21.closed_forms_equal);
    CHECK(r21.within_tol);
    auto r13 = mixture_pattern_relation(1, 3, Rational(2));
    CHECK(r13.closed_forms_equal);
    CHECK(r13.within_tol);
    CHECK(r13.closed_form_value < 0);
}

TEST_CASE("mixture limit reproduces the published values") {
    auto c = coins(Rational(1, 3));
    auto lim = mixture_ensemble_limit(Rational(1, 2), c);
    CHECK(lim.mu == Rational(48, 1609));
    CHECK(lim.sigma2 == Rational("5941525691817/13404609664322"));
}
