#include <doctest.h>

#include "parrondo/formulas.hpp"
#include "parrondo/pattern.hpp"

#include <cmath>

using namespace parrondo;
using namespace parrondo::formulas;

namespace {

CoinProbs<Rational> coins(const Rational& rho, const Rational& eps = Rational(0)) {
    ModelParams p;
    p.rho = rho;
    p.eps = eps;
    return derive_coin_probs(p);
}

}  // namespace

TEST_CASE("mixture mean closed form") {
    CHECK(mu_mixture<Rational>(Rational(1, 2), Rational(1, 3)) == Rational(48, 1609));
    CHECK(mu_mixture<Rational>(Rational(1, 2), Rational(1)) == Rational(0));
    CHECK(mu_mixture_half<Rational>(Rational(1, 3)) == Rational(48, 1609));
    for (const Rational& gamma : {Rational(1, 4), Rational(2, 3)})
        for (const Rational& rho : {Rational(1, 3), Rational(2, 5), Rational(7)}) {
            CHECK(mu_mixture<Rational>(gamma, 1 / rho) == -mu_mixture<Rational>(gamma, rho));
            CHECK(mu_mixture<Rational>(Rational(1, 2), rho) == mu_mixture_half<Rational>(rho));
        }
}

TEST_CASE("biased mixture mean closed form") {
    CHECK(mu_mixture_biased_half<Rational>(Rational(1, 3), Rational(1, 1000)) == Rational("193387599/6704101000"));
    for (const Rational& rho : {Rational(1, 3), Rational(3, 2)})
        CHECK(mu_mixture_biased_half<Rational>(rho, Rational(0)) == mu_mixture_half<Rational>(rho));
    // at rho = 1 any positive bias loses
    CHECK(mu_mixture_biased_half<Rational>(Rational(1), Rational(1, 1000)) < 0);
}

TEST_CASE("game-B variance closed form") {
    CHECK(sigma2_B<Rational>(Rational(1, 3)) == Rational(81, 169));
    CHECK(sigma2_B<Rational>(Rational(1)) == Rational(1));
    for (const Rational& rho : {Rational(1, 3), Rational(2, 7)})
        CHECK(sigma2_B<Rational>(rho) == sigma2_B<Rational>(1 / rho));
}

TEST_CASE("mixture variance rational function in N at rho = 1/3") {
    CHECK(sigma2_mixture_half_rho13(Rational(2)) == Rational("114315959583/258261590798"));
    CHECK(sigma2_mixture_half_rho13_limit() == Rational("5941525691817/13404609664322"));
    // N = 3 cross-checks the matrix engine
    CHECK(sigma2_mixture_half_rho13(Rational(3)) ==
          ensemble_variance_mixture<Rational>(Rational(3), Rational(1, 2), coins(Rational(1, 3))));
    // monotonically increasing in N
    Rational prev = sigma2_mixture_half_rho13(Rational(2));
    for (int n = 3; n <= 12; ++n) {
        Rational cur = sigma2_mixture_half_rho13(Rational(n));
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(prev < sigma2_mixture_half_rho13_limit());
}

TEST_CASE("one-player variance asymptote") {
    // at gamma = 1/2 it is the same display as the sample-variance slope
    for (const Rational& rho : {Rational(1, 3), Rational(2, 5), Rational(4)}) {
        Rational direct = sigma2_one_player_asymptotic<Rational>(Rational(1, 2), rho);
        Rational via_slope = sample_variance_slope_mixture_half<Rational>(rho, Rational(1));
        CHECK(direct == via_slope);
        // invariant under rho -> 1/rho
        CHECK(direct == sigma2_one_player_asymptotic<Rational>(Rational(1, 2), 1 / rho));
    }
    CHECK(sigma2_one_player_asymptotic<Rational>(Rational(1, 2), Rational(3)) ==
          sigma2_one_player_asymptotic<Rational>(Rational(1, 2), Rational(1, 3)));

    // exact agreement with the Laurent-field engine for several gammas
    for (const Rational& gamma : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
        auto lim = mixture_ensemble_limit(gamma, coins(Rational(1, 3)));
        CHECK(lim.per_sigma2_n == sigma2_one_player_asymptotic<Rational>(gamma, Rational(1, 3)));
    }

    // large-N float engine approaches the asymptote
    auto cd = coin_probs_as<double>(coins(Rational(1, 3)));
    auto a = analyze_mixture_lumped<double>(1e4, 0.5, cd);
    double expect = scalar_traits<Rational>::to_double(
        sigma2_one_player_asymptotic<Rational>(Rational(1, 2), Rational(1, 3)));
    CHECK(std::fabs(1e4 * a.per_player_sigma2 - expect) / expect < 1e-3);
}

TEST_CASE("explicit pattern mean displays") {
    CHECK(mu_pattern11<Rational>(Rational(2), Rational(1, 3)) == Rational(48, 1609));
    // engine agreement for both displays across N
    auto c = coins(Rational(1, 3));
    for (int n : {2, 3, 5, 10}) {
        auto e11 = pattern_ensemble_stats<Rational>(1, 1, Rational(n), c);
        CHECK(e11.ensemble_mu == mu_pattern11<Rational>(Rational(n), Rational(1, 3)));
        auto e12 = pattern_ensemble_stats<Rational>(1, 2, Rational(n), c);
        CHECK(e12.ensemble_mu == mu_pattern12<Rational>(Rational(n), Rational(1, 3)));
    }
    CHECK(mu_pattern11<Rational>(Rational(3), Rational(1)) == Rational(0));
    // positivity for 0 < rho < 1 across N
    for (int n = 2; n <= 12; ++n) {
        CHECK(mu_pattern11<Rational>(Rational(n), Rational(1, 2)) > 0);
        CHECK(mu_pattern12<Rational>(Rational(n), Rational(1, 2)) > 0);
    }
}

TEST_CASE("spectral pattern mean evaluation") {
    // float E/D path against the exact display
    double expect = scalar_traits<Rational>::to_double(Rational(48, 1609));
    CHECK(std::fabs(pattern_mean_closed(1, 1, 2, 1.0 / 3) - expect) < 1e-12);
    CHECK(pattern_mean_closed(2, 3, 5, 1.0) == 0.0);
    // antisymmetry in float
    for (double rho : {0.25, 0.8, 3.0})
        CHECK(std::fabs(pattern_mean_closed(2, 1, 4, 1 / rho) + pattern_mean_closed(2, 1, 4, rho)) < 1e-12);
    // engine agreement at modest precision
    auto cd = coin_probs_as<double>(coins(Rational(1, 3)));
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s) {
            double engine = pattern_ensemble_stats<double>(r, s, 6.0, cd).ensemble_mu;
            CHECK(std::fabs(pattern_mean_closed(r, s, 6, 1.0 / 3) - engine) < 1e-12);
        }
}

TEST_CASE("one-player pattern mean and the coincidence factor") {
    for (double rho : {1.0 / 3, 0.5, 3.0}) {
        double expect = scalar_traits<Rational>::to_double(mu_mixture_half<Rational>(parse_rational(
            rho == 1.0 / 3 ? "1/3" : (rho == 0.5 ? "1/2" : "3"))));
        CHECK(std::fabs(1.5 * pattern_mean_closed_one_player(2, 1, rho) - expect) < 1e-12);
    }
}

TEST_CASE("pattern mean limits") {
    CHECK(pattern_mean_limit<Rational>(1, 1, Rational(1, 3)) == Rational(48, 1609));
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s)
            for (const Rational& rho : {Rational(1, 3), Rational(2)}) {
                Rational lim = pattern_mean_limit<Rational>(r, s, rho);
                CHECK(lim == mu_mixture<Rational>(Rational(r) / Rational(r + s), rho));
                // degree-2 homogeneity in (r, s)
                CHECK(lim == pattern_mean_limit<Rational>(3 * r, 3 * s, rho));
            }
}

TEST_CASE("pattern [1,1] variance rational function in N at rho = 1/3") {
    CHECK(sigma2_pattern11_rho13(Rational(2)) == Rational("74176355601/141627323986"));
    CHECK(sigma2_pattern11_rho13_limit() == Rational("5935929718185/13404609664322"));
    auto c = coins(Rational(1, 3));
    CHECK(sigma2_pattern11_rho13(Rational(3)) == pattern_ensemble_stats<Rational>(1, 1, Rational(3), c).ensemble_sigma2);
    // monotonically decreasing in N
    Rational prev = sigma2_pattern11_rho13(Rational(2));
    for (int n = 3; n <= 12; ++n) {
        Rational cur = sigma2_pattern11_rho13(Rational(n));
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(prev > sigma2_pattern11_rho13_limit());
}

TEST_CASE("sample-variance slopes") {
    CHECK(sample_variance_slope_B<Rational>(Rational(1, 3), Rational(13)) == Rational(81, 2197));
    CHECK(sample_variance_slope_Aprime<Rational>(Rational(3)) == Rational(1));
    CHECK(sample_variance_slope<Rational>(SlopeKind::a_prime, Rational(1, 3), Rational(3)) == Rational(1));
    // at rho = 1/3 and large N: B < mixture < A'
    const Rational n(50);
    Rational b = sample_variance_slope_B<Rational>(Rational(1, 3), n);
    Rational m = sample_variance_slope_mixture_half<Rational>(Rational(1, 3), n);
    Rational a = sample_variance_slope_Aprime<Rational>(n);
    CHECK(b < m);
    CHECK(m < a);
}

TEST_CASE("sample-variance slope asymptote matches the Laurent engine") {
    auto c = coins(Rational(1, 3));
    auto lim = mixture_ensemble_limit(Rational(1, 2), c);
    CHECK(lim.svar_slope_n == sample_variance_slope_mixture_half<Rational>(Rational(1, 3), Rational(1)));
}

TEST_CASE("pattern sample-variance slopes match the mixture at gamma = r/(r+s)") {
    // the conjecture is checked on the six cases with r + s <= 4
    auto c = coins(Rational(1, 3));
    const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}};
    for (auto [r, s] : cases) {
        auto pat = pattern_ensemble_limit(r, s, c);
        auto mix = mixture_ensemble_limit(Rational(r) / Rational(r + s), c);
        CHECK(pat.svar_slope_n == mix.svar_slope_n);
    }
}

TEST_CASE("stationary law closed forms are distributions") {
    for (const Rational& rho : {Rational(1, 3), Rational(5, 2)}) {
        auto pi = pi_B1<Rational>(rho);
        CHECK(pi[0] + pi[1] + pi[2] == Rational(1));
        auto pi2 = pi_mixture2_half<Rational>(rho);
        Rational total(0);
        for (const auto& x : pi2) total += x;
        CHECK(total == Rational(1));
    }
}

TEST_CASE("power-ratio monotonicity") {
    // (c^n - b^n)/(b^n - a^n) increases in n for 0 < a < b < c
    const Rational triples[][3] = {{Rational(1, 5), Rational(1, 2), Rational(9, 10)},
                                   {Rational(1, 3), Rational(2, 3), Rational(1)},
                                   {Rational(1, 2), Rational(1), Rational(7, 2)},
                                   {Rational(2), Rational(3), Rational(5)}};
    for (const auto& t : triples) {
        const Rational &a = t[0], &b = t[1], &c = t[2];
        Rational an = a, bn = b, cn = c;
        Rational prev(-1);
        bool first = true;
        for (int n = 1; n <= 30; ++n) {
            Rational ratio = (cn - bn) / (bn - an);
            if (!first) CHECK(ratio > prev);
            prev = ratio;
            first = false;
            an *= a;
            bn *= b;
            cn *= c;
        }
    }
}

TEST_CASE("pattern mean denominator stays positive") {
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s)
            for (int n = 2; n <= 12; n += 2)
                for (double rho : {0.1, 1.0 / 3, 0.9, 1.0, 2.0, 10.0}) CHECK(pattern_denominator(r, s, n, rho) > 0);
}
