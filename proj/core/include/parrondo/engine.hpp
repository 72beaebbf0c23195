#pragma once

// Mode dispatch and report assembly on top of the chain engines: a single
// entry point per CLI command, returning dual-mode scalar values that
// serialize as exact fractions or 17-digit decimals.

#include "parrondo/markov.hpp"
#include "parrondo/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parrondo {

struct ScalarValue {
    Mode mode = Mode::floating;
    Rational exact{0};
    double value = 0;

    static ScalarValue of(const Rational& r) { return {Mode::exact, r, scalar_traits<Rational>::to_double(r)}; }
    static ScalarValue of(double d) { return {Mode::floating, Rational(0), d}; }
    std::string str() const { return mode == Mode::exact ? rational_str(exact) : double_str(value); }
    std::string pretty() const {
        return mode == Mode::exact ? rational_str(exact) + " (" + double_str(value) + ")" : double_str(value);
    }
};

template <class T>
ScalarValue make_scalar(const T& x) {
    if constexpr (std::is_same_v<T, Rational>)
        return ScalarValue::of(x);
    else
        return ScalarValue::of(static_cast<double>(x));
}

struct AnalyzeReport {
    ModelParams params;
    Rational gamma;
    ScalarValue per_player_mu, per_player_sigma2, pair_cov;
    ScalarValue ensemble_mu, ensemble_sigma2;
    std::vector<ScalarValue> pi_one;  // stationary law of the one-player mixture chain
    bool sigma2_nonnegative = true;
};

namespace detail {

template <class T>
AnalyzeReport run_analyze_t(const ModelParams& params, const Rational& gamma) {
    auto coins = coin_probs_as<T>(derive_coin_probs(params));
    auto a = analyze_mixture_lumped<T>(T(params.players), scalar_cast<T>(gamma), coins);
    AnalyzeReport rep;
    rep.params = params;
    rep.gamma = gamma;
    rep.per_player_mu = make_scalar(a.per_player_mu);
    rep.per_player_sigma2 = make_scalar(a.per_player_sigma2);
    rep.pair_cov = make_scalar(a.pair_cov);
    rep.ensemble_mu = make_scalar(a.ensemble_mu);
    rep.ensemble_sigma2 = make_scalar(a.ensemble_sigma2);
    for (const auto& p : a.pi_one) rep.pi_one.push_back(make_scalar(p));
    rep.sigma2_nonnegative = rep.ensemble_sigma2.value >= 0 && rep.per_player_sigma2.value >= 0;
    return rep;
}

}  // namespace detail

inline AnalyzeReport run_analyze(const ModelParams& params, const Rational& gamma) {
    params.validate();
    MixtureSpec{gamma}.validate();
    if (params.players < 2) throw ValidationError("analyze requires N >= 2");
    return params.mode == Mode::exact ? detail::run_analyze_t<Rational>(params, gamma)
                                      : detail::run_analyze_t<double>(params, gamma);
}

struct PatternReport {
    ModelParams params;
    int r = 1, s = 1;
    ScalarValue ensemble_mu, ensemble_sigma2, pair_cov;        // cycle sums
    ScalarValue per_player_mu, per_player_sigma2, svar_slope;  // cycle sums
    ScalarValue mu_phase, sigma2_phase;                        // phase chain
    bool methods_agree = false;
    std::optional<ScalarValue> mu_limit, sigma2_limit;  // exact N -> infinity values
};

namespace detail {

template <class T>
void run_pattern_t(const ModelParams& params, int r, int s, PatternReport& rep) {
    auto coins = coin_probs_as<T>(derive_coin_probs(params));
    const T n = T(params.players);
    auto cyc = pattern_ensemble_stats<T>(r, s, n, coins, PatternMethod::cycle);
    auto ph = pattern_ensemble_stats<T>(r, s, n, coins, PatternMethod::phase);
    rep.ensemble_mu = make_scalar(cyc.ensemble_mu);
    rep.ensemble_sigma2 = make_scalar(cyc.ensemble_sigma2);
    rep.pair_cov = make_scalar(cyc.pair_cov);
    rep.per_player_mu = make_scalar(cyc.per_player_mu);
    rep.per_player_sigma2 = make_scalar(cyc.per_player_sigma2);
    rep.svar_slope = make_scalar(cyc.svar_slope);
    rep.mu_phase = make_scalar(ph.ensemble_mu);
    rep.sigma2_phase = make_scalar(ph.ensemble_sigma2);
    if constexpr (scalar_traits<T>::is_exact) {
        rep.methods_agree = cyc.ensemble_mu == ph.ensemble_mu && cyc.ensemble_sigma2 == ph.ensemble_sigma2;
    } else {
        auto close = [](double a, double b) {
            double scale = std::max({std::fabs(a), std::fabs(b), 1e-30});
            return std::fabs(a - b) / scale < 1e-9;
        };
        rep.methods_agree =
            close(rep.ensemble_mu.value, rep.mu_phase.value) && close(rep.ensemble_sigma2.value, rep.sigma2_phase.value);
    }
}

}  // namespace detail

inline PatternReport run_pattern(const ModelParams& params, int r, int s, bool want_limit) {
    params.validate();
    PatternSpec{r, s}.validate();
    if (params.players < 2) throw ValidationError("pattern analysis requires N >= 2");
    PatternReport rep;
    rep.params = params;
    rep.r = r;
    rep.s = s;
    if (params.mode == Mode::exact)
        detail::run_pattern_t<Rational>(params, r, s, rep);
    else
        detail::run_pattern_t<double>(params, r, s, rep);
    if (want_limit) {
        auto lim = pattern_ensemble_limit(r, s, derive_coin_probs(params));
        rep.mu_limit = ScalarValue::of(lim.mu);
        rep.sigma2_limit = ScalarValue::of(lim.sigma2);
    }
    return rep;
}

}  // namespace parrondo
