#include "parrondo/verify.hpp"

#include "parrondo/engine.hpp"
#include "parrondo/formulas.hpp"
#include "parrondo/io.hpp"
#include "parrondo/sim.hpp"

#include <cmath>
#include <sstream>

namespace parrondo::verify {

namespace {

ModelParams make_params(const Rational& rho, const Rational& eps = Rational(0), int n = 2) {
    ModelParams p;
    p.rho = rho;
    p.eps = eps;
    p.players = n;
    p.mode = Mode::exact;
    return p;
}

CoinProbs<Rational> coins_at(const Rational& rho, const Rational& eps = Rational(0)) {
    return derive_coin_probs(make_params(rho, eps));
}

CaseResult equal_rational(const Rational& expected, const Rational& computed, std::string note = {}) {
    CaseResult r;
    r.expected = rational_str(expected);
    r.computed = rational_str(computed);
    r.pass = expected == computed;
    r.note = std::move(note);
    return r;
}

CaseResult all_good(bool ok, const std::string& what, std::string detail = {}) {
    CaseResult r;
    r.pass = ok;
    r.expected = what;
    r.computed = ok ? "holds" : "violated";
    r.note = std::move(detail);
    return r;
}

// Deterministic random irreducible rational chain: nonneg small-integer
// weights with a guaranteed positive cycle, rows normalized.
Matrix<Rational> random_chain(Rng& rng, int m) {
    Matrix<Rational> p(m, m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> w(static_cast<size_t>(m));
        int total = 0;
        for (int j = 0; j < m; ++j) {
            w[static_cast<size_t>(j)] = rng.next_below(10);
            total += w[static_cast<size_t>(j)];
        }
        ++w[static_cast<size_t>((i + 1) % m)];  // keep a cycle positive
        ++total;
        for (int j = 0; j < m; ++j) p(i, j) = Rational(w[static_cast<size_t>(j)], total);
    }
    return p;
}

// ---------------------------------------------------------------------------
// exact group

CaseResult case_mu_toral_biased() {
    const Rational expected("193387599/6704101000");
    Rational formula = formulas::mu_mixture_biased_half<Rational>(Rational(1, 3), Rational(1, 1000));
    auto rep = run_analyze(make_params(Rational(1, 3), Rational(1, 1000), 200), Rational(1, 2));
    auto r = equal_rational(expected, formula, "closed form");
    if (r.pass && rep.ensemble_mu.exact != expected) {
        r.pass = false;
        r.computed = rep.ensemble_mu.str();
        r.note = "engine (N=200) disagrees";
    }
    return r;
}

CaseResult case_sigma2_mixture_n2() {
    const Rational expected("114315959583/258261590798");
    Rational engine = ensemble_variance_mixture<Rational>(Rational(2), Rational(1, 2), coins_at(Rational(1, 3)));
    Rational formula = formulas::sigma2_mixture_half_rho13(Rational(2));
    auto r = equal_rational(expected, engine, "lumped assembly");
    if (r.pass && formula != expected) {
        r.pass = false;
        r.computed = rational_str(formula);
        r.note = "closed form disagrees";
    }
    return r;
}

CaseResult case_sigma2_mixture_limit() {
    const Rational expected("5941525691817/13404609664322");
    auto lim = mixture_ensemble_limit(Rational(1, 2), coins_at(Rational(1, 3)));
    auto r = equal_rational(expected, lim.sigma2, "Laurent-field engine");
    if (r.pass && formulas::sigma2_mixture_half_rho13_limit() != expected) {
        r.pass = false;
        r.note = "leading-coefficient limit disagrees";
    }
    return r;
}

CaseResult case_sigma2_pattern11_n2() {
    const Rational expected("74176355601/141627323986");
    auto coins = coins_at(Rational(1, 3));
    auto ens = pattern_ensemble_stats<Rational>(1, 1, Rational(2), coins);
    auto direct = pattern_ensemble_direct<Rational>(1, 1, 2, coins);
    Rational formula = formulas::sigma2_pattern11_rho13(Rational(2));
    auto r = equal_rational(expected, ens.ensemble_sigma2, "pair decomposition");
    if (r.pass && (!direct.sigma2 || *direct.sigma2 != expected)) {
        r.pass = false;
        r.note = "direct type-count route disagrees";
    }
    if (r.pass && formula != expected) {
        r.pass = false;
        r.note = "closed form disagrees";
    }
    return r;
}

CaseResult case_sigma2_pattern11_limit() {
    const Rational expected("5935929718185/13404609664322");
    auto lim = pattern_ensemble_limit(1, 1, coins_at(Rational(1, 3)));
    auto r = equal_rational(expected, lim.sigma2, "Laurent-field engine");
    if (r.pass && formulas::sigma2_pattern11_rho13_limit() != expected) {
        r.pass = false;
        r.note = "leading-coefficient limit disagrees";
    }
    return r;
}

CaseResult case_pattern_limit_table() {
    const Rational lim21("1891312136577/6060711605323");
    const Rational lim11("5935929718185/13404609664322");
    const Rational lim12("136286243910/252688187761");
    auto coins = coins_at(Rational(1, 3));
    struct Row {
        int r, s;
        const Rational& expected;
    };
    const Row rows[] = {{2, 1, lim21}, {4, 2, lim21}, {1, 1, lim11}, {2, 2, lim11},
                        {3, 3, lim11}, {1, 2, lim12}, {2, 4, lim12}};
    std::ostringstream note;
    for (const auto& row : rows) {
        Rational got = pattern_ensemble_limit(row.r, row.s, coins).sigma2;
        if (got != row.expected) {
            CaseResult r;
            r.pass = false;
            r.expected = rational_str(row.expected);
            r.computed = rational_str(got);
            r.note = "[" + std::to_string(row.r) + "," + std::to_string(row.s) + "]";
            return r;
        }
        note << "[" << row.r << "," << row.s << "] ";
    }
    return all_good(true, "seven pattern-variance limits", note.str());
}

CaseResult case_pi_mixture2_entry00() {
    for (const Rational& rho : {Rational(1, 3), Rational(2, 5), Rational(2)}) {
        auto coins = coins_at(rho);
        auto chain = build_full_mixture<Rational>(2, coins, Rational(1, 2));
        auto pi = stationary(chain.P);
        auto closed = formulas::pi_mixture2_half<Rational>(rho);
        for (int k = 0; k < 9; ++k) {
            if (pi[static_cast<size_t>(k)] != closed[static_cast<size_t>(k)]) {
                CaseResult r;
                r.pass = false;
                r.expected = rational_str(closed[static_cast<size_t>(k)]);
                r.computed = rational_str(pi[static_cast<size_t>(k)]);
                r.note = "rho=" + rational_str(rho) + " entry " + std::to_string(k);
                return r;
            }
        }
    }
    return all_good(true, "stationary law of the 2-player half mixture", "rho in {1/3, 2/5, 2}");
}

// quick formula-level cases, addressable individually

CaseResult case_mu_mixture() {
    const Rational expected("48/1609");
    return equal_rational(expected, formulas::mu_mixture<Rational>(Rational(1, 2), Rational(1, 3)),
                          "gamma=1/2, rho=1/3");
}

CaseResult case_sigma2_b() {
    const Rational expected("81/169");
    Rational closed = formulas::sigma2_B<Rational>(Rational(1, 3));
    auto chain = build_one_player_B<Rational>(coins_at(Rational(1, 3)));
    auto a = analyze_chain(chain);
    auto r = equal_rational(expected, closed, "closed form");
    if (r.pass && a.sigma2 != expected) {
        r.pass = false;
        r.computed = rational_str(a.sigma2);
        r.note = "engine on the 3-state chain disagrees";
    }
    return r;
}

// ---------------------------------------------------------------------------
// crosspath group

CaseResult case_full_vs_lumped() {
    for (int n : {2, 3})
        for (const Rational& gamma : {Rational(1, 4), Rational(1, 2)})
            for (const Rational& rho : {Rational(1, 3), Rational(2)}) {
                auto coins = coins_at(rho);
                auto full = analyze_full_mixture<Rational>(n, coins, gamma);
                auto lump = analyze_mixture_lumped<Rational>(Rational(n), gamma, coins);
                if (full.mu != lump.ensemble_mu || full.sigma2 != lump.ensemble_sigma2) {
                    CaseResult r;
                    r.pass = false;
                    r.expected = rational_str(full.mu) + ", " + rational_str(full.sigma2);
                    r.computed = rational_str(lump.ensemble_mu) + ", " + rational_str(lump.ensemble_sigma2);
                    r.note = "N=" + std::to_string(n) + " gamma=" + rational_str(gamma) + " rho=" + rational_str(rho);
                    return r;
                }
            }
    return all_good(true, "full 3^N chain equals lumped assembly", "N in {2,3}, gamma in {1/4,1/2}, rho in {1/3,2}");
}

CaseResult case_cycle_vs_phase() {
    auto coins = coins_at(Rational(1, 3));
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int n = 2; n <= 6; ++n) {
                auto cyc = pattern_ensemble_stats<Rational>(r, s, Rational(n), coins, PatternMethod::cycle);
                auto ph = pattern_ensemble_stats<Rational>(r, s, Rational(n), coins, PatternMethod::phase);
                if (cyc.ensemble_mu != ph.ensemble_mu || cyc.ensemble_sigma2 != ph.ensemble_sigma2 ||
                    cyc.pair_cov != ph.pair_cov) {
                    CaseResult res;
                    res.pass = false;
                    res.expected = rational_str(cyc.ensemble_mu) + ", " + rational_str(cyc.ensemble_sigma2);
                    res.computed = rational_str(ph.ensemble_mu) + ", " + rational_str(ph.ensemble_sigma2);
                    res.note = "[" + std::to_string(r) + "," + std::to_string(s) + "] N=" + std::to_string(n);
                    return res;
                }
            }
    return all_good(true, "cycle sums equal phase chain", "r,s <= 3, N <= 6, rho = 1/3, exact");
}

// ---------------------------------------------------------------------------
// properties group

CaseResult case_lemma2_identity() {
    Rng rng(20260810, 2);
    const int sizes[] = {3, 5, 9};
    for (int c = 0; c < 200; ++c) {
        int m = sizes[c % 3];
        Matrix<Rational> p = random_chain(rng, m);
        auto pi = stationary(p);
        auto f = fundamental(p, pi);
        Matrix<Rational> base = f.Z - f.Pi;
        for (int n = 1; n <= 10; ++n) {
            const Rational inv_n(1, n);
            Matrix<Rational> lazy = inv_n * p + (Rational(1) - inv_n) * Matrix<Rational>::identity(m);
            auto fl = fundamental(lazy, pi);
            if (!(fl.Z - f.Pi == Rational(n) * base)) {
                CaseResult r;
                r.pass = false;
                r.expected = "Z_lazy - Pi == N (Z_P - Pi)";
                r.computed = "mismatch";
                r.note = "chain " + std::to_string(c) + " (m=" + std::to_string(m) + "), N=" + std::to_string(n);
                return r;
            }
        }
    }
    return all_good(true, "lazy-chain fundamental matrix identity", "200 random chains x N in 1..10, exact");
}

CaseResult case_theorem4_sign() {
    const Rational rhos[] = {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(9, 10), Rational(1),
                             Rational(10, 9), Rational(2),    Rational(3),    Rational(10)};
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s)
            for (int n = 2; n <= 12; ++n)
                for (const Rational& rho : rhos) {
                    int want = rho < 1 ? 1 : (rho == 1 ? 0 : -1);
                    int got = pattern_sign(r, s, n, rho);
                    if (got != want) {
                        CaseResult res;
                        res.pass = false;
                        res.expected = std::to_string(want);
                        res.computed = std::to_string(got);
                        res.note = "[" + std::to_string(r) + "," + std::to_string(s) + "] N=" + std::to_string(n) +
                                   " rho=" + rational_str(rho);
                        return res;
                    }
                }
    return all_good(true, "sign of the pattern mean follows sign(1 - rho)", "r,s <= 6, N <= 12, 9 rho values");
}

CaseResult case_antisymmetry() {
    // mixtures via the engine
    for (const Rational& gamma : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
        for (const Rational& rho : {Rational(1, 3), Rational(2, 5), Rational(2), Rational(5)})
            for (int n : {2, 5}) {
                Rational at = analyze_mixture_lumped<Rational>(Rational(n), gamma, coins_at(rho)).ensemble_mu;
                Rational inv = analyze_mixture_lumped<Rational>(Rational(n), gamma, coins_at(1 / rho)).ensemble_mu;
                if (at != -inv)
                    return all_good(false, "mu(1/rho) == -mu(rho)",
                                    "mixture gamma=" + rational_str(gamma) + " rho=" + rational_str(rho));
            }
    // patterns via cycle means
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int n : {2, 5})
                for (const Rational& rho : {Rational(1, 3), Rational(2)}) {
                    Rational at = pattern_ensemble_stats<Rational>(r, s, Rational(n), coins_at(rho)).ensemble_mu;
                    Rational inv = pattern_ensemble_stats<Rational>(r, s, Rational(n), coins_at(1 / rho)).ensemble_mu;
                    if (at != -inv)
                        return all_good(false, "mu(1/rho) == -mu(rho)",
                                        "pattern [" + std::to_string(r) + "," + std::to_string(s) + "]");
                }
    return all_good(true, "mu(1/rho) == -mu(rho)", "mixtures and patterns, exact");
}

CaseResult case_relation() {
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s)
            for (const Rational& rho : {Rational(1, 3), Rational(2)}) {
                Rational mix = formulas::mu_mixture<Rational>(Rational(r) / Rational(r + s), rho);
                Rational pat = formulas::pattern_mean_limit<Rational>(r, s, rho);
                if (mix != pat)
                    return all_good(false, "pattern mean limit equals mixture mean",
                                    "closed forms at [" + std::to_string(r) + "," + std::to_string(s) + "]");
            }
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s) {
            auto rep = mixture_pattern_relation(r, s, Rational(1, 3), 1e-6);
            if (!rep.closed_forms_equal || !rep.within_tol)
                return all_good(false, "Richardson extrapolation within 1e-6",
                                "[" + std::to_string(r) + "," + std::to_string(s) + "] residual " +
                                    double_str(rep.richardson_residual));
        }
    return all_good(true, "mixture/pattern mean relation", "closed forms r,s <= 6; engine extrapolation r,s <= 3");
}

CaseResult case_coincidence_chain() {
    for (const Rational& rho : {Rational(1, 3), Rational(1, 2), Rational(3)}) {
        auto coins = coins_at(rho);
        const Rational value = formulas::mu_mixture_half<Rational>(rho);

        for (int r : {1, 2, 3}) {
            if (pattern_ensemble_limit(r, r, coins).mu != value)
                return all_good(false, "lim mu[r,r] equals the common value", "r=" + std::to_string(r));
        }
        for (int n : {2, 3}) {
            if (analyze_mixture_lumped<Rational>(Rational(n), Rational(1, 2), coins).ensemble_mu != value)
                return all_good(false, "half-mixture mean equals the common value", "N=" + std::to_string(n));
        }
        // one-player games A and B: (3/2) mu_(2/3,1/3) and (3/2) mu_[2,1]
        auto chain_a = build_one_player_A<Rational>();
        auto chain_b = build_one_player_B<Rational>(coins);
        auto mixed = build_mixture(chain_a, chain_b, Rational(2, 3));
        if (Rational(3, 2) * analyze_chain(mixed).mu != value)
            return all_good(false, "(3/2) one-player mixture mean equals the common value", "rho=" + rational_str(rho));
        auto pat21 = pattern_stats_cycle(chain_a, chain_b, 2, 1);
        if (Rational(3, 2) * *pat21.mu != value)
            return all_good(false, "(3/2) one-player [2,1] mean equals the common value", "rho=" + rational_str(rho));
        if (pattern_ensemble_stats<Rational>(1, 1, Rational(2), coins).ensemble_mu != value)
            return all_good(false, "two-player [1,1] mean equals the common value", "rho=" + rational_str(rho));
    }
    return all_good(true, "five-way mean coincidence", "rho in {1/3, 1/2, 3}, exact");
}

CaseResult case_exchangeability() {
    for (int n : {2, 3})
        for (const Rational& rho : {Rational(1, 3), Rational(2)}) {
            auto coins = coins_at(rho);
            auto mix = build_full_mixture<Rational>(n, coins, Rational(1, 2));
            if (!check_permutation_symmetry(mix.P, n))
                return all_good(false, "transition law permutation-symmetric", "N=" + std::to_string(n));
            if (!check_exchangeability(mix.P, n))
                return all_good(false, "stationary law exchangeable", "N=" + std::to_string(n));
            auto b = build_full_B<Rational>(n, coins);
            if (!check_exchangeability(b.P, n))
                return all_good(false, "game-B stationary law exchangeable", "N=" + std::to_string(n));
        }
    // negative control: two players with different coins
    {
        auto c1 = coins_at(Rational(1, 3)), c2 = coins_at(Rational(2, 5));
        Matrix<Rational> p(9, 9);
        const Rational half(1, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int x = 3 * i + j;
                p(x, 3 * ((i + 1) % 3) + j) += half * c1.p(i);
                p(x, 3 * ((i + 2) % 3) + j) += half * c1.q(i);
                p(x, 3 * i + (j + 1) % 3) += half * c2.p(j);
                p(x, 3 * i + (j + 2) % 3) += half * c2.q(j);
            }
        if (check_exchangeability(p, 2))
            return all_good(false, "asymmetric chain reported non-exchangeable", "negative control");
    }
    return all_good(true, "exchangeability of stationary laws", "N in {2,3}, plus a negative control");
}

// ---------------------------------------------------------------------------
// montecarlo group

SimConfig base_config(const Rational& rho, const Rational& eps, int n, ScheduleKind kind) {
    SimConfig cfg;
    cfg.params = make_params(rho, eps, n);
    cfg.schedule = kind;
    return cfg;
}

CaseResult case_mc_pure_a_zero() {
    SimConfig cfg = base_config(Rational(1, 3), Rational(0), 4, ScheduleKind::pure_a_prime);
    cfg.turns = 100000;
    cfg.replications = 50;
    cfg.seed = 11;
    auto res = simulate(cfg);
    return all_good(res.total_always_zero, "S_n == 0 for every turn under pure redistribution",
                    "N=4, n=1e5, R=50");
}

CaseResult case_mc_pure_b_slopes() {
    SimConfig cfg = base_config(Rational(1, 3), Rational(0), 5, ScheduleKind::pure_b);
    cfg.turns = 1000000;
    cfg.replications = 100;
    cfg.seed = 12;
    auto res = simulate(cfg);
    const double var_target = scalar_traits<Rational>::to_double(Rational(81, 169));
    bool var_ok = std::fabs(res.var_slope - var_target) <= 3 * res.var_slope_se;
    bool mean_ok = std::fabs(res.mean_slope - 0.0) <= 3 * res.mean_slope_se;
    CaseResult r;
    r.pass = var_ok && mean_ok;
    r.expected = "var slope 81/169 +- 3SE, mean slope 0 +- 3SE";
    r.computed = "var " + double_str(res.var_slope) + " (se " + double_str(res.var_slope_se) + "), mean " +
                 double_str(res.mean_slope) + " (se " + double_str(res.mean_slope_se) + ")";
    r.note = "N=5, n=1e6, R=100";
    return r;
}

CaseResult case_mc_toral_mean() {
    SimConfig cfg = base_config(Rational(1, 3), Rational(1, 1000), 200, ScheduleKind::mixture);
    cfg.gamma = Rational(1, 2);
    cfg.turns = 1000000;
    cfg.replications = 100;
    cfg.seed = 13;
    auto res = simulate(cfg);
    const double target = scalar_traits<Rational>::to_double(Rational("193387599/6704101000"));
    CaseResult r;
    r.pass = std::fabs(res.mean_slope - target) <= 3 * res.mean_slope_se;
    r.expected = "mean slope 193387599/6704101000 (~0.028846) +- 3SE";
    r.computed = double_str(res.mean_slope) + " (se " + double_str(res.mean_slope_se) + ")";
    r.note = "rho=1/3, eps=1/1000, gamma=1/2, N=200, n=1e6, R=100";
    return r;
}

CaseResult case_mc_clt_mixture() {
    SimConfig cfg = base_config(Rational(1, 3), Rational(1, 1000), 200, ScheduleKind::mixture);
    cfg.gamma = Rational(1, 2);
    cfg.turns = 1000000;
    cfg.replications = 100;
    cfg.seed = 14;
    auto res = simulate(cfg);
    auto a = analyze_mixture_lumped<Rational>(Rational(200), Rational(1, 2), coins_at(Rational(1, 3), Rational(1, 1000)));
    auto d = clt_check(res, scalar_traits<Rational>::to_double(a.ensemble_mu),
                       scalar_traits<Rational>::to_double(a.ensemble_sigma2));
    const double r_sqrt = std::sqrt(static_cast<double>(res.replications));
    bool ok = std::fabs(d.sample_mean) <= 3 / r_sqrt && std::fabs(d.sample_var - 1) <= 5 / r_sqrt;
    CaseResult r;
    r.pass = ok;
    r.expected = "standardized mean within 3/sqrt(R), variance within 5/sqrt(R)";
    r.computed = "mean " + double_str(d.sample_mean) + ", var " + double_str(d.sample_var);
    r.note = "Toral mixture case, R=100";
    return r;
}

CaseResult case_mc_svar_slopes() {
    const long n_turns = 200000;
    const int reps = 200;
    // pure A', N=3: slope 2/(N-1) = 1
    SimConfig ca = base_config(Rational(1, 3), Rational(0), 3, ScheduleKind::pure_a_prime);
    ca.turns = n_turns;
    ca.replications = reps;
    ca.seed = 15;
    auto ra = simulate(ca);
    // pure B, N=13: slope (81/169)/13 = 81/2197
    SimConfig cb = base_config(Rational(1, 3), Rational(0), 13, ScheduleKind::pure_b);
    cb.turns = n_turns;
    cb.replications = reps;
    cb.seed = 16;
    auto rb = simulate(cb);
    // half mixture, N=13: exact slope from the engine
    SimConfig cm = base_config(Rational(1, 3), Rational(0), 13, ScheduleKind::mixture);
    cm.gamma = Rational(1, 2);
    cm.turns = n_turns;
    cm.replications = reps;
    cm.seed = 17;
    auto rm = simulate(cm);
    auto mix = analyze_mixture_lumped<Rational>(Rational(13), Rational(1, 2), coins_at(Rational(1, 3)));
    const double target_a = 1.0;
    const double target_b = scalar_traits<Rational>::to_double(Rational(81, 2197));
    const double target_m = scalar_traits<Rational>::to_double(mix.per_player_sigma2 - mix.pair_cov);

    bool ok_a = std::fabs(ra.svar_slope - target_a) <= 3 * ra.svar_slope_se;
    bool ok_b = std::fabs(rb.svar_slope - target_b) <= 3 * rb.svar_slope_se;
    bool ok_m = std::fabs(rm.svar_slope - target_m) <= 3 * rm.svar_slope_se;
    bool ordered = target_b < target_m && target_m < 2.0 / (13 - 1) && rb.svar_slope < rm.svar_slope &&
                   rm.svar_slope < ra.svar_slope;
    CaseResult r;
    r.pass = ok_a && ok_b && ok_m && ordered;
    r.expected = "A'(N=3) -> 1; B(N=13) -> 81/2197; mixture between, each +- 3SE";
    r.computed = "A' " + double_str(ra.svar_slope) + ", B " + double_str(rb.svar_slope) + ", mix " +
                 double_str(rm.svar_slope);
    r.note = "sample-variance slopes, n=2e5, R=200";
    return r;
}

CaseResult case_mc_clt_ks() {
    SimConfig cfg = base_config(Rational(1, 3), Rational(0), 2, ScheduleKind::mixture);
    cfg.gamma = Rational(1, 2);
    cfg.turns = 100000;
    cfg.replications = 2000;
    cfg.seed = 18;
    auto res = simulate(cfg);
    const double mu = scalar_traits<Rational>::to_double(Rational(48, 1609));
    const double s2 = scalar_traits<Rational>::to_double(Rational("114315959583/258261590798"));
    auto d = clt_check(res, mu, s2);
    CaseResult r;
    r.pass = d.ks_distance < 0.05;
    r.expected = "KS distance to standard normal < 0.05";
    r.computed = double_str(d.ks_distance);
    r.note = "rho=1/3, gamma=1/2, N=2, n=1e5, R=2000";
    return r;
}

}  // namespace

const std::vector<Case>& all_cases() {
    static const std::vector<Case> cases = {
        {"mu.mixture", "exact", "half-mixture mean at rho=1/3 equals 48/1609", case_mu_mixture},
        {"sigma2.B", "exact", "game-B variance at rho=1/3 equals 81/169 (closed form and engine)", case_sigma2_b},
        {"mu.toral.biased", "exact", "biased half-mixture mean equals 193387599/6704101000", case_mu_toral_biased},
        {"sigma2.mixture.N2", "exact", "half-mixture ensemble variance at N=2, rho=1/3", case_sigma2_mixture_n2},
        {"sigma2.mixture.limit", "exact", "half-mixture ensemble variance limit as N -> infinity",
         case_sigma2_mixture_limit},
        {"sigma2.pattern11.N2", "exact", "[1,1] ensemble variance at N=2, rho=1/3 (three routes)",
         case_sigma2_pattern11_n2},
        {"sigma2.pattern11.limit", "exact", "[1,1] ensemble variance limit as N -> infinity",
         case_sigma2_pattern11_limit},
        {"sigma2.pattern.limits", "exact", "pattern variance limits match the published table",
         case_pattern_limit_table},
        {"pi.mixture2.entry00", "exact", "two-player half-mixture stationary law matches its polynomial form",
         case_pi_mixture2_entry00},
        {"crosspath.full-vs-lumped", "crosspath", "full-chain parameters equal the lumped decomposition",
         case_full_vs_lumped},
        {"crosspath.cycle-vs-phase", "crosspath", "cycle sums equal the phase-chain oracle", case_cycle_vs_phase},
        {"lemma2.identity", "properties", "lazy-chain fundamental matrix identity on random chains",
         case_lemma2_identity},
        {"theorem4.sign", "properties", "pattern mean sign law over the full grid", case_theorem4_sign},
        {"antisymmetry.mu", "properties", "mu(1/rho) == -mu(rho) for mixtures and patterns", case_antisymmetry},
        {"relation.mixture-pattern", "properties", "pattern mean limits coincide with mixture means", case_relation},
        {"coincidence.chain", "properties", "five-way coincidence of mean values", case_coincidence_chain},
        {"exchangeability.lemma1", "properties", "stationary laws are exchangeable", case_exchangeability},
        {"mc.pureA.zero", "montecarlo", "pure redistribution keeps the ensemble profit at zero", case_mc_pure_a_zero},
        {"mc.pureB.slopes", "montecarlo", "pure game-B mean and variance slopes", case_mc_pure_b_slopes},
        {"mc.toral.mean", "montecarlo", "Toral experiment: mean slope at N=200", case_mc_toral_mean},
        {"mc.clt.mixture", "montecarlo", "standardized profits look standard normal (moments)", case_mc_clt_mixture},
        {"mc.svar.slopes", "montecarlo", "sample-variance slopes and their ordering", case_mc_svar_slopes},
        {"mc.clt.ks", "montecarlo", "Kolmogorov-Smirnov distance of standardized profits", case_mc_clt_ks},
    };
    return cases;
}

const Case* find_case(const std::string& id) {
    for (const auto& c : all_cases())
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<const Case*> cases_in_group(const std::string& group) {
    std::vector<const Case*> out;
    for (const auto& c : all_cases())
        if (c.group == group) out.push_back(&c);
    return out;
}

}  // namespace parrondo::verify
