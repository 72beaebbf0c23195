#pragma once

// Per-turn mean/variance/covariance parameters for the periodic schedule
// (A')^r B^s, by two independent methods:
//
//   * cycle sums: stationary law pi and fundamental matrix Z of the
//     one-period product Q = P_A^r P_B^s (the chain sampled at the start of
//     each A-block), then the within-period and across-period sums;
//   * phase chain: the homogeneous chain on (state, phase) pairs with the
//     usual stationary CLT parameters, divided by nothing -- each augmented
//     step is one turn.
//
// Both run over any scalar field.  Instantiated with the Laurent field at
// N = 1/h they produce exact N -> infinity limits.

#include "parrondo/formulas.hpp"
#include "parrondo/laurent.hpp"
#include "parrondo/markov.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace parrondo {

template <class T>
struct PatternStats {
    std::optional<T> mu, sigma2;  // ensemble payoff family, per turn
    std::optional<T> sigma12;     // pair payoff family, per turn
    std::string method;
};

namespace detail {

template <class T>
struct CycleContext {
    int r, s;
    std::vector<Matrix<T>> powA, powB;  // powers 0..r and 0..s
    Vector<T> pi;
    FundamentalMatrix<T> f;
    Matrix<T> zmp;                   // Z - Pi
    std::vector<Vector<T>> ra, rb;   // pi A^u (u<=r), pi A^r B^v (v<=s)
};

template <class T>
CycleContext<T> make_cycle_context(const GameChain<T>& a, const GameChain<T>& b, int r, int s) {
    if (a.states() != b.states()) throw ValidationError("pattern: chain shapes differ");
    if (r < 1 || s < 1) throw ValidationError("pattern: r, s >= 1 required");
    CycleContext<T> cx;
    cx.r = r;
    cx.s = s;
    cx.powA.resize(static_cast<size_t>(r) + 1);
    cx.powB.resize(static_cast<size_t>(s) + 1);
    cx.powA[0] = Matrix<T>::identity(a.states());
    for (int u = 1; u <= r; ++u) cx.powA[static_cast<size_t>(u)] = cx.powA[static_cast<size_t>(u - 1)] * a.P;
    cx.powB[0] = Matrix<T>::identity(a.states());
    for (int v = 1; v <= s; ++v) cx.powB[static_cast<size_t>(v)] = cx.powB[static_cast<size_t>(v - 1)] * b.P;
    Matrix<T> q = cx.powA[static_cast<size_t>(r)] * cx.powB[static_cast<size_t>(s)];
    cx.pi = stationary(q);
    cx.f = fundamental(q, cx.pi);
    cx.zmp = cx.f.Z - cx.f.Pi;
    cx.ra.resize(static_cast<size_t>(r) + 1);
    cx.rb.resize(static_cast<size_t>(s) + 1);
    cx.ra[0] = cx.pi;
    for (int u = 1; u <= r; ++u) cx.ra[static_cast<size_t>(u)] = cx.ra[static_cast<size_t>(u - 1)] * a.P;
    cx.rb[0] = cx.ra[static_cast<size_t>(r)];
    for (int v = 1; v <= s; ++v) cx.rb[static_cast<size_t>(v)] = cx.rb[static_cast<size_t>(v - 1)] * b.P;
    return cx;
}

template <class T>
T cycle_mean(const CycleContext<T>& cx, const Matrix<T>& dA, const Matrix<T>& dB) {
    T acc = scalar_traits<T>::zero();
    const Vector<T> colA = row_sums(dA), colB = row_sums(dB);
    for (int u = 0; u < cx.r; ++u) acc += dot(cx.ra[static_cast<size_t>(u)], colA);
    for (int v = 0; v < cx.s; ++v) acc += dot(cx.rb[static_cast<size_t>(v)], colB);
    return acc / T(cx.r + cx.s);
}

// Within- and across-period sums for the per-turn variance.
template <class T>
T cycle_variance(const CycleContext<T>& cx, const Matrix<T>& dA, const Matrix<T>& ddA, const Matrix<T>& dB,
                 const Matrix<T>& ddB) {
    const int r = cx.r, s = cx.s;
    const Vector<T> colA = row_sums(dA), colB = row_sums(dB);
    const Vector<T> colAA = row_sums(ddA), colBB = row_sums(ddB);

    std::vector<T> mA(static_cast<size_t>(r)), mB(static_cast<size_t>(s));
    std::vector<Vector<T>> xA(static_cast<size_t>(r));  // pi A^u dA
    for (int u = 0; u < r; ++u) {
        xA[static_cast<size_t>(u)] = cx.ra[static_cast<size_t>(u)] * dA;
        mA[static_cast<size_t>(u)] = sum(xA[static_cast<size_t>(u)]);
    }
    std::vector<Vector<T>> yB(static_cast<size_t>(s));  // pi A^r B^u dB
    for (int v = 0; v < s; ++v) {
        yB[static_cast<size_t>(v)] = cx.rb[static_cast<size_t>(v)] * dB;
        mB[static_cast<size_t>(v)] = sum(yB[static_cast<size_t>(v)]);
    }
    std::vector<Vector<T>> colBv(static_cast<size_t>(s));  // B^v dB 1
    for (int v = 0; v < s; ++v) colBv[static_cast<size_t>(v)] = cx.powB[static_cast<size_t>(v)] * colB;

    T acc = scalar_traits<T>::zero();
    for (int u = 0; u < r; ++u) acc += dot(cx.ra[static_cast<size_t>(u)], colAA) - mA[static_cast<size_t>(u)] * mA[static_cast<size_t>(u)];
    for (int v = 0; v < s; ++v) acc += dot(cx.rb[static_cast<size_t>(v)], colBB) - mB[static_cast<size_t>(v)] * mB[static_cast<size_t>(v)];

    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v)
            acc += T(2) * (dot(xA[static_cast<size_t>(u)] * cx.powA[static_cast<size_t>(v - u - 1)], colA) -
                           mA[static_cast<size_t>(u)] * mA[static_cast<size_t>(v)]);

    std::vector<Vector<T>> xA_end(static_cast<size_t>(r));  // pi A^u dA A^{r-u-1}
    for (int u = 0; u < r; ++u) xA_end[static_cast<size_t>(u)] = xA[static_cast<size_t>(u)] * cx.powA[static_cast<size_t>(r - u - 1)];
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v)
            acc += T(2) * (dot(xA_end[static_cast<size_t>(u)], colBv[static_cast<size_t>(v)]) -
                           mA[static_cast<size_t>(u)] * mB[static_cast<size_t>(v)]);

    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v)
            acc += T(2) * (dot(yB[static_cast<size_t>(u)] * cx.powB[static_cast<size_t>(v - u - 1)], colB) -
                           mB[static_cast<size_t>(u)] * mB[static_cast<size_t>(v)]);

    // Across periods: propagate to the end of the current period, then
    // Z - Pi sums the geometric tail of whole periods.
    std::vector<Vector<T>> tA(static_cast<size_t>(r)), tB(static_cast<size_t>(s));
    for (int u = 0; u < r; ++u) tA[static_cast<size_t>(u)] = (xA_end[static_cast<size_t>(u)] * cx.powB[static_cast<size_t>(s)]) * cx.zmp;
    for (int u = 0; u < s; ++u) tB[static_cast<size_t>(u)] = (yB[static_cast<size_t>(u)] * cx.powB[static_cast<size_t>(s - u - 1)]) * cx.zmp;
    std::vector<Vector<T>> rightA(static_cast<size_t>(r)), rightB(static_cast<size_t>(s));
    for (int v = 0; v < r; ++v) rightA[static_cast<size_t>(v)] = cx.powA[static_cast<size_t>(v)] * colA;
    for (int v = 0; v < s; ++v) rightB[static_cast<size_t>(v)] = cx.powA[static_cast<size_t>(r)] * colBv[static_cast<size_t>(v)];
    for (int u = 0; u < r; ++u) {
        for (int v = 0; v < r; ++v) acc += T(2) * dot(tA[static_cast<size_t>(u)], rightA[static_cast<size_t>(v)]);
        for (int v = 0; v < s; ++v) acc += T(2) * dot(tA[static_cast<size_t>(u)], rightB[static_cast<size_t>(v)]);
    }
    for (int u = 0; u < s; ++u) {
        for (int v = 0; v < r; ++v) acc += T(2) * dot(tB[static_cast<size_t>(u)], rightA[static_cast<size_t>(v)]);
        for (int v = 0; v < s; ++v) acc += T(2) * dot(tB[static_cast<size_t>(u)], rightB[static_cast<size_t>(v)]);
    }
    return acc / T(r + s);
}

// Covariance analogue: the factor 2 is replaced by symmetrization over the
// two payoff functions.
template <class T>
T cycle_covariance(const CycleContext<T>& cx, const GameChain<T>& a, const GameChain<T>& b) {
    const int r = cx.r, s = cx.s;
    const Matrix<T>&d1A = *a.Pw1, &d2A = *a.Pw2, &d12A = *a.Pw12;
    const Matrix<T>&d1B = *b.Pw1, &d2B = *b.Pw2, &d12B = *b.Pw12;
    const Vector<T> colA1 = row_sums(d1A), colA2 = row_sums(d2A), colA12 = row_sums(d12A);
    const Vector<T> colB1 = row_sums(d1B), colB2 = row_sums(d2B), colB12 = row_sums(d12B);

    std::vector<Vector<T>> x1(static_cast<size_t>(r)), x2(static_cast<size_t>(r));
    std::vector<T> m1A(static_cast<size_t>(r)), m2A(static_cast<size_t>(r));
    for (int u = 0; u < r; ++u) {
        x1[static_cast<size_t>(u)] = cx.ra[static_cast<size_t>(u)] * d1A;
        x2[static_cast<size_t>(u)] = cx.ra[static_cast<size_t>(u)] * d2A;
        m1A[static_cast<size_t>(u)] = sum(x1[static_cast<size_t>(u)]);
        m2A[static_cast<size_t>(u)] = sum(x2[static_cast<size_t>(u)]);
    }
    std::vector<Vector<T>> y1(static_cast<size_t>(s)), y2(static_cast<size_t>(s));
    std::vector<T> m1B(static_cast<size_t>(s)), m2B(static_cast<size_t>(s));
    for (int v = 0; v < s; ++v) {
        y1[static_cast<size_t>(v)] = cx.rb[static_cast<size_t>(v)] * d1B;
        y2[static_cast<size_t>(v)] = cx.rb[static_cast<size_t>(v)] * d2B;
        m1B[static_cast<size_t>(v)] = sum(y1[static_cast<size_t>(v)]);
        m2B[static_cast<size_t>(v)] = sum(y2[static_cast<size_t>(v)]);
    }
    std::vector<Vector<T>> colB1v(static_cast<size_t>(s)), colB2v(static_cast<size_t>(s));
    for (int v = 0; v < s; ++v) {
        colB1v[static_cast<size_t>(v)] = cx.powB[static_cast<size_t>(v)] * colB1;
        colB2v[static_cast<size_t>(v)] = cx.powB[static_cast<size_t>(v)] * colB2;
    }

    T acc = scalar_traits<T>::zero();
    for (int u = 0; u < r; ++u)
        acc += dot(cx.ra[static_cast<size_t>(u)], colA12) - m1A[static_cast<size_t>(u)] * m2A[static_cast<size_t>(u)];
    for (int v = 0; v < s; ++v)
        acc += dot(cx.rb[static_cast<size_t>(v)], colB12) - m1B[static_cast<size_t>(v)] * m2B[static_cast<size_t>(v)];

    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) {
            const Matrix<T>& gap = cx.powA[static_cast<size_t>(v - u - 1)];
            acc += dot(x1[static_cast<size_t>(u)] * gap, colA2) - m1A[static_cast<size_t>(u)] * m2A[static_cast<size_t>(v)];
            acc += dot(x2[static_cast<size_t>(u)] * gap, colA1) - m2A[static_cast<size_t>(u)] * m1A[static_cast<size_t>(v)];
        }

    std::vector<Vector<T>> x1_end(static_cast<size_t>(r)), x2_end(static_cast<size_t>(r));
    for (int u = 0; u < r; ++u) {
        const Matrix<T>& tail = cx.powA[static_cast<size_t>(r - u - 1)];
        x1_end[static_cast<size_t>(u)] = x1[static_cast<size_t>(u)] * tail;
        x2_end[static_cast<size_t>(u)] = x2[static_cast<size_t>(u)] * tail;
    }
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) {
            acc += dot(x1_end[static_cast<size_t>(u)], colB2v[static_cast<size_t>(v)]) -
                   m1A[static_cast<size_t>(u)] * m2B[static_cast<size_t>(v)];
            acc += dot(x2_end[static_cast<size_t>(u)], colB1v[static_cast<size_t>(v)]) -
                   m2A[static_cast<size_t>(u)] * m1B[static_cast<size_t>(v)];
        }

    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) {
            const Matrix<T>& gap = cx.powB[static_cast<size_t>(v - u - 1)];
            acc += dot(y1[static_cast<size_t>(u)] * gap, colB2) - m1B[static_cast<size_t>(u)] * m2B[static_cast<size_t>(v)];
            acc += dot(y2[static_cast<size_t>(u)] * gap, colB1) - m2B[static_cast<size_t>(u)] * m1B[static_cast<size_t>(v)];
        }

    std::vector<Vector<T>> tA1(static_cast<size_t>(r)), tA2(static_cast<size_t>(r)), tB1(static_cast<size_t>(s)),
        tB2(static_cast<size_t>(s));
    for (int u = 0; u < r; ++u) {
        tA1[static_cast<size_t>(u)] = (x1_end[static_cast<size_t>(u)] * cx.powB[static_cast<size_t>(s)]) * cx.zmp;
        tA2[static_cast<size_t>(u)] = (x2_end[static_cast<size_t>(u)] * cx.powB[static_cast<size_t>(s)]) * cx.zmp;
    }
    for (int u = 0; u < s; ++u) {
        const Matrix<T>& tail = cx.powB[static_cast<size_t>(s - u - 1)];
        tB1[static_cast<size_t>(u)] = (y1[static_cast<size_t>(u)] * tail) * cx.zmp;
        tB2[static_cast<size_t>(u)] = (y2[static_cast<size_t>(u)] * tail) * cx.zmp;
    }
    std::vector<Vector<T>> rightA1(static_cast<size_t>(r)), rightA2(static_cast<size_t>(r));
    for (int v = 0; v < r; ++v) {
        rightA1[static_cast<size_t>(v)] = cx.powA[static_cast<size_t>(v)] * colA1;
        rightA2[static_cast<size_t>(v)] = cx.powA[static_cast<size_t>(v)] * colA2;
    }
    std::vector<Vector<T>> rightB1(static_cast<size_t>(s)), rightB2(static_cast<size_t>(s));
    for (int v = 0; v < s; ++v) {
        rightB1[static_cast<size_t>(v)] = cx.powA[static_cast<size_t>(r)] * colB1v[static_cast<size_t>(v)];
        rightB2[static_cast<size_t>(v)] = cx.powA[static_cast<size_t>(r)] * colB2v[static_cast<size_t>(v)];
    }
    for (int u = 0; u < r; ++u) {
        for (int v = 0; v < r; ++v)
            acc += dot(tA1[static_cast<size_t>(u)], rightA2[static_cast<size_t>(v)]) +
                   dot(tA2[static_cast<size_t>(u)], rightA1[static_cast<size_t>(v)]);
        for (int v = 0; v < s; ++v)
            acc += dot(tA1[static_cast<size_t>(u)], rightB2[static_cast<size_t>(v)]) +
                   dot(tA2[static_cast<size_t>(u)], rightB1[static_cast<size_t>(v)]);
    }
    for (int u = 0; u < s; ++u) {
        for (int v = 0; v < r; ++v)
            acc += dot(tB1[static_cast<size_t>(u)], rightA2[static_cast<size_t>(v)]) +
                   dot(tB2[static_cast<size_t>(u)], rightA1[static_cast<size_t>(v)]);
        for (int v = 0; v < s; ++v)
            acc += dot(tB1[static_cast<size_t>(u)], rightB2[static_cast<size_t>(v)]) +
                   dot(tB2[static_cast<size_t>(u)], rightB1[static_cast<size_t>(v)]);
    }
    return acc / T(cx.r + cx.s);
}

}  // namespace detail

template <class T>
PatternStats<T> pattern_stats_cycle(const GameChain<T>& a, const GameChain<T>& b, int r, int s) {
    auto cx = detail::make_cycle_context(a, b, r, s);
    PatternStats<T> out;
    out.method = "cycle-sums";
    if (a.Pw && b.Pw) {
        out.mu = detail::cycle_mean(cx, *a.Pw, *b.Pw);
        out.sigma2 = detail::cycle_variance(cx, *a.Pw, *a.Pww, *b.Pw, *b.Pww);
    }
    if (a.Pw1 && b.Pw1) out.sigma12 = detail::cycle_covariance(cx, a, b);
    return out;
}

// Phase-augmented chain: states (x, t), phase advancing by one each turn,
// block A for phases 0..r-1 and block B for the rest.
template <class T>
GameChain<T> build_phase_chain(const GameChain<T>& a, const GameChain<T>& b, int r, int s) {
    if (a.states() != b.states()) throw ValidationError("phase chain: chain shapes differ");
    const int m = a.states(), period = r + s, n = m * period;
    GameChain<T> c;
    c.label = "phase[" + a.label + "^" + std::to_string(r) + " " + b.label + "^" + std::to_string(s) + "]";
    auto lift = [&](const Matrix<T>& blk_a, const Matrix<T>& blk_b) {
        Matrix<T> big(n, n);
        for (int t = 0; t < period; ++t) {
            const Matrix<T>& blk = t < r ? blk_a : blk_b;
            const int tn = (t + 1) % period;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) big(t * m + i, tn * m + j) = blk(i, j);
        }
        return big;
    };
    c.P = lift(a.P, b.P);
    auto lift_opt = [&](const std::optional<Matrix<T>> GameChain<T>::*field) -> std::optional<Matrix<T>> {
        if (!(a.*field) || !(b.*field)) return std::nullopt;
        return lift(*(a.*field), *(b.*field));
    };
    c.W = lift_opt(&GameChain<T>::W);
    c.Pw = lift_opt(&GameChain<T>::Pw);
    c.Pww = lift_opt(&GameChain<T>::Pww);
    c.W1 = lift_opt(&GameChain<T>::W1);
    c.W2 = lift_opt(&GameChain<T>::W2);
    c.Pw1 = lift_opt(&GameChain<T>::Pw1);
    c.Pw2 = lift_opt(&GameChain<T>::Pw2);
    c.Pw12 = lift_opt(&GameChain<T>::Pw12);
    return c;
}

template <class T>
PatternStats<T> pattern_stats_phase(const GameChain<T>& a, const GameChain<T>& b, int r, int s) {
    GameChain<T> ph = build_phase_chain(a, b, r, s);
    Vector<T> pi = stationary(ph.P);
    auto f = fundamental(ph.P, pi);
    PatternStats<T> out;
    out.method = "phase-chain";
    if (ph.Pw) {
        auto mv = mean_variance(ph, pi, f);
        out.mu = mv.mu;
        out.sigma2 = mv.sigma2;
    }
    if (ph.Pw1) out.sigma12 = covariance_param(ph, pi, f);
    return out;
}

// ---------------------------------------------------------------------------
// Ensemble assembly: per-player and pair statistics from the lumped chains,
// combined as mu = N mu_1 and sigma^2 = N sigma_1^2 + N(N-1) sigma12.

enum class PatternMethod { cycle, phase };

template <class T>
struct PatternEnsemble {
    T per_player_mu, per_player_sigma2, pair_cov;
    T ensemble_mu, ensemble_sigma2;
    T svar_slope;  // (sigma^(1,N))^2 - sigma^([1,2],N)
    std::string method;
};

template <class T>
PatternEnsemble<T> pattern_ensemble_stats(int r, int s, const T& n, const CoinProbs<T>& coins,
                                          PatternMethod method = PatternMethod::cycle) {
    GameChain<T> one_a = build_lumped_one<T>(n, coins, GameKind::a_prime);
    GameChain<T> one_b = build_lumped_one<T>(n, coins, GameKind::b);
    GameChain<T> pair_a = build_lumped_pair<T>(n, coins, GameKind::a_prime);
    GameChain<T> pair_b = build_lumped_pair<T>(n, coins, GameKind::b);
    PatternStats<T> one = method == PatternMethod::cycle ? pattern_stats_cycle(one_a, one_b, r, s)
                                                         : pattern_stats_phase(one_a, one_b, r, s);
    PatternStats<T> pair = method == PatternMethod::cycle ? pattern_stats_cycle(pair_a, pair_b, r, s)
                                                          : pattern_stats_phase(pair_a, pair_b, r, s);
    PatternEnsemble<T> out;
    out.method = one.method;
    out.per_player_mu = *one.mu;
    out.per_player_sigma2 = *one.sigma2;
    out.pair_cov = *pair.sigma12;
    out.ensemble_mu = n * out.per_player_mu;
    out.ensemble_sigma2 = n * out.per_player_sigma2 + n * (n - scalar_traits<T>::one()) * out.pair_cov;
    out.svar_slope = out.per_player_sigma2 - out.pair_cov;
    return out;
}

// Direct route on the type-count state space: ensemble mean and variance
// without the pair decomposition.  Feasible for small N.
template <class T>
PatternStats<T> pattern_ensemble_direct(int r, int s, int n, const CoinProbs<T>& coins,
                                        PatternMethod method = PatternMethod::cycle) {
    GameChain<T> a = build_reduced_Aprime<T>(n);
    GameChain<T> b = build_reduced_B<T>(n, coins);
    return method == PatternMethod::cycle ? pattern_stats_cycle(a, b, r, s) : pattern_stats_phase(a, b, r, s);
}

// ---------------------------------------------------------------------------
// Exact N -> infinity limits: run the lumped engines over the Laurent field
// at N = 1/h and take constant terms.

inline Rational laurent_limit(const Laurent& x) {
    if (x.is_zero()) return Rational(0);
    if (x.valuation() < 0) throw Error("laurent_limit: value diverges as N -> infinity");
    return x.coeff(0);
}

struct PatternLimit {
    Rational mu;              // lim mu^(N)
    Rational sigma2;          // lim (sigma^(N))^2
    Rational svar_slope_n;    // lim N [(sigma^(1,N))^2 - sigma^([1,2],N)]
};

inline PatternLimit pattern_ensemble_limit(int r, int s, const CoinProbs<Rational>& coins) {
    const Laurent n = Laurent::generator().inverse();  // N = 1/h
    auto coins_l = coin_probs_as<Laurent>(coins);
    auto e = pattern_ensemble_stats<Laurent>(r, s, n, coins_l);
    PatternLimit out;
    out.mu = laurent_limit(e.ensemble_mu);
    out.sigma2 = laurent_limit(e.ensemble_sigma2);
    out.svar_slope_n = laurent_limit(n * e.svar_slope);
    return out;
}

struct MixtureLimit {
    Rational mu;
    Rational sigma2;
    Rational per_sigma2_n;  // lim N (sigma^(1,N))^2
    Rational svar_slope_n;
};

inline MixtureLimit mixture_ensemble_limit(const Rational& gamma, const CoinProbs<Rational>& coins) {
    const Laurent n = Laurent::generator().inverse();
    auto coins_l = coin_probs_as<Laurent>(coins);
    auto a = analyze_mixture_lumped<Laurent>(n, Laurent(gamma), coins_l);
    MixtureLimit out;
    out.mu = laurent_limit(a.ensemble_mu);
    out.sigma2 = laurent_limit(a.ensemble_sigma2);
    out.per_sigma2_n = laurent_limit(n * a.per_player_sigma2);
    out.svar_slope_n = laurent_limit(n * (a.per_player_sigma2 - a.pair_cov));
    return out;
}

// Sign of the ensemble pattern mean, decided in exact arithmetic.
inline int pattern_sign(int r, int s, int n, const Rational& rho) {
    ModelParams params;
    params.rho = rho;
    params.players = n;
    auto coins = derive_coin_probs(params);
    GameChain<Rational> a = build_lumped_one<Rational>(Rational(n), coins, GameKind::a_prime);
    GameChain<Rational> b = build_lumped_one<Rational>(Rational(n), coins, GameKind::b);
    auto cx = detail::make_cycle_context(a, b, r, s);
    Rational mu = detail::cycle_mean(cx, *a.Pw, *b.Pw);
    return mu.is_zero() ? 0 : (mu > 0 ? 1 : -1);
}

// ---------------------------------------------------------------------------
// Mixture/pattern limit relation: the pattern mean converges, as the number
// of players grows, to the mixture mean at gamma = r/(r+s).

struct RelationReport {
    bool closed_forms_equal;       // exact comparison of the two closed forms
    Rational closed_form_value;    // common value when equal
    double richardson_value;       // engine extrapolation in 1/N
    double richardson_residual;    // |richardson - closed form|
    bool within_tol;
};

inline RelationReport mixture_pattern_relation(int r, int s, const Rational& rho, double tol = 1e-6,
                                               int base_n = 64) {
    ModelParams params;
    params.rho = rho;
    auto coins = derive_coin_probs(params);
    RelationReport rep;
    Rational mix = formulas::mu_mixture<Rational>(Rational(r) / Rational(r + s), rho);
    Rational pat = formulas::pattern_mean_limit<Rational>(r, s, rho);
    rep.closed_forms_equal = (mix == pat);
    rep.closed_form_value = mix;

    auto coins_d = coin_probs_as<double>(coins);
    auto mu_at = [&](int n) {
        GameChain<double> a = build_lumped_one<double>(static_cast<double>(n), coins_d, GameKind::a_prime);
        GameChain<double> b = build_lumped_one<double>(static_cast<double>(n), coins_d, GameKind::b);
        auto cx = detail::make_cycle_context(a, b, r, s);
        return n * detail::cycle_mean(cx, *a.Pw, *b.Pw);
    };
    // three-point Richardson in 1/N
    double f1 = mu_at(base_n), f2 = mu_at(2 * base_n), f3 = mu_at(4 * base_n);
    double g1 = 2 * f2 - f1, g2 = 2 * f3 - f2;
    rep.richardson_value = (4 * g2 - g1) / 3;
    rep.richardson_residual = std::fabs(rep.richardson_value - scalar_traits<Rational>::to_double(mix));
    rep.within_tol = rep.richardson_residual <= tol;
    return rep;
}

}  // namespace parrondo
