#pragma once

// Generic finite-chain engine.
//
// For an irreducible chain P with stationary distribution pi, fundamental
// matrix Z = (I - (P - Pi))^-1 and payoff-weighted matrices Pw = P.W,
// Pww = P.W.W, the per-turn mean and variance of the cumulative payoff are
//
//   mu      = pi Pw 1
//   sigma^2 = pi Pww 1 - (pi Pw 1)^2 + 2 pi Pw (Z - Pi) Pw 1
//
// and for two payoff functions the per-turn covariance is
//
//   sigma12 = pi Pw12 1 - (pi Pw1 1)(pi Pw2 1)
//           + pi Pw1 (Z - Pi) Pw2 1 + pi Pw2 (Z - Pi) Pw1 1.

#include "parrondo/chains.hpp"
#include "parrondo/matrix.hpp"

#include <algorithm>
#include <vector>

namespace parrondo {

template <class T>
Vector<T> stationary(const Matrix<T>& p) {
    const int n = p.rows();
    // Balance equations (P^t - I) x = 0 with the last one replaced by
    // normalization; any n-1 of them are independent for irreducible P.
    Matrix<T> a = p.transpose();
    for (int i = 0; i < n; ++i) a(i, i) -= scalar_traits<T>::one();
    for (int j = 0; j < n; ++j) a(n - 1, j) = scalar_traits<T>::one();
    Vector<T> b(static_cast<size_t>(n), scalar_traits<T>::zero());
    b.back() = scalar_traits<T>::one();
    try {
        return solve_linear(a, b);
    } catch (const SingularMatrixError&) {
        throw ReducibleChainError("stationary: singular balance system (chain not irreducible)");
    }
}

template <class T>
struct FundamentalMatrix {
    Matrix<T> Z;
    Matrix<T> Pi;  // every row is pi
};

template <class T>
Matrix<T> stack_rows(const Vector<T>& pi) {
    const int n = static_cast<int>(pi.size());
    Matrix<T> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = pi[static_cast<size_t>(j)];
    return m;
}

template <class T>
FundamentalMatrix<T> fundamental(const Matrix<T>& p, const Vector<T>& pi) {
    FundamentalMatrix<T> f;
    f.Pi = stack_rows(pi);
    Matrix<T> a = Matrix<T>::identity(p.rows()) - p + f.Pi;
    f.Z = inverse(a);
    // Pi Z = Z Pi = Pi follows from pi P = pi; a failure here means pi was
    // not the stationary distribution of p.
    auto reproduces = [&](const Matrix<T>& prod) {
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                if (!scalar_traits<T>::near_zero(prod(i, j) - f.Pi(i, j))) return false;
        return true;
    };
    if (!reproduces(f.Pi * f.Z) || !reproduces(f.Z * f.Pi))
        throw Error("fundamental: Z does not reproduce Pi (pi not stationary?)");
    return f;
}

template <class T>
struct AnalysisResult {
    T mu;
    T sigma2;
    std::optional<T> sigma12;
};

template <class T>
AnalysisResult<T> mean_variance(const GameChain<T>& chain, const Vector<T>& pi, const FundamentalMatrix<T>& f) {
    if (!chain.Pw || !chain.Pww) throw Error("mean_variance: chain has no ensemble payoff matrices");
    const Vector<T> ones = ones_vector<T>(chain.states());
    Vector<T> pi_pw = pi * *chain.Pw;
    T mu = sum(pi_pw);
    Matrix<T> zmp = f.Z - f.Pi;
    Vector<T> pw1 = *chain.Pw * ones;
    AnalysisResult<T> r;
    r.mu = mu;
    r.sigma2 = sum(pi * *chain.Pww) - mu * mu + T(2) * dot(pi_pw, zmp * pw1);
    return r;
}

template <class T>
T covariance_param(const GameChain<T>& chain, const Vector<T>& pi, const FundamentalMatrix<T>& f) {
    if (!chain.Pw1 || !chain.Pw2 || !chain.Pw12) throw Error("covariance_param: chain has no pair payoff matrices");
    const Vector<T> ones = ones_vector<T>(chain.states());
    Matrix<T> zmp = f.Z - f.Pi;
    Vector<T> pi_p1 = pi * *chain.Pw1, pi_p2 = pi * *chain.Pw2;
    Vector<T> p1_1 = *chain.Pw1 * ones, p2_1 = *chain.Pw2 * ones;
    return sum(pi * *chain.Pw12) - sum(pi_p1) * sum(pi_p2) + dot(pi_p1, zmp * p2_1) + dot(pi_p2, zmp * p1_1);
}

// Convenience: stationary + fundamental + Eq.-style parameters in one go.
template <class T>
AnalysisResult<T> analyze_chain(const GameChain<T>& chain) {
    Vector<T> pi = stationary(chain.P);
    auto f = fundamental(chain.P, pi);
    AnalysisResult<T> r = mean_variance(chain, pi, f);
    if (chain.Pw1) r.sigma12 = covariance_param(chain, pi, f);
    return r;
}

// ---------------------------------------------------------------------------
// Mixture analysis through the marginal chains: the ensemble mean is N times
// the one-player mean, and the ensemble variance decomposes as
//   sigma_ens^2 = N sigma_1^2 + N(N-1) sigma12
// over the 3-state one-player chain and the 9-state pair chain.

template <class T>
struct MixtureAnalysis {
    T per_player_mu;      // mu^(1,N)
    T per_player_sigma2;  // (sigma^(1,N))^2
    T pair_cov;           // sigma^([1,2],N)
    T ensemble_mu;
    T ensemble_sigma2;
    Vector<T> pi_one;  // stationary law of the one-player mixture chain
};

template <class T>
MixtureAnalysis<T> analyze_mixture_lumped(const T& n, const T& gamma, const CoinProbs<T>& coins) {
    GameChain<T> one = build_mixture(build_lumped_one<T>(n, coins, GameKind::a_prime),
                                     build_lumped_one<T>(n, coins, GameKind::b), gamma);
    GameChain<T> pair = build_mixture(build_lumped_pair<T>(n, coins, GameKind::a_prime),
                                      build_lumped_pair<T>(n, coins, GameKind::b), gamma);
    MixtureAnalysis<T> r;
    {
        Vector<T> pi = stationary(one.P);
        auto f = fundamental(one.P, pi);
        auto a = mean_variance(one, pi, f);
        r.per_player_mu = a.mu;
        r.per_player_sigma2 = a.sigma2;
        r.pi_one = std::move(pi);
    }
    {
        Vector<T> pi = stationary(pair.P);
        auto f = fundamental(pair.P, pi);
        r.pair_cov = covariance_param(pair, pi, f);
    }
    r.ensemble_mu = n * r.per_player_mu;
    r.ensemble_sigma2 = n * r.per_player_sigma2 + n * (n - scalar_traits<T>::one()) * r.pair_cov;
    return r;
}

template <class T>
T ensemble_variance_mixture(const T& n, const T& gamma, const CoinProbs<T>& coins) {
    return analyze_mixture_lumped(n, gamma, coins).ensemble_sigma2;
}

// Direct computation on the full 3^N-state chain; a brute-force cross-check
// of the lumped decomposition for small N.
template <class T>
AnalysisResult<T> analyze_full_mixture(int n, const CoinProbs<T>& coins, const T& gamma,
                                       long state_cap = kDefaultStateCap) {
    return analyze_chain(build_full_mixture<T>(n, coins, gamma, state_cap));
}

// ---------------------------------------------------------------------------
// Structural checks (verify/debug paths).

template <class T>
bool is_irreducible(const Matrix<T>& p) {
    const int n = p.rows();
    auto reach_all = [&](bool forward) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y) {
                const T& e = forward ? p(x, y) : p(y, x);
                if (!scalar_traits<T>::is_zero(e) && !seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    return reach_all(true) && reach_all(false);
}

// Lemma-1-style check: pi(x_sigma) == pi(x) for every permutation of the
// player coordinates.  Enumerates all N! permutations, so N <= 3 in practice.
template <class T>
bool check_exchangeability(const Matrix<T>& p, int n_players) {
    StateIndexFull ix(n_players);
    if (ix.size() != p.rows()) throw ValidationError("check_exchangeability: wrong state count");
    Vector<T> pi = stationary(p);
    std::vector<int> perm(static_cast<size_t>(n_players));
    for (int i = 0; i < n_players; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        for (long x = 0; x < ix.size(); ++x) {
            auto digits = ix.decode(x);
            std::vector<int> permuted(digits.size());
            for (size_t i = 0; i < digits.size(); ++i) permuted[i] = digits[static_cast<size_t>(perm[i])];
            if (!scalar_traits<T>::is_zero(pi[static_cast<size_t>(x)] -
                                           pi[static_cast<size_t>(ix.encode(permuted))]))
                return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

// Transition-law permutation symmetry, the hypothesis of the lemma above.
template <class T>
bool check_permutation_symmetry(const Matrix<T>& p, int n_players) {
    StateIndexFull ix(n_players);
    if (ix.size() != p.rows()) throw ValidationError("check_permutation_symmetry: wrong state count");
    std::vector<int> perm(static_cast<size_t>(n_players));
    for (int i = 0; i < n_players; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        for (long x = 0; x < ix.size(); ++x)
            for (long y = 0; y < ix.size(); ++y) {
                auto dx = ix.decode(x), dy = ix.decode(y);
                std::vector<int> px(dx.size()), py(dy.size());
                for (size_t i = 0; i < dx.size(); ++i) {
                    px[i] = dx[static_cast<size_t>(perm[i])];
                    py[i] = dy[static_cast<size_t>(perm[i])];
                }
                if (!scalar_traits<T>::is_zero(p(static_cast<int>(x), static_cast<int>(y)) -
                                               p(static_cast<int>(ix.encode(px)), static_cast<int>(ix.encode(py)))))
                    return false;
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace parrondo
