#pragma once

// Constructors for every chain in the model, over explicit state
// enumerations:
//
//   * full chains on {0,1,2}^N (capital of each player mod 3),
//   * reduced chains on type counts (n0,n1,n2) with n0+n1+n2 = N,
//   * 3-state marginal ("lumped") chains for one of N players,
//   * 9-state lumped chains for a tracked pair of players,
//   * the original one-player games A and B.
//
// A GameChain bundles the transition matrix with payoff matrices and their
// Hadamard products.  Ensemble chains carry W (total profit per transition)
// and Pw = P.W, Pww = P.W.W; pair chains carry per-player payoffs W1, W2
// and Pw1, Pw2, Pw12.  Mixtures combine the weighted matrices linearly,
// and the integer payoff matrices are merged only where the two supports
// agree (they always do for these games; a mismatch throws).

#include "parrondo/matrix.hpp"
#include "parrondo/params.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace parrondo {

enum class GameKind { a_prime, b };

// Bijection between {0,1,2}^N and 0..3^N-1; player 1 is the most
// significant base-3 digit, so (0,...,0) maps to index 0.
class StateIndexFull {
  public:
    explicit StateIndexFull(int n) : n_(n) {
        size_ = 1;
        for (int i = 0; i < n; ++i) size_ *= 3;
    }
    int players() const { return n_; }
    long size() const { return size_; }

    long encode(const std::vector<int>& digits) const {
        long idx = 0;
        for (int d : digits) idx = idx * 3 + d;
        return idx;
    }
    std::vector<int> decode(long idx) const {
        std::vector<int> d(static_cast<size_t>(n_));
        for (int i = n_ - 1; i >= 0; --i) {
            d[static_cast<size_t>(i)] = static_cast<int>(idx % 3);
            idx /= 3;
        }
        return d;
    }

  private:
    int n_;
    long size_;
};

// Bijection between {(n0,n1,n2) : n0+n1+n2 = N} and 0..(N+2 choose 2)-1,
// lexicographic in (n0, n1).
class StateIndexReduced {
  public:
    explicit StateIndexReduced(int n) : n_(n) {}
    int players() const { return n_; }
    int size() const { return (n_ + 1) * (n_ + 2) / 2; }

    int encode(int n0, int n1) const {
        // states with first coordinate < n0, then offset by n1
        return n0 * (n_ + 1) - n0 * (n0 - 1) / 2 + n1;
    }
    std::array<int, 3> decode(int idx) const {
        for (int n0 = 0; n0 <= n_; ++n0) {
            int block = n_ - n0 + 1;
            if (idx < block) return {n0, idx, n_ - n0 - idx};
            idx -= block;
        }
        throw Error("reduced state index out of range");
    }

  private:
    int n_;
};

template <class T>
struct GameChain {
    std::string label;
    Matrix<T> P;

    // ensemble payoff family
    std::optional<Matrix<T>> W, Pw, Pww;
    // tracked-pair payoff family
    std::optional<Matrix<T>> W1, W2, Pw1, Pw2, Pw12;

    int states() const { return P.rows(); }
};

namespace detail {

// Payoff of a capital step from residue class `from` to `to`: one unit won,
// one unit lost, or unchanged.
inline int mod3_payoff(int from, int to) {
    if (to == (from + 1) % 3) return 1;
    if (to == (from + 2) % 3) return -1;
    return 0;
}

template <class T>
Matrix<T> mod3_payoff_matrix() {
    Matrix<T> w(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w(i, j) = T(mod3_payoff(i, j));
    return w;
}

// Payoffs live only on possible transitions.
template <class T>
void mask_payoff(Matrix<T>& w, const Matrix<T>& p) {
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j)
            if (scalar_traits<T>::is_zero(p(i, j))) w(i, j) = scalar_traits<T>::zero();
}

template <class T>
void finish_ensemble(GameChain<T>& c) {
    c.Pw = c.P.hadamard(*c.W);
    c.Pww = c.Pw->hadamard(*c.W);
    mask_payoff(*c.W, c.P);
}

template <class T>
void finish_pair(GameChain<T>& c) {
    c.Pw1 = c.P.hadamard(*c.W1);
    c.Pw2 = c.P.hadamard(*c.W2);
    c.Pw12 = c.Pw1->hadamard(*c.W2);
    mask_payoff(*c.W1, c.P);
    mask_payoff(*c.W2, c.P);
}

inline void check_state_cap(long states, long cap) {
    if (states > cap)
        throw ValidationError("state space too large (" + std::to_string(states) + " states, cap " +
                              std::to_string(cap) + ")");
}

}  // namespace detail

inline constexpr long kDefaultStateCap = 6561;  // 3^8

// ---------------------------------------------------------------------------
// One-player originals: game A is a fair coin, game B the capital-dependent
// game.  Payoffs: +1 on a one-step gain mod 3, -1 on a loss.

template <class T>
GameChain<T> build_one_player_A() {
    GameChain<T> c;
    c.label = "A(1)";
    c.P = Matrix<T>(3, 3);
    const T half = scalar_traits<T>::one() / T(2);
    for (int i = 0; i < 3; ++i) {
        c.P(i, (i + 1) % 3) = half;
        c.P(i, (i + 2) % 3) = half;
    }
    c.W = detail::mod3_payoff_matrix<T>();
    detail::finish_ensemble(c);
    return c;
}

template <class T>
GameChain<T> build_one_player_B(const CoinProbs<T>& coins) {
    GameChain<T> c;
    c.label = "B(1)";
    c.P = Matrix<T>(3, 3);
    for (int i = 0; i < 3; ++i) {
        c.P(i, (i + 1) % 3) = coins.p(i);
        c.P(i, (i + 2) % 3) = coins.q(i);
    }
    c.W = detail::mod3_payoff_matrix<T>();
    detail::finish_ensemble(c);
    return c;
}

template <class T>
GameChain<T> build_one_player_original(GameKind kind, const CoinProbs<T>& coins) {
    return kind == GameKind::a_prime ? build_one_player_A<T>() : build_one_player_B<T>(coins);
}

// ---------------------------------------------------------------------------
// Full chains on {0,1,2}^N.

template <class T>
GameChain<T> build_full_B(int n, const CoinProbs<T>& coins, long state_cap = kDefaultStateCap) {
    if (n < 1) throw ValidationError("build_full_B: N >= 1 required");
    StateIndexFull ix(n);
    detail::check_state_cap(ix.size(), state_cap);
    const int m = static_cast<int>(ix.size());
    GameChain<T> c;
    c.label = "B(" + std::to_string(n) + ")";
    c.P = Matrix<T>(m, m);
    c.W = Matrix<T>(m, m);
    const T inv_n = scalar_traits<T>::one() / T(n);
    for (long x = 0; x < m; ++x) {
        auto digits = ix.decode(x);
        for (int i = 0; i < n; ++i) {
            const int d = digits[static_cast<size_t>(i)];
            for (int step : {1, 2}) {  // +1 mod 3 wins, -1 (== +2) loses
                auto target = digits;
                target[static_cast<size_t>(i)] = (d + step) % 3;
                long y = ix.encode(target);
                c.P(static_cast<int>(x), static_cast<int>(y)) += inv_n * (step == 1 ? coins.p(d) : coins.q(d));
                (*c.W)(static_cast<int>(x), static_cast<int>(y)) = T(step == 1 ? 1 : -1);
            }
        }
    }
    detail::finish_ensemble(c);
    return c;
}

// Redistribution game: a uniformly random ordered pair (donor, beneficiary)
// of distinct players moves one capital unit.  Total capital is conserved,
// so the ensemble payoff is identically zero.
template <class T>
GameChain<T> build_full_Aprime(int n, long state_cap = kDefaultStateCap) {
    if (n < 2) throw ValidationError("build_full_Aprime: N >= 2 required");
    StateIndexFull ix(n);
    detail::check_state_cap(ix.size(), state_cap);
    const int m = static_cast<int>(ix.size());
    GameChain<T> c;
    c.label = "A'(" + std::to_string(n) + ")";
    c.P = Matrix<T>(m, m);
    c.W = Matrix<T>(m, m);
    const T w = scalar_traits<T>::one() / T(n * (n - 1));
    for (long x = 0; x < m; ++x) {
        auto digits = ix.decode(x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                auto target = digits;
                target[static_cast<size_t>(i)] = (target[static_cast<size_t>(i)] + 2) % 3;  // donor loses
                target[static_cast<size_t>(j)] = (target[static_cast<size_t>(j)] + 1) % 3;  // beneficiary gains
                c.P(static_cast<int>(x), static_cast<int>(ix.encode(target))) += w;
            }
    }
    detail::finish_ensemble(c);
    return c;
}

// ---------------------------------------------------------------------------
// Reduced chains on type counts (n0, n1, n2).

template <class T>
GameChain<T> build_reduced_B(int n, const CoinProbs<T>& coins) {
    if (n < 1) throw ValidationError("build_reduced_B: N >= 1 required");
    StateIndexReduced ix(n);
    const int m = ix.size();
    GameChain<T> c;
    c.label = "B-reduced(" + std::to_string(n) + ")";
    c.P = Matrix<T>(m, m);
    c.W = Matrix<T>(m, m);
    const T inv_n = scalar_traits<T>::one() / T(n);
    for (int x = 0; x < m; ++x) {
        auto [n0, n1, n2] = ix.decode(x);
        const std::array<int, 3> cnt{n0, n1, n2};
        for (int t = 0; t < 3; ++t) {
            if (cnt[static_cast<size_t>(t)] == 0) continue;
            for (int win : {1, 0}) {
                std::array<int, 3> to = cnt;
                --to[static_cast<size_t>(t)];
                ++to[static_cast<size_t>((t + (win ? 1 : 2)) % 3)];
                int y = ix.encode(to[0], to[1]);
                c.P(x, y) += inv_n * T(cnt[static_cast<size_t>(t)]) * (win ? coins.p(t) : coins.q(t));
                (*c.W)(x, y) = T(win ? 1 : -1);
            }
        }
    }
    detail::finish_ensemble(c);
    return c;
}

template <class T>
GameChain<T> build_reduced_Aprime(int n) {
    if (n < 2) throw ValidationError("build_reduced_Aprime: N >= 2 required");
    StateIndexReduced ix(n);
    const int m = ix.size();
    GameChain<T> c;
    c.label = "A'-reduced(" + std::to_string(n) + ")";
    c.P = Matrix<T>(m, m);
    c.W = Matrix<T>(m, m);  // capital conserved: zero payoff
    const T w = scalar_traits<T>::one() / T(n * (n - 1));
    for (int x = 0; x < m; ++x) {
        auto [n0, n1, n2] = ix.decode(x);
        const std::array<int, 3> cnt{n0, n1, n2};
        // Donor of type td moves to class td-1, beneficiary of type tb to
        // class tb+1; the pair is ordered and distinct, so the count is
        // cnt[td]*cnt[tb] off the diagonal and cnt[t]*(cnt[t]-1) on it.
        for (int td = 0; td < 3; ++td)
            for (int tb = 0; tb < 3; ++tb) {
                long pairs = (td == tb) ? static_cast<long>(cnt[static_cast<size_t>(td)]) * (cnt[static_cast<size_t>(td)] - 1)
                                        : static_cast<long>(cnt[static_cast<size_t>(td)]) * cnt[static_cast<size_t>(tb)];
                if (pairs == 0) continue;
                std::array<int, 3> to = cnt;
                --to[static_cast<size_t>(td)];
                ++to[static_cast<size_t>((td + 2) % 3)];
                --to[static_cast<size_t>(tb)];
                ++to[static_cast<size_t>((tb + 1) % 3)];
                c.P(x, ix.encode(to[0], to[1])) += w * T(static_cast<int>(pairs));
            }
    }
    detail::finish_ensemble(c);
    return c;
}

// ---------------------------------------------------------------------------
// Lumped chains.  N enters only through field arithmetic, so these builders
// accept it as a scalar; passing the Laurent element 1/h yields the chain
// with N treated formally, which is how N -> infinity limits are computed.

template <class T>
GameChain<T> build_lumped_one(const T& n, const CoinProbs<T>& coins, GameKind kind) {
    const T one = scalar_traits<T>::one();
    const Matrix<T> eye = Matrix<T>::identity(3);
    GameChain<T> c;
    c.W = detail::mod3_payoff_matrix<T>();
    const T inv_n = one / n;
    if (kind == GameKind::b) {
        c.label = "B(1,N)";
        c.P = inv_n * build_one_player_B<T>(coins).P + (one - inv_n) * eye;
    } else {
        c.label = "A'(1,N)";
        c.P = (T(2) * inv_n) * build_one_player_A<T>().P + (one - T(2) * inv_n) * eye;
    }
    detail::finish_ensemble(c);
    return c;
}

namespace detail {

inline int pair_index(int i, int j) { return 3 * i + j; }

template <class T>
void pair_payoffs(GameChain<T>& c) {
    const int m = 9;
    c.W1 = Matrix<T>(m, m);
    c.W2 = Matrix<T>(m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            (*c.W1)(x, y) = T(mod3_payoff(x / 3, y / 3));
            (*c.W2)(x, y) = T(mod3_payoff(x % 3, y % 3));
        }
}

// One-unit transfers between the two tracked players.
template <class T>
Matrix<T> pair_transfer_both() {
    Matrix<T> p(9, 9);
    const T half = scalar_traits<T>::one() / T(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int x = pair_index(i, j);
            p(x, pair_index((i + 2) % 3, (j + 1) % 3)) = half;  // 1 -> 2
            p(x, pair_index((i + 1) % 3, (j + 2) % 3)) = half;  // 2 -> 1
        }
    return p;
}

// Transfers involving exactly one tracked player and an outsider.
template <class T>
Matrix<T> pair_transfer_one() {
    Matrix<T> p(9, 9);
    const T quarter = scalar_traits<T>::one() / T(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int x = pair_index(i, j);
            p(x, pair_index((i + 2) % 3, j)) = quarter;  // 1 -> outsider
            p(x, pair_index((i + 1) % 3, j)) = quarter;  // outsider -> 1
            p(x, pair_index(i, (j + 2) % 3)) = quarter;  // 2 -> outsider
            p(x, pair_index(i, (j + 1) % 3)) = quarter;  // outsider -> 2
        }
    return p;
}

}  // namespace detail

template <class T>
GameChain<T> build_lumped_pair(const T& n, const CoinProbs<T>& coins, GameKind kind) {
    const T one = scalar_traits<T>::one();
    const Matrix<T> eye = Matrix<T>::identity(9);
    GameChain<T> c;
    detail::pair_payoffs(c);
    if (kind == GameKind::b) {
        c.label = "B(2,N)";
        const T inv_n = one / n;
        c.P = (T(2) * inv_n) * build_full_B<T>(2, coins).P + ((n - T(2)) * inv_n) * eye;
    } else {
        c.label = "A'(2,N)";
        const T inv_nn = one / (n * (n - one));
        c.P = (T(2) * inv_nn) * detail::pair_transfer_both<T>() +
              (T(4) * (n - T(2)) * inv_nn) * detail::pair_transfer_one<T>() +
              ((n - T(2)) * (n - T(3)) * inv_nn) * eye;
    }
    detail::finish_pair(c);
    return c;
}

// ---------------------------------------------------------------------------
// Mixtures: gamma A' + (1-gamma) B.  Weighted matrices combine linearly;
// the payoff matrices merge entrywise and must agree wherever both chains
// put probability on the same transition.

namespace detail {

template <class T>
std::optional<Matrix<T>> merge_payoffs(const GameChain<T>& a, const GameChain<T>& b,
                                       const std::optional<Matrix<T>> GameChain<T>::*wf) {
    if (!(a.*wf) || !(b.*wf)) return std::nullopt;
    const Matrix<T>&wa = *(a.*wf), &wb = *(b.*wf);
    Matrix<T> w(wa.rows(), wa.cols());
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j) {
            bool on_a = !scalar_traits<T>::is_zero(a.P(i, j));
            bool on_b = !scalar_traits<T>::is_zero(b.P(i, j));
            if (on_a && on_b && !scalar_traits<T>::is_zero(wa(i, j) - wb(i, j)))
                throw Error("mixture payoffs disagree on a shared transition");
            w(i, j) = on_a ? wa(i, j) : (on_b ? wb(i, j) : scalar_traits<T>::zero());
        }
    return w;
}

template <class T>
std::optional<Matrix<T>> mix_opt(const T& g, const std::optional<Matrix<T>>& a, const T& h,
                                 const std::optional<Matrix<T>>& b) {
    if (!a || !b) return std::nullopt;
    return g * *a + h * *b;
}

}  // namespace detail

template <class T>
GameChain<T> build_mixture(const GameChain<T>& chain_a, const GameChain<T>& chain_b, const T& gamma) {
    if (chain_a.states() != chain_b.states()) throw ValidationError("mixture: chain shapes differ");
    const T g = gamma, h = scalar_traits<T>::one() - gamma;
    GameChain<T> c;
    c.label = "mix[" + chain_a.label + "," + chain_b.label + "]";
    c.P = g * chain_a.P + h * chain_b.P;
    c.W = detail::merge_payoffs(chain_a, chain_b, &GameChain<T>::W);
    c.W1 = detail::merge_payoffs(chain_a, chain_b, &GameChain<T>::W1);
    c.W2 = detail::merge_payoffs(chain_a, chain_b, &GameChain<T>::W2);
    for (auto* w : {&c.W, &c.W1, &c.W2})
        if (*w) detail::mask_payoff(**w, c.P);
    c.Pw = detail::mix_opt(g, chain_a.Pw, h, chain_b.Pw);
    c.Pww = detail::mix_opt(g, chain_a.Pww, h, chain_b.Pww);
    c.Pw1 = detail::mix_opt(g, chain_a.Pw1, h, chain_b.Pw1);
    c.Pw2 = detail::mix_opt(g, chain_a.Pw2, h, chain_b.Pw2);
    c.Pw12 = detail::mix_opt(g, chain_a.Pw12, h, chain_b.Pw12);
    return c;
}

// Reduced mixture chain (type counts), ensemble payoffs only.
template <class T>
GameChain<T> build_reduced(int n, const CoinProbs<T>& coins, const T& gamma) {
    return build_mixture(build_reduced_Aprime<T>(n), build_reduced_B<T>(n, coins), gamma);
}

// Full mixture chain on {0,1,2}^N.
template <class T>
GameChain<T> build_full_mixture(int n, const CoinProbs<T>& coins, const T& gamma,
                                long state_cap = kDefaultStateCap) {
    return build_mixture(build_full_Aprime<T>(n, state_cap), build_full_B<T>(n, coins, state_cap), gamma);
}

// ---------------------------------------------------------------------------
// Invariant checks used by tests and debug paths.

template <class T>
void validate_chain(const GameChain<T>& c) {
    const T one = scalar_traits<T>::one();
    auto sums = row_sums(c.P);
    for (const auto& s : sums)
        if (!scalar_traits<T>::is_zero(s - one)) throw Error(c.label + ": row sums differ from 1");
    if constexpr (scalar_traits<T>::is_ordered) {
        for (int i = 0; i < c.P.rows(); ++i)
            for (int j = 0; j < c.P.cols(); ++j)
                if (scalar_traits<T>::to_double(c.P(i, j)) < 0) throw Error(c.label + ": negative entry");
    }
    for (auto wf : {&GameChain<T>::W, &GameChain<T>::W1, &GameChain<T>::W2}) {
        if (!(c.*wf)) continue;
        const Matrix<T>& w = *(c.*wf);
        for (int i = 0; i < w.rows(); ++i)
            for (int j = 0; j < w.cols(); ++j) {
                const T& v = w(i, j);
                bool unit = scalar_traits<T>::is_zero(v) || scalar_traits<T>::is_zero(v - one) ||
                            scalar_traits<T>::is_zero(v + one);
                if (!unit) throw Error(c.label + ": payoff entry outside {-1,0,1}");
                if (scalar_traits<T>::is_zero(c.P(i, j)) && !scalar_traits<T>::is_zero(v))
                    throw Error(c.label + ": payoff on an impossible transition");
            }
    }
}

}  // namespace parrondo
