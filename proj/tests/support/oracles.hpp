#pragma once

// Brute-force oracles for the CLT parameters, independent of the
// stationary/fundamental-matrix machinery: evolve unnormalized moments
// E[.; X_n = x] by forward recursion and read slopes off finite horizons.
// Var(S_n) = n sigma^2 + c + o(1), so consecutive differences converge
// geometrically to sigma^2.

#include "parrondo/chains.hpp"
#include "parrondo/matrix.hpp"

#include <vector>

namespace parrondo::testing {

template <class T>
Vector<T> operator*(const T& s, Vector<T> v) {
    for (auto& x : v) x *= s;
    return v;
}

template <class T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class T>
struct MomentState {
    Vector<T> prob;  // P(X_n = x)
    Vector<T> m1;    // E[S_n ; X_n = x]
    Vector<T> m2;    // E[S_n^2 ; X_n = x]

    explicit MomentState(const Vector<T>& initial)
        : prob(initial),
          m1(initial.size(), scalar_traits<T>::zero()),
          m2(initial.size(), scalar_traits<T>::zero()) {}

    void step(const GameChain<T>& chain) {
        Vector<T> p = prob * chain.P;
        Vector<T> a = m1 * chain.P + prob * *chain.Pw;
        Vector<T> b = m2 * chain.P + T(2) * (m1 * *chain.Pw) + prob * *chain.Pww;
        prob = std::move(p);
        m1 = std::move(a);
        m2 = std::move(b);
    }

    T mean() const { return sum(m1); }
    T variance() const { return sum(m2) - sum(m1) * sum(m1); }
};

// Joint moments of two additive payoffs (tracked pair).
template <class T>
struct PairMomentState {
    Vector<T> prob, m1, m2, cross;  // E[S1;x], E[S2;x], E[S1 S2;x]

    explicit PairMomentState(const Vector<T>& initial)
        : prob(initial),
          m1(initial.size(), scalar_traits<T>::zero()),
          m2(initial.size(), scalar_traits<T>::zero()),
          cross(initial.size(), scalar_traits<T>::zero()) {}

    void step(const GameChain<T>& chain) {
        Vector<T> p = prob * chain.P;
        Vector<T> a = m1 * chain.P + prob * *chain.Pw1;
        Vector<T> b = m2 * chain.P + prob * *chain.Pw2;
        Vector<T> c = cross * chain.P + m1 * *chain.Pw2 + m2 * *chain.Pw1 + prob * *chain.Pw12;
        prob = std::move(p);
        m1 = std::move(a);
        m2 = std::move(b);
        cross = std::move(c);
    }

    T covariance() const { return sum(cross) - sum(m1) * sum(m2); }
};

// Per-turn variance slope of a homogeneous chain: Var(S_{n}) - Var(S_{n-1})
// at horizon n.
inline double oracle_variance_slope(const GameChain<double>& chain, const Vector<double>& initial, int horizon) {
    MomentState<double> st(initial);
    for (int k = 0; k < horizon - 1; ++k) st.step(chain);
    double before = st.variance();
    st.step(chain);
    return st.variance() - before;
}

inline double oracle_mean_slope(const GameChain<double>& chain, const Vector<double>& initial, int horizon) {
    MomentState<double> st(initial);
    for (int k = 0; k < horizon - 1; ++k) st.step(chain);
    double before = st.mean();
    st.step(chain);
    return st.mean() - before;
}

inline double oracle_covariance_slope(const GameChain<double>& chain, const Vector<double>& initial, int horizon) {
    PairMomentState<double> st(initial);
    for (int k = 0; k < horizon - 1; ++k) st.step(chain);
    double before = st.covariance();
    st.step(chain);
    return st.covariance() - before;
}

// Periodic schedule: per-period slope divided by the period length.
inline double oracle_pattern_variance_slope(const GameChain<double>& a, const GameChain<double>& b, int r, int s,
                                            const Vector<double>& initial, int periods) {
    MomentState<double> st(initial);
    auto period = [&] {
        for (int i = 0; i < r; ++i) st.step(a);
        for (int i = 0; i < s; ++i) st.step(b);
    };
    for (int k = 0; k < periods - 1; ++k) period();
    double before = st.variance();
    period();
    return (st.variance() - before) / (r + s);
}

inline double oracle_pattern_mean_slope(const GameChain<double>& a, const GameChain<double>& b, int r, int s,
                                        const Vector<double>& initial, int periods) {
    MomentState<double> st(initial);
    auto period = [&] {
        for (int i = 0; i < r; ++i) st.step(a);
        for (int i = 0; i < s; ++i) st.step(b);
    };
    for (int k = 0; k < periods - 1; ++k) period();
    double before = st.mean();
    period();
    return (st.mean() - before) / (r + s);
}

inline double oracle_pattern_covariance_slope(const GameChain<double>& a, const GameChain<double>& b, int r, int s,
                                              const Vector<double>& initial, int periods) {
    PairMomentState<double> st(initial);
    auto period = [&] {
        for (int i = 0; i < r; ++i) st.step(a);
        for (int i = 0; i < s; ++i) st.step(b);
    };
    for (int k = 0; k < periods - 1; ++k) period();
    double before = st.covariance();
    period();
    return (st.covariance() - before) / (r + s);
}

}  // namespace parrondo::testing
