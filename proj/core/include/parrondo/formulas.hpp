#pragma once

// Closed-form evaluators for the displayed quantities of the model: mixture
// and pattern means, game-B variance, the rho = 1/3 variance formulas in N,
// their N -> infinity limits, and the per-turn slopes of the expected sample
// variance of the players' capitals.  Each formula is transcribed once and
// cross-checked against the matrix engine by the test and verify suites.

#include "parrondo/scalar.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace parrondo::formulas {

template <class T>
T horner(const std::vector<long long>& ascending, const T& x) {
    T acc(0);
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * x + T(*it);
    return acc;
}

// Mean profit per turn for the random mixture gamma A' + (1-gamma) B.
// Does not depend on N.
template <class T>
T mu_mixture(const T& gamma, const T& rho) {
    T g = gamma, r = rho;
    T c = T(1) + r + r * r;
    T num = T(3) * g * (T(1) - g) * (T(1) - r) * (T(1) - r) * (T(1) - r) * (T(1) + r);
    T den = T(2) * c * c + g * horner<T>({5, 10, 6, 10, 5}, r) + T(2) * g * g * c * c;
    return num / den;
}

template <class T>
T mu_mixture_half(const T& rho) {
    T r = rho;
    T num = T(3) * (T(1) - r) * (T(1) - r) * (T(1) - r) * (T(1) + r);
    return num / (T(2) * horner<T>({10, 20, 21, 20, 10}, r));
}

// gamma = 1/2 mixture mean with the bias parameter restored.
template <class T>
T mu_mixture_biased_half(const T& rho, const T& eps) {
    T r = rho, e = eps;
    T cube = (T(1) - r) * (T(1) - r) * (T(1) - r) * (T(1) + r);
    T sq = (T(1) + r) * (T(1) + r) * (T(1) + r * r);
    T num = T(3) * (T(2) * cube - e * horner<T>({13, 26, 30, 26, 13}, r) + e * e * cube - T(2) * e * e * e * sq);
    T den = T(2) * (T(2) * horner<T>({10, 20, 21, 20, 10}, r) - e * cube + T(3) * e * e * sq);
    return num / den;
}

// Ensemble variance per turn for game B alone; independent of N.
template <class T>
T sigma2_B(const T& rho) {
    T v = T(3) * rho / (T(1) + rho + rho * rho);
    return v * v;
}

// Ensemble variance per turn for the gamma = 1/2 mixture at rho = 1/3, as a
// rational function of the number of players.
inline Rational sigma2_mixture_half_rho13(const Rational& n) {
    Rational num = Rational(27) * horner<Rational>({-36821493886409LL, 71724260647553LL, -46282959184439LL, 9902542819695LL}, n);
    Rational den = Rational(8331019058LL) * horner<Rational>({-269171, 524347, -338381, 72405}, n);
    return num / den;
}

inline Rational sigma2_mixture_half_rho13_limit() {
    // ratio of the leading coefficients in N
    return Rational(27) * Rational(9902542819695LL) / (Rational(8331019058LL) * Rational(72405));
}

// Limit of N * (sigma^(1,N))^2 for the mixture: the coefficient of 1/N in
// the per-player variance.
template <class T>
T sigma2_one_player_asymptotic(const T& gamma, const T& rho) {
    T g = gamma, r = rho;
    T c = T(1) + r + r * r;
    T c2 = c * c;
    auto gpow = [&](int k) {
        T v(1);
        for (int i = 0; i < k; ++i) v = v * g;
        return v;
    };
    T num = T(9) * (T(8) * (T(1) + gpow(7)) * r * r * c2 * c2 +
                    T(4) * (g + gpow(6)) * c2 * horner<T>({1, 2, 1, 2, 1}, r) * horner<T>({1, 2, 12, 2, 1}, r) +
                    T(6) * (gpow(2) + gpow(5)) * c2 * horner<T>({3, 20, 30, 40, 66, 40, 30, 20, 3}, r) +
                    (gpow(3) + gpow(4)) *
                        horner<T>({59, 306, 864, 1738, 2781, 3636, 3912, 3636, 2781, 1738, 864, 306, 59}, r));
    T d = T(2) * (T(1) + g * g) * c2 + g * horner<T>({5, 10, 6, 10, 5}, r);
    return num / (d * d * d);
}

// ---------------------------------------------------------------------------
// Pattern means.

// N -> infinity mean of the pattern (A')^r B^s; equals the mixture mean at
// gamma = r/(r+s).
template <class T>
T pattern_mean_limit(long long r_count, long long s_count, const T& rho) {
    T r = rho;
    T rr = T(r_count), ss = T(s_count);
    T cube = (T(1) - r) * (T(1) - r) * (T(1) - r) * (T(1) + r);
    T sq = (T(1) + r) * (T(1) + r) * (T(1) + r * r);
    T c = T(1) + r + r * r;
    T den = T(9) * rr * rr * sq + T(9) * rr * ss * sq + T(2) * ss * ss * c * c;
    return T(3) * rr * ss * cube / den;
}

// Explicit rational displays for the two smallest patterns.
template <class T>
T mu_pattern11(const T& n, const T& rho) {
    T r = rho;
    T c = T(1) + r + r * r;
    T num = T(3) * n * (T(2) * n - T(3)) * (T(1) - r) * (T(1) - r) * (T(1) - r) * (T(1) + r);
    T den = T(2) * (T(18) * c * c - T(3) * n * horner<T>({13, 26, 30, 26, 13}, r) +
                    T(2) * n * n * horner<T>({10, 20, 21, 20, 10}, r));
    return num / den;
}

template <class T>
T mu_pattern12(const T& n, const T& rho) {
    T r = rho;
    T c = T(1) + r + r * r;
    T sq = (T(1) + r) * (T(1) + r) * (T(1) + r * r);
    T onep2 = (T(1) + r) * (T(1) + r);
    T num = T(2) * n * (T(1) - r) * (T(1) - r) * (T(1) - r) * (T(1) + r) *
            (T(-3) * c * c + n * horner<T>({10, 20, 21, 20, 10}, r) - T(9) * n * n * sq + T(3) * n * n * n * sq);
    T den = T(36) * c * c * c * c - T(12) * n * c * c * horner<T>({11, 22, 24, 22, 11}, r) +
            n * n * horner<T>({193, 772, 1660, 2548, 2938, 2548, 1660, 772, 193}, r) -
            T(3) * n * n * n * onep2 * horner<T>({43, 86, 145, 172, 145, 86, 43}, r) +
            n * n * n * n * onep2 * horner<T>({35, 70, 113, 140, 113, 70, 35}, r);
    return num / den;
}

// Spectral ingredients of the E/D mean formula (floating point; S is
// irrational for generic rho).
struct PatternEigen {
    double S, e1o, e2o;
};

inline PatternEigen pattern_eigen(double rho) {
    PatternEigen e;
    e.S = std::sqrt((1 + rho * rho) * (1 + 4 * rho + rho * rho));
    double spread = (1 - rho) * e.S / (2 * (1 + rho) * (1 + rho * rho));
    e.e1o = -0.5 + spread;
    e.e2o = -0.5 - spread;
    return e;
}

namespace detail {

// Shared E/D evaluation once a_r and the block eigenvalues are fixed.
inline double pattern_mean_ed(int r, int s, double rho, double a_r, double e1, double e2) {
    auto eg = pattern_eigen(rho);
    double e1s = std::pow(e1, s), e2s = std::pow(e2, s);
    double mid = (2 + (3 * a_r - 1) * (e1s + e2s - 2 * e1s * e2s) - (e1s + e2s)) * (1 - rho) * (1 + rho) * eg.S +
                 a_r * (e2s - e1s) * (5 * (1 + rho) * (1 + rho) * (1 + rho * rho) - 4 * rho * rho);
    double E = 3 * a_r * mid * (1 - rho) * (1 - rho);
    double c = 1 + rho + rho * rho;
    double D = 4 * (r + s) * (1 + (3 * a_r - 1) * e1s) * (1 + (3 * a_r - 1) * e2s) * c * c * eg.S;
    return E / D;
}

}  // namespace detail

// Ensemble pattern mean N * E_{r,s} / D_{r,s} with the N-player marginal
// substitutions a_r = [1-(1-3/N)^r]/3 and e_k = 1 - (1-e_k°)/N.
inline double pattern_mean_closed(int r, int s, int n, double rho) {
    auto eg = pattern_eigen(rho);
    double a_r = (1 - std::pow(1.0 - 3.0 / n, r)) / 3;
    double e1 = 1 - (1 - eg.e1o) / n;
    double e2 = 1 - (1 - eg.e2o) / n;
    return n * detail::pattern_mean_ed(r, s, rho, a_r, e1, e2);
}

// Denominator of the mean formula under the same substitutions; positive for
// every admissible input.
inline double pattern_denominator(int r, int s, int n, double rho) {
    auto eg = pattern_eigen(rho);
    double a_r = (1 - std::pow(1.0 - 3.0 / n, r)) / 3;
    double e1s = std::pow(1 - (1 - eg.e1o) / n, s);
    double e2s = std::pow(1 - (1 - eg.e2o) / n, s);
    double c = 1 + rho + rho * rho;
    return 4 * (r + s) * (1 + (3 * a_r - 1) * e1s) * (1 + (3 * a_r - 1) * e2s) * c * c * eg.S;
}

// The original one-player games: a_r = (1-(-1/2)^r)/3 and the bare
// eigenvalues of game B.
inline double pattern_mean_closed_one_player(int r, int s, double rho) {
    auto eg = pattern_eigen(rho);
    double a_r = (1 - std::pow(-0.5, r)) / 3;
    return detail::pattern_mean_ed(r, s, rho, a_r, eg.e1o, eg.e2o);
}

// Ensemble variance per turn for the pattern [1,1] at rho = 1/3; rational
// in the number of players.
inline Rational sigma2_pattern11_rho13(const Rational& n) {
    Rational num = Rational(9) * horner<Rational>({615639408424560LL, -6408926620214040LL, 29541545957894139LL,
                                                   -80214814200037491LL, 143582273075781927LL, -179192557802543130LL,
                                                   160434481099881996LL, -104152159483211664LL, 48799091685478468LL,
                                                   -16137521956595246LL, 3584898779152593LL, -481633399018397LL,
                                                   29679648590925LL},
                                                  n);
    Rational cubic = horner<Rational>({1521, -3174, 1609}, n);
    Rational den = Rational(2) * cubic * cubic * cubic *
                   horner<Rational>({3285360, -9816120, 12525387, -8725589, 3501928, -768851, 72405}, n);
    return num / den;
}

inline Rational sigma2_pattern11_rho13_limit() {
    Rational lead_cubic = Rational(1609) * 1609 * 1609;
    return Rational(9) * Rational(29679648590925LL) / (Rational(2) * lead_cubic * Rational(72405));
}

// ---------------------------------------------------------------------------
// Per-turn slopes of the expected unbiased sample variance of the players'
// capitals, (sigma^(1,N))^2 - sigma^([1,2],N).

enum class SlopeKind { a_prime, b, mixture_half };

template <class T>
T sample_variance_slope_B(const T& rho, const T& n) {
    return sigma2_B(rho) / n;
}

template <class T>
T sample_variance_slope_Aprime(const T& n) {
    return T(2) / (n - T(1));
}

// Large-N asymptote for the gamma = 1/2 mixture (exact coefficient of 1/N).
template <class T>
T sample_variance_slope_mixture_half(const T& rho, const T& n) {
    T r = rho;
    T num = T(27) * horner<T>({97, 606, 1926, 4262, 7284, 9894, 10911, 9894, 7284, 4262, 1926, 606, 97}, r);
    T q = horner<T>({10, 20, 21, 20, 10}, r);
    return num / (T(2) * n * q * q * q);
}

template <class T>
T sample_variance_slope(SlopeKind kind, const T& rho, const T& n) {
    switch (kind) {
        case SlopeKind::a_prime: return sample_variance_slope_Aprime<T>(n);
        case SlopeKind::b: return sample_variance_slope_B<T>(rho, n);
        case SlopeKind::mixture_half: return sample_variance_slope_mixture_half<T>(rho, n);
    }
    throw Error("unknown slope kind");
}

// ---------------------------------------------------------------------------
// Explicit stationary distributions.

// Stationary law of the one-player game-B chain.
template <class T>
std::vector<T> pi_B1(const T& rho) {
    T d = T(2) * (T(1) + rho + rho * rho);
    return {(T(1) + rho * rho) / d, rho * (T(1) + rho) / d, (T(1) + rho) / d};
}

// Stationary law of the two-player gamma = 1/2 mixture chain, indexed by
// (capital_1 mod 3, capital_2 mod 3) as 3i+j.
template <class T>
std::vector<T> pi_mixture2_half(const T& rho) {
    T r = rho;
    T d = T(2) * horner<T>({13, -2, 13}, r) * horner<T>({10, 20, 21, 20, 10}, r);
    T one_r2 = T(1) + r * r, one_r = T(1) + r;
    T e00 = one_r2 * horner<T>({31, 47, 60, 47, 31}, r) / d;
    T e01 = T(2) * one_r * one_r2 * horner<T>({11, 15, 9, 19}, r) / d;
    T e02 = T(2) * one_r * one_r2 * horner<T>({19, 9, 15, 11}, r) / d;
    T e11 = one_r * horner<T>({19, 21, 48, 59, 27, 42}, r) / d;
    T e12 = T(6) * one_r * one_r * one_r2 * horner<T>({4, 1, 4}, r) / d;
    T e22 = one_r * horner<T>({42, 27, 59, 48, 21, 19}, r) / d;
    return {e00, e01, e02, e01, e11, e12, e02, e12, e22};
}

}  // namespace parrondo::formulas
