#pragma once

// Model parameters and derived coin probabilities.
//
// The capital-dependent game B tosses one of three coins depending on the
// player's capital mod 3, with win probabilities
//   p0 = rho^2/(1+rho^2) - eps,   p1 = p2 = 1/(1+rho) - eps,
// the one-parameter family that makes game B asymptotically fair at eps = 0.

#include "parrondo/scalar.hpp"

namespace parrondo {

struct ModelParams {
    Rational rho{1, 3};
    Rational eps{0};
    int players = 2;  // N
    Mode mode = Mode::exact;

    void validate() const {
        if (rho <= 0) throw ValidationError("rho must be positive");
        if (eps < 0) throw ValidationError("eps must be nonnegative");
        if (players < 1) throw ValidationError("N must be at least 1");
    }
};

struct MixtureSpec {
    Rational gamma{1, 2};

    void validate() const {
        if (gamma < 0 || gamma > 1) throw ValidationError("gamma must lie in [0, 1]");
    }
};

struct PatternSpec {
    int r = 1;  // redistribution turns per period
    int s = 1;  // game-B turns per period

    void validate() const {
        if (r < 1 || s < 1) throw ValidationError("pattern requires r >= 1 and s >= 1");
    }
};

template <class T>
struct CoinProbs {
    T p0, p1, p2;
    T q0, q1, q2;

    const T& p(int residue) const { return residue == 0 ? p0 : (residue == 1 ? p1 : p2); }
    const T& q(int residue) const { return residue == 0 ? q0 : (residue == 1 ? q1 : q2); }
};

inline CoinProbs<Rational> derive_coin_probs(const ModelParams& params) {
    params.validate();
    const Rational& rho = params.rho;
    const Rational& eps = params.eps;
    CoinProbs<Rational> c;
    c.p0 = rho * rho / (1 + rho * rho) - eps;
    c.p1 = 1 / (1 + rho) - eps;
    c.p2 = c.p1;
    for (const Rational* p : {&c.p0, &c.p1, &c.p2}) {
        if (*p <= 0 || *p >= 1)
            throw ValidationError("coin probability outside (0,1); eps too large for this rho");
    }
    c.q0 = 1 - c.p0;
    c.q1 = 1 - c.p1;
    c.q2 = 1 - c.p2;
    return c;
}

template <class T>
CoinProbs<T> coin_probs_as(const CoinProbs<Rational>& c) {
    return {scalar_cast<T>(c.p0), scalar_cast<T>(c.p1), scalar_cast<T>(c.p2),
            scalar_cast<T>(c.q0), scalar_cast<T>(c.q1), scalar_cast<T>(c.q2)};
}

}  // namespace parrondo
