#include <doctest.h>

#include "parrondo/chains.hpp"
#include "parrondo/markov.hpp"

using namespace parrondo;

namespace {

CoinProbs<Rational> coins13() {
    ModelParams p;
    p.rho = Rational(1, 3);
    return derive_coin_probs(p);
}

CoinProbs<Rational> coins(const Rational& rho) {
    ModelParams p;
    p.rho = rho;
    return derive_coin_probs(p);
}

}  // namespace

TEST_CASE("full state indexing is a bijection with player 1 most significant") {
    for (int n = 1; n <= 4; ++n) {
        StateIndexFull ix(n);
        CHECK(ix.encode(std::vector<int>(static_cast<size_t>(n), 0)) == 0);
        for (long i = 0; i < ix.size(); ++i) CHECK(ix.encode(ix.decode(i)) == i);
    }
    StateIndexFull ix(2);
    CHECK(ix.encode({1, 2}) == 5);  // base-3 value of "12"
}

TEST_CASE("reduced state indexing is a bijection of the right size") {
    for (int n = 1; n <= 8; ++n) {
        StateIndexReduced ix(n);
        CHECK(ix.size() == (n + 1) * (n + 2) / 2);
        for (int i = 0; i < ix.size(); ++i) {
            auto [n0, n1, n2] = ix.decode(i);
            CHECK(n0 + n1 + n2 == n);
            CHECK(ix.encode(n0, n1) == i);
        }
    }
}

TEST_CASE("one-player game B matrix at rho = 1/3") {
    auto c = build_one_player_B<Rational>(coins13());
    validate_chain(c);
    Rational expect[3][3] = {{Rational(0), Rational(1, 10), Rational(9, 10)},
                             {Rational(1, 4), Rational(0), Rational(3, 4)},
                             {Rational(3, 4), Rational(1, 4), Rational(0)}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c.P(i, j) == expect[i][j]);
}

TEST_CASE("one-player game A and its payoff matrix") {
    auto c = build_one_player_A<Rational>();
    validate_chain(c);
    CHECK(c.P(0, 0) == Rational(0));
    CHECK(c.P(0, 1) == Rational(1, 2));
    CHECK(c.P(0, 2) == Rational(1, 2));
    CHECK((*c.W)(0, 0) == Rational(0));
    CHECK((*c.W)(0, 1) == Rational(1));
    CHECK((*c.W)(0, 2) == Rational(-1));
    // each row of P.W sums to zero: the fair coin has zero drift
    auto sums = row_sums(*c.Pw);
    for (const auto& s : sums) CHECK(s == Rational(0));
}

TEST_CASE("full game-B chain for two players") {
    auto c = build_full_B<Rational>(2, coins13());
    validate_chain(c);
    int nonzero = 0;
    Rational total(0);
    for (int j = 0; j < 9; ++j) {
        if (!c.P(0, j).is_zero()) {
            ++nonzero;
            total += c.P(0, j);
        }
    }
    CHECK(nonzero == 4);
    CHECK(total == Rational(1));
    // from (0,0), player 1 winning moves to (1,0) with p0/2
    CHECK(c.P(0, 3) == Rational(1, 10) / 2);
    CHECK((*c.W)(0, 3) == Rational(1));
}

TEST_CASE("full redistribution chain for two players") {
    auto c = build_full_Aprime<Rational>(2);
    validate_chain(c);
    // from (0,0): donor 1 -> (2,1) at index 7, donor 2 -> (1,2) at index 5
    CHECK(c.P(0, 7) == Rational(1, 2));
    CHECK(c.P(0, 5) == Rational(1, 2));
    CHECK(c.P.transpose() == c.P);
    // capital conserved: zero ensemble payoff
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) CHECK((*c.W)(i, j) == Rational(0));
}

TEST_CASE("redistribution chains are symmetric for more players") {
    auto c3 = build_full_Aprime<Rational>(3);
    CHECK(c3.P.transpose() == c3.P);
    validate_chain(c3);
}

TEST_CASE("mixture chain degenerates correctly and combines entries") {
    auto a = build_full_Aprime<Rational>(2);
    auto b = build_full_B<Rational>(2, coins13());
    auto m0 = build_mixture(a, b, Rational(0));
    CHECK(m0.P == b.P);
    auto m1 = build_mixture(a, b, Rational(1));
    CHECK(m1.P == a.P);
    auto mh = build_mixture(a, b, Rational(1, 2));
    validate_chain(mh);
    CHECK(mh.P(0, 3) == Rational(1, 2) * (Rational(1, 10) / 2));
    CHECK_THROWS_AS(build_mixture(a, build_one_player_A<Rational>(), Rational(1, 2)), ValidationError);
}

TEST_CASE("reduced redistribution chain from the all-zeros state") {
    for (int n : {2, 3, 5}) {
        auto c = build_reduced_Aprime<Rational>(n);
        validate_chain(c);
        StateIndexReduced ix(n);
        int from = ix.encode(n, 0);          // (N, 0, 0)
        int to = ix.encode(n - 2, 1);        // (N-2, 1, 1)
        CHECK(c.P(from, to) == Rational(1));
    }
}

TEST_CASE("reduced chains are stochastic with payoffs only on game-B rows") {
    for (int n : {2, 3, 4}) {
        auto a = build_reduced_Aprime<Rational>(n);
        auto b = build_reduced_B<Rational>(n, coins13());
        validate_chain(a);
        validate_chain(b);
        for (int i = 0; i < a.P.rows(); ++i)
            for (int j = 0; j < a.P.cols(); ++j) CHECK((*a.W)(i, j) == Rational(0));
    }
}

TEST_CASE("reduced stationary law is the aggregated full stationary law") {
    auto coins_q = coins13();
    auto full = build_full_mixture<Rational>(2, coins_q, Rational(1, 2));
    auto red = build_reduced<Rational>(2, coins_q, Rational(1, 2));
    auto pi_full = stationary(full.P);
    auto pi_red = stationary(red.P);
    StateIndexFull fx(2);
    StateIndexReduced rx(2);
    Vector<Rational> pushed(static_cast<size_t>(rx.size()), Rational(0));
    for (long x = 0; x < fx.size(); ++x) {
        auto d = fx.decode(x);
        int cnt[3] = {0, 0, 0};
        for (int v : d) ++cnt[v];
        pushed[static_cast<size_t>(rx.encode(cnt[0], cnt[1]))] += pi_full[static_cast<size_t>(x)];
    }
    for (int i = 0; i < rx.size(); ++i) CHECK(pushed[static_cast<size_t>(i)] == pi_red[static_cast<size_t>(i)]);
}

TEST_CASE("lumped one-player chains match their defining formulas") {
    auto c = coins13();
    auto a2 = build_lumped_one<Rational>(Rational(2), c, GameKind::a_prime);
    CHECK(a2.P == build_one_player_A<Rational>().P);
    auto b2 = build_lumped_one<Rational>(Rational(2), c, GameKind::b);
    auto pb1 = build_one_player_B<Rational>(c);
    Matrix<Rational> want = Rational(1, 2) * (pb1.P + Matrix<Rational>::identity(3));
    CHECK(b2.P == want);
    for (int n : {2, 3, 7}) {
        auto bn = build_lumped_one<Rational>(Rational(n), c, GameKind::b);
        validate_chain(bn);
        for (int i = 0; i < 3; ++i) CHECK(bn.P(i, i) == Rational(n - 1, n));
        // payoff-weighted matrices scale as 1/N
        CHECK(*bn.Pw == Rational(1, n) * *pb1.Pw);
        CHECK(*bn.Pww == Rational(1, n) * *pb1.Pww);
        auto an = build_lumped_one<Rational>(Rational(n), c, GameKind::a_prime);
        validate_chain(an);
        CHECK(*an.Pw == Rational(2, n) * *build_one_player_A<Rational>().Pw);
    }
}

TEST_CASE("lumped pair chains match their defining formulas") {
    auto c = coins13();
    auto a2 = build_lumped_pair<Rational>(Rational(2), c, GameKind::a_prime);
    // at N=2 only transfers between the two tracked players remain
    for (int i = 0; i < 9; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 9; ++j)
            if (!a2.P(i, j).is_zero()) {
                CHECK(a2.P(i, j) == Rational(1, 2));
                ++nonzero;
            }
        CHECK(nonzero == 2);
    }
    auto a3 = build_lumped_pair<Rational>(Rational(3), c, GameKind::a_prime);
    for (int i = 0; i < 9; ++i) CHECK(a3.P(i, i) == Rational(0));  // identity coefficient vanishes at N=3

    auto b2 = build_lumped_pair<Rational>(Rational(2), c, GameKind::b);
    CHECK(b2.P == build_full_B<Rational>(2, c).P);

    for (int n : {2, 3, 5}) {
        auto bn = build_lumped_pair<Rational>(Rational(n), c, GameKind::b);
        auto an = build_lumped_pair<Rational>(Rational(n), c, GameKind::a_prime);
        validate_chain(bn);
        validate_chain(an);
        // cross-payoff products: zero for game B, A0-only for redistribution
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) CHECK((*bn.Pw12)(i, j) == Rational(0));
        Matrix<Rational> a0 = detail::pair_transfer_both<Rational>();
        Matrix<Rational> expect = (Rational(2) / Rational(n * (n - 1))) * a0.hadamard(*an.W1).hadamard(*an.W2);
        CHECK(*an.Pw12 == expect);
    }
}

TEST_CASE("full chains project onto the lumped marginals") {
    auto c = coins(Rational(2, 5));
    for (int n : {2, 3}) {
        StateIndexFull ix(n);
        auto full_b = build_full_B<Rational>(n, c);
        auto lump_b = build_lumped_one<Rational>(Rational(n), c, GameKind::b);
        auto lump_pair_b = build_lumped_pair<Rational>(Rational(n), c, GameKind::b);
        GameChain<Rational> full_a, lump_a, lump_pair_a;
        bool have_a = n >= 2;
        full_a = build_full_Aprime<Rational>(n);
        lump_a = build_lumped_one<Rational>(Rational(n), c, GameKind::a_prime);
        lump_pair_a = build_lumped_pair<Rational>(Rational(n), c, GameKind::a_prime);
        (void)have_a;

        auto check_projection = [&](const GameChain<Rational>& full, const GameChain<Rational>& one,
                                    const GameChain<Rational>& pair) {
            for (long x = 0; x < ix.size(); ++x) {
                auto dx = ix.decode(x);
                // player 1 marginal
                Rational acc1[3] = {Rational(0), Rational(0), Rational(0)};
                // pair (1,2) marginal
                Matrix<Rational> acc2(1, 9);
                for (long y = 0; y < ix.size(); ++y) {
                    const Rational& p = full.P(static_cast<int>(x), static_cast<int>(y));
                    if (p.is_zero()) continue;
                    auto dy = ix.decode(y);
                    acc1[dy[0]] += p;
                    if (n >= 2) acc2(0, 3 * dy[0] + dy[1]) += p;
                }
                for (int t = 0; t < 3; ++t) CHECK(acc1[t] == one.P(dx[0], t));
                if (n >= 2)
                    for (int t = 0; t < 9; ++t) CHECK(acc2(0, t) == pair.P(3 * dx[0] + dx[1], t));
            }
        };
        check_projection(full_b, lump_b, lump_pair_b);
        check_projection(full_a, lump_a, lump_pair_a);
    }
}

TEST_CASE("transition laws are permutation symmetric") {
    auto c = coins13();
    for (int n : {2, 3}) {
        CHECK(check_permutation_symmetry(build_full_B<Rational>(n, c).P, n));
        CHECK(check_permutation_symmetry(build_full_mixture<Rational>(n, c, Rational(1, 2)).P, n));
    }
}

TEST_CASE("state-count guard refuses oversized chains") {
    auto c = coins13();
    CHECK_THROWS_AS(build_full_B<Rational>(9, c), ValidationError);
    CHECK_THROWS_AS(build_full_B<Rational>(3, c, 26), ValidationError);  // custom cap below 27
    CHECK_NOTHROW(build_full_B<Rational>(3, c, 27));
}

TEST_CASE("builders validate across a parameter grid") {
    for (const Rational& rho : {Rational(1, 3), Rational(2, 5), Rational(2)}) {
        auto c = coins(rho);
        for (int n : {2, 3}) {
            validate_chain(build_full_B<Rational>(n, c));
            validate_chain(build_full_Aprime<Rational>(n));
            validate_chain(build_full_mixture<Rational>(n, c, Rational(1, 4)));
            validate_chain(build_reduced<Rational>(n, c, Rational(1, 2)));
            validate_chain(build_lumped_one<Rational>(Rational(n), c, GameKind::b));
            validate_chain(build_lumped_pair<Rational>(Rational(n), c, GameKind::a_prime));
        }
    }
}
