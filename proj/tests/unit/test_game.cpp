#include <gtest/gtest.h>

#include <random>

#include "efg/config.hpp"
#include "efg/solver.hpp"
#include "oracle.hpp"

using namespace efg;

namespace {

Signal interval_signal(Rational lo, Rational hi) { return Signal({{"P", {Interval{lo, hi}}}}); }
Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
GameSpec spec(int rounds, std::optional<int> pebbles = {}, std::optional<Rational> locality = {}) {
    return {rounds, pebbles, locality};
}

}  // namespace

TEST(Config, Frac) {
    EXPECT_EQ(frac(q(5, 2)), q(1, 2));
    EXPECT_EQ(frac(q(-1, 4)), q(3, 4));
    EXPECT_EQ(frac(q(3)), q(0));
}

TEST(Config, Diameter) {
    EXPECT_EQ(diameter({}), q(0));
    EXPECT_EQ(diameter({q(3)}), q(0));
    EXPECT_EQ(diameter({q(1), q(-2), q(1, 2)}), q(3));
}

TEST(Config, EquivDiffExamples) {
    EXPECT_TRUE(equiv_diff({q(0), q(1, 2)}, {q(0), q(7, 10)}));
    EXPECT_FALSE(equiv_diff({q(0), q(3, 2)}, {q(0), q(5, 2)}));
    EXPECT_THROW(equiv_diff({q(0)}, {q(0), q(1)}), std::invalid_argument);
}

TEST(Config, EquivDiffFullFloorTable) {
    const Assignment u{q(0), q(3, 10), q(7, 5)}, v{q(0), q(3, 5), q(17, 10)};
    // floor table written out by hand, independent of the library
    const int expected[3][3] = {{0, -1, -2}, {0, 0, -2}, {1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            EXPECT_EQ((u[i] - u[j]).floor(), expected[i][j]);
            EXPECT_EQ((v[i] - v[j]).floor(), expected[i][j]);
        }
    EXPECT_TRUE(equiv_diff(u, v));
    EXPECT_TRUE(equiv_diff_definitional(u, v, 4));
}

TEST(Config, EquivDiffAgreesWithDefinition) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-40, 40), len(1, 4);
    for (int t = 0; t < 300; ++t) {
        Assignment u, v;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            u.emplace_back(num(rng), 8);
            v.emplace_back(num(rng), 8);
        }
        if (t % 3 == 0) v = u;
        EXPECT_EQ(equiv_diff(u, v), equiv_diff_definitional(u, v, 12));
    }
}

TEST(Config, FracOrder) {
    const Assignment u{q(1, 5), q(3, 2), q(9, 10)};
    const std::vector<std::vector<std::size_t>> expected{{0}, {1}, {2}};
    EXPECT_EQ(frac_order(u, 0), expected);
    EXPECT_EQ(frac_order({q(0), q(1), q(1, 2)}, 0).front(), (std::vector<std::size_t>{0, 1}));
    const Assignment a{q(0), q(3, 10), q(7, 5)}, b{q(0), q(3, 5), q(17, 10)};
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(frac_order(a, k), frac_order(b, k));
        EXPECT_EQ(frac_order(a, k).front().front(), k);
    }
}

TEST(Config, IsIncreasing) {
    EXPECT_TRUE(is_increasing({q(1, 5), q(3, 2), q(9, 10)}));
    EXPECT_FALSE(is_increasing({q(1, 5), q(9, 10), q(3, 2)}));
    EXPECT_TRUE(is_increasing({q(7, 3)}));
    EXPECT_TRUE(is_increasing({q(3, 2), q(9, 10), q(1, 5)}));
    EXPECT_TRUE(is_increasing({q(9, 10), q(1, 5), q(3, 2)}));
    EXPECT_THROW(is_increasing({}), std::invalid_argument);
}

TEST(Config, PartialIsomorphism) {
    const Signal none;
    EXPECT_FALSE(partial_isomorphism({{q(0), q(1)}, {q(0), q(2)}}, none, none));
    EXPECT_TRUE(partial_isomorphism({{q(0), q(1, 2)}, {q(0), q(7, 10)}}, none, none));
    const Signal p = interval_signal(0, 1);
    EXPECT_FALSE(partial_isomorphism({{q(1, 2)}, {q(3, 2)}}, p, p));
    EXPECT_TRUE(partial_isomorphism({{q(1, 2)}, {q(1, 4)}}, p, p));
}

TEST(Solver, SpecExamples) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    EXPECT_EQ(solve(a, b, {}, spec(1, 3)).winner, Player::Duplicator);
    EXPECT_EQ(solve(a, b, {}, spec(2, 3)).winner, Player::Spoiler);
    EXPECT_EQ(solve(a, a, {}, spec(2, 3)).winner, Player::Duplicator);
    EXPECT_EQ(solve(b, b, {{q(1, 2)}, {q(1, 2)}}, spec(2)).winner, Player::Duplicator);
}

namespace {

// Whether Spoiler playing `first` then `second` (both fresh, in B) wins against every response.
bool line_wins(GameSolver& s, const Rational& first, const Rational& second) {
    const Configuration c;
    const Move m1{Side::B, 0, first};
    for (const auto& r : s.responses(c, 2, m1)) {
        if (!s.survives(c, m1, r)) continue;
        const Configuration c1 = apply_round(c, m1, r);
        const Move m2{Side::B, 1, second};
        for (const auto& r2 : s.responses(c1, 1, m2))
            if (s.survives(c1, m2, r2)) return false;
    }
    return true;
}

}  // namespace

TEST(Solver, SuccessorPairDecidesTheTwoRoundGame) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    GameSolver s(a, b, spec(2, 3));
    // 1 and f^-1(1) = 0 are both in P only in B
    EXPECT_TRUE(line_wins(s, q(1), q(0)));
    // 0 and 3/2 are unrelated by any atom, so A answers with 0 and 1/2
    EXPECT_FALSE(line_wins(s, q(0), q(3, 2)));
}

TEST(Solver, PreconditionsAreChecked) {
    const Signal a = interval_signal(0, 1);
    EXPECT_THROW(solve(a, a, {{q(0), q(1)}, {q(0), q(1)}}, spec(1, 1)), std::invalid_argument);
    EXPECT_THROW(solve(a, a, {{q(0), q(3)}, {q(0), q(3)}}, spec(1, {}, q(2))), std::invalid_argument);
    EXPECT_THROW(solve(a, a, {{q(0)}, {}}, spec(1)), std::invalid_argument);
}

TEST(Solver, ZeroRoundsIsPartialIsomorphism) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    EXPECT_EQ(solve(a, b, {{q(3, 2)}, {q(3, 2)}}, spec(0)).winner, Player::Spoiler);
    EXPECT_EQ(solve(a, b, {{q(1, 2)}, {q(3, 2)}}, spec(0)).winner, Player::Duplicator);
}

TEST(Solver, PebbleBounds) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    // one pebble only sees predicate values
    EXPECT_EQ(solve(a, b, {}, spec(4, 1)).winner, Player::Duplicator);
    // two pebbles see y = f(x) with both ends in P
    EXPECT_EQ(solve(a, b, {}, spec(2, 2)).winner, Player::Spoiler);
}

TEST(Solver, LocalityBoundsWhatSpoilerCanMeasure) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    EXPECT_EQ(solve(a, b, {}, spec(2, {}, q(1, 4))).winner, Player::Duplicator);
    // walking a reused pebble two steps of 1/4 covers the same 1/2-neighbourhood
    EXPECT_EQ(solve(a, b, {}, spec(3, {}, q(1, 4))).winner, Player::Spoiler);
    // B has a point whose closed 1/2-neighbourhood lies in P; the half-open [0, 1) in A has none
    EXPECT_EQ(solve(a, b, {}, spec(3, {}, q(1, 2))).winner, Player::Spoiler);
    EXPECT_EQ(solve(a, b, {}, spec(2, {}, q(1))).winner, Player::Spoiler);
}

TEST(Solver, AgreesWithNaiveGridGame) {
    std::mt19937_64 rng(11);
    int spoiler = 0;
    for (int t = 0; t < 30; ++t) {
        const Signal a = oracle::random_signal(rng, 1, 2, 2), b = oracle::random_signal(rng, 1, 2, 2);
        const int rounds = 1 + t % 2;
        oracle::GridGame naive(a, b, FunctionSpec::successor(), oracle::grid(-5, 5, 4), 3);
        const bool expected = naive.spoiler_wins({}, {}, rounds);
        const Player got = solve(a, b, {}, spec(rounds, 3)).winner;
        EXPECT_EQ(got == Player::Spoiler, expected) << t;
        spoiler += expected;
    }
    EXPECT_GT(spoiler, 3);
    EXPECT_LT(spoiler, 27);
}

TEST(Solver, SymmetryAndMonotonicity) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        const Signal a = oracle::random_signal(rng, 2, 2, 2), b = oracle::random_signal(rng, 2, 2, 2);
        const Configuration c{{q(0)}, {q(0)}}, swapped{c.right, c.left};
        const Player w = solve(a, b, c, spec(2, 3)).winner;
        EXPECT_EQ(solve(b, a, swapped, spec(2, 3)).winner, w);
        if (w == Player::Spoiler) {
            EXPECT_EQ(solve(a, b, c, spec(3, 3)).winner, Player::Spoiler);
            EXPECT_EQ(solve(a, b, c, spec(2, 4)).winner, Player::Spoiler);
        } else {
            EXPECT_EQ(solve(a, b, c, spec(1, 3)).winner, Player::Duplicator);
            EXPECT_EQ(solve(a, b, c, spec(2, 2)).winner, Player::Duplicator);
        }
    }
}

TEST(Solver, ReturnedStrategiesReplayToTheWinner) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 15; ++t) {
        const Signal a = oracle::random_signal(rng, 2, 2, 2), b = oracle::random_signal(rng, 2, 2, 2);
        const auto r = solve(a, b, {}, spec(2, 3));
        if (r.winner == Player::Spoiler)
            EXPECT_TRUE(spoiler_strategy_wins(*r.solver, {}, 2, *r.spoiler));
        else
            EXPECT_TRUE(duplicator_strategy_survives(*r.solver, {}, 2, *r.duplicator));
    }
}

TEST(Solver, WinningMoveIsLexicographicallySmallest) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    GameSolver s(a, b, spec(2, 3));
    const auto m = s.winning_move({}, 2);
    ASSERT_TRUE(m);
    for (const auto& other : s.spoiler_moves({}, 2)) {
        if (other == *m) break;
        EXPECT_EQ(s.winner(apply_round({}, other, other.point), 1), s.winner({}, 2) == Player::Spoiler
                                                                        ? s.winner(apply_round({}, other, other.point), 1)
                                                                        : Player::Duplicator);
    }
}

TEST(Solver, ReportJson) {
    const Signal a = interval_signal(0, 1), b = interval_signal(0, 2);
    const GameSpec g = spec(2, 3);
    const json j = solve_report(solve(a, b, {}, g), g);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["winner"], "Spoiler");
    EXPECT_EQ(j["pebbles"], 3);
    EXPECT_TRUE(j["locality"].is_null());
    EXPECT_GT(j["candidate_set_size"].get<int>(), 0);
    EXPECT_FALSE(j["principal_variation"].empty());
    const Configuration c{{q(1, 2), q(-3)}, {q(2), q(7, 4)}};
    EXPECT_EQ(configuration_from_json(configuration_to_json(c)), c);
}

TEST(Config, CanonicalDifferenceTypeSeparatesExactlyTheEquivalenceClasses) {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> num(-24, 24), len(1, 4);
    int same = 0;
    for (int t = 0; t < 400; ++t) {
        Assignment u, v;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            u.emplace_back(num(rng), 4);
            v.emplace_back(num(rng), 4);
        }
        if (t % 4 == 0)
            for (auto& x : v = u) x += Rational(num(rng), 4);
        if (t % 4 == 1) v = u, v.back() += Rational(1, 8);
        const Assignment cu = canonical_difference_type(u, 1);
        EXPECT_TRUE(equiv_diff_definitional(u, cu, 16));
        const bool expected = equiv_diff_definitional(u, v, 16);
        EXPECT_EQ(cu == canonical_difference_type(v, 1), expected);
        same += expected;
    }
    EXPECT_GT(same, 50);
    EXPECT_EQ(canonical_difference_type({q(5), q(1, 2), q(-2)}, 0), (Assignment{q(2), q(1), q(0)}));
    EXPECT_EQ(canonical_difference_type({q(0), q(3, 2)}, 2), (Assignment{q(0), q(1)}));
}
