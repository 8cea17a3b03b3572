#include <gtest/gtest.h>

#include <random>

#include "efg/metric.hpp"
#include "oracle.hpp"

using namespace efg;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
using Kind = MetricViolation::Kind;

}  // namespace

TEST(Metric, RoundsNeeded) {
    EXPECT_EQ((MetricViolation{Side::A, 0, 1, Kind::Less, 0}).rounds_needed(), 0);
    EXPECT_EQ((MetricViolation{Side::A, 0, 1, Kind::Less, 1}).rounds_needed(), 1);
    EXPECT_EQ((MetricViolation{Side::A, 0, 1, Kind::Less, 4}).rounds_needed(), 3);
    EXPECT_EQ((MetricViolation{Side::A, 0, 1, Kind::Equal, 1}).rounds_needed(), 0);
    EXPECT_EQ((MetricViolation{Side::A, 0, 1, Kind::Equal, 4}).rounds_needed(), 2);
    EXPECT_EQ((MetricViolation{Side::A, 0, 1, Kind::Equal, 5}).rounds_needed(), 3);
}

TEST(Metric, OneRoundHalvingMove) {
    const Configuration c{{q(9, 10), q(0)}, {q(6, 5), q(0)}};
    const MetricViolation v{Side::A, 0, 1, Kind::Less, 1};
    const auto s = spoiler_metric_strategy(c, 1, v);
    const auto m = s->choose(Play{c, {}}, 1);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->side, Side::A);
    EXPECT_EQ(m->point, q(-1, 10));
    GameSolver rules({}, {}, {1, 3, {}});
    for (const auto& r : rules.responses(c, 1, *m)) EXPECT_FALSE(rules.survives(c, *m, r)) << r.str();
    EXPECT_TRUE(spoiler_strategy_wins(rules, c, 1, *s));
}

TEST(Metric, ZeroRoundsNeedsNoMove) {
    const Configuration c{{q(1), q(0)}, {q(-1), q(0)}};
    const MetricViolation v{Side::B, 0, 1, Kind::Less, 0};
    const auto s = spoiler_metric_strategy(c, 0, v);
    EXPECT_FALSE(s->choose(Play{c, {}}, 0));
    GameSolver rules({}, {}, {0, 3, {}});
    EXPECT_TRUE(spoiler_strategy_wins(rules, c, 0, *s));
}

TEST(Metric, TwoRoundRecursion) {
    const Configuration c{{q(5, 2), q(0)}, {q(7, 2), q(0)}};
    const MetricViolation v{Side::A, 0, 1, Kind::Less, 3};
    const auto s = spoiler_metric_strategy(c, 2, v);
    EXPECT_EQ(s->choose(Play{c, {}}, 2)->point, q(1, 2));
    GameSolver rules({}, {}, {2, 3, {}});
    EXPECT_TRUE(spoiler_strategy_wins(rules, c, 2, *s));
    EXPECT_EQ(rules.winner(c, 2), Player::Spoiler);
    EXPECT_EQ(rules.winner(c, 1), Player::Duplicator);
}

TEST(Metric, PreconditionIsChecked) {
    const Configuration c{{q(5, 2), q(0)}, {q(7, 2), q(0)}};
    EXPECT_THROW(spoiler_metric_strategy(c, 1, {Side::A, 0, 1, Kind::Less, 3}), std::invalid_argument);
    EXPECT_THROW(spoiler_metric_strategy(c, 3, {Side::B, 0, 1, Kind::Less, 3}), std::invalid_argument);
    EXPECT_THROW(spoiler_metric_strategy({{q(0)}, {q(0)}}, 3, {}), std::invalid_argument);
}

TEST(Metric, RandomHalvingInstancesWinAgainstAllResponses) {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 3; ++n) {
        std::uniform_int_distribution<int> pt(-(4 << n), 4 << n);
        for (int t = 0; t < 6;) {
            const Configuration c{{Rational(pt(rng), 4), q(0)}, {Rational(pt(rng), 4), q(0)}};
            const auto vs = metric_violations(c);
            if (vs.empty() || vs.front().rounds_needed() != n) continue;
            ++t;
            GameSolver rules({}, {}, {n, 3, {}});
            EXPECT_TRUE(spoiler_strategy_wins(rules, c, n, *spoiler_metric_strategy(c, n, vs.front())));
            // the bound is tight for the solver on these instances
            EXPECT_EQ(rules.winner(c, n - 1), Player::Duplicator) << vs.front().str();
        }
    }
}

TEST(Metric, NonEquivalentSpoiler) {
    EXPECT_TRUE(check_nonequiv_spoiler({}, {}, {{q(0), q(3, 2), q(2)}, {q(0), q(5, 2), q(3)}}, 2));
    EXPECT_THROW(check_nonequiv_spoiler({}, {}, {{q(0), q(1)}, {q(0), q(1)}}, 2), std::invalid_argument);
    EXPECT_THROW(check_nonequiv_spoiler({}, {}, {{q(0), q(1), q(2)}, {q(0), q(1), q(2)}}, 2),
                 std::invalid_argument);
    EXPECT_THROW(check_nonequiv_spoiler({}, {}, {{q(0), q(5), q(5)}, {q(0), q(6), q(6)}}, 2),
                 std::invalid_argument);
}

TEST(Metric, NonEquivalentBoundaryCaseNeedsAnExtraRound) {
    // u is not equivalent to v and diam(u) <= 1, but this is a partial isomorphism
    const Configuration c{{q(0), q(1, 2), q(1, 4)}, {q(0), q(3, 2), q(1, 4)}};
    EXPECT_FALSE(check_nonequiv_spoiler({}, {}, c, 0));
    GameSolver s({}, {}, {1, 3, {}});
    EXPECT_EQ(s.winner(c, 1), Player::Spoiler);
}

TEST(Metric, LocalToThreePebble) {
    const Signal a({{"P", {Interval{q(0), q(1)}}}});
    const auto r = check_local_to_3pebble(a, {}, {{q(1, 2)}, {q(1, 2)}}, 0, 0);
    EXPECT_EQ(r.antecedent, true);
    EXPECT_EQ(r.consequent, true);
    const auto same = check_local_to_3pebble(a, a, {{q(1, 2)}, {q(1, 2)}}, 1, 2);
    EXPECT_EQ(same.antecedent, false);
    EXPECT_TRUE(same.holds());
    EXPECT_THROW(check_local_to_3pebble(a, a, {{q(0), q(3)}, {q(0), q(3)}}, 1, 1), std::invalid_argument);
}
