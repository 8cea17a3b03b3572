#include <gtest/gtest.h>

#include "efg/compose.hpp"

using namespace efg;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Signal ps(std::vector<Interval> ivs) { return Signal({{"P", std::move(ivs)}}); }

DuplicatorPtr solver_side(const Signal& a, const Signal& b, GameSpec spec) {
    return solver_duplicator(std::make_shared<GameSolver>(a, b, spec));
}

// A: P = [0,1/2) u [20,21), B: P = [0,1/2) u [21,22); u = (0,1,9), v = (0,1,10).
struct FarInterval {
    Signal a = ps({{q(0), q(1, 2)}, {q(20), q(21)}});
    Signal b = ps({{q(0), q(1, 2)}, {q(21), q(22)}});
    Configuration c{{q(0), q(1), q(9)}, {q(0), q(1), q(10)}};

    std::shared_ptr<ComposedDuplicator> composed(int n) const {
        const Decomposition d = decompose(c, n);
        const Rational locality = diameter(d.middle(c.left)) + pow2(n + 1);
        const auto t = mirror_certificate(a, b, d.middle(c), locality);
        if (!t) return nullptr;
        return std::make_shared<ComposedDuplicator>(solver_side(a, b, {n, {}, {}}), std::make_shared<MirrorStrategy>(*t),
                                                    solver_side(a, b, {n, {}, {}}), c, d, n, locality);
    }
};

}  // namespace

TEST(Decompose, CaseAnalysis) {
    const auto same = [](Assignment u) { return Configuration{u, u}; };
    EXPECT_EQ(decompose(same({q(0), q(1, 2), q(6, 5)}), 1), (Decomposition{0, 2}));
    EXPECT_EQ(decompose(same({q(0), q(5), q(10)}), 1), (Decomposition{1, 1}));
    EXPECT_EQ(decompose(same({q(0), q(1), q(9)}), 1), (Decomposition{0, 1}));
    EXPECT_EQ(decompose(same({q(0), q(8), q(9)}), 1), (Decomposition{1, 2}));

    const Configuration c = same({q(0), q(1), q(9)});
    const Decomposition d = decompose(c, 1);
    EXPECT_EQ(d.left(c.left), (Assignment{q(0)}));
    EXPECT_EQ(d.middle(c.left), (Assignment{q(0), q(1)}));
    EXPECT_EQ(d.right(c.left), (Assignment{q(1), q(9)}));
    EXPECT_EQ(d.left_margin(c.left), ExtendedRational::pos_inf());
    EXPECT_EQ(d.right_margin(c.left), ExtendedRational(q(8)));
}

TEST(Decompose, DesiderataHoldOnEveryCase) {
    for (int n = 0; n <= 3; ++n)
        for (int x = 1; x <= 20; ++x)
            for (int y = 1; y <= 20; ++y) {
                const Assignment u{q(0), q(x, 2), q(x, 2) + q(y, 2)};
                const Configuration c{u, u};
                EXPECT_TRUE(satisfies_desiderata(c, decompose(c, n), n)) << n << " " << x << " " << y;
            }
}

TEST(Decompose, PreconditionsAreChecked) {
    EXPECT_THROW(decompose({{q(0), q(1), q(9)}, {q(0), q(5), q(10)}}, 1), std::invalid_argument);
    EXPECT_THROW(decompose({{q(1), q(0), q(9)}, {q(1), q(0), q(9)}}, 1), std::invalid_argument);
    EXPECT_THROW(decompose({{q(0), q(1)}, {q(0), q(1)}}, 1), std::invalid_argument);
}

TEST(Compose, BaseCaseGivesPartialIsomorphism) {
    const FarInterval f;
    GameSolver rules(f.a, f.b, {0, {}, {}});
    const Decomposition d = decompose(f.c, 0);
    for (const Configuration& part : {d.left(f.c), d.middle(f.c), d.right(f.c)})
        ASSERT_TRUE(rules.is_partial_isomorphism(part));
    EXPECT_TRUE(rules.is_partial_isomorphism(f.c));
    EXPECT_TRUE(duplicator_strategy_survives(rules, f.c, 0, *f.composed(0)));
}

TEST(Compose, PreconditionsAreChecked) {
    const FarInterval f;
    const auto mirror = std::make_shared<MirrorStrategy>(q(0));
    const Decomposition d = decompose(f.c, 1);
    EXPECT_THROW(ComposedDuplicator(mirror, mirror, mirror, f.c, d, 1, q(4)), std::invalid_argument);
    EXPECT_NO_THROW(ComposedDuplicator(mirror, mirror, mirror, f.c, d, 1, q(5)));
    // margin 8 is not above 2^3
    EXPECT_THROW(ComposedDuplicator(mirror, mirror, mirror, f.c, d, 3, q(100)), std::invalid_argument);
}

TEST(Compose, FarLeftMoveRoutesLeft) {
    const FarInterval f;
    for (int n = 1; n <= 2; ++n) {
        const auto s = f.composed(n);
        ASSERT_TRUE(s);
        const Rational half = pow2(n - 1);
        const Play start{f.c, {}};
        const Move far{Side::A, 3, f.c.left[0] - half - q(1)};
        EXPECT_EQ(s->route(start, far), ComposedDuplicator::Part::Left);
        EXPECT_LT(s->respond(start, n, far), f.c.right[0] - half);
        EXPECT_EQ(s->route(start, Move{Side::A, 3, q(1, 2)}), ComposedDuplicator::Part::Middle);
        EXPECT_EQ(s->route(start, Move{Side::B, 3, f.c.right[1] + half + q(1)}), ComposedDuplicator::Part::Right);
    }
}

TEST(Compose, ComposedStrategySurvivesExhaustiveSpoiler) {
    const FarInterval f;
    for (int n = 1; n <= 2; ++n) {
        const Decomposition d = decompose(f.c, n);
        GameSolver left(f.a, f.b, {n, {}, {}});
        ASSERT_EQ(left.winner(d.left(f.c)), Player::Duplicator);
        ASSERT_EQ(left.winner(d.right(f.c)), Player::Duplicator);
        const auto s = f.composed(n);
        ASSERT_TRUE(s);
        GameSolver rules(f.a, f.b, {n, {}, {}});
        EXPECT_TRUE(duplicator_strategy_survives(rules, f.c, n, *s)) << n;
    }
}

TEST(Compose, MirrorCertificate) {
    const FarInterval f;
    const Configuration mid{{q(0), q(1)}, {q(0), q(1)}};
    EXPECT_EQ(mirror_certificate(f.a, f.b, mid, q(5)), q(0));
    // the window [1 - 20, 20] reaches the differing interval
    EXPECT_FALSE(mirror_certificate(f.a, f.b, mid, q(20)));
    EXPECT_FALSE(mirror_certificate(f.a, f.b, {{q(0), q(1)}, {q(0), q(2)}}, q(5)));
}

TEST(ThreePebbleToUnrestricted, ZeroRoundsAlwaysHolds) {
    const Signal a = ps({{q(0), q(1)}}), b = ps({{q(0), q(2)}});
    for (const Configuration& c : {Configuration{{q(1, 2)}, {q(3, 2)}}, Configuration{{q(0), q(1)}, {q(0), q(2)}},
                                   Configuration{{q(0), q(1, 2), q(2)}, {q(0), q(1, 2), q(3)}}})
        EXPECT_TRUE(check_3pebble_to_unrestricted(a, b, c, 0).holds());
}

TEST(ThreePebbleToUnrestricted, SpoilerWinSettlesBothSides) {
    const Signal a = ps({{q(0), q(1)}}), b = ps({{q(0), q(2)}});
    const auto r = check_3pebble_to_unrestricted(a, b, {{}, {}}, 1);
    EXPECT_EQ(r.consequent, true);
    const auto s = check_3pebble_to_unrestricted(a, b, {{}, {}}, 2);
    EXPECT_EQ(s.consequent, false);
    EXPECT_EQ(s.antecedent, false);
    EXPECT_TRUE(s.holds());
    EXPECT_THROW(check_3pebble_to_unrestricted(a, b, {{q(0), q(1), q(2), q(3)}, {q(0), q(1), q(2), q(3)}}, 1),
                 std::invalid_argument);
}

namespace {

// Forwards respond only, so the routed window is ignored.
class IgnoresWindow : public DuplicatorStrategy {
public:
    explicit IgnoresWindow(DuplicatorPtr inner) : inner_(std::move(inner)) {}
    Rational respond(const Play& p, int k, const Move& m) const override { return inner_->respond(p, k, m); }

private:
    DuplicatorPtr inner_;
};

}  // namespace

TEST(Compose, AnyWinningSubResponseIsNotEnough) {
    // the right game answers 33/8 with 13/4, one unit from the middle pebble 9/4 in B
    const FarInterval f;
    const int n = 2;
    const Decomposition d = decompose(f.c, n);
    const Rational locality = diameter(d.middle(f.c.left)) + pow2(n + 1);
    const auto side = std::make_shared<IgnoresWindow>(solver_side(f.a, f.b, {n, {}, {}}));
    const ComposedDuplicator s(side, std::make_shared<MirrorStrategy>(q(0)), side, f.c, d, n, locality);
    GameSolver rules(f.a, f.b, {n, {}, {}});
    EXPECT_FALSE(duplicator_strategy_survives(rules, f.c, n, s));
    Play p{f.c, {}};
    const Move first{Side::A, 3, q(9, 4)};
    p.rounds.push_back({first, s.respond(p, 2, first)});
    const Move second{Side::A, 4, q(33, 8)};
    EXPECT_EQ(s.route(p, second), ComposedDuplicator::Part::Right);
    EXPECT_EQ(s.respond(p, 1, second), q(13, 4));
}
