#include <gtest/gtest.h>

#include <random>

#include "efg/evaluate.hpp"
#include "efg/linear.hpp"
#include "efg/parser.hpp"
#include "efg/sample.hpp"
#include "oracle.hpp"

using namespace efg;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
Signal ps(std::vector<Interval> ivs) { return Signal({{"P", std::move(ivs)}}); }
const FunctionSpec kMinus2x{q(-2), q(0)};

}  // namespace

TEST(Linear, FixedPoint) {
    EXPECT_EQ(fixed_point({q(2), q(1)}), q(-1));
    EXPECT_EQ(fixed_point(kMinus2x), q(0));
    EXPECT_THROW(fixed_point(FunctionSpec::successor()), std::domain_error);
    for (const FunctionSpec& f : {FunctionSpec{q(3, 2), q(-7, 3)}, FunctionSpec{q(-5), q(2)}}) {
        const Rational x = fixed_point(f);
        EXPECT_EQ(f.a() * x + f.b(), x);
    }
}

TEST(Linear, Reflection) {
    const Signal s = ps({{q(0), q(1)}});
    const Signal r = reflected(s);
    EXPECT_TRUE(r.value_at("P", q(-1, 2)));
    EXPECT_TRUE(r.value_at("P", q(0)));
    EXPECT_FALSE(r.value_at("P", q(-1)));
    EXPECT_EQ(reflected(r), s);
}

TEST(Monotone, TranslationAgreesWithDirectSolver) {
    std::mt19937_64 rng(11);
    const FunctionSpec f{q(1), q(3)};
    for (int i = 0; i < 12; ++i) {
        const Signal a = oracle::random_signal(rng, 2, 4, 2), b = oracle::random_signal(rng, 2, 4, 2);
        const GameSpec spec{2, 3, {}};
        const auto v = reduce_monotone(a, b, f, spec);
        EXPECT_EQ(v.route, MonotoneVerdict::Route::Rescaled);
        EXPECT_EQ(v.winner, GameSolver(a, b, spec, f).winner({})) << i;
    }
}

TEST(Monotone, PredecessorIsReflected) {
    const auto v = reduce_monotone(ps({{q(0), q(1)}}), ps({{q(0), q(2)}}), {q(1), q(-1)}, {2, 3, {}});
    EXPECT_EQ(v.route, MonotoneVerdict::Route::Reflected);
    EXPECT_EQ(v.winner, Player::Spoiler);
    EXPECT_EQ(reduce_monotone(ps({{q(0), q(1)}}), ps({{q(0), q(2)}}), {q(1), q(-1)}, {1, 3, {}}).winner,
              Player::Duplicator);
}

TEST(Monotone, SplitAtTheFixedPoint) {
    // f(x) = 2x, x* = 0; all predicates inside (0, inf)
    const FunctionSpec f{q(2), q(0)};
    const Signal a = ps({{q(1), q(2)}}), b = ps({{q(1), q(3)}});
    const GameSpec spec{2, 3, {}};
    const auto v = reduce_monotone(a, b, f, spec);
    EXPECT_EQ(v.route, MonotoneVerdict::Route::Split);
    EXPECT_EQ(v.lower, Player::Duplicator);
    SolverOptions upper;
    upper.above = q(0);
    EXPECT_EQ(v.upper, GameSolver(a, b, spec, f, upper).winner({}));
    EXPECT_EQ(v.winner, *v.upper);
    EXPECT_EQ(reduce_monotone(a, a, f, spec).winner, Player::Duplicator);
    EXPECT_THROW(reduce_monotone(a, b, kMinus2x, spec), std::invalid_argument);
}

TEST(Monotone, FixedPointLabelMatters) {
    const FunctionSpec f{q(2), q(0)};
    const auto v = reduce_monotone(ps({{q(0), q(1)}}), ps({{q(1, 2), q(1)}}), f, {1, 3, {}});
    EXPECT_FALSE(v.fixed_point_agrees);
    EXPECT_EQ(v.winner, Player::Spoiler);
}

TEST(Monotone, InvariantUnderConjugateSplit) {
    // translating the data by s turns f(x) = a x + b into a x + b + s (1 - a)
    std::mt19937_64 rng(3);
    const Rational s = q(1);
    for (int i = 0; i < 6; ++i) {
        const Signal a = oracle::random_signal(rng, 2, 3, 2), b = oracle::random_signal(rng, 2, 3, 2);
        const FunctionSpec f{q(2), q(-1)};
        const FunctionSpec g{q(2), q(-1) + s * (q(1) - q(2))};
        const GameSpec spec{1, 3, {}};
        const auto v = reduce_monotone(a, b, f, spec), w = reduce_monotone(a.translated(s), b.translated(s), g, spec);
        EXPECT_EQ(v.winner, w.winner) << i;
        EXPECT_EQ(v.lower, w.lower);
        EXPECT_EQ(v.upper, w.upper);
    }
}

TEST(Antitone, ExistentialExample) {
    const auto r = antitone_rewrite(parse("Ex. P(x)"), kMinus2x);
    EXPECT_EQ(render(r.formula), "Ex. (Ey. y = f^2(y) & y < x) & (P(x) | P__f(x) | (Ey. y = f^2(y) & P(y)))");
    EXPECT_TRUE(is_clean_antitone_output(r.formula));
    ASSERT_EQ(r.fresh.size(), 1u);
    EXPECT_EQ(r.fresh[0].second, "P__f");
    for (const Signal& s : {ps({{q(-1), q(1)}}), ps({{q(-3), q(-1)}}), ps({{q(0), q(1, 8)}}), Signal{}}) {
        EXPECT_EQ(evaluate(parse("Ex. P(x)"), s, {}, kMinus2x),
                  evaluate(r.over_square, with_fresh_predicates(s, r, kMinus2x), {}, kMinus2x.squared()));
    }
}

TEST(Antitone, ParityRules) {
    const auto one = [](const char* atom) {
        std::vector<RewriteStep> log;
        Formula f = parse(atom);
        return render(simplify_antitone_atoms(f, &log));
    };
    EXPECT_EQ(one("f(x) = f^3(y)"), "x = f^2(y)");
    EXPECT_EQ(one("f(x) = f^2(y)"), "false");
    EXPECT_EQ(one("f^2(x) = y"), "f^2(x) = y");
    // f reverses the order: f(x) < f(y) iff y < x
    EXPECT_EQ(one("f(x) < f(y)"), "y < x");
    EXPECT_EQ(one("f(x) < f^2(y)"), "true");
    EXPECT_EQ(one("f^2(x) < f(y)"), "false");
    const Formula xs = Formula::eq(Term::app(1, "x"), Term::fixed_point());
    EXPECT_EQ(simplify_antitone_atoms(xs).op(), Op::False);
    EXPECT_EQ(simplify_antitone_atoms(Formula::less(Term::fixed_point(), Term::app(3, "x"))).op(), Op::False);
    EXPECT_EQ(simplify_antitone_atoms(Formula::less(Term::app(1, "x"), Term::fixed_point())).op(), Op::True);
    EXPECT_EQ(simplify_antitone_atoms(Formula::less(Term::fixed_point(), Term::app(2, "x"))).op(), Op::Less);
}

TEST(Antitone, OrderFlipIsNeeded) {
    EXPECT_FALSE(evaluate(parse("Ex. Ey. f(x) < f(y) & x < y"), ps({{q(0), q(1)}}), {}, kMinus2x));
    const Formula phi = parse("Ex. Ey. f(x) < f(y) & x < y");
    const auto r = antitone_rewrite(phi, kMinus2x);
    EXPECT_FALSE(evaluate(r.over_square, with_fresh_predicates(Signal{}, r, kMinus2x), {}, kMinus2x.squared()));
    // unflipped, the both-odd case would read x < y & x < y, which holds
    EXPECT_TRUE(evaluate(parse("Ex. Ey. x < y & x < y"), Signal{}));
}

TEST(Antitone, TraceChainsStages) {
    const Formula phi = parse("Ax. Ey. P(f(x)) -> f(y) < x");
    const auto r = antitone_rewrite(phi, kMinus2x);
    const auto& st = r.trace.stages;
    ASSERT_FALSE(st.empty());
    EXPECT_EQ(st.front().before, render(phi));
    EXPECT_EQ(st.back().after, render(r.over_square));
    for (std::size_t i = 0; i + 1 < st.size(); ++i) EXPECT_EQ(st[i].after, st[i + 1].before) << st[i].rule;
    EXPECT_FALSE(r.trace.atoms.empty());
}

TEST(Antitone, SimplificationIsIdempotent) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const auto r = antitone_rewrite(random_sentence(rng), kMinus2x);
        EXPECT_TRUE(is_clean_antitone_output(r.formula));
        EXPECT_EQ(simplify_antitone_atoms(r.formula), r.formula);
        const Formula once = simplify_antitone_atoms(r.formula);
        EXPECT_EQ(simplify_antitone_atoms(once), once);
    }
}

TEST(Antitone, Errors) {
    EXPECT_THROW(antitone_rewrite(parse("P(x)"), kMinus2x), std::invalid_argument);
    EXPECT_THROW(antitone_rewrite(parse("Ex. P(x)"), {q(2), q(0)}), std::invalid_argument);
    EXPECT_THROW(antitone_rewrite(parse("Ex. P(x) & P__f(x)"), kMinus2x), std::invalid_argument);
}

TEST(Antitone, VerifyReport) {
    EXPECT_TRUE(verify_antitone_equivalence(parse("Ex. P(x)"), kMinus2x, 0).trials.empty());
    EXPECT_TRUE(verify_antitone_equivalence(parse("Ex. P(x)"), kMinus2x, 0).ok());
    const auto rep = verify_antitone_equivalence(parse("Ex. Ay. P(f(x)) | x < f^2(y)"), kMinus2x, 20, 4);
    EXPECT_EQ(rep.trials.size(), 20u);
    EXPECT_TRUE(rep.ok());
    const Formula ex = parse("Ex. P(x)"), none = parse("Ax. !P(x)");
    const auto r = antitone_rewrite(ex, kMinus2x), n = antitone_rewrite(none, kMinus2x);
    const Signal s = ps({{q(-1), q(1)}});
    EXPECT_TRUE(evaluate(ex, s, {}, kMinus2x));
    EXPECT_TRUE(evaluate(r.over_square, with_fresh_predicates(s, r, kMinus2x), {}, kMinus2x.squared()));
    EXPECT_TRUE(evaluate(n.over_square, with_fresh_predicates(Signal{}, n, kMinus2x), {}, kMinus2x.squared()));
}
