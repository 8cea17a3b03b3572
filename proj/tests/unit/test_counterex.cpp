#include <gtest/gtest.h>

#include "efg/counterex.hpp"

using namespace efg;

TEST(Sequences, LexCompare) {
    EXPECT_TRUE(lex_compare({0, 1}, {1}) < 0);
    EXPECT_TRUE(lex_compare({1}, {1, -3}) < 0);
    EXPECT_TRUE(lex_compare({2, 1}, {2, 1}) == 0);
    EXPECT_THROW((void)lex_compare({}, {1}), std::invalid_argument);
}

TEST(Sequences, OrderIsStrictTotal) {
    const SeqModel m(2, 2);
    EXPECT_EQ(m.size(), 30u);
    const auto& e = m.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) {
            const auto c = lex_compare(e[i], e[j]);
            EXPECT_EQ(c == 0, i == j);
            EXPECT_EQ(c < 0, i < j);
            EXPECT_EQ(lex_compare(e[j], e[i]), 0 <=> c);
        }
}

TEST(Sequences, ERelation) {
    EXPECT_TRUE(e_related({1, 2}, {5, 2}));
    EXPECT_FALSE(e_related({2}, {2, 3}));
    const SeqModel m(1, 2);
    const auto& e = m.elements();
    std::vector<int> seen(static_cast<std::size_t>(m.classes()), 0);
    for (const auto& s : e) {
        EXPECT_TRUE(e_related(s, s));
        ++seen[static_cast<std::size_t>(s.back() + m.M())];
        for (const auto& t : e) {
            EXPECT_EQ(e_related(s, t), e_related(t, s));
            for (const auto& u : e)
                if (e_related(s, t) && e_related(t, u)) EXPECT_TRUE(e_related(s, u));
        }
    }
    for (int n : seen) EXPECT_GT(n, 0);
}

TEST(PairModel, InvolutionAndFixedPoints) {
    const PairModel p(SeqModel(2, 2));
    EXPECT_EQ(p.size(), 5u * 36u);
    for (std::size_t i = 0; i < p.size(); ++i) {
        EXPECT_EQ(p.g(p.g(i)), i);
        EXPECT_EQ(p.is_fixed(i), p.at(i).first == p.at(i).second);
        if (i + 1 < p.size()) EXPECT_LT(p.at(i), p.at(i + 1));
    }
}

TEST(PairModel, PsiDefinesStrictSameClassOnTheDiagonal) {
    const PairModel p(SeqModel(1, 2));
    const SeqModel& s = p.base();
    for (std::size_t a = 0; a < s.size(); ++a) {
        EXPECT_FALSE(psi_eval(p, p.diagonal(a), p.diagonal(a)));
        for (std::size_t b = 0; b < s.size(); ++b) {
            const bool expect = a < b && e_related(s.at(a), s.at(b));
            EXPECT_EQ(psi_eval(p, p.diagonal(a), p.diagonal(b)), expect) << a << " " << b;
        }
    }
}

TEST(PairModel, Interpretations) {
    const PairModel p(SeqModel(1, 2));
    const auto r = check_interpretations(p, 500, 3, {0, 2});
    EXPECT_EQ(r.checked, 500u * 7u);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.e_pairs, 500u);
    // psi(x, y) | psi(y, x) misses exactly the reflexive pairs
    EXPECT_EQ(r.e_off_diagonal_failures, 0u);
    EXPECT_EQ(r.e_agree_with_equality, r.e_pairs);
    EXPECT_LT(r.e_agree, r.e_pairs);
}

TEST(FiniteGame, Experiment) {
    const SeqModel m(2, 2);
    const auto r = inexpressibility_experiment(m, 2, 2);
    EXPECT_EQ(r.k_pebble, Player::Duplicator);
    EXPECT_EQ(r.companion, Player::Spoiler);
    EXPECT_EQ(r.identical, Player::Duplicator);
    EXPECT_THROW(inexpressibility_experiment(SeqModel(1, 2), 2, 2), std::invalid_argument);
}

TEST(FiniteGame, MonotoneInRounds) {
    const SeqModel m(2, 2);
    for (int k = 1; k <= 2; ++k) {
        FiniteGame g(labelled(m, {0}), labelled(m, {0, 1}), k);
        bool spoiler = false;
        for (int r = 0; r <= 4; ++r) {
            const bool w = g.winner(r) == Player::Spoiler;
            EXPECT_TRUE(!spoiler || w) << k << " " << r;
            spoiler = w;
        }
    }
}

TEST(FiniteGame, IsomorphicCopiesAreEquivalent) {
    const SeqModel m(1, 2);
    FiniteGame g(labelled(m, {1}), labelled(m, {1}), 3);
    EXPECT_EQ(g.winner(3), Player::Duplicator);
    // a single point with and without P
    FiniteGame h({{0}, {1}, {}}, {{0}, {0}, {}}, 1);
    EXPECT_EQ(h.winner(1), Player::Spoiler);
    EXPECT_EQ(h.winner(0), Player::Duplicator);
}
