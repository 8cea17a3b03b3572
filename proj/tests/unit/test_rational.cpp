#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "efg/rational.hpp"

using efg::ExtendedRational;
using efg::Rational;

TEST(Rational, Canonical) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, FloorCeilFrac) {
    EXPECT_EQ(Rational(5, 2).frac(), Rational(1, 2));
    EXPECT_EQ(Rational(-1, 4).frac(), Rational(3, 4));
    EXPECT_EQ(Rational(3).frac(), Rational(0));
    EXPECT_EQ(Rational(-1, 4).floor(), -1);
    EXPECT_EQ(Rational(-1, 4).ceil(), 0);
    EXPECT_EQ(Rational(7, 3).ceil(), 3);
}

TEST(Rational, FracMatchesDefinitionOnRandomValues) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-500, 500), den(1, 40);
    for (int i = 0; i < 2000; ++i) {
        const Rational x(num(rng), den(rng));
        const Rational f = x.frac();
        EXPECT_LE(Rational(0), f);
        EXPECT_LT(f, Rational(1));
        EXPECT_TRUE((x - f).is_integer());
        EXPECT_EQ(x - f, Rational(x.floor()));
    }
}

TEST(Rational, ArithmeticAndOrder) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
    EXPECT_EQ(Rational(1, 3) / Rational(-2), Rational(-1, 6));
    EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
    EXPECT_EQ(Rational::midpoint(Rational(0), Rational(1)), Rational(1, 2));
    EXPECT_EQ(efg::pow2(3), Rational(8));
    EXPECT_EQ(efg::pow2(-2), Rational(1, 4));
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + big, std::overflow_error);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational(-1, 2).str(), "-1/2");
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(ExtendedRational, Ordering) {
    const auto lo = ExtendedRational::neg_inf();
    const auto hi = ExtendedRational::pos_inf();
    EXPECT_LT(lo, ExtendedRational(Rational(-1000)));
    EXPECT_LT(ExtendedRational(Rational(1000)), hi);
    EXPECT_EQ(lo, ExtendedRational::neg_inf());
    EXPECT_THROW((void)hi.value(), std::exception);
}
