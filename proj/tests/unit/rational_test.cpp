#include <gtest/gtest.h>

#include "mcd/rational.hpp"

using mcd::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5).den(), 1);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(mcd::midpoint(Rational(1, 4), Rational(1, 2)), Rational(3, 8));
  EXPECT_EQ(mcd::frac(Rational(-1, 4)), Rational(3, 4));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, OverflowThrows) {
  Rational big(std::int64_t(1) << 62);
  EXPECT_THROW(big * big, mcd::Error);
  EXPECT_THROW(Rational(1, 0), mcd::Error);
}

TEST(Rational, StrictParse) {
  Rational r;
  EXPECT_TRUE(Rational::try_parse("-3/4", r));
  EXPECT_EQ(r, Rational(-3, 4));
  EXPECT_TRUE(Rational::try_parse("0/1", r));
  EXPECT_FALSE(Rational::try_parse("2/4", r));
  EXPECT_FALSE(Rational::try_parse("1/0", r));
  EXPECT_FALSE(Rational::try_parse("1/-2", r));
  EXPECT_FALSE(Rational::try_parse("3", r));
  EXPECT_FALSE(Rational::try_parse("1/2x", r));
  EXPECT_FALSE(Rational::try_parse("0/2", r));
  EXPECT_EQ(Rational(5).to_string(), "5/1");
}
