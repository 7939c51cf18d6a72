#include <gtest/gtest.h>

#include "mcd/paper_bounds.hpp"

using namespace mcd;

TEST(PaperBounds, FunctionIsOneAtThreshold) {
  PaperParams pp{Rational(1, 4), BigInt(16)};
  Interval f = paper_f(pp, BigInt(16));
  EXPECT_LE(f.lo, BigRat(1));
  EXPECT_GE(f.hi, BigRat(1));
  EXPECT_EQ(compare_scaled_f(pp, BigRat(16), 1, 1), 0);
  EXPECT_GT(compare_scaled_f(pp, BigRat(17), 1, 1), 0);
  EXPECT_LT(compare_scaled_f(pp, BigRat(15), 1, 1), 0);
}

TEST(PaperBounds, ParamValidation) {
  EXPECT_THROW(check_params({Rational(1, 2), BigInt(16)}), Error);
  EXPECT_THROW(check_params({Rational(0), BigInt(16)}), Error);
  EXPECT_THROW(check_params({Rational(1, 4), BigInt(1)}), Error);
  EXPECT_NO_THROW(check_params({Rational(1, 3), BigInt(2)}));
}

TEST(PaperBounds, SplittingInequalities) {
  PaperParams pp{Rational(1, 4), BigInt(16)};
  for (int m : {8, 40, 1000}) {
    BigRat M(m);
    EXPECT_EQ(check_spread_bound(pp, M / 2, M / 2, M / 4), Verdict::Holds) << m;
    EXPECT_EQ(check_spread_bound(pp, M / 4, 3 * M / 4, M / 4), Verdict::Holds) << m;
    EXPECT_EQ(check_tangent_bound(pp, M, M / 3), Verdict::Holds) << m;
  }
  EXPECT_THROW(check_spread_bound(pp, BigRat(1), BigRat(3), BigRat(2)), Error);
}

TEST(PaperBounds, MinimalThreshold) {
  BigInt n0 = minimal_n0(Rational(1, 4));
  EXPECT_EQ(n0.str().size(), 97u);
  PaperParams pp{Rational(1, 4), n0};
  EXPECT_EQ(check_n0_power(pp), Verdict::Holds);
  EXPECT_EQ(check_n0_log(pp), Verdict::Holds);
  PaperParams below{Rational(1, 4), n0 - 1};
  EXPECT_FALSE(check_n0_power(below) == Verdict::Holds && check_n0_log(below) == Verdict::Holds);
  auto rep = check_index_chain(pp, 2 * n0);
  EXPECT_TRUE(rep.ok);
  for (const auto& s : rep.steps) EXPECT_EQ(s.verdict, Verdict::Holds) << s.name;
}

TEST(PaperBounds, SlabCount) {
  EXPECT_EQ(paper_k({Rational(1, 4), BigInt(16)}, BigInt(1000)), BigInt(4));
  EXPECT_THROW(check_index_chain({Rational(1, 4), BigInt(16)}, BigInt(16)), Error);
}
