#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mcd/generators.hpp"
#include "mcd/io.hpp"
#include "mcd/validate.hpp"

using namespace mcd;

namespace {

GenConfig cfg(int n, std::uint64_t seed, Rational wrap = Rational(1, 2)) {
  GenConfig c;
  c.n = n;
  c.seed = seed;
  c.wrap_prob = wrap;
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Generators, SmallestFlag) {
  Drawing d = gen_flag(cfg(2, 1));
  EXPECT_EQ(d.n(), 2u);
  EXPECT_TRUE(is_flag(d));
  EXPECT_TRUE(validate(d).ok);
}

TEST(Generators, ValidCompleteAndOfTheRightShape) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Drawing f = gen_flag(cfg(8 + int(s), s));
    EXPECT_TRUE(f.complete() && is_flag(f) && validate(f).ok);
    Drawing p = gen_planefree(cfg(8 + int(s), s));
    EXPECT_TRUE(p.complete() && is_wrap_free(p) && validate(p).ok);
    Drawing m = gen_mixed(cfg(20, s));
    EXPECT_TRUE(m.complete() && validate(m).ok);
    EXPECT_EQ(m.n(), 20u);
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(gen_flag(cfg(15, 7)), gen_flag(cfg(15, 7)));
  EXPECT_EQ(gen_mixed(cfg(15, 7)), gen_mixed(cfg(15, 7)));
  EXPECT_EQ(gen_planefree(cfg(15, 7)), gen_planefree(cfg(15, 7)));
  EXPECT_NE(serialize_mcd(gen_mixed(cfg(15, 7))), serialize_mcd(gen_mixed(cfg(15, 8))));
}

TEST(Generators, WrapExtremes) {
  Drawing none = gen_mixed(cfg(12, 3, Rational(0)));
  EXPECT_EQ(wrap_fraction(none), Rational(0));
  EXPECT_TRUE(is_wrap_free(none));
  Drawing most = gen_mixed(cfg(12, 3, Rational(1)));
  EXPECT_TRUE(validate(most).ok);
  EXPECT_GT(wrap_fraction(most), Rational(1, 2));
}

TEST(Generators, WrapFractionFollowsTheTarget) {
  Rational lo = wrap_fraction(gen_mixed(cfg(30, 1, Rational(1, 4))));
  Rational hi = wrap_fraction(gen_mixed(cfg(30, 1, Rational(3, 4))));
  EXPECT_LT(lo, hi);
}

TEST(Generators, ArchetypesMatchStoredFiles) {
  for (auto& [name, d] : gen_archetypes()) {
    std::string text = slurp(std::string(MCD_DATA_DIR) + "/archetypes/" + name + ".mcd");
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(parse_mcd(text), d) << name;
    EXPECT_TRUE(validate(d).ok) << name;
  }
  EXPECT_THROW(archetype("nope"), Error);
}

TEST(Generators, BadConfig) {
  for (GenConfig c : {cfg(1, 1), cfg(10, 1, Rational(3, 2)), cfg(10, 1, Rational(-1, 2))}) {
    try {
      gen_mixed(c);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidArgument);
    }
  }
  GenConfig c = cfg(10, 1);
  c.max_attempts = 0;
  EXPECT_THROW(gen_flag(c), Error);
}
