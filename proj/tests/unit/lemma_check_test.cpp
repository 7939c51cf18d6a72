#include <gtest/gtest.h>

#include "mcd/faults.hpp"
#include "mcd/io.hpp"
#include "mcd/lemma_check.hpp"

using namespace mcd;

namespace {

std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> c;
  for (std::uint64_t s = 1; s <= 3; ++s) {
    GenConfig g;
    g.seed = s;
    g.n = 8 + int(s);
    c.push_back({"flag", gen_flag(g)});
    g.wrap_prob = Rational(1, 2);
    c.push_back({"mixed", gen_mixed(g)});
    c.push_back({"planefree", gen_planefree(g)});
  }
  for (auto& [name, d] : gen_archetypes()) c.push_back({name, d});
  return c;
}

}  // namespace

TEST(LemmaCheck, SmallCorpusPasses) {
  auto rep = lemma_check(small_corpus());
  EXPECT_TRUE(rep.ok()) << rep.text();
  for (const auto& s : rep.suites)
    if (s.name != "non-transitivity") {
      EXPECT_GT(s.instances, 0u) << s.name;
    }
}

TEST(LemmaCheck, BrokenDrawingIsCaughtAndShrunk) {
  GenConfig g;
  g.n = 9;
  g.seed = 2;
  auto f = inject_fault(gen_flag(g), Fault::DoubleCrossing, 3);
  ASSERT_TRUE(f);
  LemmaOptions o;
  o.only = {"validator"};
  auto rep = lemma_check({{"broken", f->drawing}}, o);
  ASSERT_FALSE(rep.ok());
  ASSERT_EQ(rep.suites.size(), 1u);
  const auto& s = rep.suites[0];
  EXPECT_EQ(s.failed_instances, 1u);
  ASSERT_FALSE(s.counterexample.empty());
  Drawing small = parse_mcd(s.counterexample);
  EXPECT_LE(small.n(), 4u);
  auto r = validate(small);
  EXPECT_TRUE(r.has(ViolationKind::DoubleCrossing));
  // no single vertex can be dropped without losing the fault
  auto ids = vertex_ids(small);
  for (int drop : ids) {
    std::vector<int> keep;
    for (int id : ids)
      if (id != drop) keep.push_back(id);
    EXPECT_TRUE(validate(induced(small, keep)).ok) << "still broken without " << drop;
  }
}

TEST(LemmaCheck, WorkerCountDoesNotChangeTheReport) {
  auto corpus = small_corpus();
  LemmaOptions one, two;
  two.workers = 2;
  EXPECT_EQ(lemma_check(corpus, one).text(), lemma_check(corpus, two).text());
}
