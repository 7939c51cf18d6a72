#include <gtest/gtest.h>

#include <numeric>

#include "helpers.hpp"
#include "mcd/cyl_solver.hpp"
#include "mcd/generators.hpp"
#include "mcd/validate.hpp"
#include "oracles.hpp"

using namespace mcd;

namespace {

Drawing gen(const char* kind, int n, std::uint64_t seed, Rational wrap = Rational(1, 2)) {
  GenConfig c;
  c.n = n;
  c.seed = seed;
  c.wrap_prob = wrap;
  std::string k = kind;
  if (k == "flag") return gen_flag(c);
  if (k == "planefree") return gen_planefree(c);
  return gen_mixed(c);
}

// Synthetic decomposition with fresh ids; only the sizes matter to choose_split.
LayerDecomposition synthetic(std::size_t flag, std::vector<std::size_t> sizes) {
  LayerDecomposition L;
  int id = 0;
  for (std::size_t i = 0; i < flag; ++i) L.flag_vertices.push_back(id++);
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) L.matching.push_back({int(2 * i), int(2 * i + 1)});
  for (auto s : sizes) {
    L.layers.emplace_back();
    for (std::size_t i = 0; i < s; ++i) L.layers.back().push_back(id++);
  }
  return L;
}

int sampled_side(const Vertex& w, const EdgeCurve& e) {
  for (double x : {w.x.to_double(), w.x.to_double() + 1}) {
    double y = oracle::y_at(e.polyline, x);
    if (!std::isnan(y)) return w.y.to_double() < y ? -1 : 1;
  }
  return 0;
}

void expect_pairwise_disjoint(const Drawing& d, const DisjointEdgeSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      EXPECT_TRUE(oracle::sampled_disjoint(d.edge(s.edges[a].first, s.edges[a].second),
                                           d.edge(s.edges[b].first, s.edges[b].second)));
}

}  // namespace

TEST(SlabPartition, PartSizes) {
  Drawing d = gen("flag", 10, 1);
  auto a = slab_partition(d, 5);
  ASSERT_EQ(a.parts.size(), 2u);
  EXPECT_EQ(a.parts[0].size(), 5u);
  EXPECT_EQ(a.parts[1].size(), 5u);
  auto b = slab_partition(d, 4);
  ASSERT_EQ(b.parts.size(), 3u);
  EXPECT_EQ(b.parts[2].size(), 2u);
  EXPECT_EQ(b.cuts.size(), 3u);
  EXPECT_EQ(b.cuts[0], Rational(0));
  EXPECT_THROW(slab_partition(d, 1), Error);
  EXPECT_THROW(slab_partition(d, 11), Error);
}

TEST(SlabPartition, CutsSeparateThePartsAndRecutCleanly) {
  Drawing d = gen("mixed", 24, 2, Rational(3, 4));
  auto sp = slab_partition(d, 5);
  for (std::size_t p = 1; p < sp.parts.size(); ++p) {
    const Rational& c = sp.cuts[p];
    EXPECT_LT(d.vertex(sp.parts[p - 1].back()).x, c);
    EXPECT_LT(c, d.vertex(sp.parts[p].front()).x);
    EXPECT_TRUE(validate(recut(d, c)).ok) << "cut " << c;
  }
}

TEST(ContainedEdge, PlaneFreeSlabsHaveOneFlagsHaveNone) {
  Drawing pf = gen("planefree", 8, 1);
  auto sp = slab_partition(pf, 4);
  for (std::size_t p = 0; p < sp.parts.size(); ++p) {
    auto e = contained_edge(pf, sp, p);
    ASSERT_TRUE(e);
    EXPECT_FALSE(pf.edge(e->first, e->second).circular());
  }
  Drawing fl = gen("flag", 12, 1);
  auto fp = slab_partition(fl, 4);
  for (std::size_t p = 0; p < fp.parts.size(); ++p) EXPECT_FALSE(contained_edge(fl, fp, p));
}

TEST(ContainedEdge, EmptySlabBecomesAFlagAfterRecut) {
  Drawing d = gen("flag", 12, 2);
  auto sp = slab_partition(d, 4);
  Drawing rd = recut(d, sp.cuts[1]);
  EXPECT_TRUE(is_flag(induced(rd, sp.parts[1])));
}

TEST(ChooseSplit, BridgesTwoSmallNeighbours) {
  auto L = synthetic(10, {5000, 1, 1, 5000});
  auto p = choose_split(L, SolveMode::Practical);
  EXPECT_EQ(p.s, 2u);
  ASSERT_TRUE(p.bridge);
  EXPECT_EQ(*p.bridge, L.matching[1]);
  EXPECT_EQ(p.W, L.layers[0]);
  EXPECT_EQ(p.U, L.layers[3]);
}

TEST(ChooseSplit, SplitsAtTheMedianLayer) {
  auto L = synthetic(10, {10, 1, 10});
  auto p = choose_split(L, SolveMode::Practical);
  EXPECT_EQ(p.s, 2u);
  EXPECT_FALSE(p.bridge);
  EXPECT_EQ(p.W, L.layers[0]);
  EXPECT_EQ(p.U, L.layers[2]);
}

TEST(ChooseSplit, Failures) {
  try {
    choose_split(synthetic(10, {5, 5}), SolveMode::Practical);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoSplit);
  }
  try {
    choose_split(synthetic(10, {10, 1, 10}), SolveMode::Paper);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParamsRequired);
  }
}

TEST(Layers, PartitionAndOrderMatchSampling) {
  Drawing d = gen("mixed", 60, 3, Rational(3, 4));
  SolveTrace tr;
  SolveOptions o;
  o.trace = &tr;
  solve(d, o);
  ASSERT_FALSE(tr.splits.empty());
  for (const auto& rec : tr.splits) {
    const auto& L = rec.layers;
    EXPECT_EQ(L.total(), rec.scope.size());
    EXPECT_EQ(L.layers.size(), L.alpha() + 1);
    Drawing rd = recut(induced(d, rec.scope), L.cut);
    for (std::size_t i = 0; i < L.layers.size(); ++i)
      for (int id : L.layers[i])
        for (std::size_t t = 0; t < L.alpha(); ++t)
          EXPECT_EQ(sampled_side(rd.vertex(id), rd.edge(L.matching[t].first, L.matching[t].second)), t < i ? 1 : -1);
  }
}

TEST(SplitConditions, HoldOnSolverSplitsAndAreNotVacuous) {
  std::size_t checked = 0, flagged = 0;
  for (std::uint64_t s = 1; s <= 3; ++s) {
    Drawing d = gen("mixed", 50, s, Rational(3, 4));
    SolveTrace tr;
    SolveOptions o;
    o.trace = &tr;
    solve(d, o);
    for (const auto& rec : tr.splits) {
      Drawing sub = induced(d, rec.scope);
      EXPECT_TRUE(check_split_claims(sub, rec.layers).empty());
      flagged += check_split_claims(sub, rec.layers, [](const EdgeCurve&, const EdgeCurve&) { return false; }).size();
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
  EXPECT_GT(flagged, 0u);
}

TEST(Greedy, ConsecutivePairs) {
  EXPECT_EQ(greedy_monotone(gen("planefree", 6, 1)).size(), 3u);
  EXPECT_EQ(greedy_monotone(gen("planefree", 7, 1)).size(), 3u);
  try {
    greedy_monotone(gen("flag", 6, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WrappingPair);
  }
}

TEST(SizeBound, Values) {
  EXPECT_EQ(theorem1_bound(100, 10), 10u);
  EXPECT_EQ(theorem1_bound(100, 10, [](std::size_t) { return std::size_t(2); }), 10u);
  EXPECT_EQ(theorem1_bound(101, 10), 11u);
  EXPECT_EQ(theorem1_bound(25, 24), 2u);
  EXPECT_EQ(theorem1_bound(1000, 999), flag_bound(999));
  EXPECT_THROW(theorem1_bound(10, 0), Error);
  EXPECT_THROW(theorem1_bound(10, 10), Error);
}

TEST(Solve, PlaneFreeTakesConsecutivePairs) {
  Drawing d = gen("planefree", 8, 1);
  auto r = solve(d);
  ASSERT_EQ(r.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_EQ(r.edges[i], (EdgeKey{d.vertex_at(2 * i).id, d.vertex_at(2 * i + 1).id}));
  EXPECT_EQ(oracle::max_disjoint(d), 4u);
}

TEST(Solve, FrozenSizes) {
  EXPECT_EQ(solve(gen("mixed", 20, 1)).size(), 10u);
  for (const char* a : {"separating", "upper-triplet"}) EXPECT_EQ(solve(archetype(a)).size(), 2u) << a;
  for (std::uint64_t s = 1; s <= 3; ++s) {
    EXPECT_EQ(solve(gen("flag", 10, s)).size(), 2u);
    EXPECT_EQ(solve(gen("flag", 12, s)).size(), 2u);
  }
}

TEST(Solve, OutputIsDisjointSortedAndVerified) {
  for (std::uint64_t s = 1; s <= 4; ++s) {
    Drawing d = gen("mixed", 30 + int(s) * 5, s, Rational(s % 2 ? 3 : 1, 4));
    SolveOptions o;
    o.verify = true;
    auto r = solve(d, o);
    EXPECT_GE(r.size(), 1u);
    expect_pairwise_disjoint(d, r);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      EXPECT_LT(*d.edge_index(r.edges[i].first, r.edges[i].second),
                *d.edge_index(r.edges[i + 1].first, r.edges[i + 1].second));
    EXPECT_EQ(r.edges, solve(d).edges);
  }
  EXPECT_GE(solve(gen("flag", 9, 1)).size(), 1u);
}

TEST(Solve, PaperMode) {
  SolveOptions o;
  o.mode = SolveMode::Paper;
  Drawing d = gen("mixed", 40, 2, Rational(3, 4));
  try {
    solve(d, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParamsRequired);
  }
  o.params = PaperParams{Rational(1, 4), BigInt(8)};
  auto r = solve(d, o);
  EXPECT_GE(r.size(), 1u);
  expect_pairwise_disjoint(d, r);
  o.params = PaperParams{Rational(1, 4), BigInt(40)};
  try {
    solve(d, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}

TEST(Solve, RejectsIncompleteDrawings) {
  try {
    solve(archetype("cycle"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
}
