#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mcd/drawing.hpp"
#include "mcd/flag_solver.hpp"
#include "mcd/geometry.hpp"
#include "mcd/paper_bounds.hpp"

namespace mcd {

enum class SolveMode : std::uint8_t { Practical, Paper };

inline const char* to_string(SolveMode m) { return m == SolveMode::Paper ? "paper" : "practical"; }

/// Vertical strips: part p spans (cuts[p], cuts[p+1]), the last one up to 1.
struct SlabPartition {
  std::size_t k = 0;
  std::vector<Rational> cuts;             // cuts[0] = 0
  std::vector<std::vector<int>> parts;    // vertex ids in x order
};

struct LayerDecomposition {
  Rational cut;                           // frame in which V' sits left of everything
  std::vector<int> flag_vertices;         // V'
  std::vector<EdgeKey> matching;          // e_1 .. e_alpha, bottom to top at the cut
  std::vector<std::vector<int>> layers;   // V_1 .. V_{alpha+1}
  std::size_t alpha() const noexcept { return matching.size(); }
  std::size_t total() const {
    std::size_t t = flag_vertices.size();
    for (const auto& l : layers) t += l.size();
    return t;
  }
};

/// Either a split at s (U above e_s's layer, W below) or, with `bridge`, the
/// edge e_s kept between W = V_1..V_{s-1} and U = V_{s+2}..V_{alpha+1}.
struct SplitPlan {
  SolveMode mode = SolveMode::Practical;
  std::size_t s = 0;  // 1-based
  std::vector<int> U, W;
  std::optional<EdgeKey> bridge;
};

struct DisjointEdgeSet {
  std::vector<EdgeKey> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

struct FlagCall {
  std::vector<int> scope;  // vertex ids of the drawing the call worked in
  Rational cut;
  std::vector<int> flag_vertices;
  FlagTrace trace;
  ProperMatching matching;
};

struct SplitRecord {
  std::vector<int> scope;
  LayerDecomposition layers;
  std::optional<SplitPlan> plan;  // empty when the fallback ran
};

struct SolveTrace {
  std::vector<FlagCall> flags;
  std::vector<SplitRecord> splits;
  std::size_t slab_returns = 0, greedy_returns = 0, fallbacks = 0;
};

struct SolveOptions {
  SolveMode mode = SolveMode::Practical;
  std::size_t k = 0;  // 0 picks the mode's rule
  std::optional<PaperParams> params;
  bool verify = false;
  SolveTrace* trace = nullptr;
};

namespace detail {

inline std::size_t ceil_sqrt(std::size_t n) {
  std::size_t r = std::size_t(std::sqrt(double(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

// Sorted distinct breakpoint abscissae reduced to [0, 1).
inline std::vector<Rational> cut_events(const Drawing& d) {
  std::vector<Rational> ev;
  for (const auto& e : d.edges())
    for (const auto& p : e.polyline) ev.push_back(p.x < Rational(1) ? p.x : frac(p.x));
  std::sort(ev.begin(), ev.end());
  ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
  return ev;
}

// Event-free abscissa strictly between lo and hi; `events` from cut_events(d).
inline std::optional<Rational> pick_cut(const Drawing& d, const Rational& lo, const Rational& hi,
                                        const std::vector<Rational>& events) {
  std::vector<Rational> ev{lo};
  for (auto it = std::upper_bound(events.begin(), events.end(), lo); it != events.end() && *it < hi; ++it)
    ev.push_back(*it);
  ev.push_back(hi);
  std::vector<std::size_t> gaps(ev.size() - 1);
  std::iota(gaps.begin(), gaps.end(), 0);
  std::stable_sort(gaps.begin(), gaps.end(),
                   [&](std::size_t a, std::size_t b) { return ev[a + 1] - ev[a] > ev[b + 1] - ev[b]; });
  // a crossing may sit exactly on a midpoint; walk a few other dyadic points
  static constexpr std::int64_t fr[][2] = {{1, 2}, {1, 4}, {3, 4}, {3, 8}, {5, 8}, {1, 8}, {7, 8}, {5, 16}, {11, 16}};
  for (std::size_t g : gaps)
    for (const auto& f : fr) {
      Rational a = ev[g] + (ev[g + 1] - ev[g]) * Rational(f[0], f[1]);
      if (!tie_at(d, a)) return a;
    }
  return std::nullopt;
}

inline std::optional<Rational> pick_cut(const Drawing& d, const Rational& lo, const Rational& hi) {
  return pick_cut(d, lo, hi, cut_events(d));
}

}  // namespace detail

/// ceil(n/k) parts; all but possibly the last hold exactly k vertices.
inline SlabPartition slab_partition(const Drawing& d, std::size_t k) {
  const std::size_t n = d.n();
  if (k < 2 || k > n) throw Error(Errc::InvalidArgument, "slab size must satisfy 2 <= k <= n");
  SlabPartition sp;
  sp.k = k;
  sp.cuts.push_back(Rational(0));
  const auto events = detail::cut_events(d);
  for (std::size_t start = 0; start < n; start += k) {
    if (start > 0) {
      auto a = detail::pick_cut(d, d.vertex_at(start - 1).x, d.vertex_at(start).x, events);
      if (!a) throw Error(Errc::NoValidCut, "no event-free cut before rank " + std::to_string(start));
      sp.cuts.push_back(*a);
    }
    std::vector<int> ids;
    for (std::size_t r = start; r < std::min(n, start + k); ++r) ids.push_back(d.vertex_at(r).id);
    sp.parts.push_back(std::move(ids));
  }
  return sp;
}

/// Lowest-index edge drawn entirely inside part p's strip.
inline std::optional<EdgeKey> contained_edge(const Drawing& d, const SlabPartition& sp, std::size_t p) {
  const auto& ids = sp.parts.at(p);
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      auto k = d.edge_index(ids[a], ids[b]);
      if (k && !d.edges()[*k].circular()) return edge_key(d.edges()[*k]);
    }
  return std::nullopt;
}

/// Layers of V \ V' between consecutive matching edges. `rd` is the frame in
/// which V' occupies the leftmost ranks and every matching edge is circular.
inline LayerDecomposition layers(const Drawing& rd, std::span<const int> flag_ids, const ProperMatching& m,
                                 const Rational& cut = Rational(0)) {
  LayerDecomposition L;
  L.cut = cut;
  L.flag_vertices.assign(flag_ids.begin(), flag_ids.end());
  std::unordered_set<int> inflag(flag_ids.begin(), flag_ids.end());
  std::vector<std::pair<Rational, EdgeKey>> order;
  Rational right(0);
  for (int id : flag_ids) right = std::max(right, rd.vertex(id).x);
  for (const auto& k : m.edges) {
    const EdgeCurve& e = rd.edge(k.first, k.second);
    if (!e.circular()) throw Error(Errc::InvalidArgument, "matching edge " + detail::edge_name(e) + " does not wrap");
    order.emplace_back(detail::cut_height(e), k);
  }
  std::sort(order.begin(), order.end());
  for (auto& [y, k] : order) L.matching.push_back(k);
  L.layers.assign(L.matching.size() + 1, {});
  for (const auto& v : rd.vertices()) {
    if (inflag.count(v.id)) continue;
    if (v.x < right) throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v.id) + " lies among the flag vertices");
    std::size_t below_count = 0;  // matching edges under v
    bool seen_above = false;
    for (const auto& k : L.matching) {
      Relation r = point_relation(v, rd.edge(k.first, k.second));
      if (r == Relation::NotRelated)
        throw Error(Errc::UnrelatedVertex, "vertex " + std::to_string(v.id) + " is not related to a matching edge");
      if (r == Relation::Above) {
        if (seen_above) throw Error(Errc::InvalidDrawing, "matching edges out of order at vertex " + std::to_string(v.id));
        ++below_count;
      } else {
        seen_above = true;
      }
    }
    L.layers[below_count].push_back(v.id);
  }
  return L;
}

namespace detail {

inline SplitPlan make_plan(const LayerDecomposition& L, SolveMode mode, std::size_t s, bool bridge) {
  SplitPlan p;
  p.mode = mode;
  p.s = s;
  const std::size_t a1 = L.layers.size();  // alpha + 1
  for (std::size_t i = 1; i <= a1; ++i) {
    const auto& layer = L.layers[i - 1];
    if (i < s) p.W.insert(p.W.end(), layer.begin(), layer.end());
    if (bridge ? i > s + 1 : i > s) p.U.insert(p.U.end(), layer.begin(), layer.end());
  }
  if (bridge) p.bridge = L.matching[s - 1];
  return p;
}

}  // namespace detail

/// Bridging plan if two neighbouring layers are small, else a split index.
inline SplitPlan choose_split(const LayerDecomposition& L, SolveMode mode, const PaperParams* params = nullptr) {
  const std::size_t alpha = L.alpha();
  const std::size_t n = L.total();
  if (alpha < 1) throw Error(Errc::NoSplit, "empty matching");
  std::vector<std::size_t> sz;
  for (const auto& l : L.layers) sz.push_back(l.size());
  if (mode == SolveMode::Paper) {
    if (!params) throw Error(Errc::ParamsRequired, "paper mode needs epsilon and n0");
    const BigRat N(n);
    for (std::size_t i = 1; i <= alpha; ++i)  // 10 f(n) |V_i u V_i+1| <= n
      if (compare_scaled_f(*params, N, BigRat(10 * (sz[i - 1] + sz[i])), N) <= 0)
        return detail::make_plan(L, mode, i, true);
    std::vector<std::size_t> j(sz.size());
    std::iota(j.begin(), j.end(), 0);
    std::stable_sort(j.begin(), j.end(), [&](std::size_t a, std::size_t b) { return sz[a] < sz[b]; });
    auto in_I = [&](std::size_t pos) {
      const BigRat v(sz[j[pos]]);
      return compare_scaled_f(*params, N, 20 * v, N) >= 0 && compare_scaled_f(*params, N, BigRat(100000), v) >= 0;
    };
    for (std::size_t l = 0; l + 2 < j.size(); ++l) {
      if (!in_I(l) || !in_I(l + 1) || !in_I(l + 2)) continue;
      if (sz[j[l + 2]] > 2 * sz[j[l]]) continue;
      std::size_t z[3] = {j[l], j[l + 1], j[l + 2]};
      std::sort(z, z + 3);
      std::size_t s = z[1] + 1;
      if (s < 2 || s > alpha) continue;
      return detail::make_plan(L, mode, s, false);
    }
    throw Error(Errc::NoSplit, "no admissible index triple");
  }
  const std::size_t target = detail::ceil_sqrt(n);
  for (std::size_t i = 1; i <= alpha; ++i)
    if (10 * target * (sz[i - 1] + sz[i]) <= n) return detail::make_plan(L, mode, i, true);
  if (alpha < 2) throw Error(Errc::NoSplit, "one matching edge and no small layer pair");
  const std::size_t rest = n - L.flag_vertices.size();
  std::size_t s = alpha, acc = 0;
  for (std::size_t i = 1; i <= alpha + 1; ++i) {
    if (2 * acc >= rest) {
      s = i;
      break;
    }
    acc += sz[i - 1];
  }
  s = std::clamp<std::size_t>(s, 2, alpha);
  return detail::make_plan(L, mode, s, false);
}

struct SplitViolation {
  std::size_t s = 0;
  EdgeKey first, second;
  std::string what;
};

/// Split disjointness conditions for every 1 < s < alpha+1 at once. `disjoint` decides
/// whether two edges of d share no point.
template <class Disjoint>
std::vector<SplitViolation> check_split_claims(const Drawing& d, const LayerDecomposition& L, Disjoint&& disjoint) {
  std::vector<SplitViolation> out;
  const std::size_t alpha = L.alpha();
  if (alpha < 2) return out;
  std::unordered_map<int, std::size_t> layer_of;  // 1-based
  for (std::size_t i = 0; i < L.layers.size(); ++i)
    for (int id : L.layers[i]) layer_of[id] = i + 1;
  struct Item {
    const EdgeCurve* e;
    std::size_t lo, hi;
  };
  std::vector<Item> items;
  for (const auto& e : d.edges()) {
    auto a = layer_of.find(e.u), b = layer_of.find(e.v);
    if (a == layer_of.end() || b == layer_of.end()) continue;
    items.push_back({&e, std::min(a->second, b->second), std::max(a->second, b->second)});
  }
  // e in G[W_s] iff hi < s; f in G[U_s] iff lo > s
  for (const auto& w : items)
    for (const auto& u : items) {
      if (w.hi + 1 >= u.lo) continue;
      if (!disjoint(*w.e, *u.e))
        out.push_back({w.hi + 1, edge_key(*w.e), edge_key(*u.e), "G[W] meets G[U]"});
    }
  for (std::size_t t = 1; t <= alpha; ++t) {
    const EdgeCurve& m = d.edge(L.matching[t - 1].first, L.matching[t - 1].second);
    for (const auto& it : items) {
      // f in G[U_s] with s - 1 = t needs lo > t + 1; e in G[W_s] with s = t needs hi < t
      if (t + 1 <= alpha && it.lo > t + 1 && !disjoint(m, *it.e))
        out.push_back({t + 1, L.matching[t - 1], edge_key(*it.e), "e_{s-1} meets G[U]"});
      if (t >= 2 && it.hi < t && !disjoint(m, *it.e))
        out.push_back({t, L.matching[t - 1], edge_key(*it.e), "e_s meets G[W]"});
    }
  }
  return out;
}

inline std::vector<SplitViolation> check_split_claims(const Drawing& d, const LayerDecomposition& L) {
  return check_split_claims(d, L, [](const EdgeCurve& a, const EdgeCurve& b) { return detail::disjoint_edges(a, b); });
}

/// Consecutive pairs in x order; all of them must be direct edges.
inline DisjointEdgeSet greedy_monotone(const Drawing& d) {
  DisjointEdgeSet out;
  for (std::size_t r = 0; r + 1 < d.n(); r += 2) {
    const EdgeCurve& e = d.edge_at(r, r + 1);
    if (e.circular()) throw Error(Errc::WrappingPair, "edge " + detail::edge_name(e) + " wraps");
    out.edges.push_back(edge_key(e));
  }
  return out;
}

/// max(ceil(n / delta), c(delta)).
inline std::size_t theorem1_bound(std::size_t n, std::size_t delta,
                                  const std::function<std::size_t(std::size_t)>& c = flag_bound) {
  if (delta == 0 || delta >= n) throw Error(Errc::InvalidArgument, "need 0 < delta < n");
  return std::max((n + delta - 1) / delta, c(delta));
}

namespace detail {

class CylSolver {
 public:
  explicit CylSolver(const SolveOptions& o) : opt_(o) {}

  std::vector<EdgeKey> run(const Drawing& d, bool top) {
    const std::size_t n = d.n();
    if (n < 2) return {};
    if (n == 2 || (opt_.mode == SolveMode::Paper && !top && BigInt(n) <= opt_.params->n0))
      return {edge_key(d.edge_at(0, 1))};
    if (is_wrap_free(d)) {
      if (opt_.trace) ++opt_.trace->greedy_returns;
      return greedy_monotone(d).edges;
    }
    std::vector<EdgeKey> best;
    auto consider = [&](std::vector<EdgeKey> c) {
      if (c.size() > best.size()) best = std::move(c);
    };
    const bool practical = opt_.mode == SolveMode::Practical;
    if (practical) {
      try {
        consider(greedy_monotone(d).edges);
      } catch (const Error& e) {
        if (e.code() != Errc::WrappingPair) throw;
      }
      if (is_flag(d)) consider(flag_matching(d).edges);
    }

    std::size_t k = top && opt_.k ? opt_.k : 0;
    if (!k) k = practical ? std::max<std::size_t>(10, ceil_sqrt(n)) : std::size_t(paper_k(*opt_.params, BigInt(n)));
    k = std::clamp<std::size_t>(k, 2, n);
    SlabPartition sp = slab_partition(d, k);
    std::vector<EdgeKey> collected;
    std::optional<std::size_t> empty;
    for (std::size_t p = 0; p < sp.parts.size(); ++p) {
      if (auto e = contained_edge(d, sp, p))
        collected.push_back(*e);
      else if (!empty && sp.parts[p].size() == k)
        empty = p;
    }
    bool enough = practical ? collected.size() >= ceil_sqrt(n)
                            : compare_scaled_f(*opt_.params, BigRat(n), 1, BigRat(collected.size())) <= 0;
    if (enough || !empty) {
      if (opt_.trace) ++opt_.trace->slab_returns;
      if (!practical) return collected;
      consider(std::move(collected));
      return best;
    }
    if (practical) consider(collected);

    const Rational a = sp.cuts[*empty];
    const Drawing rd = a == Rational(0) ? d : recut(d, a);
    const auto& flag_ids = sp.parts[*empty];
    FlagCall call;
    call.scope = vertex_ids(d);
    call.cut = a;
    call.flag_vertices = flag_ids;
    call.matching = flag_matching(rd, flag_ids, &call.trace);
    if (opt_.verify) verify_flag(rd, call);
    LayerDecomposition L = layers(rd, flag_ids, call.matching, a);
    if (practical) consider(call.matching.edges);
    if (opt_.trace) opt_.trace->flags.push_back(call);
    if (opt_.verify) {
      auto bad = check_split_claims(d, L);
      if (!bad.empty())
        throw Error(Errc::InvalidDrawing, "split invariant fails at s=" + std::to_string(bad[0].s) + ": " + bad[0].what);
    }

    std::vector<EdgeKey> rec;
    std::optional<SplitPlan> plan;
    try {
      plan = choose_split(L, opt_.mode, opt_.params ? &*opt_.params : nullptr);
    } catch (const Error& e) {
      if (e.code() != Errc::NoSplit) throw;
    }
    if (opt_.trace) opt_.trace->splits.push_back({call.scope, L, plan});
    if (plan) {
      if (plan->bridge) rec.push_back(*plan->bridge);
      append(rec, run(induced(d, plan->W), false));
      append(rec, run(induced(d, plan->U), false));
    } else {
      // keep the larger layer next to e_1 and add e_1 only when it fits
      if (opt_.trace) ++opt_.trace->fallbacks;
      const auto& big = *std::max_element(L.layers.begin(), L.layers.end(),
                                          [](const auto& x, const auto& y) { return x.size() < y.size(); });
      rec = run(induced(d, big), false);
      const EdgeCurve& e1 = d.edge(L.matching[0].first, L.matching[0].second);
      if (std::all_of(rec.begin(), rec.end(), [&](const EdgeKey& f) {
            return disjoint_edges(e1, d.edge(f.first, f.second));
          }))
        rec.push_back(L.matching[0]);
    }
    if (!practical) return rec;
    consider(std::move(rec));
    return best;
  }

 private:
  static void append(std::vector<EdgeKey>& a, std::vector<EdgeKey> b) { a.insert(a.end(), b.begin(), b.end()); }

  void verify_flag(const Drawing& rd, const FlagCall& call) {
    Drawing sub = induced(rd, call.flag_vertices);
    auto pc = check_proper(sub, call.matching);
    if (!pc.ok)
      throw Error(Errc::InvalidDrawing, std::string("flag matching is not proper: ") + to_string(pc.violations[0].kind));
  }

  const SolveOptions& opt_;
};

}  // namespace detail

/// Pairwise disjoint edges of a complete monotone cylindrical drawing.
inline DisjointEdgeSet solve(const Drawing& d, const SolveOptions& opt = {}) {
  if (opt.mode == SolveMode::Paper) {
    if (!opt.params) throw Error(Errc::ParamsRequired, "paper mode needs epsilon and n0");
    check_params(*opt.params);
    if (BigInt(d.n()) <= opt.params->n0)
      throw Error(Errc::InvalidArgument, "paper mode needs n > n0 (n = " + std::to_string(d.n()) +
                                             ", n0 = " + opt.params->n0.str() + "); f(n) <= 1 there");
  }
  if (!d.complete()) throw Error(Errc::InvalidArgument, "solve needs a complete drawing");
  DisjointEdgeSet out;
  out.edges = detail::CylSolver(opt).run(d, true);
  for (std::size_t a = 0; a < out.edges.size(); ++a)
    for (std::size_t b = a + 1; b < out.edges.size(); ++b) {
      const EdgeCurve& e = d.edge(out.edges[a].first, out.edges[a].second);
      const EdgeCurve& f = d.edge(out.edges[b].first, out.edges[b].second);
      if (!detail::disjoint_edges(e, f))
        throw Error(Errc::InvalidDrawing, "output edges " + detail::edge_name(e) + " and " + detail::edge_name(f) +
                                              " intersect; the input is probably not a valid drawing");
    }
  std::sort(out.edges.begin(), out.edges.end(), [&](const EdgeKey& x, const EdgeKey& y) {
    return *d.edge_index(x.first, x.second) < *d.edge_index(y.first, y.second);
  });
  return out;
}

}  // namespace mcd
