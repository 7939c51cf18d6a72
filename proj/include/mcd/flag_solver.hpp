#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcd/drawing.hpp"
#include "mcd/geometry.hpp"

namespace mcd {

// Vertex positions in this module are 1-based ranks in x order (v_1 .. v_n),
// relative to the drawing or vertex subset being processed.

struct SideSets {
  EdgeKey edge;             // vertex ids of v_i v_j
  std::vector<int> vplus;   // ids of later vertices above the edge
  std::vector<int> vminus;  // ids of later vertices below the edge
};

enum class StructureKind : std::uint8_t { SeparatingEdge, GoodUpperTriplet, GoodLowerTriplet };

inline const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::SeparatingEdge: return "separating-edge";
    case StructureKind::GoodUpperTriplet: return "good-upper-triplet";
    case StructureKind::GoodLowerTriplet: return "good-lower-triplet";
  }
  return "?";
}

struct Structure {
  StructureKind kind = StructureKind::SeparatingEdge;
  int i = 0, j = 0, k = 0;  // 1-based ranks; k unused for separating edges
  friend bool operator==(const Structure&, const Structure&) = default;
};

enum class WitnessKind : std::uint8_t { LowerLeft, UpperLeft, Separator };

inline char to_char(WitnessKind k) {
  switch (k) {
    case WitnessKind::LowerLeft: return 'a';
    case WitnessKind::UpperLeft: return 'b';
    case WitnessKind::Separator: return 'c';
  }
  return '?';
}

/// Why `lower` and `upper` (lower below upper) may sit together in a proper set.
struct Witness {
  EdgeKey lower, upper;
  WitnessKind kind = WitnessKind::LowerLeft;
  std::optional<EdgeKey> separator;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ProperMatching {
  std::vector<EdgeKey> edges;  // bottom to top on the cut line
  std::vector<Witness> witnesses;
  std::size_t size() const noexcept { return edges.size(); }
};

/// A structure found during flag_matching together with the vertex sets the
/// recursion relied on (ids). For separating edges `upper`/`lower` are V+ and
/// V-; for triplets `lower` (upper triplet) or `upper` (lower triplet) is the
/// recursion scope and `edge` the edge kept.
struct StructureEvent {
  Structure structure;
  std::vector<int> scope;  // ids of the subflag the structure was found in
  EdgeKey edge;
  std::vector<int> upper, lower;
};

struct FlagTrace {
  std::vector<StructureEvent> events;
};

/// Guaranteed size of flag_matching on n vertices.
inline std::size_t flag_bound(std::size_t n) {
  if (n < 2) return 0;
  if (n <= 9) return 1;
  if (n <= 25) return 2;
  return (n + 24) / 25 + 1;
}

namespace detail {

inline void require_flag_scope(const Drawing& d, std::span<const std::size_t> ranks) {
  for (std::size_t a = 0; a < ranks.size(); ++a)
    for (std::size_t b = a + 1; b < ranks.size(); ++b) {
      auto k = d.edge_index_at(ranks[a], ranks[b]);
      if (!k) throw Error(Errc::NotAFlag, "vertex set does not induce a complete drawing");
      if (!d.edges()[*k].circular())
        throw Error(Errc::NotAFlag, "edge " + edge_name(d.edges()[*k]) + " does not cross the cut line");
    }
}

inline std::vector<std::size_t> ranks_of(const Drawing& d, std::span<const int> ids) {
  std::vector<std::size_t> r;
  r.reserve(ids.size());
  for (int id : ids) r.push_back(d.position(id));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

inline Rational cut_height(const EdgeCurve& e) { return eval_lift(e.polyline, Rational(1)); }

// Works on the subflag induced by `sub` (0-based ranks of d, ascending).
class FlagSolver {
 public:
  FlagSolver(const Drawing& d, FlagTrace* trace) : d_(d), trace_(trace) {}

  struct Sides {
    std::vector<std::size_t> plus, minus;  // 0-based ranks of d
  };

  Sides sides(std::span<const std::size_t> sub, std::size_t i, std::size_t j) const {
    const EdgeCurve& e = d_.edge_at(sub[i], sub[j]);
    Sides s;
    for (std::size_t t = j + 1; t < sub.size(); ++t) {
      Relation r = point_relation(d_.vertex_at(sub[t]), e);
      if (r == Relation::Above)
        s.plus.push_back(sub[t]);
      else if (r == Relation::Below)
        s.minus.push_back(sub[t]);
      else
        throw Error(Errc::InvalidDrawing, "vertex " + std::to_string(d_.vertex_at(sub[t]).id) +
                                              " is not related to circular edge " + edge_name(e));
    }
    return s;
  }

  // 0-based positions within sub.
  std::optional<Structure> structure(std::span<const std::size_t> sub) const {
    const std::size_t m = std::min<std::size_t>(6, sub.size());
    std::vector<Sides> cache(m * m);
    std::vector<bool> have(m * m, false);
    auto get = [&](std::size_t i, std::size_t j) -> const Sides& {
      if (!have[i * m + j]) {
        cache[i * m + j] = sides(sub, i, j);
        have[i * m + j] = true;
      }
      return cache[i * m + j];
    };
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const Sides& s = get(i, j);
        if (s.plus.size() > 1 && s.minus.size() > 1)
          return Structure{StructureKind::SeparatingEdge, int(i + 1), int(j + 1), 0};
      }
    for (int pass = 0; pass < 2; ++pass) {
      const bool upper = pass == 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          for (std::size_t k = j + 1; k < m; ++k) {
            const Sides& s = get(j, k);
            if ((upper ? s.plus.size() : s.minus.size()) > 1) continue;
            Relation r = relation(d_.edge_at(sub[j], sub[k]), d_.edge_at(sub[i], sub[j]));
            if (r == (upper ? Relation::Below : Relation::Above))
              return Structure{upper ? StructureKind::GoodUpperTriplet : StructureKind::GoodLowerTriplet,
                               int(i + 1), int(j + 1), int(k + 1)};
          }
    }
    return std::nullopt;
  }

  // Edges as 0-based rank pairs of d, plus witnesses.
  struct Part {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Witness> witnesses;
  };

  Part solve(std::span<const std::size_t> sub) {
    Part out;
    const std::size_t m = sub.size();
    if (m < 2) return out;
    if (m < 10) {
      out.edges.emplace_back(sub[0], sub[1]);
      return out;
    }
    auto st = structure(sub);
    if (!st) throw Error(Errc::InvalidDrawing, "no separating edge or good triplet among the first six vertices");
    const std::size_t i = std::size_t(st->i - 1), j = std::size_t(st->j - 1);
    if (st->kind == StructureKind::SeparatingEdge) {
      Sides s = sides(sub, i, j);
      record(*st, sub, {sub[i], sub[j]}, s.plus, s.minus);
      const std::pair<std::size_t, std::size_t> g{sub[i], sub[j]};
      Part up, down;
      if (m > 25 && std::min(s.plus.size(), s.minus.size()) <= 9) {
        bool small_up = s.plus.size() <= s.minus.size();
        const auto& small = small_up ? s.plus : s.minus;
        const auto& large = small_up ? s.minus : s.plus;
        Part one;
        one.edges.emplace_back(small[0], small[1]);
        Part rest = solve(large);
        (small_up ? up : down) = std::move(one);
        (small_up ? down : up) = std::move(rest);
      } else {
        up = solve(s.plus);
        down = solve(s.minus);
      }
      out = merge(std::move(down), std::move(up), [&](auto, auto) { return sep_witness(g); });
      return out;
    }
    const std::size_t k = std::size_t(st->k - 1);
    const bool upper = st->kind == StructureKind::GoodUpperTriplet;
    Sides s = sides(sub, j, k);
    const auto& scope = upper ? s.minus : s.plus;
    record(*st, sub, {sub[i], sub[j]}, upper ? std::vector<std::size_t>{} : scope,
           upper ? scope : std::vector<std::size_t>{});
    Part rest = solve(scope);
    Part kept;
    kept.edges.emplace_back(sub[i], sub[j]);
    // the kept edge lies left of everything in the recursion
    if (upper)
      out = merge(std::move(rest), std::move(kept), [](auto, auto) { return Tag{WitnessKind::UpperLeft, {}}; });
    else
      out = merge(std::move(kept), std::move(rest), [](auto, auto) { return Tag{WitnessKind::LowerLeft, {}}; });
    return out;
  }

  EdgeKey key(std::pair<std::size_t, std::size_t> r) const {
    return {d_.vertex_at(r.first).id, d_.vertex_at(r.second).id};
  }

 private:
  struct Tag {
    WitnessKind kind;
    std::optional<std::pair<std::size_t, std::size_t>> sep;
  };

  static Tag sep_witness(std::pair<std::size_t, std::size_t> g) { return Tag{WitnessKind::Separator, g}; }

  // Every edge of `low` lies below every edge of `high`.
  template <class F>
  Part merge(Part low, Part high, F tag) const {
    Part out;
    out.witnesses = std::move(low.witnesses);
    out.witnesses.insert(out.witnesses.end(), high.witnesses.begin(), high.witnesses.end());
    for (const auto& a : low.edges)
      for (const auto& b : high.edges) {
        Tag t = tag(a, b);
        Witness w{key(a), key(b), t.kind, std::nullopt};
        if (t.sep) w.separator = key(*t.sep);
        out.witnesses.push_back(w);
      }
    out.edges = std::move(low.edges);
    out.edges.insert(out.edges.end(), high.edges.begin(), high.edges.end());
    return out;
  }

  std::vector<int> ids(std::span<const std::size_t> r) const {
    std::vector<int> v;
    v.reserve(r.size());
    for (auto x : r) v.push_back(d_.vertex_at(x).id);
    return v;
  }

  void record(const Structure& st, std::span<const std::size_t> sub, std::pair<std::size_t, std::size_t> e,
              const std::vector<std::size_t>& upper, const std::vector<std::size_t>& lower) {
    if (!trace_) return;
    trace_->events.push_back(StructureEvent{st, ids(sub), key(e), ids(upper), ids(lower)});
  }

  const Drawing& d_;
  FlagTrace* trace_;
};

}  // namespace detail

/// V+ and V- of the edge v_i v_j (1-based ranks, i < j).
inline SideSets side_sets(const Drawing& d, int i, int j) {
  if (!is_flag(d)) throw Error(Errc::NotAFlag, "drawing is not a flag");
  if (i < 1 || j <= i || std::size_t(j) > d.n()) throw Error(Errc::InvalidArgument, "need 1 <= i < j <= n");
  std::vector<std::size_t> all(d.n());
  for (std::size_t r = 0; r < d.n(); ++r) all[r] = r;
  detail::FlagSolver fs(d, nullptr);
  auto s = fs.sides(all, std::size_t(i - 1), std::size_t(j - 1));
  SideSets out;
  out.edge = {d.vertex_at(std::size_t(i - 1)).id, d.vertex_at(std::size_t(j - 1)).id};
  for (auto r : s.plus) out.vplus.push_back(d.vertex_at(r).id);
  for (auto r : s.minus) out.vminus.push_back(d.vertex_at(r).id);
  return out;
}

/// First separating edge, good upper triplet or good lower triplet among v_1..v_6.
inline Structure find_structure(const Drawing& d) {
  if (!is_flag(d)) throw Error(Errc::NotAFlag, "drawing is not a flag");
  if (d.n() < 10) throw Error(Errc::InvalidArgument, "structure search needs n >= 10");
  std::vector<std::size_t> all(d.n());
  for (std::size_t r = 0; r < d.n(); ++r) all[r] = r;
  auto st = detail::FlagSolver(d, nullptr).structure(all);
  if (!st) throw Error(Errc::InvalidDrawing, "no separating edge or good triplet among the first six vertices");
  return *st;
}

/// Proper set of at least flag_bound(|ids|) pairwise disjoint edges in the
/// subflag of d induced by `ids`. Every edge among `ids` must cross x = 0.
inline ProperMatching flag_matching(const Drawing& d, std::span<const int> ids, FlagTrace* trace = nullptr) {
  auto sub = detail::ranks_of(d, ids);
  detail::require_flag_scope(d, sub);
  detail::FlagSolver fs(d, trace);
  auto part = fs.solve(sub);
  std::vector<std::pair<Rational, EdgeKey>> order;
  for (const auto& e : part.edges) order.emplace_back(detail::cut_height(d.edge_at(e.first, e.second)), fs.key(e));
  std::sort(order.begin(), order.end());
  ProperMatching m;
  for (auto& [y, k] : order) m.edges.push_back(k);
  m.witnesses = std::move(part.witnesses);
  return m;
}

inline ProperMatching flag_matching(const Drawing& d, FlagTrace* trace = nullptr) {
  if (!is_flag(d)) throw Error(Errc::NotAFlag, "drawing is not a flag");
  auto ids = vertex_ids(d);
  return flag_matching(d, ids, trace);
}

enum class ProperViolationKind : std::uint8_t { Disjointness, Related, Witness };

inline const char* to_string(ProperViolationKind k) {
  switch (k) {
    case ProperViolationKind::Disjointness: return "disjointness";
    case ProperViolationKind::Related: return "related";
    case ProperViolationKind::Witness: return "witness";
  }
  return "?";
}

struct ProperViolation {
  ProperViolationKind kind;
  EdgeKey first, second;
};

struct ProperCheck {
  bool ok = true;
  std::vector<ProperViolation> violations;
};

namespace detail {

inline bool shares_endpoint(const EdgeCurve& a, const EdgeCurve& b) { return a.adjacent(b); }

inline bool disjoint_edges(const EdgeCurve& a, const EdgeCurve& b) {
  return !shares_endpoint(a, b) && crossing_count(a, b) == 0;
}

/// Some edge of d proves (c) for lower/upper: endpoints left of all four,
/// lower's endpoints below it and upper's above it.
inline std::optional<EdgeKey> find_separator(const Drawing& d, const EdgeCurve& lower, const EdgeCurve& upper) {
  const std::size_t lim = std::min({d.position(lower.u), d.position(lower.v), d.position(upper.u), d.position(upper.v)});
  const Vertex* lv[2] = {&d.vertex(lower.u), &d.vertex(lower.v)};
  const Vertex* uv[2] = {&d.vertex(upper.u), &d.vertex(upper.v)};
  for (std::size_t a = 0; a < lim; ++a)
    for (std::size_t b = a + 1; b < lim; ++b) {
      auto k = d.edge_index_at(a, b);
      if (!k) continue;
      const EdgeCurve& g = d.edges()[*k];
      bool ok = true;
      for (const Vertex* v : lv) ok = ok && point_relation(*v, g) == Relation::Below;
      for (const Vertex* v : uv) ok = ok && point_relation(*v, g) == Relation::Above;
      if (ok) return edge_key(g);
    }
  return std::nullopt;
}

}  // namespace detail

/// Re-derives properness from geometry alone; stored witnesses are ignored.
inline ProperCheck check_proper(const Drawing& d, const ProperMatching& m) {
  ProperCheck out;
  auto bad = [&](ProperViolationKind k, EdgeKey a, EdgeKey b) {
    out.ok = false;
    out.violations.push_back({k, a, b});
  };
  for (std::size_t p = 0; p < m.edges.size(); ++p)
    for (std::size_t q = p + 1; q < m.edges.size(); ++q) {
      const EdgeCurve& e = d.edge(m.edges[p].first, m.edges[p].second);
      const EdgeCurve& f = d.edge(m.edges[q].first, m.edges[q].second);
      if (!detail::disjoint_edges(e, f)) {
        bad(ProperViolationKind::Disjointness, m.edges[p], m.edges[q]);
        continue;
      }
      Relation r = relation(e, f);
      if (r != Relation::Below && r != Relation::Above) {
        bad(ProperViolationKind::Related, m.edges[p], m.edges[q]);
        continue;
      }
      const EdgeCurve& lo = r == Relation::Below ? e : f;
      const EdgeCurve& hi = r == Relation::Below ? f : e;
      auto xmax = [&](const EdgeCurve& c) { return std::max(d.vertex(c.u).x, d.vertex(c.v).x); };
      auto xmin = [&](const EdgeCurve& c) { return std::min(d.vertex(c.u).x, d.vertex(c.v).x); };
      if (xmax(lo) < xmin(hi) || xmax(hi) < xmin(lo)) continue;
      if (!detail::find_separator(d, lo, hi)) bad(ProperViolationKind::Witness, m.edges[p], m.edges[q]);
    }
  return out;
}

}  // namespace mcd
