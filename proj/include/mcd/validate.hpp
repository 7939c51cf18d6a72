#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "mcd/detail/grid.hpp"
#include "mcd/geometry.hpp"

namespace mcd {

enum class ViolationKind : std::uint8_t {
  DoubleCrossing,
  Tangency,
  VertexOnEdge,
  SpanAtLeastOne,
  DuplicateX,
  EventAtCut,
  NonMonotone,
  MalformedEdge,  // endpoints or wrap flag disagree with the vertices
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DoubleCrossing: return "double-crossing";
    case ViolationKind::Tangency: return "tangency";
    case ViolationKind::VertexOnEdge: return "vertex-on-edge";
    case ViolationKind::SpanAtLeastOne: return "span>=1";
    case ViolationKind::DuplicateX: return "duplicate-x";
    case ViolationKind::EventAtCut: return "event-at-cut";
    case ViolationKind::NonMonotone: return "non-monotone";
    case ViolationKind::MalformedEdge: return "malformed-edge";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<EdgeKey> edges;
  std::vector<int> vertices;
  std::optional<Point> witness;

  auto key() const { return std::tie(kind, edges, vertices); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  bool truncated = false;

  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
  }
  std::string summary() const {
    if (ok) return "ok";
    std::string s;
    for (const auto& v : violations) {
      s += to_string(v.kind);
      for (auto [a, b] : v.edges) s += " e" + std::to_string(a) + "-" + std::to_string(b);
      for (int w : v.vertices) s += " v" + std::to_string(w);
      if (v.witness) s += " @(" + v.witness->x.to_string() + "," + v.witness->y.to_string() + ")";
      s += "\n";
    }
    if (truncated) s += "(truncated)\n";
    return s;
  }
};

/// Which edge pairs of a drawing cross. Indexed by positions in edges(), or
/// by vertex ids; ids survive recut() and induced(), so one table computed on
/// a root drawing answers queries about all its subdrawings.
class CrossingTable {
 public:
  CrossingTable() = default;
  explicit CrossingTable(const Drawing& d) : m_(d.edges().size()) {
    bits_.assign((pairs() + 63) / 64, 0);
    for (std::size_t k = 0; k < d.edges().size(); ++k) index_.emplace(key(d.edges()[k].u, d.edges()[k].v), k);
  }

  std::size_t edge_count() const noexcept { return m_; }

  bool crosses_index(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    std::size_t p = pair_index(a, b);
    return (bits_[p >> 6] >> (p & 63)) & 1u;
  }
  bool crosses(EdgeKey e, EdgeKey f) const {
    return crosses_index(index_.at(key(e.first, e.second)), index_.at(key(f.first, f.second)));
  }
  std::size_t crossing_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }

  void unmark(std::size_t a, std::size_t b) {
    std::size_t p = pair_index(a, b);
    bits_[p >> 6] &= ~(std::uint64_t(1) << (p & 63));
  }

  /// Sets the bit; returns its previous value.
  bool mark(std::size_t a, std::size_t b) {
    std::size_t p = pair_index(a, b);
    bool was = (bits_[p >> 6] >> (p & 63)) & 1u;
    bits_[p >> 6] |= std::uint64_t(1) << (p & 63);
    return was;
  }

 private:
  static std::uint64_t key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
  }
  std::size_t pairs() const { return m_ * (m_ ? m_ - 1 : 0) / 2; }
  std::size_t pair_index(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return a * m_ - a * (a + 1) / 2 + (b - a - 1);
  }

  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

struct ValidateOptions {
  bool force_pairwise = false;    // skip the sweep and test every pair exactly
  std::size_t max_violations = 1000;
};

struct Analysis {
  ValidationReport report;
  CrossingTable table;  // meaningful for pairs of well-formed edges
};

namespace detail {

class Validator {
 public:
  Validator(const Drawing& d, const ValidateOptions& opt) : d_(d), opt_(opt), table_(d) {}

  Analysis run() {
    local_checks();
    bool swept = false;
    if (!opt_.force_pairwise) {
      if (auto g = to_grid(d_)) {
        sweep(*g);
        swept = true;
      }
    }
    if (!swept) pairwise();
    return finish();
  }

 private:
  void add(Violation v) { found_.push_back(std::move(v)); }

  EdgeKey ek(std::size_t k) const { return edge_key(d_.edges()[k]); }

  void local_checks() {
    const auto& vs = d_.vertices();
    const std::size_t m = d_.edges().size();
    good_.assign(m, true);
    std::vector<bool> bad_vertex(vs.size(), false);
    const Rational zero(0), one(1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i].x == zero) {
        add({ViolationKind::EventAtCut, {}, {vs[i].id}, vs[i].point()});
        bad_vertex[i] = true;
      } else if (vs[i].x < zero || vs[i].x >= one) {
        add({ViolationKind::MalformedEdge, {}, {vs[i].id}, vs[i].point()});
        bad_vertex[i] = true;
      }
      if (i + 1 < vs.size() && vs[i].x == vs[i + 1].x)
        add({ViolationKind::DuplicateX, {}, {vs[i].id, vs[i + 1].id}, vs[i].point()});
    }
    for (std::size_t k = 0; k < m; ++k) {
      const EdgeCurve& e = d_.edges()[k];
      const Polyline& p = e.polyline;
      const Vertex& u = d_.vertex(e.u);
      const Vertex& v = d_.vertex(e.v);
      if (bad_vertex[d_.position(e.u)] || bad_vertex[d_.position(e.v)]) good_[k] = false;
      bool mono = true;
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!(p[i].x < p[i + 1].x)) {
          add({ViolationKind::NonMonotone, {ek(k)}, {}, p[i + 1]});
          mono = false;
          break;
        }
      if (!mono) {
        good_[k] = false;
        continue;
      }
      if (p.back().x - p.front().x >= one) {
        add({ViolationKind::SpanAtLeastOne, {ek(k)}, {}, p.back()});
        good_[k] = false;
        continue;
      }
      Point first = e.circular() ? v.point() : u.point();
      Point last = e.circular() ? Point{u.x + one, u.y} : v.point();
      if (!(u.x < v.x) || p.front() != first || p.back() != last) {
        add({ViolationKind::MalformedEdge, {ek(k)}, {e.u, e.v}, p.front()});
        good_[k] = false;
        continue;
      }
      for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (p[i].x.is_integer()) {
          add({ViolationKind::EventAtCut, {ek(k)}, {}, p[i]});
          good_[k] = false;
          break;
        }
    }
  }

  // Classify the exact relationship of one pair and record findings.
  void exact_pair(std::size_t a, std::size_t b) {
    const EdgeCurve& e = d_.edges()[a];
    const EdgeCurve& f = d_.edges()[b];
    try {
      auto xs = crossings(e, f);
      if (!xs.empty()) table_.mark(a, b);
      for (const auto& p : xs)
        if (boost::multiprecision::denominator(p.x) == 1) add({ViolationKind::EventAtCut, {ek(a), ek(b)}, {}, detail::lossy(p)});
      if (xs.size() >= 2 || (e.adjacent(f) && !xs.empty()))
        add({ViolationKind::DoubleCrossing, {ek(a), ek(b)}, {}, detail::lossy(xs.size() >= 2 ? xs[1] : xs[0])});
    } catch (const DegenerateError& err) {
      std::vector<int> who;
      if (err.kind() == Degeneracy::VertexOnEdge) {
        for (int w : {e.u, e.v, f.u, f.v}) {
          const Vertex& vx = d_.vertex(w);
          if (frac(err.where().x) == vx.x && err.where().y == vx.y) {
            who.push_back(w);
            break;
          }
        }
      }
      ViolationKind kind = err.kind() == Degeneracy::VertexOnEdge ? ViolationKind::VertexOnEdge : ViolationKind::Tangency;
      add({kind, {ek(a), ek(b)}, who, err.where()});
    }
  }

  void pairwise() {
    const std::size_t m = d_.edges().size();
    for (std::size_t a = 0; a < m; ++a) {
      if (!good_[a]) continue;
      for (std::size_t b = a + 1; b < m; ++b)
        if (good_[b]) exact_pair(a, b);
    }
    // vertices lying on edges they are not incident to (covers isolated vertices)
    for (const auto& v : d_.vertices()) {
      for (std::size_t k = 0; k < m; ++k) {
        const EdgeCurve& e = d_.edges()[k];
        if (!good_[k] || e.incident(v.id)) continue;
        auto side = open_side(e, v.point());
        if (side && *side == 0) add({ViolationKind::VertexOnEdge, {ek(k)}, {v.id}, v.point()});
      }
    }
  }

  struct Wire {
    std::uint32_t edge;
    bool negative;  // negative part of a circular edge: lift = cyl + lx
    std::uint32_t seg;
    std::int64_t start, end;  // cylinder range in grid units
  };
  struct Slot {
    i128 num;
    std::int64_t den;
    std::int64_t dy, dx;  // slope of the current segment
    std::uint32_t wire;
  };

  static int cmp_val(const Slot& a, const Slot& b) { return cmp(Frac{a.num, a.den}, Frac{b.num, b.den}); }
  static int cmp_slope(const Slot& a, const Slot& b) {
    i128 l = i128(a.dy) * b.dx, r = i128(b.dy) * a.dx;
    return (l > r) - (l < r);
  }
  // order just left of the current abscissa
  static bool left_less(const Slot& a, const Slot& b) {
    int c = cmp_val(a, b);
    if (c != 0) return c < 0;
    return cmp_slope(a, b) > 0;
  }
  static bool right_less(const Slot& a, const Slot& b) {
    int c = cmp_val(a, b);
    if (c != 0) return c < 0;
    return cmp_slope(a, b) < 0;
  }

  void record_crossing(std::uint32_t a, std::uint32_t b) {
    if (table_.mark(a, b) || d_.edges()[a].adjacent(d_.edges()[b])) suspicious_.emplace(std::min(a, b), std::max(a, b));
  }

  void sweep(const GridForm& g) {
    const std::size_t m = d_.edges().size();
    const std::int64_t L = g.lx;
    std::vector<Wire> wires;
    for (std::size_t k = 0; k < m; ++k) {
      if (!good_[k]) continue;
      const auto& xs = g.ex[k];
      if (d_.edges()[k].circular()) {
        std::uint32_t s = 0;
        while (xs[s + 1] <= L) ++s;  // segment holding lift L in its interior
        wires.push_back({std::uint32_t(k), true, s, 0, xs.back() - L});
        wires.push_back({std::uint32_t(k), false, 0, xs.front(), L});
      } else {
        wires.push_back({std::uint32_t(k), false, 0, xs.front(), xs.back()});
      }
    }
    // boundaries
    std::vector<std::int64_t> bs;
    for (std::int64_t x : g.vx)
      if (x > 0 && x < L) bs.push_back(x);
    for (std::size_t k = 0; k < m; ++k) {
      if (!good_[k]) continue;
      for (std::size_t i = 1; i + 1 < g.ex[k].size(); ++i) bs.push_back(g.ex[k][i] % L);
    }
    bs.push_back(L);
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());

    std::vector<std::vector<std::uint32_t>> starting(bs.size());
    std::vector<std::uint32_t> initial;
    for (std::uint32_t w = 0; w < wires.size(); ++w) {
      if (wires[w].start == 0) {
        initial.push_back(w);
      } else {
        auto it = std::lower_bound(bs.begin(), bs.end(), wires[w].start);
        starting[std::size_t(it - bs.begin())].push_back(w);
      }
    }
    std::vector<std::vector<std::size_t>> vertex_at(bs.size());
    for (std::size_t i = 0; i < g.vx.size(); ++i) {
      auto it = std::lower_bound(bs.begin(), bs.end(), g.vx[i]);
      if (it != bs.end() && *it == g.vx[i]) vertex_at[std::size_t(it - bs.begin())].push_back(i);
    }

    auto fill = [&](Slot& s, std::int64_t c) {
      const Wire& w = wires[s.wire];
      const auto& xs = g.ex[w.edge];
      const auto& ys = g.ey[w.edge];
      std::int64_t X = c + (w.negative ? L : 0);
      Frac v = seg_value(xs[w.seg], ys[w.seg], xs[w.seg + 1], ys[w.seg + 1], X);
      s.num = v.num;
      s.den = v.den;
      s.dy = ys[w.seg + 1] - ys[w.seg];
      s.dx = xs[w.seg + 1] - xs[w.seg];
    };

    std::vector<Slot> order;
    for (std::uint32_t w : initial) {
      Slot s{};
      s.wire = w;
      fill(s, 0);
      order.push_back(s);
    }
    std::sort(order.begin(), order.end(), right_less);
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (cmp_val(order[i], order[i + 1]) == 0) {
        std::uint32_t a = wires[order[i].wire].edge, b = wires[order[i + 1].wire].edge;
        Frac f{order[i].num, order[i].den};
        add({ViolationKind::EventAtCut, {ek(a), ek(b)}, {}, Point{Rational(0), frac_to_rational(f, g.ly)}});
      }

    std::vector<Slot> fresh, merged;
    for (std::size_t bi = 0; bi < bs.size(); ++bi) {
      const std::int64_t b = bs[bi];
      for (auto& s : order) fill(s, b);
      // insertion sort on the order just left of b; every swap is a crossing inside the slab
      for (std::size_t i = 1; i < order.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && left_less(order[j], order[j - 1])) {
          record_crossing(wires[order[j].wire].edge, wires[order[j - 1].wire].edge);
          std::swap(order[j], order[j - 1]);
          --j;
        }
      }
      if (b == L) break;

      // equal heights at b: fine only for edges meeting at a common vertex placed at b
      for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && cmp_val(order[i], order[j]) == 0) ++j;
        if (j - i > 1) {
          // the vertex at b with this height, if any
          int hub = INT32_MIN;
          for (std::size_t r : vertex_at[bi])
            if (cmp(Frac{order[i].num, order[i].den}, Frac{i128(g.vy[r]), 1}) == 0) hub = d_.vertices()[r].id;
          std::vector<std::uint32_t> in, out;
          for (std::size_t p = i; p < j; ++p) {
            std::uint32_t e = wires[order[p].wire].edge;
            (hub != INT32_MIN && d_.edges()[e].incident(hub) ? in : out).push_back(e);
          }
          for (std::size_t p = 0; p < out.size(); ++p) {
            for (std::size_t q = p + 1; q < out.size(); ++q) delegate(out[p], out[q]);
            for (std::uint32_t e : in) delegate(out[p], e);
          }
        }
        i = j;
      }

      if (!vertex_at[bi].empty()) {
        for (std::size_t r : vertex_at[bi]) {
          Frac yv{i128(g.vy[r]), 1};
          auto lo = std::lower_bound(order.begin(), order.end(), yv, [](const Slot& s, const Frac& y) {
            return cmp(Frac{s.num, s.den}, y) < 0;
          });
          const int id = d_.vertices()[r].id;
          for (auto it = lo; it != order.end() && cmp(Frac{it->num, it->den}, yv) == 0; ++it) {
            std::uint32_t e = wires[it->wire].edge;
            if (!d_.edges()[e].incident(id))
              add({ViolationKind::VertexOnEdge, {ek(e)}, {id}, d_.vertices()[r].point()});
          }
        }
        order.erase(std::remove_if(order.begin(), order.end(), [&](const Slot& s) { return wires[s.wire].end == b; }),
                    order.end());
      }

      for (auto& s : order) {
        Wire& w = wires[s.wire];
        const auto& xs = g.ex[w.edge];
        std::int64_t X = b + (w.negative ? L : 0);
        if (xs[w.seg + 1] == X) {
          ++w.seg;
          fill(s, b);
        }
      }
      // restore the order just right of b inside groups of equal height
      for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && cmp_val(order[i], order[j]) == 0) ++j;
        if (j - i > 1) std::sort(order.begin() + std::ptrdiff_t(i), order.begin() + std::ptrdiff_t(j), right_less);
        i = j;
      }

      if (!starting[bi].empty()) {
        fresh.clear();
        for (std::uint32_t w : starting[bi]) {
          Slot s{};
          s.wire = w;
          fill(s, b);
          fresh.push_back(s);
        }
        std::sort(fresh.begin(), fresh.end(), right_less);
        for (std::size_t i = 0; i + 1 < fresh.size(); ++i)
          if (cmp_val(fresh[i], fresh[i + 1]) == 0 && cmp_slope(fresh[i], fresh[i + 1]) == 0) {
            delegate(wires[fresh[i].wire].edge, wires[fresh[i + 1].wire].edge);
          }
        merged.clear();
        merged.reserve(order.size() + fresh.size());
        std::merge(order.begin(), order.end(), fresh.begin(), fresh.end(), std::back_inserter(merged), right_less);
        // new wires tied with old ones at b: an old curve passes through the new vertex
        order.swap(merged);
      }
    }

    for (auto [a, b] : suspicious_)
      if (!delegated_.count({a, b})) exact_pair(a, b);
    for (auto [a, b] : delegated_) {
      table_.unmark(a, b);
      exact_pair(a, b);
    }
  }

  static Rational frac_to_rational(const Frac& f, std::int64_t ly) {
    return Rational::from128(f.num, i128(f.den) * ly);
  }

  void delegate(std::uint32_t a, std::uint32_t b) { delegated_.emplace(std::min(a, b), std::max(a, b)); }

  Analysis finish() {
    std::sort(found_.begin(), found_.end(), [](const Violation& a, const Violation& b) { return a.key() < b.key(); });
    found_.erase(std::unique(found_.begin(), found_.end(),
                             [](const Violation& a, const Violation& b) { return a.key() == b.key(); }),
                 found_.end());
    Analysis out;
    out.report.truncated = found_.size() > opt_.max_violations;
    if (out.report.truncated) found_.resize(opt_.max_violations);
    out.report.violations = std::move(found_);
    out.report.ok = out.report.violations.empty();
    out.table = std::move(table_);
    return out;
  }

  const Drawing& d_;
  ValidateOptions opt_;
  CrossingTable table_;
  std::vector<bool> good_;
  std::vector<Violation> found_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> suspicious_, delegated_;
};

}  // namespace detail

/// Full check plus the crossing table gathered on the way.
inline Analysis analyze(const Drawing& d, const ValidateOptions& opt = {}) { return detail::Validator(d, opt).run(); }

inline ValidationReport validate(const Drawing& d, const ValidateOptions& opt = {}) { return analyze(d, opt).report; }

/// Crossing table of a valid drawing; throws InvalidDrawing otherwise.
inline CrossingTable crossing_table(const Drawing& d) {
  auto a = analyze(d);
  if (!a.report.ok) throw Error(Errc::InvalidDrawing, a.report.summary());
  return std::move(a.table);
}

}  // namespace mcd
