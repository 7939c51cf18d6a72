#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcd/detail/grid.hpp"
#include "mcd/detail/rng.hpp"
#include "mcd/geometry.hpp"
#include "mcd/validate.hpp"

namespace mcd {

struct GenConfig {
  int n = 10;
  std::uint64_t seed = 1;
  Rational wrap_prob = Rational(1, 2);
  int max_attempts = 20;
  int breakpoint_budget = 4;            // interior polyline points per edge
  std::int64_t coordinate_grid = 65536; // x denominators of vertices and breakpoints
  int walk_steps = -1;                  // perturbation proposals; negative picks a size-based default
};

namespace detail {

// Drawing on an integer grid: x in units of 1/D, y integral.
struct IntEdge {
  int a, b;  // vertex ranks, a < b
  bool circular;
  std::vector<std::int64_t> x, y;
};

struct IntDrawing {
  std::int64_t D = 1;
  std::vector<std::int64_t> vx, vy;
  std::vector<IntEdge> edges;
};

inline Drawing to_drawing(const IntDrawing& g, std::int64_t ly = 1, int id_base = 0) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < g.vx.size(); ++i)
    vs.push_back({int(i) + id_base, Rational(g.vx[i], g.D), Rational(g.vy[i], ly)});
  std::vector<EdgeCurve> es;
  for (const auto& e : g.edges) {
    EdgeCurve c;
    c.u = e.a + id_base;
    c.v = e.b + id_base;
    c.wrap = e.circular ? Wrap::Circular : Wrap::Direct;
    for (std::size_t i = 0; i < e.x.size(); ++i) c.polyline.push_back({Rational(e.x[i], g.D), Rational(e.y[i], ly)});
    es.push_back(std::move(c));
  }
  return Drawing(std::move(vs), std::move(es));
}

/// n sorted grid abscissae in (0, D) with pairwise gaps and margins >= gap.
inline std::vector<std::int64_t> sample_abscissae(Rng& rng, int n, std::int64_t D, std::int64_t gap) {
  std::int64_t slack = D - std::int64_t(n + 1) * gap;
  if (slack < 0) throw Error(Errc::GenerationFailed, "coordinate grid too coarse for n");
  std::vector<std::int64_t> s(static_cast<std::size_t>(n));
  for (auto& v : s) v = rng.range(0, slack);
  std::sort(s.begin(), s.end());
  std::vector<std::int64_t> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[std::size_t(i)] = gap * (i + 1) + s[std::size_t(i)];
  return x;
}

// Flag skeleton: every edge leaves its right endpoint, climbs or drops to a
// private level next to it, runs flat across the cut and drops onto the left
// endpoint. Heights form an extreme sequence (each vertex is a new maximum or
// a new minimum); with the fan order below this makes the drawing simple.
inline IntDrawing hook_flag(std::int64_t D, const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
                            std::int64_t delta) {
  IntDrawing g;
  g.D = D;
  g.vx = xs;
  g.vy = ys;
  const int n = int(xs.size());
  for (int j = 1; j < n; ++j) {
    std::vector<int> down, up;
    for (int i = 0; i < j; ++i) (ys[std::size_t(i)] < ys[std::size_t(j)] ? down : up).push_back(i);
    std::map<int, std::int64_t> level;
    // longer trips sit further out below, closer in above
    for (std::size_t k = 0; k < down.size(); ++k) level[down[k]] = ys[std::size_t(j)] - std::int64_t(down.size() - k);
    std::reverse(up.begin(), up.end());
    for (std::size_t k = 0; k < up.size(); ++k) level[up[k]] = ys[std::size_t(j)] + std::int64_t(k + 1);
    for (int i = 0; i < j; ++i) {
      IntEdge e{i, j, true, {}, {}};
      std::int64_t L = level[i];
      e.x = {xs[std::size_t(j)], xs[std::size_t(j)] + delta, D + xs[std::size_t(i)] - delta, D + xs[std::size_t(i)]};
      e.y = {ys[std::size_t(j)], L, L, ys[std::size_t(i)]};
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

inline std::vector<std::int64_t> extreme_heights(Rng& rng, int n, std::int64_t spacing) {
  std::vector<std::int64_t> y(std::size_t(n), 0);
  std::int64_t hi = 0, lo = 0;
  const std::uint64_t bias = rng.range(1, 3);
  for (int i = 1; i < n; ++i) {
    std::int64_t step = rng.range(spacing, 2 * spacing);
    if (rng.chance(bias, 4)) {
      hi += step;
      y[std::size_t(i)] = hi;
    } else {
      lo -= step;
      y[std::size_t(i)] = lo;
    }
  }
  return y;
}

// Local perturbation: re-draw one edge's interior heights and keep the change
// only if that edge still meets every other edge legally.
class Walker {
 public:
  Walker(IntDrawing& g, Rng& rng, int budget, std::int64_t spacing) : g_(g), rng_(rng), budget_(budget), spacing_(spacing) {
    const int n = int(g_.vx.size());
    for (int i = 0; i + 1 < n; ++i) columns_.push_back((g_.vx[std::size_t(i)] + g_.vx[std::size_t(i) + 1]) / 2);
    if (n > 0) {
      std::int64_t m = (g_.vx.back() + g_.D + g_.vx.front()) / 2;
      if (m == g_.D) --m;
      columns_.push_back(m);
    }
    std::vector<std::int64_t> lifted = columns_;
    for (auto c : lifted) columns_.push_back(c + g_.D);
    std::sort(columns_.begin(), columns_.end());
  }

  int run(int steps) {
    int accepted = 0;
    for (int s = 0; s < steps && !g_.edges.empty(); ++s) accepted += propose() ? 1 : 0;
    return accepted;
  }

  bool edge_ok(std::size_t k) const {
    const IntEdge& e = g_.edges[k];
    GridCurve P{e.x.data(), e.y.data(), e.x.size(), e.circular ? e.b : e.a, e.circular ? e.a : e.b};
    for (std::size_t o = 0; o < g_.edges.size(); ++o) {
      if (o == k) continue;
      const IntEdge& f = g_.edges[o];
      GridCurve Q{f.x.data(), f.y.data(), f.x.size(), f.circular ? f.b : f.a, f.circular ? f.a : f.b};
      int c = grid_pair_crossings(P, Q, g_.D);
      if (c < 0) return false;
      bool adjacent = e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b;
      if (c > (adjacent ? 0 : 1)) return false;
    }
    return true;
  }

 private:
  bool propose() {
    std::size_t k = std::size_t(rng_.below(g_.edges.size()));
    IntEdge& e = g_.edges[k];
    if (e.x.size() < 4) return false;
    IntEdge saved = e;
    if (rng_.chance(1, 2)) {
      std::int64_t off = rng_.range(-spacing_, spacing_);
      if (off == 0) return false;
      for (std::size_t i = 1; i + 1 < e.x.size(); ++i) e.y[i] += off;
    } else {
      // a column strictly inside the flat part
      std::int64_t lo = e.x[1], hi = e.x[e.x.size() - 2];
      std::vector<std::int64_t> cand;
      for (auto c : columns_)
        if (c > lo && c < hi) cand.push_back(c);
      if (cand.empty()) return false;
      std::int64_t c = cand[rng_.below(cand.size())];
      auto it = std::lower_bound(e.x.begin(), e.x.end(), c);
      std::size_t at = std::size_t(it - e.x.begin());
      std::int64_t jitter = rng_.range(-spacing_, spacing_);
      if (*it == c) {
        e.y[at] += jitter;
      } else {
        if (int(e.x.size()) - 2 >= budget_) return false;
        // height of the current curve at c, rounded down
        i128 num = i128(e.y[at - 1]) * (e.x[at] - c) + i128(e.y[at]) * (c - e.x[at - 1]);
        i128 den = e.x[at] - e.x[at - 1];
        std::int64_t base = std::int64_t(num / den - ((num % den != 0 && num < 0) ? 1 : 0));
        e.x.insert(e.x.begin() + std::ptrdiff_t(at), c);
        e.y.insert(e.y.begin() + std::ptrdiff_t(at), base + jitter);
      }
    }
    if (edge_ok(k)) return true;
    e = std::move(saved);
    return false;
  }

  IntDrawing& g_;
  Rng& rng_;
  int budget_;
  std::int64_t spacing_;
  std::vector<std::int64_t> columns_;
};

inline int default_walk(int n, int requested) {
  if (requested >= 0) return requested;
  if (n <= 14) return 40 * n;
  return std::min(2 * n, 160);
}

inline std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed * 0x9E3779B97F4A7C15ULL + std::uint64_t(attempt) * 0xD1B54A32D192ED03ULL + 1;
}

inline void check_config(const GenConfig& cfg) {
  if (cfg.n < 2) throw Error(Errc::InvalidArgument, "n must be at least 2");
  if (cfg.max_attempts < 1) throw Error(Errc::InvalidArgument, "max_attempts must be positive");
  if (cfg.wrap_prob < Rational(0) || cfg.wrap_prob > Rational(1))
    throw Error(Errc::InvalidArgument, "wrap_prob must lie in [0, 1]");
}

inline IntDrawing flag_candidate(const GenConfig& cfg, Rng& rng) {
  const std::int64_t D = cfg.coordinate_grid;
  const std::int64_t gap = 8;
  auto xs = sample_abscissae(rng, cfg.n, D, gap);
  std::int64_t mg = std::min(xs.front(), D - xs.back());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) mg = std::min(mg, xs[i + 1] - xs[i]);
  const std::int64_t delta = std::max<std::int64_t>(1, mg / 4);
  const std::int64_t spacing = 2 * cfg.n + 2;
  auto ys = extreme_heights(rng, cfg.n, spacing);
  IntDrawing g = hook_flag(D, xs, ys, delta);
  Walker w(g, rng, std::max(2, cfg.breakpoint_budget), spacing);
  w.run(default_walk(cfg.n, cfg.walk_steps));
  return g;
}

/// Candidate cuts (one inside each gap between consecutive vertices, plus the
/// current cut at 0) with the fraction of edges that would wrap.
inline std::vector<std::pair<Rational, Rational>> cut_candidates(const Drawing& d) {
  std::vector<std::pair<Rational, Rational>> out;
  const auto& vs = d.vertices();
  const std::int64_t m = std::int64_t(d.edges().size());
  if (m == 0) return {{Rational(0), Rational(0)}};
  std::int64_t wraps0 = std::count_if(d.edges().begin(), d.edges().end(), [](const EdgeCurve& e) { return e.circular(); });
  out.emplace_back(Rational(0), Rational(wraps0, m));
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    // off-centre so the cut avoids the usual breakpoint columns
    Rational a = vs[i].x + (vs[i + 1].x - vs[i].x) * Rational(3, 8);
    std::int64_t wraps = 0;
    for (const auto& e : d.edges())
      for (const auto& [lo, hi] : cylinder_domain(e))
        if (lo < a && a < hi) {
          ++wraps;
          break;
        }
    out.emplace_back(a, Rational(wraps, m));
  }
  return out;
}

inline Drawing recut_towards(const Drawing& d, const Rational& target) {
  auto cands = cut_candidates(d);
  std::stable_sort(cands.begin(), cands.end(), [&](const auto& p, const auto& q) {
    return abs(p.second - target) < abs(q.second - target);
  });
  for (const auto& [a, frac_] : cands) {
    if (a == Rational(0)) return d;
    if (!cut_obstruction(d, a)) return recut(d, a);
  }
  return d;
}

// Straight segments between integer points, seen through a four-sector
// projective chart: a point in sector k (rotated to (a, b) with a > |b|) maps
// to x = phi + (k + (b/a + 1)/2)/4, y = -M/a. Lines become polylines that
// bend only on the sector boundaries. Coordinates are snapped to dyadic grids
// afterwards, so the result is re-validated by the caller.
inline std::pair<std::int64_t, std::int64_t> rotate_back(std::int64_t px, std::int64_t py, int k) {
  switch (k & 3) {
    case 0: return {px, py};
    case 1: return {py, -px};
    case 2: return {-px, -py};
    default: return {-py, px};
  }
}

inline int sector(std::int64_t px, std::int64_t py) {
  if (px > std::abs(py)) return 0;
  if (py > std::abs(px)) return 1;
  if (-px > std::abs(py)) return 2;
  return 3;
}

inline std::int64_t floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return std::int64_t(q);
}

inline std::optional<Drawing> chart_candidate(const GenConfig& cfg, Rng& rng) {
  const std::int64_t M = 4096;
  const std::int64_t XD = std::int64_t(1) << 24;
  const int n = cfg.n;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  auto cross = [](std::pair<std::int64_t, std::int64_t> a, std::pair<std::int64_t, std::int64_t> b) {
    return i128(a.first) * b.second - i128(a.second) * b.first;
  };
  int guard = 0;
  while (int(pts.size()) < n) {
    if (++guard > 200 * n) return std::nullopt;
    std::pair<std::int64_t, std::int64_t> p{rng.range(-M, M), rng.range(-M, M)};
    if (std::max(std::abs(p.first), std::abs(p.second)) < M / 4 || std::abs(p.first) == std::abs(p.second)) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      if (cross(pts[i], p) == 0) ok = false;  // same or opposite direction
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j) {
        std::pair<std::int64_t, std::int64_t> u{pts[j].first - pts[i].first, pts[j].second - pts[i].second};
        std::pair<std::int64_t, std::int64_t> v{p.first - pts[i].first, p.second - pts[i].second};
        if (cross(u, v) == 0) ok = false;
      }
    }
    if (ok) pts.push_back(p);
  }
  const Rational phi(rng.range(1, XD / 4 - 1), XD);
  auto chart_x = [&](std::int64_t px, std::int64_t py) {
    int k = sector(px, py);
    auto [a, b] = rotate_back(px, py, k);
    Rational t(b, a);
    return frac(phi + (Rational(k) + (t + Rational(1)) / Rational(2)) / Rational(4));
  };
  auto chart_y = [&](const Rational& a) { return Rational(-M) / a; };

  struct Raw {
    Rational x, y;
  };
  std::vector<Raw> vraw;
  for (auto [px, py] : pts) {
    int k = sector(px, py);
    vraw.push_back({chart_x(px, py), chart_y(Rational(rotate_back(px, py, k).first))});
  }
  // edges: lift abscissae exact, heights exact
  struct RawEdge {
    int s, t;
    std::vector<Raw> pts;
  };
  std::vector<RawEdge> eraw;
  Rational ymax(1);
  const std::array<std::pair<int, int>, 4> dirs{{{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int s = i, t = j;
      if (cross(pts[std::size_t(i)], pts[std::size_t(j)]) < 0) std::swap(s, t);
      auto P = pts[std::size_t(s)], Q = pts[std::size_t(t)];
      int ks = sector(P.first, P.second), kt = sector(Q.first, Q.second);
      RawEdge re{s, t, {vraw[std::size_t(s)]}};
      Rational lastx = vraw[std::size_t(s)].x;
      for (int step = 1; step <= ((kt - ks) & 3); ++step) {
        int m = (ks + step) & 3;
        auto [dx, dy] = dirs[std::size_t(m)];
        i128 cp = i128(P.first) * dy - i128(P.second) * dx;
        i128 cq = i128(Q.first - P.first) * dy - i128(Q.second - P.second) * dx;
        Rational sp = Rational::from128(-cp, cq);
        Rational bx = Rational(P.first) + sp * Rational(Q.first - P.first);
        Rational by = Rational(P.second) + sp * Rational(Q.second - P.second);
        Rational a = (m & 3) == 0 ? bx : (m == 1 ? by : (m == 2 ? -bx : -by));
        Rational x = frac(phi + Rational(m, 4));
        while (x <= lastx) x += Rational(1);
        lastx = x;
        Rational y = chart_y(a);
        ymax = std::max(ymax, abs(y));
        re.pts.push_back({x, y});
      }
      Rational x = vraw[std::size_t(t)].x;
      while (x <= lastx) x += Rational(1);
      re.pts.push_back({x, vraw[std::size_t(t)].y});
      eraw.push_back(std::move(re));
    }
  int bits = 0;
  while (Rational(std::int64_t(1) << bits) <= ymax) ++bits;
  if (bits > 30) return std::nullopt;
  const std::int64_t YD = std::int64_t(1) << std::min(24, 38 - bits);
  auto snap = [](const Rational& r, std::int64_t den) {
    return Rational(floor_div(i128(r.num()) * den, r.den()), den);
  };
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back({i, snap(vraw[std::size_t(i)].x, XD), snap(vraw[std::size_t(i)].y, YD)});
  std::vector<EdgeCurve> es;
  for (const auto& re : eraw) {
    EdgeCurve e;
    for (std::size_t k = 0; k < re.pts.size(); ++k) {
      Rational x = re.pts[k].x;
      Rational y = re.pts[k].y;
      if (k == 0 || k + 1 == re.pts.size()) {
        const Vertex& v = vs[std::size_t(k == 0 ? re.s : re.t)];
        x = v.x + Rational(x.floor());
        y = v.y;
      } else {
        y = snap(y, YD);
      }
      e.polyline.push_back({x, y});
    }
    bool wraps = e.polyline.back().x > Rational(1);
    e.wrap = wraps ? Wrap::Circular : Wrap::Direct;
    e.u = wraps ? re.t : re.s;
    e.v = wraps ? re.s : re.t;
    es.push_back(std::move(e));
  }
  for (const auto& v : vs)
    if (v.x == Rational(0)) return std::nullopt;
  return Drawing(std::move(vs), std::move(es));
}

template <class Make>
Drawing generate_validated(const GenConfig& cfg, const char* what, Make make) {
  check_config(cfg);
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng(attempt_seed(cfg.seed, attempt));
    std::optional<Drawing> d;
    try {
      d = make(rng);
    } catch (const Error& e) {
      if (e.code() == Errc::GenerationFailed) throw;
      continue;
    }
    if (d && validate(*d).ok) return std::move(*d);
  }
  throw Error(Errc::GenerationFailed, std::string(what) + ": no valid drawing after " +
                                          std::to_string(cfg.max_attempts) + " attempts");
}

}  // namespace detail

/// Random simple flag (every edge crosses the cut line).
inline Drawing gen_flag(const GenConfig& cfg) {
  return detail::generate_validated(cfg, "gen_flag", [&](detail::Rng& rng) -> std::optional<Drawing> {
    Drawing d = detail::to_drawing(detail::flag_candidate(cfg, rng));
    if (!is_flag(d)) return std::nullopt;
    return d;
  });
}

/// Straight-line drawing of points in general position; no edge wraps.
inline Drawing gen_planefree(const GenConfig& cfg) {
  return detail::generate_validated(cfg, "gen_planefree", [&](detail::Rng& rng) -> std::optional<Drawing> {
    const std::int64_t D = cfg.coordinate_grid;
    auto xs = detail::sample_abscissae(rng, cfg.n, D, 1);
    std::vector<std::int64_t> ys;
    for (int i = 0; i < cfg.n; ++i) {
      for (int tries = 0;; ++tries) {
        if (tries > 1000) return std::nullopt;
        std::int64_t y = rng.range(-D, D);
        bool ok = true;
        for (int a = 0; ok && a < i; ++a)
          for (int b = a + 1; ok && b < i; ++b) {
            detail::i128 c = detail::i128(xs[std::size_t(b)] - xs[std::size_t(a)]) * (y - ys[std::size_t(a)]) -
                             detail::i128(ys[std::size_t(b)] - ys[std::size_t(a)]) * (xs[std::size_t(i)] - xs[std::size_t(a)]);
            if (c == 0) ok = false;
          }
        if (ok) {
          ys.push_back(y);
          break;
        }
      }
    }
    detail::IntDrawing g;
    g.D = D;
    g.vx = xs;
    g.vy = ys;
    for (int a = 0; a < cfg.n; ++a)
      for (int b = a + 1; b < cfg.n; ++b)
        g.edges.push_back({a, b, false, {xs[std::size_t(a)], xs[std::size_t(b)]}, {ys[std::size_t(a)], ys[std::size_t(b)]}});
    return detail::to_drawing(g);
  });
}

/// Mixed drawing whose fraction of wrapping edges is as close to wrap_prob as
/// the chosen family allows: 0 gives a straight-line drawing, 1 a flag, high
/// targets re-cut a flag, low targets re-cut a projective chart drawing.
inline Drawing gen_mixed(const GenConfig& cfg) {
  detail::check_config(cfg);
  if (cfg.wrap_prob == Rational(0)) return gen_planefree(cfg);
  if (cfg.wrap_prob == Rational(1)) return gen_flag(cfg);
  return detail::generate_validated(cfg, "gen_mixed", [&](detail::Rng& rng) -> std::optional<Drawing> {
    std::optional<Drawing> base;
    if (cfg.wrap_prob > Rational(1, 2)) {
      base = detail::to_drawing(detail::flag_candidate(cfg, rng));
    } else {
      base = detail::chart_candidate(cfg, rng);
    }
    if (!base || !validate(*base).ok) return std::nullopt;
    return detail::recut_towards(*base, cfg.wrap_prob);
  });
}

inline Rational wrap_fraction(const Drawing& d) {
  if (d.edges().empty()) return Rational(0);
  std::int64_t c = std::count_if(d.edges().begin(), d.edges().end(), [](const EdgeCurve& e) { return e.circular(); });
  return Rational(c, std::int64_t(d.edges().size()));
}

namespace detail {

inline Drawing structured_flag(const std::vector<std::int64_t>& ys) {
  const int n = int(ys.size());
  const std::int64_t D = 8 * n;
  std::vector<std::int64_t> xs;
  for (int i = 0; i < n; ++i) xs.push_back(4 * (2 * i + 1));
  IntDrawing g = hook_flag(D, xs, ys, 1);
  return to_drawing(g, 1, 1);
}

}  // namespace detail

/// Hand-built drawings with known structure, keyed by name.
inline std::vector<std::pair<std::string, Drawing>> gen_archetypes() {
  auto R = [](std::int64_t a, std::int64_t b = 1) { return Rational(a, b); };
  std::vector<std::pair<std::string, Drawing>> out;
  {
    // two disjoint edges whose vertical order differs on their two common arcs
    std::vector<Vertex> vs{{1, R(2, 5), R(-1)}, {2, R(3, 5), R(1)}, {3, R(1, 10), R(0)}, {4, R(9, 10), R(0)}};
    std::vector<EdgeCurve> es{
        {3, 4, Wrap::Direct, {{R(1, 10), R(0)}, {R(9, 10), R(0)}}},
        {1, 2, Wrap::Circular, {{R(3, 5), R(1)}, {R(23, 25), R(1)}, {R(21, 20), R(-1)}, {R(7, 5), R(-1)}}}};
    out.emplace_back("not-related", Drawing(vs, es));
  }
  {
    // pairwise related edges with no common vertical line, ordered cyclically
    std::vector<Vertex> vs{{1, R(1, 12), R(0)}, {2, R(1, 4), R(1)}, {3, R(5, 12), R(-1)},
                           {4, R(7, 12), R(0)}, {5, R(3, 4), R(0)}, {6, R(11, 12), R(1)}};
    std::vector<EdgeCurve> es{
        {1, 4, Wrap::Direct, {{R(1, 12), R(0)}, {R(7, 12), R(0)}}},
        {3, 6, Wrap::Direct, {{R(5, 12), R(-1)}, {R(11, 12), R(1)}}},
        {2, 5, Wrap::Circular, {{R(3, 4), R(0)}, {R(23, 24), R(0)}, {R(25, 24), R(1)}, {R(5, 4), R(1)}}}};
    out.emplace_back("cycle", Drawing(vs, es));
  }
  {
    // later vertices alternate above and below v1v2
    std::vector<std::int64_t> ys{0, 22};
    std::int64_t hi = 22, lo = 0;
    for (int i = 2; i < 10; ++i) ys.push_back(i % 2 == 0 ? (hi += 22) : (lo -= 22));
    out.emplace_back("separating", detail::structured_flag(ys));
  }
  {
    // everything after v2 is a new minimum
    std::vector<std::int64_t> ys{0, 22};
    for (int i = 2; i < 10; ++i) ys.push_back(-22 * (i - 1));
    out.emplace_back("upper-triplet", detail::structured_flag(ys));
  }
  return out;
}

inline Drawing archetype(const std::string& name) {
  for (auto& [k, d] : gen_archetypes())
    if (k == name) return d;
  throw Error(Errc::InvalidArgument, "unknown archetype '" + name + "'");
}

}  // namespace mcd
