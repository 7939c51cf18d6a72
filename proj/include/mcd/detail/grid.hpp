#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mcd/drawing.hpp"

namespace mcd::detail {

// Integer image of a drawing: every lift x multiplied by lx, every y by ly.
// Coordinates are kept below 2^40 so that products of a value numerator with
// a denominator stay inside signed 128-bit range.
struct GridForm {
  std::int64_t lx = 1;
  std::int64_t ly = 1;
  std::vector<std::vector<std::int64_t>> ex, ey;  // per edge, lift polyline
  std::vector<std::int64_t> vx, vy;               // per vertex rank
};

constexpr std::int64_t kGridLimit = std::int64_t(1) << 40;

inline bool lcm_into(std::int64_t& acc, std::int64_t d, std::int64_t cap) {
  std::int64_t g = std::gcd(acc, d);
  i128 l = i128(acc / g) * d;
  if (l > cap) return false;
  acc = std::int64_t(l);
  return true;
}

inline bool scale_into(const Rational& r, std::int64_t l, std::int64_t& out) {
  i128 v = i128(r.num()) * (l / r.den());
  if (v > kGridLimit || v < -kGridLimit) return false;
  out = std::int64_t(v);
  return true;
}

inline std::optional<GridForm> to_grid(const Drawing& d) {
  GridForm g;
  for (const auto& v : d.vertices()) {
    if (!lcm_into(g.lx, v.x.den(), kGridLimit / 4)) return std::nullopt;
    if (!lcm_into(g.ly, v.y.den(), kGridLimit)) return std::nullopt;
  }
  for (const auto& e : d.edges())
    for (const auto& p : e.polyline) {
      if (!lcm_into(g.lx, p.x.den(), kGridLimit / 4)) return std::nullopt;
      if (!lcm_into(g.ly, p.y.den(), kGridLimit)) return std::nullopt;
    }
  g.vx.resize(d.n());
  g.vy.resize(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) {
    if (!scale_into(d.vertices()[i].x, g.lx, g.vx[i])) return std::nullopt;
    if (!scale_into(d.vertices()[i].y, g.ly, g.vy[i])) return std::nullopt;
  }
  g.ex.resize(d.edges().size());
  g.ey.resize(d.edges().size());
  for (std::size_t k = 0; k < d.edges().size(); ++k) {
    const auto& pl = d.edges()[k].polyline;
    g.ex[k].resize(pl.size());
    g.ey[k].resize(pl.size());
    for (std::size_t i = 0; i < pl.size(); ++i) {
      if (!scale_into(pl[i].x, g.lx, g.ex[k][i])) return std::nullopt;
      if (!scale_into(pl[i].y, g.ly, g.ey[k][i])) return std::nullopt;
    }
  }
  return g;
}

/// value = num / den with den > 0
struct Frac {
  i128 num;
  std::int64_t den;
};

inline int cmp(const Frac& a, const Frac& b) {
  i128 l = a.num * b.den, r = b.num * a.den;
  return (l > r) - (l < r);
}

/// Height at X of segment (x0,y0)-(x1,y1), x0 < x1, x0 <= X <= x1.
inline Frac seg_value(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1, std::int64_t X) {
  return {i128(y0) * (x1 - X) + i128(y1) * (X - x0), x1 - x0};
}

/// Crossing count between two integer polylines (edge polylines in lift
/// coordinates, with endpoint vertex ranks) over translates -1, 0, +1.
/// Returns -1 on any degenerate contact (overlap, tangency, endpoint on a
/// curve other than a shared endpoint).
struct GridCurve {
  const std::int64_t* x;
  const std::int64_t* y;
  std::size_t size;
  int start_vertex;
  int end_vertex;
};

inline Frac curve_value(const GridCurve& c, std::size_t& seg, std::int64_t X) {
  while (seg + 2 < c.size && c.x[seg + 1] <= X) ++seg;
  if (X == c.x[seg]) return {i128(c.y[seg]), 1};
  if (X == c.x[seg + 1]) return {i128(c.y[seg + 1]), 1};
  return seg_value(c.x[seg], c.y[seg], c.x[seg + 1], c.y[seg + 1], X);
}

inline int grid_pair_crossings(const GridCurve& P, const GridCurve& Q, std::int64_t lx) {
  int total = 0;
  thread_local std::vector<std::int64_t> xs;
  thread_local std::vector<int> sg;
  for (std::int64_t t = -1; t <= 1; ++t) {
    const std::int64_t sh = t * lx;
    std::int64_t lo = std::max(P.x[0], Q.x[0] + sh);
    std::int64_t hi = std::min(P.x[P.size - 1], Q.x[Q.size - 1] + sh);
    if (lo > hi) continue;
    auto end_id = [&](const GridCurve& c, std::int64_t X, std::int64_t s) -> int {
      if (c.x[0] + s == X) return c.start_vertex;
      if (c.x[c.size - 1] + s == X) return c.end_vertex;
      return -1;
    };
    auto contact_ok = [&](std::int64_t X) {
      int a = end_id(P, X, 0), b = end_id(Q, X, sh);
      return a >= 0 && a == b;
    };
    xs.clear();
    xs.push_back(lo);
    std::size_t i = 0, j = 0;
    while (i < P.size || j < Q.size) {
      std::int64_t a = i < P.size ? P.x[i] : INT64_MAX;
      std::int64_t b = j < Q.size ? Q.x[j] + sh : INT64_MAX;
      std::int64_t m = std::min(a, b);
      if (a == m) ++i;
      if (b == m) ++j;
      if (m > lo && m < hi) xs.push_back(m);
    }
    if (hi > lo) xs.push_back(hi);
    sg.clear();
    std::size_t sp = 0, sq = 0;
    for (std::int64_t X : xs) {
      Frac a = curve_value(P, sp, X);
      Frac b = curve_value(Q, sq, X - sh);
      sg.push_back(cmp(a, b));
    }
    if (xs.size() == 1) {
      if (sg[0] == 0 && !contact_ok(lo)) return -1;
      continue;
    }
    const std::size_t m = xs.size();
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (sg[k] == 0 && sg[k + 1] == 0) return -1;
      if (sg[k] != 0 && sg[k + 1] != 0 && sg[k] != sg[k + 1]) ++total;
    }
    for (std::size_t k = 1; k + 1 < m; ++k) {
      if (sg[k] != 0) continue;
      if (sg[k - 1] == sg[k + 1]) return -1;
      ++total;
    }
    if (sg[0] == 0 && !contact_ok(lo)) return -1;
    if (sg[m - 1] == 0 && !contact_ok(hi)) return -1;
  }
  return total;
}

}  // namespace mcd::detail
