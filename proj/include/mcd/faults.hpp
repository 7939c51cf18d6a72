#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcd/detail/rng.hpp"
#include "mcd/drawing.hpp"
#include "mcd/geometry.hpp"
#include "mcd/validate.hpp"

namespace mcd {

enum class Fault : std::uint8_t { DoubleCrossing, Tangency, VertexAtCut, LongSpan, DuplicateX };

inline const char* to_string(Fault f) {
  switch (f) {
    case Fault::DoubleCrossing: return "double-crossing";
    case Fault::Tangency: return "tangency";
    case Fault::VertexAtCut: return "vertex-at-cut";
    case Fault::LongSpan: return "long-span";
    case Fault::DuplicateX: return "duplicate-x";
  }
  return "?";
}

/// The violation kind the validator must report for a fault.
inline ViolationKind expected_violation(Fault f) {
  switch (f) {
    case Fault::DoubleCrossing: return ViolationKind::DoubleCrossing;
    case Fault::Tangency: return ViolationKind::Tangency;
    case Fault::VertexAtCut: return ViolationKind::EventAtCut;
    case Fault::LongSpan: return ViolationKind::SpanAtLeastOne;
    case Fault::DuplicateX: return ViolationKind::DuplicateX;
  }
  return ViolationKind::MalformedEdge;
}

struct InjectedFault {
  Drawing drawing;
  std::vector<int> vertices;
  std::vector<EdgeKey> edges;
};

namespace detail {

// Reroute e near an interval where e and f run side by side without events,
// either across f and back (cross) or down onto f (touch).
inline std::optional<Polyline> detour(const EdgeCurve& e, const EdgeCurve& f, bool cross) {
  const Polyline& P = e.polyline;
  for (std::int64_t t : kTranslates) {
    Rational lo = std::max(P.front().x, f.polyline.front().x + Rational(t));
    Rational hi = std::min(P.back().x, f.polyline.back().x + Rational(t));
    if (!(lo < hi)) continue;
    std::vector<Rational> ev{lo, hi};
    for (const auto& p : P)
      if (lo < p.x && p.x < hi) ev.push_back(p.x);
    for (const auto& p : f.polyline) {
      Rational x = p.x + Rational(t);
      if (lo < x && x < hi) ev.push_back(x);
    }
    std::sort(ev.begin(), ev.end());
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
      Rational w = ev[i + 1] - ev[i];
      if (w == Rational(0)) continue;
      Rational x1 = ev[i] + w * Rational(1, 4), x2 = ev[i] + w * Rational(1, 2), x3 = ev[i] + w * Rational(3, 4);
      auto fy = [&](const Rational& x) { return eval_lift(f.polyline, x - Rational(t)); };
      Rational d1 = eval_lift(P, x1) - fy(x1), d3 = eval_lift(P, x3) - fy(x3);
      if (d1.sign() == 0 || d1.sign() != d3.sign()) continue;
      Rational y2 = fy(x2);
      if (cross) y2 = y2 - Rational(d1.sign()) * (abs(d1) + abs(d3) + Rational(1));
      Polyline out;
      for (const auto& p : P)
        if (p.x < x1) out.push_back(p);
      out.push_back({x1, eval_lift(P, x1)});
      out.push_back({x2, y2});
      out.push_back({x3, eval_lift(P, x3)});
      for (const auto& p : P)
        if (p.x > x3) out.push_back(p);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Breaks one invariant of a valid drawing (n >= 4 for the edge faults).
inline std::optional<InjectedFault> inject_fault(const Drawing& d, Fault kind, std::uint64_t seed) {
  detail::Rng rng(seed);
  std::vector<Vertex> vs = d.vertices();
  std::vector<EdgeCurve> es = d.edges();
  const std::size_t n = vs.size(), m = es.size();
  if (n < 2) return std::nullopt;
  switch (kind) {
    case Fault::VertexAtCut: {
      std::size_t i = std::size_t(rng.range(0, std::int64_t(n) - 1));
      vs[i].x = Rational(0);
      int id = vs[i].id;
      return InjectedFault{Drawing(std::move(vs), std::move(es)), {id}, {}};
    }
    case Fault::DuplicateX: {
      std::size_t i = std::size_t(rng.range(0, std::int64_t(n) - 2));
      vs[i + 1].x = vs[i].x;
      int a = vs[i].id, b = vs[i + 1].id;
      return InjectedFault{Drawing(std::move(vs), std::move(es)), {a, b}, {}};
    }
    case Fault::LongSpan: {
      if (m == 0) return std::nullopt;
      std::size_t k = std::size_t(rng.range(0, std::int64_t(m) - 1));
      EdgeCurve& e = es[k];
      const Vertex& u = d.vertex(e.u);
      const Vertex& v = d.vertex(e.v);
      // the long way round: u to v + 1
      e.polyline = {u.point(), {v.x + Rational(1), v.y}};
      EdgeKey key = edge_key(e);
      return InjectedFault{Drawing(std::move(vs), std::move(es)), {}, {key}};
    }
    case Fault::DoubleCrossing:
    case Fault::Tangency: {
      if (m < 2) return std::nullopt;
      const bool cross = kind == Fault::DoubleCrossing;
      for (int attempt = 0; attempt < 200; ++attempt) {
        std::size_t a = std::size_t(rng.range(0, std::int64_t(m) - 1));
        std::size_t b = std::size_t(rng.range(0, std::int64_t(m) - 1));
        if (a == b || es[a].adjacent(es[b])) continue;
        std::optional<Polyline> p;
        try {
          p = detail::detour(es[a], es[b], cross);
        } catch (const Error& err) {
          if (err.code() != Errc::Overflow) throw;
        }
        if (!p) continue;
        EdgeKey ka = edge_key(es[a]), kb = edge_key(es[b]);
        es[a].polyline = std::move(*p);
        return InjectedFault{Drawing(std::move(vs), std::move(es)), {}, {ka, kb}};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace mcd
