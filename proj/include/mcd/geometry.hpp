#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcd/drawing.hpp"

namespace mcd {

enum class Relation : std::uint8_t { Below, Above, NotRelated, Crossing };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Below: return "Below";
    case Relation::Above: return "Above";
    case Relation::NotRelated: return "NotRelated";
    case Relation::Crossing: return "Crossing";
  }
  return "?";
}

inline Relation flip(Relation r) {
  if (r == Relation::Below) return Relation::Above;
  if (r == Relation::Above) return Relation::Below;
  return r;
}

using BigRational = boost::multiprecision::cpp_rational;

/// Crossing point with unbounded coordinates; a crossing of two curves with
/// 64-bit coordinates need not itself fit in 64 bits.
struct ExactPoint {
  BigRational x, y;
  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ExactPoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

enum class Degeneracy : std::uint8_t { Overlap, Tangency, VertexOnEdge };

/// Two curves touch in a way a simple drawing forbids.
class DegenerateError : public Error {
 public:
  DegenerateError(Degeneracy kind, Point where, const std::string& msg)
      : Error(Errc::Degenerate, msg), kind_(kind), where_(std::move(where)) {}
  Degeneracy kind() const noexcept { return kind_; }
  const Point& where() const noexcept { return where_; }

 private:
  Degeneracy kind_;
  Point where_;
};

namespace detail {

inline bool in_open(const Polyline& p, const Rational& x) { return p.front().x < x && x < p.back().x; }

// Arithmetic used by the pair scan. The 64-bit type is tried first; when an
// intermediate overflows the scan is redone with unbounded rationals.
inline BigRational to_big(const Rational& r) { return BigRational(r.num(), r.den()); }

inline Rational from_big(const BigRational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int& n = boost::multiprecision::numerator(r);
  const cpp_int& d = boost::multiprecision::denominator(r);
  const cpp_int lim = std::numeric_limits<std::int64_t>::max();
  if (n > lim || n < -lim || d > lim) throw Error(Errc::Overflow, "rational out of 64-bit range");
  return Rational(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
}

template <class N>
struct Arith;

template <>
struct Arith<Rational> {
  static const Rational& in(const Rational& r) { return r; }
  static BigRational big(const Rational& r) { return to_big(r); }
  static int sign(const Rational& r) { return r.sign(); }
};

template <>
struct Arith<BigRational> {
  static BigRational in(const Rational& r) { return to_big(r); }
  static const BigRational& big(const BigRational& r) { return r; }
  static int sign(const BigRational& r) { return r.sign(); }
};

/// Nearest representable value, for reporting only: exact when it fits,
/// otherwise rounded down to a multiple of 2^-32.
inline Rational lossy(const BigRational& r) {
  try {
    return from_big(r);
  } catch (const Error&) {
    using boost::multiprecision::cpp_int;
    cpp_int q = boost::multiprecision::numerator(r) * (cpp_int(1) << 32);
    cpp_int d = boost::multiprecision::denominator(r);
    cpp_int f = q / d;
    if (q % d != 0 && q < 0) f -= 1;
    return Rational(f.convert_to<std::int64_t>(), std::int64_t(1) << 32);
  }
}

inline Point lossy(const ExactPoint& p) { return {lossy(p.x), lossy(p.y)}; }

template <class N>
N eval_lift_as(const Polyline& p, const N& x) {
  using A = Arith<N>;
  auto it = std::upper_bound(p.begin(), p.end(), x, [](const N& v, const Point& q) { return v < A::in(q.x); });
  if (it == p.begin()) return A::in(p.front().y);
  if (it == p.end()) return A::in(p.back().y);
  const Point& b = *it;
  const Point& a = *(it - 1);
  N ax = A::in(a.x), ay = A::in(a.y);
  if (ax == x) return ay;
  return ay + (A::in(b.y) - ay) * ((x - ax) / (A::in(b.x) - ax));
}

/// y of the polyline at lift x; x must lie in [front.x, back.x].
inline Rational eval_lift(const Polyline& p, const Rational& x) {
  try {
    return eval_lift_as<Rational>(p, x);
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
    return from_big(eval_lift_as<BigRational>(p, to_big(x)));
  }
}

/// Sign of y - p(x) for lift x in [front.x, back.x]; never overflows.
inline int side_of(const Polyline& p, const Rational& x, const Rational& y) {
  try {
    return (y - eval_lift_as<Rational>(p, x)).sign();
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
    BigRational d = to_big(y) - eval_lift_as<BigRational>(p, to_big(x));
    return d.sign();
  }
}

/// Outcome of comparing polyline P with polyline Q shifted right by t.
struct PairScan {
  enum class Shape { None, Point, Range } shape = Shape::None;
  Rational lo, hi;
  std::vector<Rational> xs;        // sample abscissae, lo .. hi
  std::vector<int> diff;           // sign of P - Q at samples
  std::size_t count = 0;           // transversal crossings
  std::vector<ExactPoint> points;  // their positions in P's coordinates, when requested
  bool overlap = false;
  bool tangency = false;
  std::optional<Point> bad_point;
  int side = 0;  // sign of P - Q on the open range when no crossing occurs
};

template <class N>
void scan_range(const Polyline& P, const Polyline& Q, const Rational& shift, PairScan& r, bool want_points) {
  using A = Arith<N>;
  const std::vector<Rational>& xs = r.xs;
  const N sh = A::in(shift);
  const std::size_t m = xs.size();
  std::vector<N> diff;
  diff.reserve(m);
  r.diff.clear();
  for (const auto& x : xs) {
    N X = A::in(x);
    diff.push_back(eval_lift_as<N>(P, X) - eval_lift_as<N>(Q, X - sh));
    r.diff.push_back(A::sign(diff.back()));
  }
  auto at = [&](const N& x) { return ExactPoint{A::big(x), A::big(eval_lift_as<N>(P, x))}; };
  auto bad = [&](const Rational& x) { r.bad_point = Point{x, lossy(A::big(eval_lift_as<N>(P, A::in(x))))}; };
  for (std::size_t k = 0; k + 1 < m; ++k) {
    int s0 = r.diff[k], s1 = r.diff[k + 1];
    if (s0 == 0 && s1 == 0) {
      r.overlap = true;
      bad(xs[k]);
      return;
    }
    if (s0 != 0 && s1 != 0 && s0 != s1) {
      ++r.count;
      if (!want_points) continue;
      // linear on [x_k, x_{k+1}]: zero of the difference
      N x0 = A::in(xs[k]);
      N x = x0 + (A::in(xs[k + 1]) - x0) * (diff[k] / (diff[k] - diff[k + 1]));
      r.points.push_back(at(x));
    }
  }
  for (std::size_t k = 1; k + 1 < m; ++k) {
    if (r.diff[k] != 0) continue;
    if (r.diff[k - 1] != r.diff[k + 1]) {
      ++r.count;
      if (want_points) r.points.push_back(at(A::in(xs[k])));
    } else {
      r.tangency = true;
      bad(xs[k]);
      return;
    }
  }
}

inline PairScan scan_pair(const Polyline& P, const Polyline& Q, std::int64_t t, bool want_points = false) {
  PairScan r;
  const Rational shift(t);
  Rational lo = std::max(P.front().x, Q.front().x + shift);
  Rational hi = std::min(P.back().x, Q.back().x + shift);
  if (lo > hi) return r;
  r.lo = lo;
  r.hi = hi;
  if (lo == hi) {
    r.shape = PairScan::Shape::Point;
    r.xs = {lo};
    BigRational d = eval_lift_as<BigRational>(P, to_big(lo)) - eval_lift_as<BigRational>(Q, to_big(lo - shift));
    r.diff = {d.sign()};
    return r;
  }
  r.shape = PairScan::Shape::Range;
  std::vector<Rational>& xs = r.xs;
  xs.push_back(lo);
  for (const auto& p : P)
    if (lo < p.x && p.x < hi) xs.push_back(p.x);
  for (const auto& q : Q) {
    Rational x = q.x + shift;
    if (lo < x && x < hi) xs.push_back(x);
  }
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  try {
    scan_range<Rational>(P, Q, shift, r, want_points);
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
    r.count = 0;
    r.points.clear();
    r.overlap = r.tangency = false;
    r.bad_point.reset();
    scan_range<BigRational>(P, Q, shift, r, want_points);
  }
  if (r.overlap || r.tangency) return r;
  std::sort(r.points.begin(), r.points.end(), [](const ExactPoint& a, const ExactPoint& b) { return a.x < b.x; });
  for (int d : r.diff)
    if (d != 0) {
      r.side = d;
      break;
    }
  return r;
}

/// Id of the vertex sitting at lift abscissa x on edge e (shifted by t), if x is an end.
inline std::optional<int> end_at(const EdgeCurve& e, const Rational& x, std::int64_t t) {
  if (e.polyline.front().x + Rational(t) == x) return e.start_vertex();
  if (e.polyline.back().x + Rational(t) == x) return e.end_vertex();
  return std::nullopt;
}

inline void check_end_contact(const EdgeCurve& e, const EdgeCurve& f, const Rational& x, std::int64_t t) {
  auto a = end_at(e, x, 0);
  auto b = end_at(f, x, t);
  if (a && b && *a == *b) return;  // common endpoint
  const Rational y = a ? eval_lift(e.polyline, x) : eval_lift(f.polyline, x - Rational(t));
  throw DegenerateError(Degeneracy::VertexOnEdge, Point{x, y},
                        "edges " + std::to_string(e.u) + "-" + std::to_string(e.v) + " and " +
                            std::to_string(f.u) + "-" + std::to_string(f.v) + " touch at an endpoint");
}

inline std::string edge_name(const EdgeCurve& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

inline void raise_degenerate(const PairScan& s, const std::string& who) {
  if (s.overlap) throw DegenerateError(Degeneracy::Overlap, *s.bad_point, who + ": collinear overlap");
  if (s.tangency) throw DegenerateError(Degeneracy::Tangency, *s.bad_point, who + ": tangency");
}

constexpr std::array<std::int64_t, 3> kTranslates{-1, 0, 1};

}  // namespace detail

/// y of e on the vertical line at cylinder abscissa x in [0, 1), if e meets it.
/// The domain is closed, so endpoints are included.
inline std::optional<Rational> eval_at(const EdgeCurve& e, const Rational& x) {
  const Polyline& p = e.polyline;
  for (std::int64_t t : {0, 1}) {
    Rational X = x + Rational(t);
    if (p.front().x <= X && X <= p.back().x) return detail::eval_lift(p, X);
  }
  return std::nullopt;
}

/// Same, but only for the relative interior of e.
inline std::optional<Rational> eval_open(const EdgeCurve& e, const Rational& x) {
  const Polyline& p = e.polyline;
  for (std::int64_t t : {0, 1}) {
    Rational X = x + Rational(t);
    if (detail::in_open(p, X)) return detail::eval_lift(p, X);
  }
  return std::nullopt;
}

namespace detail {

/// side_of at the point's abscissa when it lies in e's relative interior.
inline std::optional<int> open_side(const EdgeCurve& e, const Point& p) {
  for (std::int64_t t : {0, 1}) {
    Rational X = p.x + Rational(t);
    if (in_open(e.polyline, X)) return side_of(e.polyline, X, p.y);
  }
  return std::nullopt;
}

inline std::size_t pair_crossings(const EdgeCurve& e, const EdgeCurve& f, std::vector<ExactPoint>* out) {
  std::size_t count = 0;
  for (std::int64_t t : kTranslates) {
    auto s = scan_pair(e.polyline, f.polyline, t, out != nullptr);
    if (s.shape == PairScan::Shape::None) continue;
    if (s.overlap || s.tangency) raise_degenerate(s, edge_name(e) + " vs " + edge_name(f));
    if (s.diff.front() == 0) check_end_contact(e, f, s.lo, t);
    if (s.shape == PairScan::Shape::Range && s.diff.back() == 0) check_end_contact(e, f, s.hi, t);
    count += s.count;
    if (out) out->insert(out->end(), s.points.begin(), s.points.end());
  }
  if (out)
    std::sort(out->begin(), out->end(), [](const ExactPoint& a, const ExactPoint& b) { return a.x < b.x; });
  return count;
}

}  // namespace detail

/// Transversal crossings of e with f, in e's lift coordinates, sorted by x.
/// Coordinates are unbounded rationals. Shared endpoints are not crossings. Throws DegenerateError on overlap,
/// tangency or an endpoint lying on the other curve.
inline std::vector<ExactPoint> crossings(const EdgeCurve& e, const EdgeCurve& f) {
  std::vector<ExactPoint> out;
  detail::pair_crossings(e, f, &out);
  return out;
}

/// Number of crossings without materializing them.
inline std::size_t crossing_count(const EdgeCurve& e, const EdgeCurve& f) {
  return detail::pair_crossings(e, f, nullptr);
}

/// Crossings of two arbitrary x-monotone pieces (lift coordinates); touching
/// at piece ends is ignored. Throws DegenerateError on overlap or tangency.
inline std::vector<ExactPoint> curve_crossings(const Polyline& a, const Polyline& b) {
  std::vector<ExactPoint> out;
  for (std::int64_t t : detail::kTranslates) {
    auto s = detail::scan_pair(a, b, t, true);
    if (s.shape != detail::PairScan::Shape::Range) continue;
    detail::raise_degenerate(s, "curve pieces");
    out.insert(out.end(), s.points.begin(), s.points.end());
  }
  std::sort(out.begin(), out.end(), [](const ExactPoint& p, const ExactPoint& q) { return p.x < q.x; });
  return out;
}

namespace detail {

inline Relation relation_from_scans(const Polyline& a, const Polyline& b) {
  int seen = 0;
  for (std::int64_t t : kTranslates) {
    auto s = scan_pair(a, b, t);
    if (s.shape != PairScan::Shape::Range) continue;
    raise_degenerate(s, "relation");
    if (s.count != 0) return Relation::Crossing;
    if (s.side == 0) continue;
    if (seen != 0 && seen != s.side) return Relation::NotRelated;
    seen = s.side;
  }
  if (seen < 0) return Relation::Below;
  if (seen > 0) return Relation::Above;
  return Relation::NotRelated;
}

}  // namespace detail

/// Below: e is under f on every common vertical line (and they do not cross).
inline Relation relation(const EdgeCurve& e, const EdgeCurve& f) {
  if (crossing_count(e, f) != 0) return Relation::Crossing;
  return detail::relation_from_scans(e.polyline, f.polyline);
}

/// Relation of two pieces given as polylines in lift coordinates.
inline Relation curve_relation(const Polyline& a, const Polyline& b) { return detail::relation_from_scans(a, b); }

/// Position of p relative to e on the vertical line through p.
inline Relation point_relation(const Point& p, const EdgeCurve& e) {
  auto s = detail::open_side(e, p);
  if (!s) return Relation::NotRelated;
  if (*s == 0) throw DegenerateError(Degeneracy::VertexOnEdge, p, "point lies on edge " + detail::edge_name(e));
  return *s < 0 ? Relation::Below : Relation::Above;
}

inline Relation point_relation(const Vertex& v, const EdgeCurve& e) { return point_relation(v.point(), e); }

struct CircularSplit {
  Polyline negative;  // lift x in (1, x_u + 1)
  Polyline positive;  // lift x in (x_v, 1)
};

inline CircularSplit split_circular(const EdgeCurve& e) {
  if (!e.circular()) throw Error(Errc::NotCircular, "edge " + detail::edge_name(e) + " is direct");
  const Rational one(1);
  Point cut{one, detail::eval_lift(e.polyline, one)};
  CircularSplit s;
  for (const auto& p : e.polyline)
    if (p.x < one) s.positive.push_back(p);
  s.positive.push_back(cut);
  s.negative.push_back(cut);
  for (const auto& p : e.polyline)
    if (p.x > one) s.negative.push_back(p);
  return s;
}

inline bool is_flag(const Drawing& d) {
  return std::all_of(d.edges().begin(), d.edges().end(), [](const EdgeCurve& e) { return e.circular(); });
}

/// True if all edges are direct.
inline bool is_wrap_free(const Drawing& d) {
  return std::none_of(d.edges().begin(), d.edges().end(), [](const EdgeCurve& e) { return e.circular(); });
}

/// A pair of edges whose curves meet the vertical line x = a at the same
/// height, if any. Endpoints count as meeting the line.
inline std::optional<std::pair<std::size_t, std::size_t>> tie_at(const Drawing& d, const Rational& a) {
  // Floating estimates with a generous error bound; only edges whose
  // intervals overlap are compared exactly.
  struct Est {
    double lo, hi;
    std::size_t k;
    Rational X;
  };
  std::vector<Est> est;
  est.reserve(d.edges().size());
  const double xa = a.to_double();
  for (std::size_t k = 0; k < d.edges().size(); ++k) {
    const Polyline& p = d.edges()[k].polyline;
    for (std::int64_t t : {0, 1}) {
      Rational X = a + Rational(t);
      if (!(p.front().x <= X && X <= p.back().x)) continue;
      auto it = std::upper_bound(p.begin(), p.end(), X, [](const Rational& v, const Point& q) { return v < q.x; });
      double y, err;
      if (it == p.begin() || it == p.end()) {
        const Point& q = it == p.begin() ? p.front() : p.back();
        y = q.y.to_double();
        err = std::abs(y);
      } else {
        const Point& q0 = *(it - 1);
        const Point& q1 = *it;
        const double x0 = q0.x.to_double(), dx = q1.x.to_double() - x0, y0 = q0.y.to_double(),
                     dy = q1.y.to_double() - y0, Xd = xa + double(t);
        y = y0 + dy * ((Xd - x0) / dx);
        err = std::abs(y0) + std::abs(y) + std::abs(dy) * (1 + (std::abs(Xd) + std::abs(x0) + 1) / std::abs(dx));
      }
      err = err * 1e-12 + 1e-300;
      est.push_back({y - err, y + err, k, X});
      break;
    }
  }
  std::sort(est.begin(), est.end(), [](const Est& u, const Est& v) { return u.lo < v.lo || (u.lo == v.lo && u.k < v.k); });
  for (std::size_t i = 0; i < est.size();) {
    std::size_t j = i + 1;
    double reach = est[i].hi;
    while (j < est.size() && est[j].lo <= reach) reach = std::max(reach, est[j++].hi);
    if (j - i > 1) {
      std::vector<std::pair<Rational, std::size_t>> ys;
      for (std::size_t q = i; q < j; ++q)
        ys.emplace_back(detail::eval_lift(d.edges()[est[q].k].polyline, est[q].X), est[q].k);
      std::sort(ys.begin(), ys.end());
      for (std::size_t q = 0; q + 1 < ys.size(); ++q)
        if (ys[q].first == ys[q + 1].first) return std::pair{ys[q].second, ys[q + 1].second};
    }
    i = j;
  }
  return std::nullopt;
}

/// Reason `a` cannot serve as a cut, or nullopt if it can.
inline std::optional<std::string> cut_obstruction(const Drawing& d, const Rational& a) {
  for (const auto& v : d.vertices())
    if (v.x == a) return "vertex " + std::to_string(v.id) + " on the cut";
  for (const auto& e : d.edges())
    for (const auto& p : e.polyline)
      if (frac(p.x) == a) return "breakpoint of " + detail::edge_name(e) + " on the cut";
  if (auto t = tie_at(d, a))
    return "edges " + detail::edge_name(d.edges()[t->first]) + " and " + detail::edge_name(d.edges()[t->second]) +
           " meet on the cut";
  return std::nullopt;
}

/// Same cylinder drawing, with the cut moved to x = a.
inline Drawing recut(const Drawing& d, const Rational& a) {
  if (a < Rational(0) || a >= Rational(1)) throw Error(Errc::InvalidArgument, "cut must lie in [0, 1)");
  if (auto why = cut_obstruction(d, a)) throw Error(Errc::EventAtCut, *why);
  auto shift = [&](const Rational& x) {
    Rational s = x - a;
    return s < Rational(0) ? s + Rational(1) : s;
  };
  std::vector<Vertex> vs;
  vs.reserve(d.n());
  for (const auto& v : d.vertices()) vs.push_back({v.id, shift(v.x), v.y});
  std::vector<EdgeCurve> es;
  es.reserve(d.edges().size());
  for (const auto& e : d.edges()) {
    EdgeCurve g;
    Rational off = -a;
    if (e.polyline.front().x + off < Rational(0)) off += Rational(1);
    g.polyline.reserve(e.polyline.size());
    for (const auto& p : e.polyline) g.polyline.push_back({p.x + off, p.y});
    int s = e.start_vertex(), t = e.end_vertex();
    if (g.polyline.back().x > Rational(1)) {
      g.wrap = Wrap::Circular;
      g.u = t;
      g.v = s;
    } else {
      g.wrap = Wrap::Direct;
      g.u = s;
      g.v = t;
    }
    es.push_back(std::move(g));
  }
  return Drawing(std::move(vs), std::move(es));
}

/// Open arcs of the cylinder (as [lo, hi) pieces of [0, 1)) covered by e's interior.
inline std::vector<std::pair<Rational, Rational>> cylinder_domain(const EdgeCurve& e) {
  const Rational a = e.polyline.front().x, b = e.polyline.back().x, one(1);
  if (b <= one) return {{a, b}};
  return {{Rational(0), b - one}, {a, one}};
}

/// Whether some vertical line meets the interiors of all given edges.
inline bool common_vertical_line(std::span<const EdgeCurve* const> es) {
  std::vector<std::pair<Rational, Rational>> cur{{Rational(0), Rational(1)}};
  for (const EdgeCurve* e : es) {
    std::vector<std::pair<Rational, Rational>> next;
    for (const auto& [l1, h1] : cur)
      for (const auto& [l2, h2] : cylinder_domain(*e)) {
        Rational l = std::max(l1, l2), h = std::min(h1, h2);
        if (l < h) next.emplace_back(l, h);
      }
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  return true;
}

}  // namespace mcd
