#pragma once

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcd/drawing.hpp"
#include "mcd/error.hpp"
#include "mcd/geometry.hpp"

namespace mcd {

struct RenderStyle {
  int width = 800;
  int height = 500;
  std::vector<EdgeKey> highlight;
  bool show_cut = true;
  bool label_vertices = true;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace detail

/// Plane representation: the cylinder cut open along x = 0. Each edge is one
/// <path>; a wrapping edge gets two subpaths that leave and re-enter at the cut.
inline std::string render_svg(const Drawing& d, const RenderStyle& style = {}) {
  if (style.width <= 0 || style.height <= 0) throw Error(Errc::InvalidArgument, "render size must be positive");
  const double W = style.width, H = style.height, pad = 24;
  double ylo = 0, yhi = 0;
  bool first = true;
  auto see = [&](const Rational& y) {
    double v = y.to_double();
    if (first) ylo = yhi = v, first = false;
    ylo = std::min(ylo, v);
    yhi = std::max(yhi, v);
  };
  for (const auto& v : d.vertices()) see(v.y);
  for (const auto& e : d.edges())
    for (const auto& p : e.polyline) see(p.y);
  if (yhi - ylo < 1e-12) yhi = ylo + 1;
  auto X = [&](double x) { return pad + x * (W - 2 * pad); };
  auto Y = [&](double y) { return H - pad - (y - ylo) / (yhi - ylo) * (H - 2 * pad); };

  std::set<std::pair<int, int>> hl;
  for (auto [u, v] : style.highlight) hl.emplace(std::min(u, v), std::max(u, v));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
     << "\" viewBox=\"0 0 " << style.width << " " << style.height << "\">\n";
  os << "<style>.edge{fill:none;stroke:#555;stroke-width:1}.hl{stroke:#d62728;stroke-width:3}"
        ".cut{stroke:#1f77b4;stroke-dasharray:6 4}.vx{fill:#000}text{font:11px sans-serif}</style>\n";
  if (style.show_cut)
    for (double x : {0.0, 1.0})
      os << "<line class=\"cut\" x1=\"" << detail::fmt(X(x)) << "\" y1=\"" << detail::fmt(pad / 2) << "\" x2=\""
         << detail::fmt(X(x)) << "\" y2=\"" << detail::fmt(H - pad / 2) << "\"/>\n";
  for (const auto& e : d.edges()) {
    std::ostringstream path;
    const auto& pl = e.polyline;
    auto pt = [&](const Rational& x, const Rational& y) { path << detail::fmt(X(x.to_double())) << " " << detail::fmt(Y(y.to_double())); };
    path << "M ";
    pt(pl[0].x, pl[0].y);
    const Rational one(1);
    for (std::size_t i = 1; i < pl.size(); ++i) {
      if (e.circular() && pl[i - 1].x < one && pl[i].x > one) {
        Rational yc = detail::eval_lift(pl, one);
        path << " L ";
        pt(one, yc);
        path << " M ";
        pt(Rational(0), yc);
      }
      path << " L ";
      const Rational x = pl[i].x > one ? pl[i].x - one : pl[i].x;
      pt(x, pl[i].y);
    }
    const bool h = hl.count({std::min(e.u, e.v), std::max(e.u, e.v)}) > 0;
    os << "<path class=\"edge" << (h ? " hl" : "") << "\" data-edge=\"" << e.u << "-" << e.v << "\" d=\""
       << path.str() << "\"/>\n";
  }
  for (const auto& v : d.vertices()) {
    os << "<circle class=\"vx\" cx=\"" << detail::fmt(X(v.x.to_double())) << "\" cy=\"" << detail::fmt(Y(v.y.to_double()))
       << "\" r=\"3\"/>\n";
    if (style.label_vertices)
      os << "<text x=\"" << detail::fmt(X(v.x.to_double()) + 4) << "\" y=\"" << detail::fmt(Y(v.y.to_double()) - 4)
         << "\">" << v.id << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mcd
