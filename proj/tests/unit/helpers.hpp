#pragma once

#include <string_view>
#include <vector>

#include "mcd/geometry.hpp"

namespace testutil {

inline mcd::Rational R(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return mcd::Rational(std::stoll(std::string(s)));
  return mcd::Rational(std::stoll(std::string(s.substr(0, slash))), std::stoll(std::string(s.substr(slash + 1))));
}

inline mcd::Point P(std::string_view x, std::string_view y) { return {R(x), R(y)}; }

inline mcd::ExactPoint XP(std::string_view x, std::string_view y) {
  return {mcd::detail::to_big(R(x)), mcd::detail::to_big(R(y))};
}

inline mcd::EdgeCurve direct(int u, int v, mcd::Polyline pts) {
  return {u, v, mcd::Wrap::Direct, std::move(pts)};
}
inline mcd::EdgeCurve circular(int u, int v, mcd::Polyline pts) {
  return {u, v, mcd::Wrap::Circular, std::move(pts)};
}

}  // namespace testutil
