#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "mcd/error.hpp"

namespace mcd {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline int sign128(i128 v) { return (v > 0) - (v < 0); }

}  // namespace detail

/// Exact rational with 64-bit reduced numerator/denominator. Intermediates use
/// 128-bit integers; a result that does not fit back into 64 bits throws
/// Error(Overflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) { *this = from128(n, d); }

  static Rational from128(detail::i128 n, detail::i128 d) {
    if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::u128 g = detail::gcd128(detail::abs128(n), detail::u128(d));
    if (g > 1) {
      n /= detail::i128(g);
      d /= detail::i128(g);
    }
    constexpr detail::i128 kMax = std::numeric_limits<std::int64_t>::max();
    if (n > kMax || n < -kMax || d > kMax) throw Error(Errc::Overflow, "rational out of 64-bit range");
    Rational r;
    r.num_ = std::int64_t(n);
    r.den_ = std::int64_t(d);
    return r;
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer <= value.
  constexpr std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  double to_double() const noexcept { return double(num_) / double(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from128(detail::i128(a.num_) + b.num_, a.den_);
    return from128(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                   detail::i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from128(detail::i128(a.num_) - b.num_, a.den_);
    return from128(detail::i128(a.num_) * b.den_ - detail::i128(b.num_) * a.den_,
                   detail::i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
    return from128(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
  }
  Rational operator-() const noexcept {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    detail::i128 l = detail::i128(a.num_) * b.den_;
    detail::i128 r = detail::i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Always "p/q", including q = 1.
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Strict "p/q" parser: q > 0, gcd(|p|, q) = 1. Returns false on any deviation.
  static bool try_parse(std::string_view s, Rational& out) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size()) return false;
    std::int64_t n = 0, d = 0;
    auto ns = s.substr(0, slash);
    auto ds = s.substr(slash + 1);
    if (ns.front() == '+' || ds.front() == '+' || ds.front() == '-') return false;
    auto r1 = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    if (r1.ec != std::errc() || r1.ptr != ns.data() + ns.size()) return false;
    auto r2 = std::from_chars(ds.data(), ds.data() + ds.size(), d);
    if (r2.ec != std::errc() || r2.ptr != ds.data() + ds.size()) return false;
    if (d <= 0 || n == std::numeric_limits<std::int64_t>::min()) return false;
    if (detail::gcd128(detail::abs128(n), detail::u128(d)) != 1) return false;
    out.num_ = n;
    out.den_ = d;
    return true;
  }

  static Rational parse(std::string_view s) {
    Rational r;
    if (!try_parse(s, r)) throw Error(Errc::InvalidArgument, "bad rational token '" + std::string(s) + "'");
    return r;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// (a + b) / 2
inline Rational midpoint(const Rational& a, const Rational& b) {
  return Rational::from128(detail::i128(a.num()) * b.den() + detail::i128(b.num()) * a.den(),
                           detail::i128(a.den()) * b.den() * 2);
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(r.floor()); }

}  // namespace mcd

template <>
struct std::hash<mcd::Rational> {
  std::size_t operator()(const mcd::Rational& r) const noexcept {
    return std::hash<std::int64_t>()(r.num()) * 1000003u ^ std::hash<std::int64_t>()(r.den());
  }
};
