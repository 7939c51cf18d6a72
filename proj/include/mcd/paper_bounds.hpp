#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/rational.hpp"

namespace mcd {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Parameters of f(n) = c n^(1-eps) with c = n0^(eps-1).
struct PaperParams {
  Rational epsilon{1, 4};
  BigInt n0{2};
};

struct Interval {
  BigRat lo, hi;
  bool exact() const { return lo == hi; }
};

enum class Verdict : std::uint8_t { Holds, Fails, Undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace detail {

inline BigInt pow_big(BigInt b, unsigned e) { return boost::multiprecision::pow(b, e); }
inline BigRat pow_rat(const BigRat& b, unsigned e) {
  return BigRat(pow_big(boost::multiprecision::numerator(b), e), pow_big(boost::multiprecision::denominator(b), e));
}

/// floor(a^(1/q)) for a >= 0.
inline BigInt iroot(const BigInt& a, unsigned q) {
  if (a < 2 || q == 1) return a;
  unsigned bits = unsigned(boost::multiprecision::msb(a)) + 1;
  BigInt x = BigInt(1) << ((bits + q - 1) / q);  // >= true root
  while (true) {
    BigInt y = ((q - 1) * x + a / pow_big(x, q - 1)) / q;
    if (y >= x) break;
    x = y;
  }
  while (pow_big(x + 1, q) <= a) ++x;
  while (pow_big(x, q) > a) --x;
  return x;
}

inline unsigned eps_p(const PaperParams& pp) { return unsigned(pp.epsilon.num()); }
inline unsigned eps_q(const PaperParams& pp) { return unsigned(pp.epsilon.den()); }

/// f(y)^q = (y / n0)^(q - p), exact.
inline BigRat f_power(const PaperParams& pp, const BigRat& y) {
  return pow_rat(y / BigRat(pp.n0), eps_q(pp) - eps_p(pp));
}

inline BigInt ceil_log2(const BigInt& n) {
  if (n <= 1) return 0;
  BigInt m = n - 1;
  return BigInt(boost::multiprecision::msb(m) + 1);
}

}  // namespace detail

/// Throws unless 0 < eps < 1/2 and n0 >= 2.
inline void check_params(const PaperParams& pp) {
  if (pp.epsilon <= Rational(0) || pp.epsilon >= Rational(1, 2))
    throw Error(Errc::InvalidArgument, "epsilon must lie in (0, 1/2)");
  if (pp.n0 < 2) throw Error(Errc::InvalidArgument, "n0 must be at least 2");
  if (pp.epsilon.den() > 64) throw Error(Errc::InvalidArgument, "epsilon denominator too large");
}

/// Rigorous bounds lo <= f(y) <= hi with hi - lo <= 2^-bits * (denominator scale).
inline Interval paper_f(const PaperParams& pp, const BigRat& y, unsigned bits = 64) {
  check_params(pp);
  if (y <= 0) throw Error(Errc::InvalidArgument, "f is evaluated at positive arguments only");
  const unsigned q = detail::eps_q(pp);
  BigRat R = detail::f_power(pp, y);
  const BigInt& N = boost::multiprecision::numerator(R);
  const BigInt& D = boost::multiprecision::denominator(R);
  // f = (N D^(q-1))^(1/q) / D
  BigInt a = N * detail::pow_big(D, q - 1) << (bits * q);
  BigInt r = detail::iroot(a, q);
  BigInt scale = D << bits;
  Interval out;
  out.lo = BigRat(r, scale);
  out.hi = detail::pow_big(r, q) == a ? out.lo : BigRat(r + 1, scale);
  return out;
}

inline Interval paper_f(const PaperParams& pp, const BigInt& n, unsigned bits = 64) {
  return paper_f(pp, BigRat(n), bits);
}

/// f'(y) = (1 - eps) f(y) / y.
inline Interval paper_f_prime(const PaperParams& pp, const BigRat& y, unsigned bits = 64) {
  Interval f = paper_f(pp, y, bits);
  BigRat k = (BigRat(1) - BigRat(pp.epsilon.num(), pp.epsilon.den())) / y;
  return {f.lo * k, f.hi * k};
}

/// Sign of a * f(y) - b for a, b >= 0, decided exactly.
inline int compare_scaled_f(const PaperParams& pp, const BigRat& y, const BigRat& a, const BigRat& b) {
  const unsigned q = detail::eps_q(pp);
  BigRat l = detail::pow_rat(a, q) * detail::f_power(pp, y);
  BigRat r = detail::pow_rat(b, q);
  return l < r ? -1 : (l > r ? 1 : 0);
}

/// floor(n / (10 f(n))), never below 2.
inline BigInt paper_k(const PaperParams& pp, const BigInt& n) {
  // largest k with 10 k f(n) <= n
  BigInt lo = 0, hi = n;
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (compare_scaled_f(pp, BigRat(n), BigRat(10 * mid), BigRat(n)) <= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo < 2 ? BigInt(2) : lo;
}

namespace detail {

// Evaluate lhs - rhs with increasing precision until the sign is certain.
template <class F>
Verdict certify(F interval_of_difference, unsigned max_bits = 8192) {
  for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
    Interval d = interval_of_difference(bits);
    if (d.lo >= 0) return Verdict::Holds;
    if (d.hi < 0) return Verdict::Fails;
  }
  return Verdict::Undecided;
}

}  // namespace detail

/// n0^(eps^2) >= 10^6, which then holds for every m >= n0.
inline Verdict check_n0_power(const PaperParams& pp) {
  check_params(pp);
  const unsigned p = detail::eps_p(pp), q = detail::eps_q(pp);
  return detail::pow_big(pp.n0, p * p) >= detail::pow_big(BigInt(10), 6 * q * q) ? Verdict::Holds : Verdict::Fails;
}

/// n0^eps >= 10 ceil(log2 n0) + 1, which then holds for every m >= n0.
inline Verdict check_n0_log(const PaperParams& pp) {
  check_params(pp);
  const unsigned p = detail::eps_p(pp), q = detail::eps_q(pp);
  BigInt rhs = 10 * detail::ceil_log2(pp.n0) + 1;
  return detail::pow_big(pp.n0, p) >= detail::pow_big(rhs, q) ? Verdict::Holds : Verdict::Fails;
}

/// Smallest n0 passing check_n0_power, raised if needed until check_n0_log passes too.
inline BigInt minimal_n0(const Rational& eps) {
  PaperParams pp{eps, 2};
  check_params(pp);
  const unsigned p = detail::eps_p(pp), q = detail::eps_q(pp);
  BigInt target = detail::pow_big(BigInt(10), 6 * q * q);
  BigInt n0 = detail::iroot(target, p * p);
  while (detail::pow_big(n0, p * p) < target) ++n0;
  pp.n0 = n0;
  while (check_n0_log(pp) != Verdict::Holds) pp.n0 *= 2;
  return pp.n0;
}

/// Tangent bound: f(m - x) >= f(m) - f'(m - x) x, for m > 2 and 0 < x < m.
inline Verdict check_tangent_bound(const PaperParams& pp, const BigRat& m, const BigRat& x) {
  if (!(m > 2) || !(x > 0) || !(x < m)) throw Error(Errc::InvalidArgument, "tangent bound needs m > 2 and 0 < x < m");
  return detail::certify([&](unsigned bits) {
    Interval a = paper_f(pp, m - x, bits), b = paper_f(pp, m, bits), c = paper_f_prime(pp, m - x, bits);
    // a - b + c x
    return Interval{a.lo - b.hi + c.lo * x, a.hi - b.lo + c.hi * x};
  });
}

/// Spread bound: f(a) + f(b) >= f(m - x) + f(x) for 0 <= x < m/2, a, b >= x, a + b = m.
inline Verdict check_spread_bound(const PaperParams& pp, const BigRat& a, const BigRat& b, const BigRat& x) {
  const BigRat m = a + b;
  if (x < 0 || !(2 * x < m) || a < x || b < x) throw Error(Errc::InvalidArgument, "spread bound needs 0 <= x < m/2 <= a, b >= x");
  if ((a == x && b == m - x) || (b == x && a == m - x)) return Verdict::Holds;  // both sides coincide
  auto fz = [&](const BigRat& y, unsigned bits) { return y == 0 ? Interval{0, 0} : paper_f(pp, y, bits); };
  return detail::certify([&](unsigned bits) {
    Interval fa = fz(a, bits), fb = fz(b, bits), fm = fz(m - x, bits), fx = fz(x, bits);
    return Interval{fa.lo + fb.lo - fm.hi - fx.hi, fa.hi + fb.hi - fm.lo - fx.lo};
  });
}

struct ChainStep {
  std::string name;
  Verdict verdict;
};

struct ChainReport {
  bool ok = true;
  std::vector<ChainStep> steps;
};

/// Replays the numeric steps behind |I| >= 10 ceil(log n) + 1 and the two
/// counting inequalities that close the induction, for one n > n0.
inline ChainReport check_index_chain(const PaperParams& pp, const BigInt& n) {
  check_params(pp);
  if (n <= pp.n0) throw Error(Errc::InvalidArgument, "the chain is only claimed for n > n0");
  const unsigned p = detail::eps_p(pp), q = detail::eps_q(pp);
  const BigRat eps(pp.epsilon.num(), pp.epsilon.den());
  ChainReport rep;
  auto add = [&](std::string name, bool holds) {
    rep.steps.push_back({std::move(name), holds ? Verdict::Holds : Verdict::Fails});
    rep.ok = rep.ok && holds;
  };
  // n^eps * n0^(1-eps) = n / f(n); compare its q-th power
  const BigInt inv_f_pow = detail::pow_big(n, p) * detail::pow_big(pp.n0, q - p);
  auto n_over_f_at_least = [&](const BigRat& v) {  // n / f(n) >= v
    return BigRat(inv_f_pow) >= detail::pow_rat(v, q);
  };
  add("n0^(eps^2) >= 10^6", check_n0_power(pp) == Verdict::Holds);
  add("n0^eps >= 10 ceil(log n0) + 1", check_n0_log(pp) == Verdict::Holds);
  add("c <= 10^-6", detail::pow_big(pp.n0, q - p) >= detail::pow_big(BigInt(10), 6 * q));
  add("f(n) >= 1", compare_scaled_f(pp, BigRat(n), 1, 1) >= 0);
  add("k > 10", paper_k(pp, n) > 10);
  add("n/(10^5 f(n)) >= 1/50", n_over_f_at_least(BigRat(100000, 50)));
  add("1/500 - 2/10^5 >= 1/1000", BigRat(1, 500) - BigRat(2, 100000) >= BigRat(1, 1000));
  const BigInt L = 10 * detail::ceil_log2(n) + 1;
  add("n/(1000 f(n)) >= 10 ceil(log n) + 1", n_over_f_at_least(BigRat(1000 * L)));
  add("floor(|I|/2) >= 4 log n", (L / 2) >= 4 * detail::ceil_log2(n));
  add("n^4 > 20 f(n)", compare_scaled_f(pp, BigRat(n), 20, BigRat(detail::pow_big(n, 4))) < 0);
  add("5 * 10^5 f(n) <= n/2", n_over_f_at_least(BigRat(1000000)));
  add("(1 - eps) 2^eps / 5 <= 1",
      detail::pow_rat((1 - eps) / 5, q) * detail::pow_big(BigInt(2), p) <= 1);
  // (1-eps) 2^eps 5 10^(5 eps) c^eps n^(-eps^2) <= 1, raised to q^2
  {
    BigRat lhs = detail::pow_rat(1 - eps, q * q) * detail::pow_big(BigInt(2), p * q) *
                 detail::pow_big(BigInt(5), q * q) * detail::pow_big(BigInt(10), 5 * p * q);
    BigInt rhs = detail::pow_big(n, p * p) * detail::pow_big(pp.n0, p * (q - p));
    add("(1 - eps) 2^eps 5 10^(5 eps) c^eps n^(-eps^2) <= 1", lhs <= BigRat(rhs));
  }
  return rep;
}

}  // namespace mcd
