#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mcd/drawing.hpp"
#include "mcd/error.hpp"
#include "mcd/geometry.hpp"

namespace mcd {

/// Edges of a drawing as nodes; two nodes conflict if the edges share an
/// endpoint or cross.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(const Drawing& d) {
    for (const auto& e : d.edges()) nodes_.push_back(edge_key(e));
    const std::size_t m = nodes_.size();
    adj_.assign(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        const EdgeCurve& e = d.edges()[a];
        const EdgeCurve& f = d.edges()[b];
        if (e.adjacent(f) || crossing_count(e, f) > 0) adj_[a][b] = adj_[b][a] = true;
      }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<EdgeKey>& nodes() const noexcept { return nodes_; }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a][b]; }
  std::size_t degree(std::size_t a) const { return std::size_t(std::count(adj_[a].begin(), adj_[a].end(), true)); }

 private:
  std::vector<EdgeKey> nodes_;
  std::vector<std::vector<bool>> adj_;
};

inline ConflictGraph conflict_graph(const Drawing& d) { return ConflictGraph(d); }

struct OracleResult {
  std::vector<EdgeKey> edges;  // in edge order of the drawing
  std::size_t size() const noexcept { return edges.size(); }
};

inline constexpr std::size_t kOracleMaxN = 12;

namespace detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::size_t(__builtin_popcountll(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  template <class F>
  void each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (std::uint64_t x = w_[i]; x; x &= x - 1) f(i * 64 + std::size_t(__builtin_ctzll(x)));
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Maximum clique in the compatibility graph (= independent set in the
// conflict graph). Greedy colouring of the compatibility graph is a clique
// cover of the conflict graph and bounds the search.
class Mis {
 public:
  explicit Mis(const ConflictGraph& g) : n_(g.size()), ok_(g.size(), Bits(g.size())) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (a != b && !g.adjacent(a, b)) ok_[a].set(b);
  }

  Bits all() const {
    Bits b(n_);
    for (std::size_t i = 0; i < n_; ++i) b.set(i);
    return b;
  }
  const Bits& compatible(std::size_t v) const { return ok_[v]; }

  /// Size of a maximum independent set within P, stopping early at `enough`.
  std::size_t best(const Bits& P, std::size_t enough) {
    best_ = 0;
    enough_ = enough;
    if (!P.none()) expand(P, 0);
    return best_;
  }

 private:
  void expand(Bits P, std::size_t cur) {
    std::vector<std::size_t> order, colour;
    colour_sort(P, order, colour);
    for (std::size_t t = order.size(); t-- > 0;) {
      if (cur + colour[t] <= best_ || best_ >= enough_) return;
      std::size_t v = order[t];
      Bits Q = P & ok_[v];
      if (Q.none()) {
        best_ = std::max(best_, cur + 1);
      } else {
        expand(Q, cur + 1);
      }
      P.reset(v);
    }
  }

  void colour_sort(const Bits& P, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    Bits left = P;
    std::size_t c = 0;
    while (!left.none()) {
      ++c;
      Bits q = left;
      while (!q.none()) {
        std::size_t v = 0;
        q.each([&](std::size_t i) { v = i; });  // any member
        left.reset(v);
        q.reset(v);
        order.push_back(v);
        colour.push_back(c);
        ok_[v].each([&](std::size_t u) { q.reset(u); });
      }
    }
  }

  std::size_t n_;
  std::vector<Bits> ok_;
  std::size_t best_ = 0, enough_ = 0;
};

}  // namespace detail

/// Exact maximum set of pairwise disjoint edges; the lexicographically
/// smallest one by edge order. Exponential: refuses n > 12 unless forced.
inline OracleResult max_disjoint_bruteforce(const Drawing& d, bool force = false) {
  if (d.n() > kOracleMaxN && !force)
    throw Error(Errc::TooLarge, "oracle is capped at n = 12 (got " + std::to_string(d.n()) + "); force to override");
  ConflictGraph g(d);
  detail::Mis mis(g);
  const std::size_t m = g.size();
  detail::Bits P = mis.all();
  const std::size_t opt = mis.best(P, m + 1);
  OracleResult out;
  std::size_t need = opt;
  for (std::size_t i = 0; i < m && need > 0; ++i) {
    if (!P.test(i)) continue;
    P.reset(i);
    detail::Bits with = P & mis.compatible(i);
    if (need == 1 || mis.best(with, need - 1) >= need - 1) {
      out.edges.push_back(g.nodes()[i]);
      P = with;
      --need;
    }
  }
  return out;
}

}  // namespace mcd
