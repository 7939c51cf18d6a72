#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/rational.hpp"

namespace mcd {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << "(" << p.x << ", " << p.y << ")"; }

using Polyline = std::vector<Point>;

struct Vertex {
  int id = 0;
  Rational x;
  Rational y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  Point point() const { return {x, y}; }
};

enum class Wrap : std::uint8_t { Direct = 0, Circular = 1 };

/// One edge as an x-monotone polyline in lift coordinates. `u` is the endpoint
/// with the smaller cylinder x. Direct edges run u -> v; circular ones run from
/// v rightwards through x = 1 to u + 1.
struct EdgeCurve {
  int u = 0;
  int v = 0;
  Wrap wrap = Wrap::Direct;
  Polyline polyline;

  bool circular() const noexcept { return wrap == Wrap::Circular; }
  /// Vertex id at the left (first) end of the lift polyline.
  int start_vertex() const noexcept { return circular() ? v : u; }
  int end_vertex() const noexcept { return circular() ? u : v; }
  bool incident(int w) const noexcept { return u == w || v == w; }
  bool adjacent(const EdgeCurve& o) const noexcept {
    return incident(o.u) || incident(o.v);
  }
  friend bool operator==(const EdgeCurve&, const EdgeCurve&) = default;
};

using EdgeKey = std::pair<int, int>;

/// Immutable drawing: vertices sorted by (x, id), edges sorted by the x-ranks
/// of (u, v). Geometry is not checked here; see validate().
class Drawing {
 public:
  Drawing() = default;

  Drawing(std::vector<Vertex> vertices, std::vector<EdgeCurve> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::stable_sort(vertices_.begin(), vertices_.end(), [](const Vertex& a, const Vertex& b) {
      if (a.x != b.x) return a.x < b.x;
      return a.id < b.id;
    });
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!pos_.emplace(vertices_[i].id, i).second)
        throw Error(Errc::InvalidDrawing, "duplicate vertex id " + std::to_string(vertices_[i].id));
    }
    for (const auto& e : edges_) {
      if (!pos_.count(e.u) || !pos_.count(e.v))
        throw Error(Errc::InvalidDrawing, "edge references unknown vertex");
      if (e.u == e.v) throw Error(Errc::InvalidDrawing, "self-loop at vertex " + std::to_string(e.u));
      if (e.polyline.size() < 2) throw Error(Errc::InvalidDrawing, "edge polyline needs >= 2 points");
    }
    std::stable_sort(edges_.begin(), edges_.end(), [this](const EdgeCurve& a, const EdgeCurve& b) {
      auto ka = rank_pair(a), kb = rank_pair(b);
      return ka < kb;
    });
    const std::size_t n = vertices_.size();
    edge_at_.assign(n * n, -1);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      auto [a, b] = rank_pair(edges_[k]);
      if (edge_at_[a * n + b] != -1)
        throw Error(Errc::InvalidDrawing, "duplicate edge " + std::to_string(edges_[k].u) + "-" +
                                              std::to_string(edges_[k].v));
      edge_at_[a * n + b] = edge_at_[b * n + a] = std::int32_t(k);
    }
  }

  std::size_t n() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeCurve>& edges() const noexcept { return edges_; }

  bool has_vertex(int id) const { return pos_.count(id) != 0; }
  /// Rank of vertex `id` in x order.
  std::size_t position(int id) const {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw Error(Errc::InvalidArgument, "unknown vertex " + std::to_string(id));
    return it->second;
  }
  const Vertex& vertex(int id) const { return vertices_[position(id)]; }
  const Vertex& vertex_at(std::size_t rank) const { return vertices_[rank]; }

  /// Index into edges() of the edge between ranks a and b, if drawn.
  std::optional<std::size_t> edge_index_at(std::size_t a, std::size_t b) const {
    std::int32_t k = edge_at_[a * n() + b];
    if (k < 0) return std::nullopt;
    return std::size_t(k);
  }
  std::optional<std::size_t> edge_index(int a, int b) const {
    if (!has_vertex(a) || !has_vertex(b) || a == b) return std::nullopt;
    return edge_index_at(position(a), position(b));
  }
  const EdgeCurve& edge(int a, int b) const {
    auto k = edge_index(a, b);
    if (!k) throw Error(Errc::InvalidArgument, "no edge " + std::to_string(a) + "-" + std::to_string(b));
    return edges_[*k];
  }
  const EdgeCurve& edge_at(std::size_t a, std::size_t b) const {
    auto k = edge_index_at(a, b);
    if (!k) throw Error(Errc::InvalidArgument, "no edge between ranks");
    return edges_[*k];
  }

  bool complete() const noexcept { return edges_.size() == n() * (n() - (n() ? 1 : 0)) / 2; }

  friend bool operator==(const Drawing& a, const Drawing& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::pair<std::size_t, std::size_t> rank_pair(const EdgeCurve& e) const {
    std::size_t a = pos_.at(e.u), b = pos_.at(e.v);
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  std::vector<Vertex> vertices_;
  std::vector<EdgeCurve> edges_;
  std::unordered_map<int, std::size_t> pos_;
  std::vector<std::int32_t> edge_at_;
};

/// Subdrawing on the given vertex ids (all edges among them that exist in d).
inline Drawing induced(const Drawing& d, std::span<const int> ids) {
  std::unordered_set<int> keep(ids.begin(), ids.end());
  std::vector<Vertex> vs;
  for (const auto& v : d.vertices())
    if (keep.count(v.id)) vs.push_back(v);
  std::vector<EdgeCurve> es;
  for (const auto& e : d.edges())
    if (keep.count(e.u) && keep.count(e.v)) es.push_back(e);
  return Drawing(std::move(vs), std::move(es));
}

inline std::vector<int> vertex_ids(const Drawing& d) {
  std::vector<int> ids;
  ids.reserve(d.n());
  for (const auto& v : d.vertices()) ids.push_back(v.id);
  return ids;
}

inline EdgeKey edge_key(const EdgeCurve& e) { return {e.u, e.v}; }

}  // namespace mcd
