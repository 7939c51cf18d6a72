#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mcd/cyl_solver.hpp"
#include "mcd/drawing.hpp"
#include "mcd/error.hpp"
#include "mcd/flag_solver.hpp"

namespace mcd {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t s = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > s) line.tokens.push_back({raw.substr(s, i - s), s + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {
    last_ = lines_.empty() ? 1 : lines_.back().number;
  }

  bool done() const { return at_ >= lines_.size(); }
  const Line& next(const char* what) {
    if (done()) throw ParseError(last_, 1, std::string("unexpected end of input, expected ") + what);
    return lines_[at_++];
  }
  const Line& peek() const { return lines_[at_]; }

  static void expect_count(const Line& l, std::size_t n, const char* what) {
    if (l.tokens.size() != n) {
      std::size_t col = l.tokens.size() > n ? l.tokens[n].column : l.tokens.back().column + l.tokens.back().text.size();
      throw ParseError(l.number, col,
                       std::string(what) + " needs " + std::to_string(n) + " fields, got " + std::to_string(l.tokens.size()));
    }
  }
  static void expect_word(const Line& l, std::size_t i, std::string_view w) {
    if (l.tokens[i].text != w)
      throw ParseError(l.number, l.tokens[i].column, "expected '" + std::string(w) + "', got '" + std::string(l.tokens[i].text) + "'");
  }
  template <class Int>
  static Int integer(const Line& l, std::size_t i, const char* what) {
    const auto& t = l.tokens.at(i);
    Int v{};
    auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (r.ec != std::errc() || r.ptr != t.text.data() + t.text.size())
      throw ParseError(l.number, t.column, std::string("bad ") + what + " '" + std::string(t.text) + "'");
    return v;
  }
  static Rational rational(const Line& l, std::size_t i) {
    const auto& t = l.tokens.at(i);
    Rational r;
    if (!Rational::try_parse(t.text, r))
      throw ParseError(l.number, t.column, "bad rational '" + std::string(t.text) + "' (reduced p/q with q > 0 required)");
    return r;
  }

  std::size_t last_line() const { return last_; }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
  std::size_t last_ = 1;
};

}  // namespace detail

/// Parses one MCD1 drawing. Geometry is not checked; run validate() on the result.
inline Drawing parse_mcd(std::string_view text) {
  detail::Reader in(text);
  const auto& h = in.next("header");
  detail::Reader::expect_count(h, 2, "header");
  detail::Reader::expect_word(h, 0, "mcd");
  detail::Reader::expect_word(h, 1, "1");
  const auto& nl = in.next("vertex count");
  detail::Reader::expect_count(nl, 2, "count line");
  detail::Reader::expect_word(nl, 0, "n");
  const long n = detail::Reader::integer<long>(nl, 1, "vertex count");
  if (n < 0) throw ParseError(nl.number, nl.tokens[1].column, "negative vertex count");
  std::vector<Vertex> vs;
  std::unordered_set<int> ids;
  for (long i = 0; i < n; ++i) {
    const auto& l = in.next("vertex line");
    if (l.tokens[0].text != "v")
      throw ParseError(l.number, l.tokens[0].column,
                       "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(i));
    detail::Reader::expect_count(l, 4, "vertex line");
    Vertex v{detail::Reader::integer<int>(l, 1, "vertex id"), detail::Reader::rational(l, 2),
             detail::Reader::rational(l, 3)};
    if (!ids.insert(v.id).second) throw ParseError(l.number, l.tokens[1].column, "duplicate vertex id");
    vs.push_back(v);
  }
  std::vector<EdgeCurve> es;
  std::unordered_set<std::uint64_t> seen;
  while (!in.done()) {
    const auto& l = in.next("edge line");
    detail::Reader::expect_word(l, 0, "e");
    if (l.tokens.size() < 5) detail::Reader::expect_count(l, 5, "edge line");
    EdgeCurve e;
    e.u = detail::Reader::integer<int>(l, 1, "vertex id");
    e.v = detail::Reader::integer<int>(l, 2, "vertex id");
    for (std::size_t i : {1, 2})
      if (!ids.count(i == 1 ? e.u : e.v)) throw ParseError(l.number, l.tokens[i].column, "unknown vertex");
    if (e.u == e.v) throw ParseError(l.number, l.tokens[2].column, "self-loop");
    const int wrap = detail::Reader::integer<int>(l, 3, "wrap flag");
    if (wrap != 0 && wrap != 1) throw ParseError(l.number, l.tokens[3].column, "wrap flag must be 0 or 1");
    e.wrap = wrap ? Wrap::Circular : Wrap::Direct;
    const long k = detail::Reader::integer<long>(l, 4, "point count");
    if (k < 2) throw ParseError(l.number, l.tokens[4].column, "an edge needs at least 2 points");
    detail::Reader::expect_count(l, std::size_t(5 + 2 * k), "edge line");
    for (long p = 0; p < k; ++p)
      e.polyline.push_back({detail::Reader::rational(l, std::size_t(5 + 2 * p)), detail::Reader::rational(l, std::size_t(6 + 2 * p))});
    auto a = std::uint32_t(std::min(e.u, e.v)), b = std::uint32_t(std::max(e.u, e.v));
    if (!seen.insert((std::uint64_t(a) << 32) | b).second) throw ParseError(l.number, l.tokens[1].column, "duplicate edge");
    es.push_back(std::move(e));
  }
  return Drawing(std::move(vs), std::move(es));
}

inline std::string serialize_mcd(const Drawing& d) {
  std::ostringstream os;
  os << "mcd 1\nn " << d.n() << "\n";
  for (const auto& v : d.vertices()) os << "v " << v.id << " " << v.x << " " << v.y << "\n";
  for (const auto& e : d.edges()) {
    os << "e " << e.u << " " << e.v << " " << (e.circular() ? 1 : 0) << " " << e.polyline.size();
    for (const auto& p : e.polyline) os << " " << p.x << " " << p.y;
    os << "\n";
  }
  return os.str();
}

inline std::string serialize_matching(const ProperMatching& m) {
  std::ostringstream os;
  os << "match " << m.size() << "\n";
  for (const auto& [u, v] : m.edges) os << "pair " << u << " " << v << "\n";
  for (const auto& w : m.witnesses) {
    os << "wit " << w.lower.first << " " << w.lower.second << " " << w.upper.first << " " << w.upper.second << " "
       << to_char(w.kind);
    if (w.separator) os << " " << w.separator->first << " " << w.separator->second;
    os << "\n";
  }
  return os.str();
}

inline std::string serialize_matching(const DisjointEdgeSet& s) {
  return serialize_matching(ProperMatching{s.edges, {}});
}

inline ProperMatching parse_matching(std::string_view text) {
  detail::Reader in(text);
  const auto& h = in.next("header");
  detail::Reader::expect_count(h, 2, "header");
  detail::Reader::expect_word(h, 0, "match");
  const long size = detail::Reader::integer<long>(h, 1, "size");
  if (size < 0) throw ParseError(h.number, h.tokens[1].column, "negative size");
  ProperMatching m;
  auto id = [](const detail::Line& l, std::size_t i) { return detail::Reader::integer<int>(l, i, "vertex id"); };
  for (long i = 0; i < size; ++i) {
    const auto& l = in.next("pair line");
    detail::Reader::expect_count(l, 3, "pair line");
    detail::Reader::expect_word(l, 0, "pair");
    m.edges.emplace_back(id(l, 1), id(l, 2));
  }
  while (!in.done()) {
    const auto& l = in.next("witness line");
    detail::Reader::expect_word(l, 0, "wit");
    if (l.tokens.size() != 6 && l.tokens.size() != 8) detail::Reader::expect_count(l, 6, "witness line");
    Witness w;
    w.lower = {id(l, 1), id(l, 2)};
    w.upper = {id(l, 3), id(l, 4)};
    const auto k = l.tokens[5].text;
    if (k == "a")
      w.kind = WitnessKind::LowerLeft;
    else if (k == "b")
      w.kind = WitnessKind::UpperLeft;
    else if (k == "c")
      w.kind = WitnessKind::Separator;
    else
      throw ParseError(l.number, l.tokens[5].column, "witness kind must be a, b or c");
    if (l.tokens.size() == 8) w.separator = EdgeKey{id(l, 6), id(l, 7)};
    if ((w.kind == WitnessKind::Separator) != w.separator.has_value())
      throw ParseError(l.number, l.tokens[5].column, "a separator witness names exactly one edge");
    m.witnesses.push_back(w);
  }
  return m;
}

}  // namespace mcd
