#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mcd/cyl_solver.hpp"
#include "mcd/flag_solver.hpp"
#include "mcd/generators.hpp"
#include "mcd/geometry.hpp"
#include "mcd/io.hpp"
#include "mcd/oracle.hpp"
#include "mcd/svg.hpp"
#include "mcd/validate.hpp"

namespace mcd {

struct SuiteOutcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() >= 8) truncated = true;
  }
  bool failed() const { return !failures.empty(); }
  bool truncated = false;
};

enum class Scope : std::uint8_t { Any, Flag, WrapFree, Complete };

struct Suite {
  std::string name;
  Scope scope = Scope::Any;
  std::size_t min_n = 2, max_n = 1000000;
  std::function<void(const Drawing&, SuiteOutcome&)> run;
};

struct CorpusEntry {
  std::string name;
  Drawing drawing;
};

struct SuiteReport {
  std::string name;
  std::size_t instances = 0, checks = 0, failed_instances = 0;
  std::string first_failure;     // "<instance>: <message>"
  std::string counterexample;    // minimized MCD1 text
};

struct LemmaReport {
  std::vector<SuiteReport> suites;
  bool ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failed_instances == 0; });
  }
  std::string text() const {
    std::ostringstream os;
    for (const auto& s : suites) {
      os << (s.failed_instances ? "FAIL " : "pass ") << s.name << ": " << s.instances << " instances, " << s.checks
         << " checks, " << s.failed_instances << " failing\n";
      if (!s.first_failure.empty()) os << "  first failure: " << s.first_failure << "\n";
      if (!s.counterexample.empty()) os << "  minimized counterexample:\n" << s.counterexample;
    }
    return os.str();
  }
};

namespace detail {

inline std::string ename(const EdgeCurve& e) { return edge_name(e); }

inline bool applies(const Suite& s, const Drawing& d, bool valid) {
  if (d.n() < s.min_n || d.n() > s.max_n) return false;
  if (s.name == "validator") return true;
  if (!valid) return false;
  switch (s.scope) {
    case Scope::Any: return true;
    case Scope::Flag: return d.complete() && is_flag(d);
    case Scope::WrapFree: return d.complete() && is_wrap_free(d);
    case Scope::Complete: return d.complete();
  }
  return false;
}

inline const EdgeCurve& at(const Drawing& d, std::size_t a, std::size_t b) { return d.edge_at(a, b); }

// ---- core geometry -------------------------------------------------------

inline void suite_validator(const Drawing& d, SuiteOutcome& out) {
  auto r = validate(d);
  out.check(r.ok, r.summary());
}

inline void suite_crossings(const Drawing& d, SuiteOutcome& out) {
  const auto& es = d.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      auto x = crossings(es[a], es[b]);
      auto y = crossings(es[b], es[a]);
      std::vector<BigRational> yx, yy;
      for (auto& p : x) yx.push_back(p.y);
      for (auto& p : y) yy.push_back(p.y);
      std::sort(yx.begin(), yx.end());
      std::sort(yy.begin(), yy.end());
      out.check(yx == yy, "asymmetric crossings " + ename(es[a]) + " / " + ename(es[b]));
      out.check(x.size() <= 1 && (x.empty() || !es[a].adjacent(es[b])),
                "simplicity fails for " + ename(es[a]) + " / " + ename(es[b]));
    }
}

inline void suite_relation(const Drawing& d, SuiteOutcome& out) {
  const auto& es = d.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      Relation r = relation(es[a], es[b]), s = relation(es[b], es[a]);
      out.check(s == flip(r), "relation not antisymmetric for " + ename(es[a]) + " / " + ename(es[b]));
      out.check((r == Relation::Crossing) == (crossing_count(es[a], es[b]) > 0), "crossing tag mismatch");
      if (es[a].adjacent(es[b])) {
        const EdgeCurve* both[2] = {&es[a], &es[b]};
        if (common_vertical_line(both))
          out.check(r == Relation::Below || r == Relation::Above,
                    "adjacent edges with a common line not related: " + ename(es[a]) + " / " + ename(es[b]));
      }
    }
}

// Sub-pieces of f between two of its points, shifted so they sit inside e.
inline void suite_piece_crossings(const Drawing& d, SuiteOutcome& out) {
  const auto& es = d.edges();
  for (const auto& e : es)
    for (const auto& f : es) {
      if (&e == &f) continue;
      const Polyline& P = e.polyline;
      for (std::int64_t t : kTranslates)
        for (std::size_t i = 0; i < f.polyline.size(); ++i)
          for (std::size_t j = i + 1; j < f.polyline.size(); ++j) {
            Polyline g;
            for (std::size_t k = i; k <= j; ++k) g.push_back({f.polyline[k].x + Rational(t), f.polyline[k].y});
            if (!(P.front().x < g.front().x && g.back().x < P.back().x)) continue;
            if (side_of(P, g.front().x, g.front().y) >= 0 || side_of(P, g.back().x, g.back().y) >= 0) continue;
            std::size_t c = 0;
            bool degenerate = false;
            try {
              auto s = scan_pair(P, g, 0);
              c = s.count;
              degenerate = s.overlap || s.tangency;
            } catch (const Error&) {
              degenerate = true;
            }
            if (degenerate) continue;
            out.check(c % 2 == 0, "odd crossings of a piece of " + ename(f) + " with " + ename(e));
            if (c == 0) out.check(curve_relation(g, P) == Relation::Below, "uncrossed piece not below " + ename(e));
          }
    }
}

inline void suite_circular_order(const Drawing& d, SuiteOutcome& out) {
  const auto& es = d.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = 0; b < es.size(); ++b) {
      const EdgeCurve& e = es[a];
      const EdgeCurve& f = es[b];
      if (a == b || !e.circular() || !f.circular() || !disjoint_edges(e, f)) continue;
      Relation r = relation(e, f);
      if (r == Relation::Below || r == Relation::Above) {
        out.check(true, "");
        continue;
      }
      Relation ra = point_relation(d.vertex(e.u), f), rb = point_relation(d.vertex(e.v), f);
      bool split = (ra == Relation::Below && rb == Relation::Above) || (ra == Relation::Above && rb == Relation::Below);
      out.check(split, "disjoint circular " + ename(e) + ", " + ename(f) + " neither related nor split");
    }
}

inline void suite_adjacent_order(const Drawing& d, SuiteOutcome& out) {
  const std::size_t n = d.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c || b > c) continue;
        const EdgeCurve& ab = at(d, a, b);
        const EdgeCurve& ac = at(d, a, c);
        Relation r = relation(ac, ab);
        out.check(r == Relation::Below || r == Relation::Above, "adjacent " + ename(ab) + ", " + ename(ac) + " unrelated");
        Relation pc = point_relation(d.vertex_at(c), ab);
        if (pc != Relation::NotRelated) out.check(pc == r, "side of vertex disagrees with " + ename(ac) + " vs " + ename(ab));
        Relation pb = point_relation(d.vertex_at(b), ac);
        if (pb != Relation::NotRelated) out.check(pb == flip(r), "side of vertex disagrees with " + ename(ab) + " vs " + ename(ac));
      }
}

inline void suite_transitivity(const Drawing& d, SuiteOutcome& out) {
  const auto& es = d.edges();
  const std::size_t m = es.size();
  std::vector<Relation> rel(m * m, Relation::NotRelated);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b) rel[a * m + b] = relation(es[a], es[b]);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (rel[a * m + b] != Relation::Below) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (c == a || rel[b * m + c] != Relation::Below) continue;
        if (rel[a * m + c] == Relation::NotRelated || rel[a * m + c] == Relation::Crossing) continue;
        const EdgeCurve* three[3] = {&es[a], &es[b], &es[c]};
        if (!common_vertical_line(three)) continue;
        out.check(rel[a * m + c] == Relation::Below,
                  "transitivity fails: " + ename(es[a]) + " < " + ename(es[b]) + " < " + ename(es[c]));
      }
    }
}

/// A 3-cycle of the below relation with no common vertical line, if any.
inline std::optional<std::array<EdgeKey, 3>> find_cycle(const Drawing& d) {
  const auto& es = d.edges();
  const std::size_t m = es.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || relation(es[a], es[b]) != Relation::Below) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        if (relation(es[b], es[c]) != Relation::Below || relation(es[c], es[a]) != Relation::Below) continue;
        const EdgeCurve* three[3] = {&es[a], &es[b], &es[c]};
        if (!common_vertical_line(three)) return std::array<EdgeKey, 3>{edge_key(es[a]), edge_key(es[b]), edge_key(es[c])};
      }
    }
  return std::nullopt;
}

inline void suite_recut(const Drawing& d, SuiteOutcome& out) {
  const std::size_t n = d.n();
  if (n < 2) return;
  auto a = pick_cut(d, d.vertex_at(n / 2 - 1).x, d.vertex_at(n / 2).x);
  out.check(a.has_value(), "no event-free cut found");
  if (!a) return;
  Drawing r = recut(d, *a);
  out.check(validate(r).ok, "recut drawing invalid");
  out.check(recut(r, Rational(1) - *a) == d, "recut round trip differs");
  for (const auto& e : d.edges()) {
    const EdgeCurve& g = r.edge(e.u, e.v);
    out.check(g.polyline.size() >= 2, "");
    for (const auto& f : d.edges()) {
      if (&e >= &f) continue;
      out.check(crossing_count(e, f) == crossing_count(g, r.edge(f.u, f.v)),
                "crossing count of " + ename(e) + ", " + ename(f) + " changes under recut");
    }
  }
}

// ---- flags ---------------------------------------------------------------

inline void suite_crossing_pattern(const Drawing& d, SuiteOutcome& out) {
  const std::size_t n = d.n();
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      const EdgeCurve& e = at(d, i1, i2);
      auto es = split_circular(e);
      for (std::size_t i3 = i2 + 1; i3 < n; ++i3)
        for (std::size_t i4 = i3 + 1; i4 < n; ++i4) {
          Relation s3 = point_relation(d.vertex_at(i3), e), s4 = point_relation(d.vertex_at(i4), e);
          if (s3 != s4 || s3 == Relation::NotRelated) continue;
          const bool below = s3 == Relation::Below;
          const EdgeCurve& f = at(d, i3, i4);
          auto fs = split_circular(f);
          const bool p1 = crossing_count(e, f) > 0;
          const bool p2 = !curve_crossings(es.positive, fs.negative).empty();
          Relation r1 = point_relation(d.vertex_at(i1), f), r2 = point_relation(d.vertex_at(i2), f);
          const Relation lo = below ? Relation::Below : Relation::Above, hi = flip(lo);
          const bool p3 = r2 == lo && r1 == hi && curve_relation(fs.negative, es.negative) == lo;
          const std::string who = ename(e) + " / " + ename(f);
          out.check(p1 == p2, "cross vs (e+ crosses f-) differ for " + who);
          out.check(p1 == p3, "cross vs endpoint pattern differ for " + who);
          const bool disjoint = !p1;
          out.check(disjoint == (r1 == hi && r2 == hi), "disjointness vs endpoint sides differ for " + who);
        }
    }
}

inline void suite_fan_order(const Drawing& d, SuiteOutcome& out) {
  const std::size_t n = d.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const EdgeCurve& e = at(d, i, j);
      std::vector<std::size_t> plus, minus;
      for (std::size_t s = j + 1; s < n; ++s)
        (point_relation(d.vertex_at(s), e) == Relation::Above ? plus : minus).push_back(s);
      for (int side = 0; side < 2; ++side) {
        const auto& V = side == 0 ? plus : minus;
        const Relation want = side == 0 ? Relation::Below : Relation::Above;
        for (std::size_t a = 0; a < V.size(); ++a)
          for (std::size_t b = a + 1; b < V.size(); ++b)
            out.check(relation(at(d, i, V[a]), at(d, i, V[b])) == want,
                      "fan order fails at " + ename(e) + " for " + ename(at(d, i, V[a])) + ", " + ename(at(d, i, V[b])));
      }
    }
}

inline void suite_circular_pairs(const Drawing& d, SuiteOutcome& out) {
  const std::size_t n = d.n();
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      const EdgeCurve& e = at(d, i1, i2);
      if (!e.circular()) continue;
      for (std::size_t i3 = i2 + 1; i3 < n; ++i3)
        for (std::size_t i4 = i3 + 1; i4 < n; ++i4) {
          const EdgeCurve& f = at(d, i3, i4);
          if (!f.circular()) continue;
          Relation s3 = point_relation(d.vertex_at(i3), e), s4 = point_relation(d.vertex_at(i4), e);
          if (s3 != s4 || s3 == Relation::NotRelated) continue;
          const Relation lo = s3, hi = flip(lo);  // f's endpoints are on side lo of e
          Relation r1 = point_relation(d.vertex_at(i1), f), r2 = point_relation(d.vertex_at(i2), f);
          const std::string who = ename(e) + " / " + ename(f);
          if (crossing_count(e, f) == 0) {
            out.check(relation(f, e) == lo, "disjoint pair not ordered: " + who);
            out.check(r1 == hi && r2 == hi, "disjoint pair endpoint sides: " + who);
          } else {
            const bool c1 = r1 == hi && r2 == lo, c2 = r1 == lo && r2 == hi;
            out.check(c1 != c2, "crossing pair matches neither pattern: " + who);
          }
        }
    }
}

/// Side disjointness for every structure recorded in `tr`; `d` is the frame the
/// trace was produced in.
inline void check_structure_events(const Drawing& d, const FlagTrace& tr, SuiteOutcome& out) {
  for (const auto& ev : tr.events) {
    if (ev.structure.kind == StructureKind::SeparatingEdge) {
      for (std::size_t a = 0; a < ev.upper.size(); ++a)
        for (std::size_t b = a + 1; b < ev.upper.size(); ++b)
          for (std::size_t c = 0; c < ev.lower.size(); ++c)
            for (std::size_t e2 = c + 1; e2 < ev.lower.size(); ++e2) {
              const EdgeCurve& up = d.edge(ev.upper[a], ev.upper[b]);
              const EdgeCurve& dn = d.edge(ev.lower[c], ev.lower[e2]);
              Relation r = relation(up, dn);
              out.check(r == Relation::Above || r == Relation::NotRelated,
                        "separating-edge sides not disjoint or misordered: " + ename(up) + " vs " + ename(dn));
            }
    } else {
      const EdgeCurve& kept = d.edge(ev.edge.first, ev.edge.second);
      const bool upper = ev.structure.kind == StructureKind::GoodUpperTriplet;
      const auto& scope = upper ? ev.lower : ev.upper;
      for (std::size_t a = 0; a < scope.size(); ++a)
        for (std::size_t b = a + 1; b < scope.size(); ++b) {
          const EdgeCurve& g = d.edge(scope[a], scope[b]);
          Relation r = relation(g, kept);
          out.check((r == Relation::Below || r == Relation::Above) && !g.adjacent(kept),
                    "triplet edge " + ename(kept) + " meets " + ename(g));
        }
    }
  }
}

inline void suite_flag_structures(const Drawing& d, SuiteOutcome& out) {
  FlagTrace tr;
  try {
    flag_matching(d, &tr);
  } catch (const Error& e) {
    out.check(false, std::string("flag_matching threw: ") + e.what());
    return;
  }
  check_structure_events(d, tr, out);
}

inline void suite_structure_exists(const Drawing& d, SuiteOutcome& out) {
  try {
    find_structure(d);
    out.check(true, "");
  } catch (const Error& e) {
    out.check(false, e.what());
  }
}

inline void suite_flag_matching(const Drawing& d, SuiteOutcome& out) {
  ProperMatching m = flag_matching(d);
  out.check(m.size() >= flag_bound(d.n()),
            "matching of size " + std::to_string(m.size()) + " below bound " + std::to_string(flag_bound(d.n())));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const EdgeCurve& e = d.edge(m.edges[a].first, m.edges[a].second);
      const EdgeCurve& f = d.edge(m.edges[b].first, m.edges[b].second);
      out.check(!e.adjacent(f) && crossings(e, f).empty(), "matching edges meet: " + ename(e) + ", " + ename(f));
    }
  auto pc = check_proper(d, m);
  out.check(pc.ok, pc.ok ? "" : std::string("not proper: ") + to_string(pc.violations[0].kind));
  ProperMatching again = flag_matching(d);
  out.check(again.edges == m.edges && again.witnesses == m.witnesses, "flag_matching is not deterministic");
}

inline void suite_subflags(const Drawing& d, SuiteOutcome& out) {
  Rng rng(d.n() * 7919 + 17);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> ids;
    for (const auto& v : d.vertices())
      if (rng.chance(1, 2)) ids.push_back(v.id);
    if (ids.size() < 2) continue;
    Drawing s = induced(d, ids);
    out.check(validate(s).ok && is_flag(s), "induced subflag on " + std::to_string(ids.size()) + " vertices fails");
  }
}

// ---- solver ----------------------------------------------------------------

inline void check_disjoint_set(const Drawing& d, const std::vector<EdgeKey>& s, SuiteOutcome& out, const char* who) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const EdgeCurve& e = d.edge(s[a].first, s[a].second);
      const EdgeCurve& f = d.edge(s[b].first, s[b].second);
      out.check(!e.adjacent(f) && crossings(e, f).empty(), std::string(who) + " output edges meet: " + ename(e) + ", " + ename(f));
    }
}

inline void suite_split_disjointness(const Drawing& d, SuiteOutcome& out) {
  SolveTrace tr;
  SolveOptions o;
  o.trace = &tr;
  DisjointEdgeSet r = solve(d, o);
  for (const auto& sp : tr.splits)
    for (const auto& v : check_split_claims(d, sp.layers))
      out.check(false, "split s=" + std::to_string(v.s) + ": " + v.what + " (" + std::to_string(v.first.first) + "-" +
                           std::to_string(v.first.second) + " vs " + std::to_string(v.second.first) + "-" +
                           std::to_string(v.second.second) + ")");
  out.check(true, "");
  for (const auto& fc : tr.flags) {
    Drawing rd = fc.cut == Rational(0) ? induced(d, fc.scope) : recut(induced(d, fc.scope), fc.cut);
    auto pc = check_proper(induced(rd, fc.flag_vertices), fc.matching);
    out.check(pc.ok, "flag call inside solve is not proper");
    check_structure_events(rd, fc.trace, out);
  }
}

inline void suite_solve(const Drawing& d, SuiteOutcome& out) {
  SolveTrace tr;
  SolveOptions o;
  o.trace = &tr;
  DisjointEdgeSet r = solve(d, o);
  out.check(r.size() >= 1, "empty output");
  check_disjoint_set(d, r.edges, out, "practical");
  DisjointEdgeSet again = solve(d);
  out.check(again.edges == r.edges, "solve is not deterministic");
  if (d.n() > 8) {
    SolveOptions p;
    p.mode = SolveMode::Paper;
    p.params = PaperParams{Rational(1, 4), 8};
    DisjointEdgeSet q = solve(d, p);
    out.check(q.size() >= 1, "empty paper-mode output");
    check_disjoint_set(d, q.edges, out, "paper");
  }
}

inline void suite_greedy(const Drawing& d, SuiteOutcome& out) {
  DisjointEdgeSet g = greedy_monotone(d);
  out.check(g.size() == d.n() / 2, "greedy size differs from floor(n/2)");
  check_disjoint_set(d, g.edges, out, "greedy");
}

inline void suite_oracle(const Drawing& d, SuiteOutcome& out) {
  OracleResult o = max_disjoint_bruteforce(d);
  check_disjoint_set(d, o.edges, out, "oracle");
  out.check(o.size() <= d.n() / 2, "oracle above floor(n/2)");
  std::size_t s = solve(d).size();
  out.check(o.size() >= s, "solver beats the oracle");
  if (is_flag(d)) {
    out.check(o.size() >= flag_matching(d).size(), "flag matching beats the oracle");
    if (d.n() >= 10) out.check(o.size() >= 2, "flag with fewer than 2 disjoint edges");
  }
  if (is_wrap_free(d)) out.check(o.size() == d.n() / 2 && greedy_monotone(d).size() == o.size(), "greedy not optimal");
  auto a = pick_cut(d, d.vertex_at(0).x, d.vertex_at(1).x);
  if (a) out.check(max_disjoint_bruteforce(recut(d, *a)).size() == o.size(), "oracle size changes under recut");
}

// ---- io ------------------------------------------------------------------

inline void suite_io(const Drawing& d, SuiteOutcome& out) {
  std::string t = serialize_mcd(d);
  Drawing back = parse_mcd(t);
  out.check(back == d, "MCD1 round trip differs");
  out.check(serialize_mcd(back) == t, "MCD1 serialization not stable");
  std::string s1 = render_svg(d), s2 = render_svg(d);
  out.check(s1 == s2, "SVG not deterministic");
  std::size_t paths = 0, pieces = 0, pos = 0;
  while ((pos = s1.find("<path ", pos)) != std::string::npos) {
    std::size_t end = s1.find("/>", pos);
    std::string el = s1.substr(pos, end - pos);
    pieces += std::size_t(std::count(el.begin(), el.end(), 'M'));
    ++paths;
    pos = end;
  }
  std::size_t wraps = std::size_t(std::count_if(d.edges().begin(), d.edges().end(), [](const EdgeCurve& e) { return e.circular(); }));
  out.check(paths == d.edges().size() && pieces == d.edges().size() + wraps, "SVG piece count differs");
}

}  // namespace detail

/// Every per-instance property suite with the size limits used by default.
inline std::vector<Suite> lemma_suites() {
  using namespace detail;
  return {
      {"validator", Scope::Any, 2, 1000000, suite_validator},
      {"crossings", Scope::Any, 2, 22, suite_crossings},
      {"relation", Scope::Any, 2, 22, suite_relation},
      {"piece-crossings", Scope::Any, 2, 9, suite_piece_crossings},
      {"circular-order", Scope::Any, 2, 22, suite_circular_order},
      {"adjacent-order", Scope::Flag, 3, 14, suite_adjacent_order},
      {"transitivity", Scope::Any, 3, 9, suite_transitivity},
      {"recut", Scope::Any, 2, 20, suite_recut},
      {"crossing-pattern", Scope::Flag, 4, 14, suite_crossing_pattern},
      {"fan-order", Scope::Flag, 3, 14, suite_fan_order},
      {"circular-pairs", Scope::Complete, 4, 16, suite_circular_pairs},
      {"structure-sides", Scope::Flag, 10, 40, suite_flag_structures},
      {"structure-exists", Scope::Flag, 10, 1000000, suite_structure_exists},
      {"flag-matching", Scope::Flag, 2, 200, suite_flag_matching},
      {"subflags", Scope::Flag, 2, 40, suite_subflags},
      {"split-disjointness", Scope::Complete, 2, 80, suite_split_disjointness},
      {"solve", Scope::Complete, 2, 300, suite_solve},
      {"greedy", Scope::WrapFree, 2, 1000000, suite_greedy},
      {"oracle", Scope::Complete, 2, kOracleMaxN, suite_oracle},
      {"io", Scope::Any, 2, 60, suite_io},
  };
}

/// Deletes vertices one at a time while `fails` keeps holding.
inline Drawing minimize(const Drawing& d, const std::function<bool(const Drawing&)>& fails) {
  Drawing cur = d;
  bool progress = true;
  while (progress && cur.n() > 2) {
    progress = false;
    auto ids = vertex_ids(cur);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::vector<int> keep;
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (j != i) keep.push_back(ids[j]);
      Drawing cand = induced(cur, keep);
      bool f = false;
      try {
        f = fails(cand);
      } catch (const std::exception&) {
        f = true;
      }
      if (f) {
        cur = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

struct LemmaOptions {
  std::vector<std::string> only;  // suite names; empty runs all
  bool minimize = true;
  unsigned workers = 1;
};

namespace detail {

struct InstanceResult {
  bool valid = false;
  std::vector<std::optional<SuiteOutcome>> outcomes;  // per suite; empty if not applicable
};

inline SuiteOutcome run_guarded(const Suite& s, const Drawing& d) {
  SuiteOutcome o;
  try {
    s.run(d, o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  return o;
}

}  // namespace detail

/// Runs every applicable suite on every corpus instance. Instances are spread
/// over `workers` threads; results are merged in corpus order.
inline LemmaReport lemma_check(const std::vector<CorpusEntry>& corpus, const LemmaOptions& opt = {}) {
  std::vector<Suite> suites;
  for (auto& s : lemma_suites())
    if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), s.name) != opt.only.end()) suites.push_back(s);

  std::vector<detail::InstanceResult> res(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) {
      const Drawing& d = corpus[i].drawing;
      auto& r = res[i];
      r.valid = validate(d).ok;
      for (const auto& s : suites)
        r.outcomes.push_back(detail::applies(s, d, r.valid) ? std::optional(detail::run_guarded(s, d)) : std::nullopt);
    }
  };
  const unsigned w = std::max(1u, std::min<unsigned>(opt.workers, unsigned(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < w; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  LemmaReport rep;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    const Suite& s = suites[k];
    SuiteReport sr;
    sr.name = s.name;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& o = res[i].outcomes[k];
      if (!o) continue;
      ++sr.instances;
      sr.checks += o->checks;
      if (!o->failed()) continue;
      ++sr.failed_instances;
      if (!sr.first_failure.empty()) continue;
      sr.first_failure = corpus[i].name + ": " + o->failures[0];
      if (opt.minimize) {
        Drawing small = minimize(corpus[i].drawing, [&](const Drawing& c) {
          return detail::applies(s, c, s.name == "validator" || validate(c).ok) && detail::run_guarded(s, c).failed();
        });
        sr.counterexample = serialize_mcd(small);
      }
    }
    rep.suites.push_back(std::move(sr));
  }
  std::vector<bool> valid;
  for (const auto& r : res) valid.push_back(r.valid);
  if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), "non-transitivity") != opt.only.end()) {
    // global: the corpus must contain a below-cycle that no vertical line meets entirely
    SuiteReport sr;
    sr.name = "non-transitivity";
    bool found = false;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!valid[i] || corpus[i].drawing.n() > 10) continue;
      ++sr.instances;
      ++sr.checks;
      if (detail::find_cycle(corpus[i].drawing)) {
        found = true;
      }
    }
    if (!found) {
      sr.failed_instances = 1;
      sr.first_failure = "no 3-cycle of the below relation without a common vertical line in the corpus";
    }
    rep.suites.push_back(std::move(sr));
  }
  return rep;
}

/// Archetypes plus seeded flags, mixed and wrap-free drawings.
inline std::vector<CorpusEntry> default_corpus(int seeds = 20) {
  std::vector<CorpusEntry> out;
  for (auto& [name, d] : gen_archetypes()) out.push_back({"archetype:" + name, d});
  for (int s = 1; s <= seeds; ++s) {
    GenConfig c;
    c.seed = std::uint64_t(s);
    c.n = 4 + (s * 5) % 11;  // 4..14
    out.push_back({"flag n=" + std::to_string(c.n) + " seed=" + std::to_string(s), gen_flag(c)});
    c.n = 10 + (s * 7) % 31;  // 10..40
    out.push_back({"flag n=" + std::to_string(c.n) + " seed=" + std::to_string(s), gen_flag(c)});
    c.n = 5 + (s * 3) % 8;  // 5..12
    c.wrap_prob = Rational(1 + s % 3, 4);
    out.push_back({"mixed n=" + std::to_string(c.n) + " seed=" + std::to_string(s), gen_mixed(c)});
    c.n = 20 + (s * 11) % 41;  // 20..60
    out.push_back({"mixed n=" + std::to_string(c.n) + " seed=" + std::to_string(s), gen_mixed(c)});
    c.n = 4 + s % 9;
    out.push_back({"planefree n=" + std::to_string(c.n) + " seed=" + std::to_string(s), gen_planefree(c)});
  }
  return out;
}

}  // namespace mcd
