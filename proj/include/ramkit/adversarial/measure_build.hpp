#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramkit/adversarial/measure.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/core/word.hpp"
#include "ramkit/graph/graph.hpp"
#include "ramkit/graph/odd_path.hpp"

namespace ramkit {

// A finite stand-in for W_e^X: the entry for a prefix lists the vertices
// enumerated with that much of the oracle, and becomes visible at the stage
// equal to the prefix length.
struct OracleAdversary {
  std::size_t e = 0;
  std::size_t s_max = 0;
  std::map<Word, std::set<Vertex>> table;

  // W_{e,s}^sigma: the vertices listed at prefixes of sigma of length <= s.
  std::set<Vertex> enumerated(const Word& sigma, std::size_t s) const {
    std::set<Vertex> out;
    for (std::size_t n = 0; n <= std::min(s, sigma.size()); ++n) {
      auto it = table.find(prefix_of(sigma, n));
      if (it != table.end()) out.insert(it->second.begin(), it->second.end());
    }
    return out;
  }

  // Every vertex listed at a prefix of length <= s.
  std::set<Vertex> visible(std::size_t s) const {
    std::set<Vertex> out;
    for (const auto& [p, vs] : table)
      if (p.size() <= s) out.insert(vs.begin(), vs.end());
    return out;
  }
};

inline void validate_oracle(const OracleAdversary& a) {
  if (a.s_max > kMaxMeasureLength) throw InputError("oracle table: s_max above 24");
  for (const auto& [p, vs] : a.table) {
    if (p.size() > a.s_max) throw InputError("oracle table: prefix longer than s_max");
    for (Symbol b : p)
      if (b > 1) throw InputError("oracle table: prefix is not binary");
    for (const auto& [q, ws] : a.table)
      if (q.size() < p.size() && is_prefix(q, p) && !std::includes(vs.begin(), vs.end(), ws.begin(), ws.end()))
        throw InputError("non-monotone oracle table");
  }
}

inline void validate_oracles(const std::vector<OracleAdversary>& as) {
  std::set<std::size_t> seen;
  for (const OracleAdversary& a : as) {
    validate_oracle(a);
    if (!seen.insert(a.e).second) throw InputError("oracle index " + std::to_string(a.e) + " repeated");
  }
}

// One exact threshold comparison: measure > p/q.
struct MeasureComparison {
  std::size_t stage = 0;  // the stage s + 1 being built
  std::size_t e = 0;
  std::string kind;       // type1, type2, joint, union, g1, g2
  std::size_t length = 0; // prefix length the measure ranges over
  Dyadic measure;
  std::uint64_t p = 0, q = 1;
  bool result = false;
};

struct TypeTwoAction {
  std::size_t stage = 0;
  std::vector<Vertex> xs, ys;
  Vertex a = 0, b = 0, c = 0, d = 0;
  Dyadic joint, either, g1, g2;
  int choice = 0;           // 1 adds (a, c), 2 adds (a, d)
  Dyadic defeated;          // mu of inhomogeneous prefixes for the chosen graph
  Dyadic defeated_final;    // the same measure on the final graph
};

struct RequirementReport {
  std::size_t e = 0;
  std::vector<Vertex> locked;              // at the end of the run
  std::vector<std::size_t> type1_stages;
  std::vector<std::vector<Vertex>> type1_locks;
  std::optional<TypeTwoAction> type2;
};

struct MeasureBuildResult {
  Graph graph;
  std::size_t stages = 0;
  std::vector<MeasureComparison> log;
  std::vector<RequirementReport> requirements;  // ascending e
  std::vector<bool> bipartite;                  // after each stage
};

namespace detail {

struct MeasureState {
  Graph g;
  std::map<std::size_t, std::set<Vertex>> locks;
};

inline std::size_t comp_of(const ParityLabels& l, const Graph& g, Vertex v) {
  return v < g.vertex_count() ? l.component[v] : g.vertex_count() + v;
}

// Components touching a vertex locked by some R_k with k < bound.
inline std::set<std::size_t> locked_components(const MeasureState& st, const ParityLabels& l, std::size_t bound) {
  std::set<std::size_t> out;
  for (const auto& [k, vs] : st.locks)
    if (k < bound)
      for (Vertex v : vs) out.insert(comp_of(l, st.g, v));
  return out;
}

// Some two vertices of w lie in one component with opposite parity.
inline bool inhomogeneous(const Graph& g, const ParityLabels& l, const std::set<Vertex>& w) {
  std::map<std::size_t, int> seen;
  for (Vertex v : w) {
    if (v >= g.vertex_count()) continue;
    auto [it, fresh] = seen.emplace(l.component[v], l.parity[v]);
    if (!fresh && it->second != l.parity[v]) return true;
  }
  return false;
}

inline Dyadic inhomogeneous_measure(const Graph& g, const OracleAdversary& a, std::size_t s) {
  ParityLabels l = parity_labels(g);
  const std::size_t len = std::min(s, a.s_max);
  return exact_measure(len, [&](const Word& x) { return inhomogeneous(g, l, a.enumerated(x, s)); });
}

// Candidate vertices outside the avoided components, least first, up to the
// first prefix of that order covering more than 9/10.
inline std::optional<std::vector<Vertex>> least_cover(const OracleAdversary& a, std::size_t s,
                                                      const std::vector<Vertex>& candidates) {
  const std::size_t len = std::min(s, a.s_max);
  std::vector<Vertex> chosen;
  for (Vertex v : candidates) {
    chosen.push_back(v);
    std::set<Vertex> cs(chosen.begin(), chosen.end());
    Dyadic m = exact_measure(len, [&](const Word& x) {
      auto w = a.enumerated(x, s);
      return std::any_of(w.begin(), w.end(), [&](Vertex u) { return cs.count(u) > 0; });
    });
    if (m.greater_than(9, 10)) return chosen;
  }
  return std::nullopt;
}

// Attach each vertex to p or q (an edge p-q already present) keeping the
// graph bipartite: to p unless the vertex already sits at even distance
// from p.
inline void attach_side(Graph& g, const std::vector<Vertex>& vs, Vertex p, Vertex q) {
  for (Vertex v : vs) {
    ParityLabels l = parity_labels(g);
    bool same = v < g.vertex_count() && l.component[v] == l.component[p];
    g.add_edge(v, same && l.parity[v] == l.parity[p] ? q : p);
  }
}

}  // namespace detail

// Stages s + 1 for s = 0 .. stages-1. The least e < s whose requirement
// needs attention acts. Type I locks least-first vertices covering more than
// 9/10 and unlocks every larger index. Type II covers more than 9/10 with
// vertices away from all locks of index <= e, ties both groups to fresh
// edges (a, b) and (c, d), and adds (a, c) when that defeats more than 2/5,
// otherwise (a, d).
inline MeasureBuildResult measure_build(std::vector<OracleAdversary> adversaries, std::size_t stages) {
  validate_oracles(adversaries);
  std::sort(adversaries.begin(), adversaries.end(),
            [](const OracleAdversary& a, const OracleAdversary& b) { return a.e < b.e; });
  MeasureBuildResult out;
  out.stages = stages;
  detail::MeasureState st;
  std::map<std::size_t, RequirementReport> reports;
  for (const OracleAdversary& a : adversaries) reports[a.e].e = a.e;

  auto record = [&](std::size_t stage, std::size_t e, const std::string& kind, std::size_t len, const Dyadic& m,
                    std::uint64_t p, std::uint64_t q) {
    bool r = m.greater_than(p, q);
    out.log.push_back({stage, e, kind, len, m, p, q, r});
    return r;
  };

  for (std::size_t s = 0; s < stages; ++s) {
    const std::size_t stage = s + 1;
    for (const OracleAdversary& a : adversaries) {
      if (a.e >= s) break;
      RequirementReport& rep = reports[a.e];
      const std::size_t len = std::min(s, a.s_max);
      ParityLabels l = parity_labels(st.g);
      const bool has_locks = !st.locks[a.e].empty();
      if (!has_locks) {
        auto avoid = detail::locked_components(st, l, a.e);
        std::vector<Vertex> cands;
        for (Vertex v : a.visible(s))
          if (!avoid.count(detail::comp_of(l, st.g, v))) cands.push_back(v);
        std::set<Vertex> cs(cands.begin(), cands.end());
        Dyadic m = exact_measure(len, [&](const Word& x) {
          auto w = a.enumerated(x, s);
          return std::any_of(w.begin(), w.end(), [&](Vertex u) { return cs.count(u) > 0; });
        });
        if (!record(stage, a.e, "type1", len, m, 9, 10)) continue;
        auto xs = detail::least_cover(a, s, cands);
        st.locks[a.e] = {xs->begin(), xs->end()};
        for (auto& [k, vs] : st.locks)
          if (k > a.e) vs.clear();
        rep.type1_stages.push_back(stage);
        rep.type1_locks.push_back(*xs);
        break;
      }
      if (rep.type2) continue;
      auto avoid = detail::locked_components(st, l, a.e + 1);
      std::vector<Vertex> cands;
      for (Vertex v : a.visible(s))
        if (!avoid.count(detail::comp_of(l, st.g, v))) cands.push_back(v);
      std::set<Vertex> cs(cands.begin(), cands.end());
      Dyadic m = exact_measure(len, [&](const Word& x) {
        auto w = a.enumerated(x, s);
        return std::any_of(w.begin(), w.end(), [&](Vertex u) { return cs.count(u) > 0; });
      });
      if (!record(stage, a.e, "type2", len, m, 9, 10)) continue;

      TypeTwoAction act;
      act.stage = stage;
      act.xs.assign(st.locks[a.e].begin(), st.locks[a.e].end());
      act.ys = *detail::least_cover(a, s, cands);
      std::set<Vertex> taken(act.xs.begin(), act.xs.end());
      taken.insert(act.ys.begin(), act.ys.end());
      for (const auto& [k, vs] : st.locks) taken.insert(vs.begin(), vs.end());
      std::vector<Vertex> fresh;
      for (Vertex v = s + 1; fresh.size() < 4; ++v)
        if (st.g.isolated(v) && !taken.count(v)) fresh.push_back(v);
      act.a = fresh[0];
      act.b = fresh[1];
      act.c = fresh[2];
      act.d = fresh[3];

      std::set<Vertex> xset(act.xs.begin(), act.xs.end()), yset(act.ys.begin(), act.ys.end());
      act.joint = exact_measure(len, [&](const Word& x) {
        auto w = a.enumerated(x, s);
        bool hx = std::any_of(w.begin(), w.end(), [&](Vertex u) { return xset.count(u) > 0; });
        bool hy = std::any_of(w.begin(), w.end(), [&](Vertex u) { return yset.count(u) > 0; });
        return hx && hy;
      });
      record(stage, a.e, "joint", len, act.joint, 4, 5);

      Graph base = st.g;
      base.add_edge(act.a, act.b);
      base.add_edge(act.c, act.d);
      detail::attach_side(base, act.xs, act.a, act.b);
      detail::attach_side(base, act.ys, act.c, act.d);
      Graph g1 = base, g2 = base;
      g1.add_edge(act.a, act.c);
      g2.add_edge(act.a, act.d);
      ParityLabels l1 = parity_labels(g1), l2 = parity_labels(g2);
      act.either = exact_measure(len, [&](const Word& x) {
        auto w = a.enumerated(x, s);
        return detail::inhomogeneous(g1, l1, w) || detail::inhomogeneous(g2, l2, w);
      });
      record(stage, a.e, "union", len, act.either, 4, 5);
      act.g1 = detail::inhomogeneous_measure(g1, a, s);
      act.g2 = detail::inhomogeneous_measure(g2, a, s);
      if (record(stage, a.e, "g1", len, act.g1, 2, 5)) {
        act.choice = 1;
        st.g = std::move(g1);
        act.defeated = act.g1;
      } else {
        record(stage, a.e, "g2", len, act.g2, 2, 5);
        act.choice = 2;
        st.g = std::move(g2);
        act.defeated = act.g2;
      }
      rep.type2 = act;
      break;
    }
    out.bipartite.push_back(!odd_cycle_exists(st.g));
  }

  for (const OracleAdversary& a : adversaries) {
    RequirementReport& rep = reports[a.e];
    rep.locked.assign(st.locks[a.e].begin(), st.locks[a.e].end());
    if (rep.type2) rep.type2->defeated_final = detail::inhomogeneous_measure(st.g, a, rep.type2->stage - 1);
    out.requirements.push_back(rep);
  }
  out.graph = std::move(st.g);
  return out;
}

}  // namespace ramkit
