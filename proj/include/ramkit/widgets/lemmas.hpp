#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramkit/graph/coloring_search.hpp"
#include "ramkit/widgets/widgets.hpp"

namespace ramkit {

struct LemmaCheck {
  LemmaCheck(std::string l, std::string s) : lemma(std::move(l)), scope(std::move(s)) {}
  std::string lemma;   // e.g. "RWidget(i)"
  std::string scope;   // gadget instance, e.g. "x=0,y=1,z=2"
  bool pass = true;
  std::uint64_t cases = 0;
  std::optional<Coloring> counterexample;
  std::string detail;
};

namespace detail {

// The truth vertex whose color w has.
inline int truth_of(const Coloring& nu, Vertex w) {
  for (int t = 0; t < 3; ++t)
    if (nu[t] == nu[w]) return t;
  return -1;
}

inline void fail(LemmaCheck& c, const Coloring& nu, std::string why) {
  if (!c.pass) return;
  c.pass = false;
  c.counterexample = nu;
  c.detail = std::move(why);
}

// Every proper coloring of the subgraph induced by `keep` (ids in g),
// expressed as a pin vector over all of g.
inline std::vector<Coloring> induced_colorings(const Graph& g, const std::vector<Vertex>& keep) {
  Graph sub = induced_subgraph(g, keep);
  std::vector<Coloring> out;
  for (const Coloring& c : enumerate_colorings(sub, 3)) {
    Coloring pins(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pins[keep[i]] = c[i];
    out.push_back(std::move(pins));
  }
  return out;
}

// For every coloring, the truth class of `from` must determine the truth
// class of `to`.
inline void check_determines(LemmaCheck& c, const std::vector<Coloring>& all, Vertex from, Vertex to) {
  std::map<int, int> seen;
  for (const Coloring& nu : all) {
    ++c.cases;
    int f = truth_of(nu, from), t = truth_of(nu, to);
    auto [it, fresh] = seen.emplace(f, t);
    if (!fresh && it->second != t)
      fail(c, nu, "color of vertex " + std::to_string(from) + " does not determine vertex " + std::to_string(to));
  }
}

// The recorded decode rule for w must hold in every coloring.
inline void check_rule(LemmaCheck& c, const Gadget& g, const std::vector<Coloring>& all, Vertex w) {
  const DecodeRule& rule = g.rules.at(w);
  for (const Coloring& nu : all) {
    ++c.cases;
    const Conclusion& con = rule[truth_of(nu, w)];
    if (!con.holds(nu)) fail(c, nu, "decode rule of vertex " + std::to_string(w) + " gives " + conclusion_text(con));
  }
}

inline std::string scope_of(const Gadget& g) {
  return "x=" + std::to_string(g.name("x")) + ",y=" + std::to_string(g.name("y")) + ",z=" + std::to_string(g.name("z"));
}

}  // namespace detail

// Lemma clauses of R_{x->y,y->z}(a, u), checked over every proper
// 3-coloring of the gadget (all colorings of the truth triangle included).
inline std::vector<LemmaCheck> check_R_lemmas(const Gadget& g) {
  using detail::truth_of;
  const Vertex x = g.name("x"), y = g.name("y"), z = g.name("z");
  const Vertex a = g.name("a"), u = g.name("u"), v = g.name("v");
  const std::string scope = detail::scope_of(g);
  const std::vector<Coloring> all = enumerate_gadget_colorings(g);

  LemmaCheck i{"RWidget(i)", scope};
  for (const Coloring& nu : all) {
    ++i.cases;
    if (nu[a] == nu[x] && nu[u] != nu[y]) detail::fail(i, nu, "a=x but u!=y");
    if (nu[a] == nu[y] && nu[u] != nu[z]) detail::fail(i, nu, "a=y but u!=z");
  }

  LemmaCheck ii{"RWidget(ii)", scope};
  for (const Coloring& pins : detail::induced_colorings(g.graph, {x, y, z, a})) {
    ++ii.cases;
    if (find_coloring(g.graph, 3, pins).status != ColoringSearchResult::Status::kFound)
      detail::fail(ii, pins, "coloring of {x,y,z,a} does not extend");
  }

  LemmaCheck iii{"RWidget(iii)", scope};
  detail::check_determines(iii, all, u, a);
  detail::check_determines(iii, all, v, a);
  detail::check_rule(iii, g, all, u);
  detail::check_rule(iii, g, all, v);
  return {i, ii, iii};
}

// Lemma clauses of U_{x,y,z}(l, b, u) and its decoding lemma.
inline std::vector<LemmaCheck> check_U_lemmas(const Gadget& g) {
  using detail::truth_of;
  const Vertex x = g.name("x"), y = g.name("y"), z = g.name("z");
  const Vertex l = g.name("l"), b = g.name("b"), u = g.name("u");
  const std::string scope = detail::scope_of(g);
  const std::vector<Coloring> all = enumerate_gadget_colorings(g);
  const std::vector<Coloring> interface = detail::induced_colorings(g.graph, {x, y, z, l, b});

  auto extends_with = [&](Coloring pins, std::optional<Vertex> target) {
    if (target) pins[u] = pins[*target];
    return find_coloring(g.graph, 3, pins).status == ColoringSearchResult::Status::kFound;
  };

  LemmaCheck i{"U3Widget(i)", scope};
  for (const Coloring& pins : interface) {
    ++i.cases;
    if (!extends_with(pins, std::nullopt)) detail::fail(i, pins, "coloring of {x,y,z,l,b} does not extend");
  }

  LemmaCheck ii{"U3Widget(ii)", scope};
  for (const Coloring& nu : all) {
    ++ii.cases;
    if (nu[l] == nu[x] && nu[b] == nu[y] && nu[u] != nu[x]) detail::fail(ii, nu, "l=x and b=y but u!=x");
  }

  LemmaCheck iii{"U3Widget(iii)", scope};
  for (const Coloring& pins : interface) {
    if (pins[l] != pins[x] || pins[b] == pins[y]) continue;
    ++iii.cases;
    if (!extends_with(pins, z)) detail::fail(iii, pins, "l=x, b!=y does not extend with u=z");
  }

  LemmaCheck iv{"U3Widget(iv)", scope};
  for (const Coloring& pins : interface) {
    if (pins[l] != pins[y]) continue;
    ++iv.cases;
    if (!extends_with(pins, y)) detail::fail(iv, pins, "l=y does not extend with u=y");
  }

  std::vector<LemmaCheck> out{i, ii, iii, iv};
  for (const char* w : {"lbar", "u", "r", "v"}) {
    LemmaCheck c{std::string("U3WidgetDecode(") + w + ")", scope};
    detail::check_determines(c, all, g.name(w), l);
    detail::check_rule(c, g, all, g.name(w));
    out.push_back(c);
  }
  LemmaCheck d{"U3WidgetDecode(d)", scope};
  detail::check_rule(d, g, all, g.name("d"));
  out.push_back(d);
  return out;
}

// Lemma clauses of D(l_0, ..., l_{n-1}) for the gadget built by build_D (or
// a mutation of it) with n literals.
inline std::vector<LemmaCheck> check_D_lemmas(const Gadget& g, std::size_t n,
                                              std::uint64_t budget = kDefaultSearchBudget) {
  using detail::truth_of;
  std::vector<Vertex> lits;
  for (std::size_t i = 0; i < n; ++i) lits.push_back(g.name("l" + std::to_string(i)));
  const std::string scope = "n=" + std::to_string(n);
  std::vector<Vertex> interface_vertices{0, 1, 2};
  interface_vertices.insert(interface_vertices.end(), lits.begin(), lits.end());
  const std::vector<Coloring> interface = detail::induced_colorings(g.graph, interface_vertices);

  LemmaCheck i{"DWidget(i)", scope};
  for (const Coloring& pins : interface) {
    bool some_true = false;
    for (Vertex l : lits) some_true = some_true || pins[l] == pins[1];
    if (!some_true) continue;
    ++i.cases;
    if (find_coloring(g.graph, 3, pins, budget).status != ColoringSearchResult::Status::kFound)
      detail::fail(i, pins, "interface coloring with a true literal does not extend");
  }

  LemmaCheck ii{"DWidget(ii)", scope};
  for (const Coloring& pins : interface) {
    bool all_false = true;
    for (Vertex l : lits) all_false = all_false && pins[l] == pins[0];
    if (!all_false) continue;
    ++ii.cases;
    auto r = find_coloring(g.graph, 3, pins, budget);
    if (r.status == ColoringSearchResult::Status::kFound) detail::fail(ii, r.coloring, "all literals colored 0");
    if (r.status == ColoringSearchResult::Status::kBudgetExceeded) detail::fail(ii, pins, "search budget exceeded");
  }

  LemmaCheck dec{"DWidgetDecode", scope};
  std::vector<DecodeRule> resolved(g.graph.vertex_count());
  for (Vertex w = 0; w < g.graph.vertex_count(); ++w) {
    const VertexRole& role = g.roles[w];
    if (role.kind != VertexRole::Kind::kAux) continue;
    for (int t = 0; t < 3; ++t) {
      Conclusion c = g.resolve(Conclusion::equals(w, t));
      resolved[w][t] = c;
      if (c.kind == Conclusion::Kind::kImpossible) continue;
      bool ok = c.kind == Conclusion::Kind::kEquals && g.is_literal(c.target) &&
                (c.target == lits[role.index] || (role.index > 0 && c.target == lits[role.index - 1]));
      if (!ok && dec.pass) {
        dec.pass = false;
        dec.detail = "vertex " + std::to_string(w) + " resolves to " + conclusion_text(c) +
                     ", not a statement about its own or the previous literal";
      }
    }
  }
  for_each_coloring(
      g.graph, 3, {},
      [&](const Coloring& nu) {
        ++dec.cases;
        for (Vertex w = 0; w < g.graph.vertex_count(); ++w) {
          if (g.roles[w].kind != VertexRole::Kind::kAux) continue;
          const Conclusion& c = resolved[w][truth_of(nu, w)];
          if (!c.holds(nu)) {
            detail::fail(dec, nu, "vertex " + std::to_string(w) + " decodes to " + conclusion_text(c));
            return false;
          }
        }
        return true;
      },
      budget);
  return {i, ii, dec};
}

// The full suite: R and U under all six role permutations, D for
// n = 1..max_n.
inline std::vector<LemmaCheck> check_widget_lemmas(std::size_t max_n = 7) {
  std::vector<LemmaCheck> out;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    for (auto& c : check_R_lemmas(build_R(p[0], p[1], p[2]))) out.push_back(std::move(c));
  for (const auto& p : perms)
    for (auto& c : check_U_lemmas(build_U(p[0], p[1], p[2]))) out.push_back(std::move(c));
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& c : check_D_lemmas(build_D(n), n)) out.push_back(std::move(c));
  return out;
}

// Number of proper 3-colorings of R_{0->1,1->2}(a, u) with x, y, z colored
// 0, 1, 2.
inline std::size_t r_pinned_coloring_count() {
  Gadget g = build_R(0, 1, 2);
  Coloring pins(g.graph.vertex_count(), -1);
  pins[0] = 0;
  pins[1] = 1;
  pins[2] = 2;
  return enumerate_gadget_colorings(g, pins).size();
}

// One-edge deletions that must break a lemma clause.
struct Mutation {
  std::string gadget;
  Edge removed;
  std::string expected_failure;
  std::vector<LemmaCheck> report;
  bool caught() const {
    for (const auto& c : report)
      if (c.lemma == expected_failure && !c.pass && c.counterexample) return true;
    return false;
  }
};

inline std::vector<Mutation> run_widget_mutations() {
  std::vector<Mutation> out;
  {
    Gadget g = build_R(0, 1, 2);
    Edge e{g.name("x"), g.name("u")};
    g.graph.remove_edge(e.first, e.second);
    out.push_back({"R", e, "RWidget(i)", check_R_lemmas(g)});
  }
  {
    Gadget g = build_U(0, 1, 2);
    Edge e{g.name("b"), g.name("d")};
    g.graph.remove_edge(e.first, e.second);
    out.push_back({"U", e, "U3Widget(ii)", check_U_lemmas(g)});
  }
  {
    Gadget g = build_D(4);
    Edge e{g.name("last"), g.name("terminal")};
    g.graph.remove_edge(e.first, e.second);
    out.push_back({"D", e, "DWidget(ii)", check_D_lemmas(g, 4)});
  }
  return out;
}

}  // namespace ramkit
