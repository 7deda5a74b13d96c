#pragma once

#include <string>

#include "ramkit/graph/coloring_search.hpp"
#include "ramkit/widgets/gadget.hpp"

namespace ramkit {

inline void check_truth_roles(int x, int y, int z) {
  if (x < 0 || y < 0 || z < 0 || x > 2 || y > 2 || z > 2 || x == y || y == z || x == z)
    throw InputError("x, y, z must be a permutation of the truth vertices 0, 1, 2");
}

inline void name_truth_roles(Gadget& g, int x, int y, int z) {
  g.names["x"] = static_cast<Vertex>(x);
  g.names["y"] = static_cast<Vertex>(y);
  g.names["z"] = static_cast<Vertex>(z);
}

// R_{x->y,y->z}(a, u) on the truth triangle with a free input vertex a.
// Vertex ids: 0, 1, 2 truth, 3 a, 4 u, 5 v.
inline Gadget build_R(int x = 0, int y = 1, int z = 2) {
  check_truth_roles(x, y, z);
  Gadget g;
  Vertex a = g.add_vertex(VertexRole::aux(0, 0, "a"));
  RParts p = add_R(g, x, y, z, a, std::nullopt, 0);
  name_truth_roles(g, x, y, z);
  g.names["a"] = p.a;
  g.names["u"] = p.u;
  g.names["v"] = p.v;
  return g;
}

// U_{x,y,z}(l, b, u) with free vertices l and b.
inline Gadget build_U(int x = 0, int y = 1, int z = 2) {
  check_truth_roles(x, y, z);
  Gadget g;
  Vertex l = g.add_vertex(VertexRole::aux(0, 0, "l"));
  Vertex b = g.add_vertex(VertexRole::aux(0, 0, "b"));
  UParts p = add_U(g, x, y, z, l, b, 0);
  name_truth_roles(g, x, y, z);
  g.names["l"] = p.l;
  g.names["b"] = p.b;
  g.names["lbar"] = p.lbar;
  g.names["r"] = p.r;
  g.names["v"] = p.v;
  g.names["d"] = p.d;
  g.names["u"] = p.u;
  return g;
}

// D(l_0, ..., l_{n-1}) with literal vertices l_i (atom i, positive) joined
// to 2, the spine of R^i and U^i sub-widgets, and the terminal edge from
// u_{n-1} (l_0 when n = 1) to the truth vertex 0, 2 or 1 for
// n - 1 = 0, 1, 2 mod 3.
inline Gadget build_D(std::size_t n) {
  if (n == 0) throw InputError("build_D needs at least one literal");
  Gadget g;
  std::vector<Vertex> lits;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex l = g.add_vertex(VertexRole::literal(i, true));
    g.graph.add_edge(2, l);
    g.names["l" + std::to_string(i)] = l;
    lits.push_back(l);
  }
  Vertex prev = lits[0];
  for (std::size_t i = 1; i < n; ++i) {
    SpineStep s = add_spine_step(g, lits[i], prev, i);
    if (s.r) g.names["lp" + std::to_string(i)] = s.r->u;
    g.names["u" + std::to_string(i)] = s.u.u;
    g.names["d" + std::to_string(i)] = s.u.d;
    prev = s.u.u;
  }
  g.graph.add_edge(prev, static_cast<Vertex>(terminal_vertex(n - 1)));
  g.names["terminal"] = static_cast<Vertex>(terminal_vertex(n - 1));
  g.names["last"] = prev;
  return g;
}

// Proper 3-colorings of a gadget extending the pins, in lexicographic order.
inline std::vector<Coloring> enumerate_gadget_colorings(const Gadget& g, const Coloring& pins = {},
                                                        std::uint64_t budget = kDefaultSearchBudget) {
  return enumerate_colorings(g.graph, 3, pins, budget);
}

}  // namespace ramkit
