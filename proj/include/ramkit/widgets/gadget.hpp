#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/graph/graph.hpp"

namespace ramkit {

struct VertexRole {
  enum class Kind { kTruth, kLiteral, kAux };
  Kind kind = Kind::kAux;
  int truth = -1;          // kTruth: 0, 1 or 2
  std::size_t atom = 0;    // kLiteral
  bool positive = true;    // kLiteral
  std::size_t widget = 0;  // kAux: id of the sub-widget that created the vertex
  std::size_t index = 0;   // kAux: literal position i of the sub-widget
  std::string tag;         // kAux: a, u, v, lprime, lbar, r, d, ...

  static VertexRole truth_vertex(int t) { return {Kind::kTruth, t, 0, true, 0, 0, ""}; }
  static VertexRole literal(std::size_t atom, bool positive) { return {Kind::kLiteral, -1, atom, positive, 0, 0, ""}; }
  static VertexRole aux(std::size_t widget, std::size_t index, std::string tag) {
    return {Kind::kAux, -1, 0, true, widget, index, std::move(tag)};
  }
};

inline std::string role_name(const VertexRole& r) {
  switch (r.kind) {
    case VertexRole::Kind::kTruth: return "truth:" + std::to_string(r.truth);
    case VertexRole::Kind::kLiteral: return std::string("literal:") + (r.positive ? "" : "!") + "a" + std::to_string(r.atom);
    case VertexRole::Kind::kAux:
      return "aux:w" + std::to_string(r.widget) + ":i" + std::to_string(r.index) + ":" + r.tag;
  }
  return "";
}

// What a coloring with nu(w) = nu(t) says about another vertex:
// target =_nu truth, target !=_nu truth, or that the case cannot occur.
struct Conclusion {
  enum class Kind { kImpossible, kEquals, kDiffers };
  Kind kind = Kind::kImpossible;
  Vertex target = 0;
  int truth = 0;

  static Conclusion impossible() { return {}; }
  static Conclusion equals(Vertex v, int t) { return {Kind::kEquals, v, t}; }
  static Conclusion differs(Vertex v, int t) { return {Kind::kDiffers, v, t}; }
  friend bool operator==(const Conclusion&, const Conclusion&) = default;

  // Whether the conclusion holds in a coloring whose truth vertices 0, 1, 2
  // are vertices 0, 1, 2 of the graph.
  bool holds(const std::vector<int>& nu) const {
    switch (kind) {
      case Kind::kImpossible: return false;
      case Kind::kEquals: return nu[target] == nu[truth];
      case Kind::kDiffers: return nu[target] != nu[truth];
    }
    return false;
  }
};

inline std::string conclusion_text(const Conclusion& c) {
  switch (c.kind) {
    case Conclusion::Kind::kImpossible: return "impossible";
    case Conclusion::Kind::kEquals: return std::to_string(c.target) + "=" + std::to_string(c.truth);
    case Conclusion::Kind::kDiffers: return std::to_string(c.target) + "!=" + std::to_string(c.truth);
  }
  return "";
}

// Indexed by the truth vertex t whose color the vertex shares.
using DecodeRule = std::array<Conclusion, 3>;

// A graph whose vertices 0, 1, 2 are the truth triangle, with a role per
// vertex, named interface vertices and per-vertex decode rules recorded
// while the widgets are added.
class Gadget {
 public:
  Gadget() {
    for (int t = 0; t < 3; ++t) add_vertex(VertexRole::truth_vertex(t));
    graph.add_edge(0, 1);
    graph.add_edge(1, 2);
    graph.add_edge(0, 2);
  }

  Graph graph;
  std::vector<VertexRole> roles;
  std::map<std::string, Vertex> names;
  std::map<Vertex, DecodeRule> rules;
  std::size_t widgets = 0;  // number of sub-widgets added so far

  Vertex add_vertex(VertexRole role) {
    Vertex v = graph.add_vertex();
    roles.push_back(std::move(role));
    return v;
  }

  Vertex name(const std::string& n) const {
    auto it = names.find(n);
    if (it == names.end()) throw InputError("gadget has no vertex named " + n);
    return it->second;
  }

  bool is_literal(Vertex v) const { return roles.at(v).kind == VertexRole::Kind::kLiteral; }
  bool is_truth(Vertex v) const { return roles.at(v).kind == VertexRole::Kind::kTruth; }

  // Resolves a conclusion through the recorded rules until it speaks about
  // a literal vertex or a vertex without rules. A literal vertex can only
  // share the color of truth vertex 0 or 1.
  Conclusion resolve(const Conclusion& c, int depth = 0) const {
    if (depth > 64) throw InputError("decode rules form a cycle");
    if (c.kind == Conclusion::Kind::kImpossible || is_truth(c.target)) return c;
    if (c.kind == Conclusion::Kind::kEquals) {
      if (is_literal(c.target)) return c.truth == 2 ? Conclusion::impossible() : c;
      auto it = rules.find(c.target);
      if (it == rules.end()) return c;
      return resolve(it->second[c.truth], depth + 1);
    }
    // target differs from truth t: it shares one of the other two colors,
    // so a conclusion common to both (ignoring impossible cases) holds.
    if (!is_literal(c.target) && !rules.count(c.target)) return c;
    std::optional<Conclusion> common;
    for (int t = 0; t < 3; ++t) {
      if (t == c.truth) continue;
      Conclusion r = resolve(Conclusion::equals(c.target, t), depth + 1);
      if (r.kind == Conclusion::Kind::kImpossible) continue;
      if (common && !(*common == r)) return c;
      common = r;
    }
    return common ? *common : Conclusion::impossible();
  }
};

// Sub-widget R_{x->y, y->z}(a, u): adds v and u (when u is not given) and
// the edges au, uv, va, xu, yv, za. The triangle xyz is the gadget's
// truth triangle. Records the rules for u and v.
struct RParts {
  Vertex a, u, v;
};

inline RParts add_R(Gadget& g, int x, int y, int z, Vertex a, std::optional<Vertex> u, std::size_t index,
                    std::optional<std::size_t> widget = std::nullopt) {
  std::size_t id = widget ? *widget : g.widgets++;
  RParts p{a, 0, 0};
  p.u = u ? *u : g.add_vertex(VertexRole::aux(id, index, "u"));
  p.v = g.add_vertex(VertexRole::aux(id, index, "v"));
  g.graph.add_edge(p.a, p.u);
  g.graph.add_edge(p.u, p.v);
  g.graph.add_edge(p.v, p.a);
  g.graph.add_edge(static_cast<Vertex>(x), p.u);
  g.graph.add_edge(static_cast<Vertex>(y), p.v);
  g.graph.add_edge(static_cast<Vertex>(z), p.a);
  DecodeRule ru, rv;
  ru[x] = Conclusion::impossible();
  ru[y] = Conclusion::equals(a, x);
  ru[z] = Conclusion::equals(a, y);
  rv[x] = Conclusion::equals(a, y);
  rv[y] = Conclusion::impossible();
  rv[z] = Conclusion::equals(a, x);
  g.rules[p.u] = ru;
  g.rules[p.v] = rv;
  return p;
}

// U_{x,y,z}(l, b, u): fresh lbar, r, d, u and the R_{x->y,y->z}(l, r)
// sub-widget; edges z-l, l-lbar, lbar-z, lbar-u, r-u, l-d, d-u, b-d.
struct UParts {
  Vertex l, b, lbar, r, v, d, u;
};

inline UParts add_U(Gadget& g, int x, int y, int z, Vertex l, Vertex b, std::size_t index) {
  std::size_t id = g.widgets++;
  UParts p{l, b, 0, 0, 0, 0, 0};
  p.lbar = g.add_vertex(VertexRole::aux(id, index, "lbar"));
  p.r = g.add_vertex(VertexRole::aux(id, index, "r"));
  RParts inner = add_R(g, x, y, z, l, p.r, index, id);
  p.v = inner.v;
  p.d = g.add_vertex(VertexRole::aux(id, index, "d"));
  p.u = g.add_vertex(VertexRole::aux(id, index, "u"));
  g.graph.add_edge(static_cast<Vertex>(z), l);
  g.graph.add_edge(l, p.lbar);
  g.graph.add_edge(p.lbar, static_cast<Vertex>(z));
  g.graph.add_edge(p.lbar, p.u);
  g.graph.add_edge(p.r, p.u);
  g.graph.add_edge(l, p.d);
  g.graph.add_edge(p.d, p.u);
  g.graph.add_edge(b, p.d);
  DecodeRule rl, ru, rd;
  rl[x] = Conclusion::equals(l, y);
  rl[y] = Conclusion::equals(l, x);
  rl[z] = Conclusion::impossible();
  ru[x] = Conclusion::equals(l, x);
  ru[y] = Conclusion::equals(l, y);
  ru[z] = Conclusion::equals(l, x);
  rd[x] = Conclusion::equals(l, y);
  rd[y] = Conclusion::equals(l, x);
  rd[z] = Conclusion::differs(b, z);
  g.rules[p.lbar] = rl;
  g.rules[p.u] = ru;
  g.rules[p.d] = rd;
  return p;
}

// Truth-vertex roles (x, y, z) of the sub-widgets at literal position i of
// a D widget, and the terminal vertex for a last position i.
struct SpineRoles {
  int x, y, z;
};

inline SpineRoles u_roles(std::size_t i) {
  switch (i % 3) {
    case 0: return {0, 1, 2};
    case 1: return {2, 0, 1};
    default: return {1, 2, 0};
  }
}

// R^i is R_{1->0,0->2} for i = 1 mod 3 and R_{0->1,1->2} for i = 2 mod 3.
inline SpineRoles r_roles(std::size_t i) {
  if (i % 3 == 1) return {1, 0, 2};
  if (i % 3 == 2) return {0, 1, 2};
  throw InputError("no R sub-widget at positions divisible by 3");
}

inline int terminal_vertex(std::size_t last) { return u_roles(last).x; }

// Adds R^i(l_i, l_i') (unless i = 0 mod 3) and U^i(l_i', b, u_i) for a
// literal vertex l_i and the previous spine output b. Returns the U parts.
struct SpineStep {
  std::optional<RParts> r;
  UParts u;
};

inline SpineStep add_spine_step(Gadget& g, Vertex literal, Vertex b, std::size_t i) {
  if (i == 0) throw InputError("spine steps start at position 1");
  SpineStep s;
  Vertex lp = literal;
  if (i % 3 != 0) {
    SpineRoles rr = r_roles(i);
    s.r = add_R(g, rr.x, rr.y, rr.z, literal, std::nullopt, i);
    g.roles[s.r->u].tag = "lprime";
    lp = s.r->u;
  }
  SpineRoles ur = u_roles(i);
  s.u = add_U(g, ur.x, ur.y, ur.z, lp, b, i);
  return s;
}

}  // namespace ramkit
