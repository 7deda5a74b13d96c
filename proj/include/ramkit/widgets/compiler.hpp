#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/tree_io.hpp"
#include "ramkit/graph/graph_io.hpp"
#include "ramkit/graph/homogeneity.hpp"
#include "ramkit/sat/bridge.hpp"
#include "ramkit/widgets/gadget.hpp"

namespace ramkit {

// One node of the literal-prefix trie. The node for the prefix
// l_0 ... l_j owns the sub-widgets R^j and U^j, so two clauses share them
// exactly when they agree on l_0 ... l_j.
struct SpineNode {
  std::size_t depth = 0;       // j
  std::size_t parent = 0;      // index of the node for l_0 ... l_{j-1} (unused at depth 0)
  Literal literal;             // l_j
  Vertex literal_vertex = 0;
  Vertex out = 0;              // u_j (the literal vertex itself at depth 0)
  std::optional<RParts> r;
  std::optional<UParts> u;
  std::map<bool, std::size_t> children;  // keyed by the sign of l_{j+1}
};

struct CompiledGraph {
  Gadget gadget;
  std::size_t atoms = 0;
  std::vector<Clause> clauses;       // kept clauses, first occurrence order
  std::vector<std::size_t> dropped;  // input indices removed as duplicates or extensions
  std::vector<SpineNode> nodes;
  std::map<bool, std::size_t> roots;
  std::vector<std::vector<std::size_t>> clause_nodes;  // trie path of each kept clause
  std::vector<std::size_t> r_count;  // R^j sub-widgets per position j
  std::vector<std::size_t> u_count;  // U^j sub-widgets per position j
  std::map<Vertex, DecodeRule> table;  // every non-truth vertex, resolved to literal vertices

  const Graph& graph() const { return gadget.graph; }
  static Vertex literal_vertex(std::size_t atom, bool positive) { return 3 + 2 * atom + (positive ? 0 : 1); }
};

namespace detail {

inline bool is_proper_prefix(const Clause& p, const Clause& c) {
  return p.size() < c.size() && std::equal(p.begin(), p.end(), c.begin());
}

}  // namespace detail

// Builds the graph for a 2-branching clause list: the truth triangle, the
// literal pairs (2, a_i, not a_i) for every atom, and one D widget per kept
// clause overlapped along the longest common literal prefix.
inline CompiledGraph compile_clauses(const ClauseSet& input) {
  if (!is_two_branching(input.clauses)) throw InputError("compile: clause list is not 2-branching");
  CompiledGraph out;
  out.atoms = input.atoms;
  for (const Clause& c : input.clauses) {
    if (c.empty()) throw InputError("compile: the empty clause has no widget");
    out.atoms = std::max(out.atoms, c.size());
  }
  for (std::size_t k = 0; k < input.clauses.size(); ++k) {
    const Clause& c = input.clauses[k];
    bool drop = false;
    for (std::size_t j = 0; j < input.clauses.size() && !drop; ++j)
      drop = detail::is_proper_prefix(input.clauses[j], c) || (j < k && input.clauses[j] == c);
    if (drop) out.dropped.push_back(k);
    else out.clauses.push_back(c);
  }

  Gadget& g = out.gadget;
  for (std::size_t a = 0; a < out.atoms; ++a) {
    Vertex pos = g.add_vertex(VertexRole::literal(a, true));
    Vertex neg = g.add_vertex(VertexRole::literal(a, false));
    g.graph.add_edge(2, pos);
    g.graph.add_edge(pos, neg);
    g.graph.add_edge(neg, 2);
  }

  for (const Clause& c : out.clauses) {
    std::vector<std::size_t> path;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto& level = i == 0 ? out.roots : out.nodes[path.back()].children;
      auto it = level.find(c[i].positive);
      std::size_t id;
      if (it != level.end()) {
        id = it->second;
      } else {
        SpineNode node;
        node.depth = i;
        node.literal = c[i];
        node.literal_vertex = CompiledGraph::literal_vertex(c[i].atom, c[i].positive);
        if (i == 0) {
          node.out = node.literal_vertex;
        } else {
          node.parent = path.back();
          SpineStep s = add_spine_step(g, node.literal_vertex, out.nodes[node.parent].out, i);
          node.r = s.r;
          node.u = s.u;
          node.out = s.u.u;
          if (out.r_count.size() <= i) {
            out.r_count.resize(i + 1, 0);
            out.u_count.resize(i + 1, 0);
          }
          if (s.r) ++out.r_count[i];
          ++out.u_count[i];
        }
        id = out.nodes.size();
        level[c[i].positive] = id;  // insert before push_back may move the node vector
        out.nodes.push_back(node);
      }
      path.push_back(id);
    }
    g.graph.add_edge(out.nodes[path.back()].out, static_cast<Vertex>(terminal_vertex(c.size() - 1)));
    out.clause_nodes.push_back(std::move(path));
  }

  // A 2-branching list has at most 2^{j+1} literal prefixes of length j + 1.
  for (std::size_t j = 1; j < out.u_count.size(); ++j) {
    const std::size_t cap = j + 1 < 63 ? (std::size_t{1} << (j + 1)) : SIZE_MAX;
    if (out.r_count[j] > cap || out.u_count[j] > cap)
      throw std::logic_error("compile: sub-widget count at position " + std::to_string(j) + " exceeds 2^(j+1)");
  }

  for (Vertex w = 3; w < g.graph.vertex_count(); ++w) {
    DecodeRule rule;
    for (int t = 0; t < 3; ++t) rule[t] = g.resolve(Conclusion::equals(w, t));
    out.table[w] = rule;
  }
  return out;
}

// What nu(w) = nu(t) says about a literal vertex.
inline Conclusion decode_vertex(const CompiledGraph& cg, Vertex w, int t) {
  if (t < 0 || t > 2) throw InputError("decode_vertex: truth vertex must be 0, 1 or 2");
  if (w < 3) throw InputError("decode_vertex: truth vertices carry no literal information");
  auto it = cg.table.find(w);
  if (it == cg.table.end()) throw InputError("decode_vertex: vertex outside the compiled graph");
  return it->second[t];
}

struct DecodedSatHom {
  SatHomSet set;
  int truth = 0;  // the truth vertex c the vertices of H share a color with
  std::vector<std::pair<std::size_t, bool>> pairs;  // (atom, value) after normalization
};

// H (3-homogeneous for the compiled graph) to a homogeneous set for the
// clauses. When H has no truth vertex the least c keeping H + {c}
// homogeneous is added. Each other vertex yields a literal conclusion;
// negative literals are flipped onto their atom and the larger value class
// is kept, ties going to true. The result is checked against the clauses.
inline DecodedSatHom decode_homogeneous(const CompiledGraph& cg, std::vector<Vertex> h,
                                        std::uint64_t budget = kDefaultSearchBudget) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  DecodedSatHom out;
  if (h.empty()) return out;
  auto hom = is_k_homogeneous(cg.graph(), h, 3, budget);
  if (hom.verdict == Verdict::kUnknown) throw BudgetExceeded("decode_homogeneous: homogeneity check exceeded its budget");
  if (hom.verdict == Verdict::kNo) throw DecodeError("decode_homogeneous: H is not 3-homogeneous");

  int c = -1;
  for (Vertex v : h)
    if (v < 3) c = static_cast<int>(v);
  if (c < 0) {
    for (int t = 0; t < 3 && c < 0; ++t) {
      std::vector<Vertex> with = h;
      with.push_back(static_cast<Vertex>(t));
      auto r = is_k_homogeneous(cg.graph(), with, 3, budget);
      if (r.verdict == Verdict::kUnknown) throw BudgetExceeded("decode_homogeneous: truth-vertex search exceeded its budget");
      if (r.holds()) c = t;
    }
    if (c < 0) throw DecodeError("decode_homogeneous: no truth vertex extends H");
  }
  out.truth = c;

  std::map<std::size_t, std::set<bool>> values;
  for (Vertex w : h) {
    if (w < 3) continue;
    Conclusion con = decode_vertex(cg, w, c);
    if (con.kind != Conclusion::Kind::kEquals || !cg.gadget.is_literal(con.target))
      throw DecodeError("decode_homogeneous: vertex " + std::to_string(w) + " has no literal conclusion");
    const VertexRole& role = cg.gadget.roles[con.target];
    bool value = (con.truth == 1) == role.positive;
    values[role.atom].insert(value);
  }
  std::vector<std::size_t> t_atoms, f_atoms;
  for (const auto& [atom, vs] : values) {
    if (vs.size() > 1) throw DecodeError("decode_homogeneous: conflicting conclusions for atom " + std::to_string(atom));
    out.pairs.emplace_back(atom, *vs.begin());
    (*vs.begin() ? t_atoms : f_atoms).push_back(atom);
  }
  out.set = t_atoms.size() >= f_atoms.size() ? SatHomSet(t_atoms, true) : SatHomSet(f_atoms, false);
  if (!out.set.atoms.empty() || !values.empty()) {
    ClauseSet kept{cg.atoms, cg.clauses};
    if (!sat_homogeneous(kept, out.set, kept.clauses.size()))
      throw DecodeError("decode_homogeneous: decoded set is not homogeneous for the clauses");
  }
  return out;
}

inline std::string compiled_to_dot(const CompiledGraph& cg) {
  return graph_to_dot(cg.graph(), [&](Vertex v) { return role_name(cg.gadget.roles[v]); });
}

inline Json conclusion_to_json(const CompiledGraph& cg, const Conclusion& c) {
  if (c.kind == Conclusion::Kind::kImpossible) return Json{{"kind", "impossible"}};
  Json j{{"kind", c.kind == Conclusion::Kind::kEquals ? "equals" : "differs"}, {"vertex", c.target}, {"truth", c.truth}};
  if (cg.gadget.is_literal(c.target)) {
    const VertexRole& r = cg.gadget.roles[c.target];
    j["atom"] = r.atom;
    j["positive"] = r.positive;
  }
  return j;
}

// Decode table keyed by vertex id, with the vertex role and the conclusion
// for each truth vertex the vertex may share a color with.
inline Json decode_table_to_json(const CompiledGraph& cg) {
  Json table = Json::object();
  for (const auto& [w, rule] : cg.table) {
    Json row{{"role", role_name(cg.gadget.roles[w])}};
    for (int t = 0; t < 3; ++t) row[std::to_string(t)] = conclusion_to_json(cg, rule[t]);
    table[std::to_string(w)] = row;
  }
  Json counts = Json::object();
  for (std::size_t j = 1; j < cg.u_count.size(); ++j)
    counts[std::to_string(j)] = Json{{"R", cg.r_count[j]}, {"U", cg.u_count[j]}};
  return Json{{"vertices", cg.graph().vertex_count()},
              {"edges", cg.graph().edge_count()},
              {"atoms", cg.atoms},
              {"clauses_kept", cg.clauses.size()},
              {"clauses_dropped", cg.dropped},
              {"subwidgets", counts},
              {"table", table}};
}

}  // namespace ramkit
