#pragma once

#include <algorithm>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"
#include "ramkit/graph/homogeneity.hpp"

namespace ramkit {

// T = {sigma in k^{<=n} : (v_i, v_j) in E and i, j < |sigma| imply
// sigma(i) != sigma(j)}, where v_i = order[i] and n = |order|.
struct ColoringTree {
  FinTree tree;
  std::vector<Vertex> order;
  int k = 0;
};

inline ColoringTree graph_to_coloring_tree(const Graph& g, int k, std::vector<Vertex> order = {}) {
  if (k < 1) throw InputError("graph_to_coloring_tree: k must be positive");
  if (order.empty()) {
    order.resize(g.vertex_count());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  }
  std::vector<Vertex> check = order;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw InputError("graph_to_coloring_tree: vertex order repeats a vertex");
  if (!check.empty() && check.back() >= g.vertex_count())
    throw InputError("graph_to_coloring_tree: vertex order mentions a vertex outside the graph");
  ColoringTree out{FinTree(static_cast<std::uint32_t>(k), order.size()), order, k};
  // Parents were accepted, so only pairs involving the new last position
  // need checking.
  out.tree = tree_from_predicate(static_cast<std::uint32_t>(k), order.size(), [&](const Word& sigma) {
    if (sigma.empty()) return true;
    const std::size_t j = sigma.size() - 1;
    for (std::size_t i = 0; i < j; ++i)
      if (sigma[i] == sigma[j] && g.has_edge(order[i], order[j])) return false;
    return true;
  });
  return out;
}

// H0 (positions into the vertex order, with a color c) homogeneous for the
// coloring tree becomes the vertex set H = {v_i : i in H0}. A horizon node
// homogeneous for H0 is a coloring of the enumerated vertices that puts H on
// c; swapping colors 0 and c yields the coloring returned as witness.
struct DecodedColoring {
  std::vector<Vertex> vertices;  // sorted
  Coloring witness;              // indexed by vertex id, -1 outside the order
};

inline DecodedColoring decode_coloring_tree(const Graph& g, const ColoringTree& ct, const ColorSet& h0) {
  for (std::size_t i : h0.positions)
    if (i >= ct.order.size()) throw DecodeError("decode_coloring_tree: position outside the vertex order");
  const Word* node = nullptr;
  for (const Word& w : ct.tree.level(ct.tree.horizon()))
    if (word_homogeneous(h0, w)) {
      node = &w;
      break;
    }
  if (node == nullptr) throw DecodeError("decode_coloring_tree: no horizon node is homogeneous for H0");
  DecodedColoring out;
  out.witness.assign(g.vertex_count(), -1);
  const int c = static_cast<int>(h0.color);
  for (std::size_t i = 0; i < ct.order.size(); ++i) {
    int col = static_cast<int>((*node)[i]);
    if (col == c) col = 0;
    else if (col == 0) col = c;
    out.witness[ct.order[i]] = col;
  }
  for (std::size_t i : h0.positions) out.vertices.push_back(ct.order[i]);
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [u, v] : g.edges())
    if (out.witness[u] >= 0 && out.witness[v] >= 0 && out.witness[u] == out.witness[v])
      throw DecodeError("decode_coloring_tree: swapped coloring is not proper");
  for (Vertex v : out.vertices)
    if (out.witness[v] != 0) throw DecodeError("decode_coloring_tree: H is not colored 0");
  return out;
}

}  // namespace ramkit
