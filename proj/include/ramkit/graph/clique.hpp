#pragma once

#include <algorithm>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/graph/homogeneity.hpp"

namespace ramkit {

// G' = G plus a clique C on k - 3 fresh vertices, each joined to every
// vertex of G and to each other. For k = 3 the graph is unchanged.
struct CliqueAugmented {
  Graph image;
  std::size_t original_vertices = 0;
  std::vector<Vertex> clique;
};

inline CliqueAugmented clique_augment(const Graph& g, int k) {
  if (k < 3) throw InputError("clique_augment: k must be at least 3");
  CliqueAugmented out{g, g.vertex_count(), {}};
  for (int i = 0; i < k - 3; ++i) out.clique.push_back(out.image.add_vertex());
  for (std::size_t i = 0; i < out.clique.size(); ++i) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.image.add_edge(out.clique[i], v);
    for (std::size_t j = 0; j < i; ++j) out.image.add_edge(out.clique[i], out.clique[j]);
  }
  return out;
}

// A k-homogeneous set for G' restricted to the vertices of G. In any proper
// k-coloring of G' the clique uses k - 3 colors that no vertex of G can use,
// so G is left with three colors. If H meets the clique, H has at most one
// clique vertex and no G vertex, so the restriction is empty.
inline std::vector<Vertex> decode_clique(const CliqueAugmented& a, const std::vector<Vertex>& h, int k,
                                         std::uint64_t budget = kDefaultSearchBudget) {
  if (is_k_homogeneous(a.image, h, k, budget).verdict == Verdict::kNo)
    throw DecodeError("decode_clique: H is not k-homogeneous for the augmented graph");
  std::vector<Vertex> out;
  for (Vertex v : h)
    if (v < a.original_vertices) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ramkit
