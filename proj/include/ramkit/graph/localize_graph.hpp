#pragma once

#include <algorithm>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/graph/homogeneity.hpp"
#include "ramkit/graph/odd_path.hpp"

namespace ramkit {

// G' keeps the vertex ids of G (vertices outside X stay isolated) and adds,
// for the n-th odd pair (x_n, y_n), fresh vertices a_n = base + 2n and
// b_n = base + 2n + 1 with edges (x_n, a_n), (a_n, b_n), (b_n, y_n).
struct LocalizedGraph {
  Graph image;
  std::vector<Vertex> x;        // sorted, duplicate-free
  std::vector<OddPair> pairs;   // the enumerated odd pairs with witnesses
  Vertex base = 0;
  Vertex a(std::size_t n) const { return base + 2 * n; }
  Vertex b(std::size_t n) const { return base + 2 * n + 1; }
};

inline LocalizedGraph localize_graph(const Graph& g, std::vector<Vertex> x) {
  if (odd_cycle_exists(g)) throw InputError("localize_graph: the input graph has an odd cycle");
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (Vertex v : x)
    if (v >= g.vertex_count()) throw InputError("localize_graph: X mentions a vertex outside the graph");
  LocalizedGraph out;
  out.x = x;
  out.pairs = enumerate_odd_pairs(g, x);
  out.base = g.vertex_count();
  out.image = Graph(out.base + 2 * out.pairs.size());
  for (std::size_t n = 0; n < out.pairs.size(); ++n) {
    out.image.add_edge(out.pairs[n].x, out.a(n));
    out.image.add_edge(out.a(n), out.b(n));
    out.image.add_edge(out.b(n), out.pairs[n].y);
  }
  return out;
}

// With no odd pairs the whole of X is returned. Otherwise every x in X
// reachable from H0 in G' is classed by the parity of its distance to H0
// (well defined because H0 is 2-homogeneous for G'), and the larger class is
// returned; ties go to the even class. The result is checked against the
// odd-path criterion in G.
inline std::vector<Vertex> decode_localized_graph(const Graph& g, const LocalizedGraph& loc,
                                                  const std::vector<Vertex>& h0) {
  std::vector<Vertex> out;
  if (loc.pairs.empty()) {
    out = loc.x;
  } else {
    if (!is_k_homogeneous(loc.image, h0, 2).holds())
      throw DecodeError("decode_localized_graph: H0 is not 2-homogeneous for the localized graph");
    ParityLabels p = parity_labels(loc.image);
    const std::size_t n = loc.image.vertex_count();
    std::vector<int> comp_parity(n, -1);
    for (Vertex v : h0) comp_parity[p.component[v]] = p.parity[v];
    std::vector<Vertex> even, odd;
    for (Vertex v : loc.x) {
      int cp = comp_parity[p.component[v]];
      if (cp < 0) continue;
      (p.parity[v] == cp ? even : odd).push_back(v);
    }
    out = even.size() >= odd.size() ? even : odd;
  }
  if (!is_k_homogeneous(g, out, 2).holds())
    throw DecodeError("decode_localized_graph: decoded set has two vertices joined by an odd path");
  return out;
}

}  // namespace ramkit
