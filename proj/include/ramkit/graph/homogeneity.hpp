#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramkit/graph/coloring_search.hpp"
#include "ramkit/graph/odd_path.hpp"

namespace ramkit {

enum class Verdict { kYes, kNo, kUnknown };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

struct HomogeneityResult {
  Verdict verdict = Verdict::kUnknown;
  int k = 0;
  std::uint64_t nodes = 0;   // search nodes spent (0 for the k = 2 parity test)
  std::uint64_t budget = 0;  // node budget the search ran under
  Coloring witness;          // a proper coloring with H colored 0, when found
  bool holds() const { return verdict == Verdict::kYes; }
};

// H is k-homogeneous for the finite graph g when every finite V0 induces a
// subgraph with a proper k-coloring that gives every vertex of V0 and H the
// color 0. Restricting one coloring of the whole graph serves every V0, so a
// single search with H pinned to 0 decides the question. For k = 2 the test
// is the parity criterion: g has no odd cycle and no two vertices of H are
// joined by an odd path.
inline HomogeneityResult is_k_homogeneous(const Graph& g, const std::vector<Vertex>& h, int k,
                                          std::uint64_t budget = kDefaultSearchBudget) {
  HomogeneityResult out;
  out.k = k;
  out.budget = budget;
  for (Vertex v : h)
    if (v >= g.vertex_count()) throw InputError("homogeneous set mentions a vertex outside the graph");
  if (k == 2) {
    ParityLabels p = parity_labels(g);
    out.verdict = Verdict::kYes;
    if (!p.bipartite) {
      out.verdict = Verdict::kNo;
      return out;
    }
    for (Vertex a : h)
      for (Vertex b : h)
        if (p.component[a] == p.component[b] && p.parity[a] != p.parity[b]) {
          out.verdict = Verdict::kNo;
          return out;
        }
    // The parity classes give the witness: flip each component so that H
    // lands on color 0.
    std::vector<int> flip(g.vertex_count(), 0);
    for (Vertex a : h) flip[p.component[a]] = p.parity[a];
    out.witness.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.witness[v] = p.parity[v] ^ flip[p.component[v]];
    return out;
  }
  Coloring pins(g.vertex_count(), -1);
  for (Vertex v : h) pins[v] = 0;
  ColoringSearchResult r = find_coloring(g, k, pins, budget);
  out.nodes = r.nodes;
  switch (r.status) {
    case ColoringSearchResult::Status::kFound:
      out.verdict = Verdict::kYes;
      out.witness = std::move(r.coloring);
      break;
    case ColoringSearchResult::Status::kNone: out.verdict = Verdict::kNo; break;
    case ColoringSearchResult::Status::kBudgetExceeded: out.verdict = Verdict::kUnknown; break;
  }
  return out;
}

}  // namespace ramkit
