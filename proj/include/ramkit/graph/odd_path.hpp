#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "ramkit/graph/graph.hpp"

namespace ramkit {

// Per-vertex component id and BFS parity (distance mod 2 from the
// component's least vertex). In a bipartite component the parity is the
// unique 2-coloring up to swapping.
struct ParityLabels {
  std::vector<std::size_t> component;
  std::vector<int> parity;
  bool bipartite = true;
};

inline ParityLabels parity_labels(const Graph& g) {
  const std::size_t n = g.vertex_count();
  ParityLabels out{std::vector<std::size_t>(n, n), std::vector<int>(n, 0), true};
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (out.component[s] != n) continue;
    std::queue<Vertex> q;
    q.push(s);
    out.component[s] = next;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (out.component[v] == n) {
          out.component[v] = next;
          out.parity[v] = 1 - out.parity[u];
          q.push(v);
        } else if (out.parity[v] == out.parity[u]) {
          out.bipartite = false;
        }
      }
    }
    ++next;
  }
  return out;
}

inline bool odd_cycle_exists(const Graph& g) { return !parity_labels(g).bipartite; }

// Shortest odd-length walk from x to y found by BFS in the bipartite double
// cover (vertex, parity). In a bipartite graph such a walk is a path.
inline std::optional<std::vector<Vertex>> odd_path(const Graph& g, Vertex x, Vertex y) {
  const std::size_t n = g.vertex_count();
  if (x >= n || y >= n) return std::nullopt;
  std::vector<std::size_t> prev(2 * n, SIZE_MAX);
  std::vector<char> seen(2 * n, 0);
  std::queue<std::size_t> q;
  q.push(2 * x);
  seen[2 * x] = 1;
  while (!q.empty()) {
    std::size_t s = q.front();
    q.pop();
    Vertex u = s / 2;
    std::size_t p = s % 2;
    if (u == y && p == 1) break;
    for (Vertex v : g.neighbors(u)) {
      std::size_t t = 2 * v + (1 - p);
      if (!seen[t]) {
        seen[t] = 1;
        prev[t] = s;
        q.push(t);
      }
    }
  }
  if (!seen[2 * y + 1]) return std::nullopt;
  std::vector<Vertex> path;
  for (std::size_t s = 2 * y + 1; s != SIZE_MAX; s = prev[s]) path.push_back(s / 2);
  std::reverse(path.begin(), path.end());
  return path;
}

inline bool odd_path_exists(const Graph& g, Vertex x, Vertex y) { return odd_path(g, x, y).has_value(); }

struct OddPair {
  Vertex x, y;
  std::vector<Vertex> witness;
};

// All pairs x < y of X joined by an odd path, in lexicographic order.
inline std::vector<OddPair> enumerate_odd_pairs(const Graph& g, std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<OddPair> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (auto p = odd_path(g, xs[i], xs[j])) out.push_back({xs[i], xs[j], *p});
  return out;
}

}  // namespace ramkit
