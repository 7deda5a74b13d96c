#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ramkit/core/errors.hpp"

namespace ramkit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices [0, n) with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }

  void ensure_vertex(Vertex v) {
    if (v >= adj_.size()) adj_.resize(v + 1);
  }

  Vertex add_vertex() {
    adj_.emplace_back();
    return adj_.size() - 1;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw InputError("self-loops are not allowed");
    ensure_vertex(std::max(u, v));
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  void remove_edge(Vertex u, Vertex v) {
    erase_sorted(adj_.at(u), v);
    erase_sorted(adj_.at(v), u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool isolated(Vertex v) const { return v >= adj_.size() || adj_[v].empty(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& a : adj_) m += a.size();
    return m / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static void insert_sorted(std::vector<Vertex>& a, Vertex v) {
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) a.insert(it, v);
  }
  static void erase_sorted(std::vector<Vertex>& a, Vertex v) {
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) a.erase(it);
  }

  std::vector<std::vector<Vertex>> adj_;
};

// Proper k-coloring check; colors are 0..k-1 and every vertex must be colored.
inline bool is_proper_coloring(const Graph& g, const std::vector<int>& nu, int k) {
  if (nu.size() < g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (nu[v] < 0 || nu[v] >= k) return false;
  for (const auto& [u, v] : g.edges())
    if (nu[u] == nu[v]) return false;
  return true;
}

// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

}  // namespace ramkit
