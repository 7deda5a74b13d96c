#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/graph/graph.hpp"

namespace ramkit {

// Partial coloring: -1 marks a free vertex.
using Coloring = std::vector<int>;

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

namespace detail {

// Backtracking state shared by enumeration and existence search. Domains
// are bit masks over k <= 32 colors and are narrowed by forward checking.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, const Coloring& pins, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), color_(g.vertex_count(), -1), domain_(g.vertex_count(), full_mask(k)) {
    if (k < 1 || k > 32) throw InputError("color count must be between 1 and 32");
    if (pins.size() > g.vertex_count()) throw InputError("pinned coloring mentions a vertex outside the graph");
    for (Vertex v = 0; v < pins.size(); ++v) {
      if (pins[v] < 0) continue;
      if (pins[v] >= k) throw InputError("pinned color out of range");
      if (!(domain_[v] >> pins[v] & 1u)) {
        consistent_ = false;
        return;
      }
      domain_[v] = 1u << pins[v];
      for (Vertex w : g.neighbors(v)) domain_[w] &= ~(1u << pins[v]);
    }
    for (Vertex v = 0; v < pins.size(); ++v)
      if (pins[v] >= 0 && domain_[v] == 0) consistent_ = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (domain_[v] == 0) consistent_ = false;
  }

  std::uint64_t nodes() const { return nodes_; }

  // Every proper coloring extending the pins, in lexicographic order of the
  // color vector. The callback returns false to stop early.
  void enumerate(const std::function<bool(const Coloring&)>& emit) {
    if (!consistent_) return;
    stop_ = false;
    enum_rec(0, emit);
  }

  // Searches for one extension, choosing the vertex with the smallest
  // remaining domain first. Returns nullopt when the budget runs out.
  std::optional<std::optional<Coloring>> find() {
    if (!consistent_) return std::optional<Coloring>{};
    out_of_budget_ = false;
    bool ok = find_rec();
    if (out_of_budget_) return std::nullopt;
    if (!ok) return std::optional<Coloring>{};
    return std::optional<Coloring>{color_};
  }

 private:
  static std::uint32_t full_mask(int k) { return k >= 32 ? ~0u : ((1u << k) - 1u); }

  bool tick() {
    if (++nodes_ > budget_) return false;
    return true;
  }

  // Assigns c to v and removes c from the neighbours' domains. Returns false
  // if a neighbour's domain became empty; `trail` records what to restore.
  bool assign(Vertex v, int c, std::vector<std::pair<Vertex, std::uint32_t>>& trail) {
    color_[v] = c;
    trail.emplace_back(v, domain_[v]);
    domain_[v] = 1u << c;
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] >= 0) continue;
      if (domain_[w] >> c & 1u) {
        trail.emplace_back(w, domain_[w]);
        domain_[w] &= ~(1u << c);
        if (domain_[w] == 0) ok = false;
      }
    }
    return ok;
  }

  void undo(Vertex v, std::vector<std::pair<Vertex, std::uint32_t>>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) domain_[it->first] = it->second;
    trail.clear();
    color_[v] = -1;
  }

  void enum_rec(Vertex v, const std::function<bool(const Coloring&)>& emit) {
    if (stop_) return;
    if (v == g_.vertex_count()) {
      if (!emit(color_)) stop_ = true;
      return;
    }
    std::vector<std::pair<Vertex, std::uint32_t>> trail;
    for (int c = 0; c < k_ && !stop_; ++c) {
      if (!(domain_[v] >> c & 1u)) continue;
      if (!tick()) throw BudgetExceeded("coloring enumeration exceeded its node budget");
      if (assign(v, c, trail)) enum_rec(v + 1, emit);
      undo(v, trail);
    }
  }

  bool find_rec() {
    Vertex best = g_.vertex_count();
    int best_size = 33;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] >= 0) continue;
      int s = std::popcount(domain_[v]);
      if (s < best_size) {
        best = v;
        best_size = s;
      }
    }
    if (best == g_.vertex_count()) return true;
    std::vector<std::pair<Vertex, std::uint32_t>> trail;
    for (int c = 0; c < k_; ++c) {
      if (!(domain_[best] >> c & 1u)) continue;
      if (!tick()) {
        out_of_budget_ = true;
        return false;
      }
      if (assign(best, c, trail) && find_rec()) return true;
      undo(best, trail);
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool consistent_ = true;
  bool stop_ = false;
  bool out_of_budget_ = false;
  Coloring color_;
  std::vector<std::uint32_t> domain_;
};

}  // namespace detail

// All proper k-colorings of g extending `pins`, lexicographically ordered.
// Throws BudgetExceeded when more than `budget` search nodes are needed.
inline std::vector<Coloring> enumerate_colorings(const Graph& g, int k, const Coloring& pins = {},
                                                 std::uint64_t budget = kDefaultSearchBudget) {
  std::vector<Coloring> out;
  detail::ColoringSearch s(g, k, pins, budget);
  s.enumerate([&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// Streams colorings to `visit`; stops early when it returns false.
inline void for_each_coloring(const Graph& g, int k, const Coloring& pins,
                              const std::function<bool(const Coloring&)>& visit,
                              std::uint64_t budget = kDefaultSearchBudget) {
  detail::ColoringSearch s(g, k, pins, budget);
  s.enumerate(visit);
}

struct ColoringSearchResult {
  enum class Status { kFound, kNone, kBudgetExceeded };
  Status status = Status::kNone;
  Coloring coloring;
  std::uint64_t nodes = 0;
};

inline ColoringSearchResult find_coloring(const Graph& g, int k, const Coloring& pins = {},
                                          std::uint64_t budget = kDefaultSearchBudget) {
  detail::ColoringSearch s(g, k, pins, budget);
  auto r = s.find();
  ColoringSearchResult out;
  out.nodes = s.nodes();
  if (!r) {
    out.status = ColoringSearchResult::Status::kBudgetExceeded;
  } else if (*r) {
    out.status = ColoringSearchResult::Status::kFound;
    out.coloring = **r;
  }
  return out;
}

}  // namespace ramkit
