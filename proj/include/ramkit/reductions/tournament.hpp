#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

// A tournament on [0, n): beats(x, y) for exactly one order of each pair.
class Tournament {
 public:
  explicit Tournament(std::size_t n = 0) : n_(n), m_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool beats(std::size_t x, std::size_t y) const { return m_.at(x * n_ + y) != 0; }
  void set_beats(std::size_t x, std::size_t y) {
    if (x == y) throw InputError("tournaments are irreflexive");
    m_.at(x * n_ + y) = 1;
    m_.at(y * n_ + x) = 0;
  }

  bool valid() const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (beats(x, x)) return false;
      for (std::size_t y = x + 1; y < n_; ++y)
        if (beats(x, y) == beats(y, x)) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<char> m_;
};

// sigma_s is the leftmost node of T^s; for x < s, R(x,s) iff sigma_s(x) = 1,
// otherwise R(s,x). Vertices are [0, horizon].
inline Tournament tournament_from_tree(const FinTree& t) {
  if (t.alphabet() != 2) throw InputError("tournament_from_tree expects a binary tree");
  if (!t.has_node_per_level()) throw InputError("tournament_from_tree needs a node at every level");
  Tournament r(t.horizon() + 1);
  for (std::size_t s = 1; s <= t.horizon(); ++s) {
    const Word& sigma = t.level(s).front();
    for (std::size_t x = 0; x < s; ++x) {
      if (sigma[x] == 1) {
        r.set_beats(x, s);
      } else {
        r.set_beats(s, x);
      }
    }
  }
  return r;
}

// For each vertex x, the largest s > x at which the column s -> R(x,s)
// changes value, or x itself when the column never changes.
inline std::vector<std::size_t> tournament_last_changes(const Tournament& r) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    std::size_t last = x;
    for (std::size_t s = x + 2; s < r.size(); ++s)
      if (r.beats(x, s) != r.beats(x, s - 1)) last = s;
    out.push_back(last);
  }
  return out;
}

// Checks that R is transitive along the sequence: every earlier element beats every later one.
inline bool is_transitive_sequence(const Tournament& r, const std::vector<std::size_t>& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!r.beats(u[i], u[j])) return false;
  return true;
}

// Exhaustive search for a transitive subtournament with `size` vertices,
// returned in dominance order. Returns nullopt when none exists.
inline std::optional<std::vector<std::size_t>> transitive_subtournament(const Tournament& r, std::size_t size,
                                                                        std::uint64_t node_budget = 1u << 26) {
  std::vector<std::size_t> cur;
  std::uint64_t nodes = 0;
  std::optional<std::vector<std::size_t>> found;
  // Candidates: vertices beaten by everything chosen so far.
  auto rec = [&](auto&& self, std::vector<std::size_t> cand) -> bool {
    if (++nodes > node_budget) throw BudgetExceeded("transitive_subtournament: search budget exhausted");
    if (cur.size() == size) {
      found = cur;
      return true;
    }
    if (cur.size() + cand.size() < size) return false;
    for (std::size_t v : cand) {
      std::vector<std::size_t> next;
      for (std::size_t w : cand)
        if (w != v && r.beats(v, w)) next.push_back(w);
      cur.push_back(v);
      if (self(self, next)) return true;
      cur.pop_back();
    }
    return false;
  };
  std::vector<std::size_t> all(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) all[v] = v;
  rec(rec, all);
  return found;
}

// Largest transitive subtournament found by the exhaustive search.
inline std::vector<std::size_t> max_transitive_subtournament(const Tournament& r) {
  std::vector<std::size_t> best;
  for (std::size_t s = 1; s <= r.size(); ++s) {
    auto u = transitive_subtournament(r, s);
    if (!u) break;
    best = *u;
  }
  return best;
}

enum class StarCase { kCase1, kCase2, kUndetermined };

inline std::string star_case_name(StarCase c) {
  switch (c) {
    case StarCase::kCase1: return "case-1";
    case StarCase::kCase2: return "case-2";
    default: return "undetermined";
  }
}

struct StarDecoding {
  StarCase which = StarCase::kUndetermined;
  ColorSet set;
  std::vector<std::size_t> endpoints;  // last elements of the (*) sequences found
};

// Finite evaluation of the case split on sequences tau through the
// transitive set U whose range is not homogeneous with color 1 (call them
// (*) sequences). Case 2: the endpoints stop below some m, and U above m is
// homogeneous with color 1. Case 1: the endpoints keep coming, and thinning
// them so that later vertices beat earlier ones gives a color-0 set. A case
// is reported only when its set reaches `min_size` and passes the tree check
// at `depth`; otherwise the result is undetermined.
inline StarDecoding homog_from_transitive(const FinTree& t, const Tournament& r, const std::vector<std::size_t>& u,
                                          std::size_t depth, std::size_t min_size) {
  if (!is_transitive_sequence(r, u)) throw InputError("homog_from_transitive: U is not transitive in the given order");
  if (u.size() > 20) throw BudgetExceeded("homog_from_transitive: U too large for subset enumeration");
  StarDecoding out;
  std::vector<char> is_end(r.size(), 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << u.size()); ++mask) {
    std::vector<std::size_t> range;
    std::size_t last = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (mask >> i & 1) {
        range.push_back(u[i]);
        last = u[i];  // u is in dominance order, so the last chosen element ends the sequence
      }
    if (!tree_homogeneous_to_depth(t, ColorSet(range, 1), depth)) is_end[last] = 1;
  }
  for (std::size_t v = 0; v < r.size(); ++v)
    if (is_end[v]) out.endpoints.push_back(v);

  std::size_t m = out.endpoints.empty() ? 0 : out.endpoints.back() + 1;
  std::vector<std::size_t> tail;
  for (std::size_t v : u)
    if (v >= m) tail.push_back(v);
  ColorSet case2(tail, 1);
  if (tail.size() >= min_size && tree_homogeneous_to_depth(t, case2, depth)) {
    out.which = StarCase::kCase2;
    out.set = case2;
    return out;
  }
  std::vector<std::size_t> thinned;
  for (std::size_t v : out.endpoints)
    if (std::all_of(thinned.begin(), thinned.end(), [&](std::size_t w) { return r.beats(v, w); })) thinned.push_back(v);
  ColorSet case1(thinned, 0);
  if (thinned.size() >= min_size && tree_homogeneous_to_depth(t, case1, depth)) {
    out.which = StarCase::kCase1;
    out.set = case1;
    return out;
  }
  return out;
}

}  // namespace ramkit
