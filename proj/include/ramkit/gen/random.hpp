#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ramkit/adversarial/avoidance.hpp"
#include "ramkit/adversarial/measure_build.hpp"
#include "ramkit/adversarial/priority.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/graph/graph.hpp"
#include "ramkit/reductions/tournament.hpp"
#include "ramkit/sat/bridge.hpp"

namespace ramkit {

// Seeded generators. Draws go through modular reduction of mt19937_64
// output rather than the standard distributions, whose algorithms are
// implementation-defined, so a seed names the same instance everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  // True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // k distinct elements of [0, n) in increasing order.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k) {
    if (k > n) throw InputError("subset larger than its range");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 eng_;
};

// Each child of a kept node survives with probability keep_num / keep_den;
// a level that would come out empty keeps the first child of its first
// node, so the tree has a node at every level.
inline FinTree random_tree(Rng& rng, std::uint32_t k, std::size_t depth, std::uint64_t keep_num = 2,
                           std::uint64_t keep_den = 3) {
  FinTree t(k, depth);
  t.insert({});
  for (std::size_t s = 0; s < depth; ++s) {
    bool any = false;
    for (const Word& w : t.level(s)) {
      for (Symbol a = 0; a < k; ++a) {
        if (!rng.chance(keep_num, keep_den)) continue;
        Word c = w;
        c.push_back(a);
        t.insert(c);
        any = true;
      }
    }
    if (!any) {
      Word c = t.level(s).front();
      c.push_back(static_cast<Symbol>(rng.below(k)));
      t.insert(c);
    }
  }
  return t;
}

// A pruned binary tree with measure at least 2^{-c} at the horizon: random
// cylinders are removed from the full tree while the surviving fraction of
// leaves stays at or above 2^{-c}. The tree is the prefix closure of its
// leaves, so every level has density at least the leaf density.
inline FinTree random_positive_tree(Rng& rng, std::size_t depth, unsigned c, std::size_t attempts = 24) {
  if (depth > 20) throw InputError("random_positive_tree: depth above 20");
  const std::size_t n = std::size_t{1} << depth;
  const std::size_t floor = c >= depth ? 1 : n >> c;
  std::vector<char> alive(n, 1);
  std::size_t count = n;
  for (std::size_t a = 0; a < attempts; ++a) {
    std::size_t len = 1 + rng.below(depth);
    std::size_t block = n >> len;
    std::size_t start = rng.below(std::size_t{1} << len) * block;
    std::size_t lost = 0;
    for (std::size_t i = start; i < start + block; ++i) lost += alive[i];
    if (lost == 0 || count - lost < floor) continue;
    for (std::size_t i = start; i < start + block; ++i) alive[i] = 0;
    count -= lost;
  }
  FinTree t(2, depth);
  for (std::size_t m = 0; m < n; ++m) {
    if (!alive[m]) continue;
    Word w(depth);
    for (std::size_t i = 0; i < depth; ++i) w[i] = (m >> (depth - 1 - i)) & 1;
    t.insert_with_prefixes(w);
  }
  return t;
}

// Clauses whose i-th literal is built from atom a_i, with random signs and
// lengths in [1, max_len].
inline ClauseSet random_clauses(Rng& rng, std::size_t count, std::size_t max_len) {
  ClauseSet out;
  out.atoms = max_len;
  for (std::size_t j = 0; j < count; ++j) {
    Clause c;
    std::size_t len = 1 + rng.below(max_len);
    for (std::size_t i = 0; i < len; ++i) c.push_back({i, rng.chance(1, 2)});
    out.clauses.push_back(c);
  }
  return out;
}

inline Graph random_graph(Rng& rng, std::size_t n, std::uint64_t num = 1, std::uint64_t den = 3) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

// Random sides, edges only between sides.
inline Graph random_bipartite_graph(Rng& rng, std::size_t n, std::uint64_t num = 1, std::uint64_t den = 3) {
  std::vector<int> side(n);
  for (auto& s : side) s = static_cast<int>(rng.below(2));
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (side[u] != side[v] && rng.chance(num, den)) g.add_edge(u, v);
  return g;
}

inline Tournament random_tournament(Rng& rng, std::size_t n) {
  Tournament t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (rng.chance(1, 2)) t.set_beats(x, y);
      else t.set_beats(y, x);
    }
  return t;
}

// Up to `adversaries` schedules with distinct indices below 4. Each draws a
// few columns x and sends several y > x into every column, so that most
// families contain adversaries with two or more busy columns.
inline std::vector<AdversarySchedule> random_schedules(Rng& rng, std::size_t adversaries, std::size_t stages,
                                                       std::size_t events) {
  std::vector<AdversarySchedule> out;
  std::vector<std::size_t> ids = rng.subset(4, std::min<std::size_t>(adversaries, 4));
  for (std::size_t e : ids) {
    AdversarySchedule a;
    a.e = e;
    if (stages > e + 3) {
      for (std::size_t j = 0; j < events; ++j) {
        Vertex x = rng.between(e + 1, stages - 3);
        Vertex y = rng.between(x + 1, stages - 2);
        std::size_t s = rng.between(y + 1, stages - 1);
        a.events.push_back({s, x, y});
      }
    }
    std::stable_sort(a.events.begin(), a.events.end(),
                     [](const ScheduleEvent& p, const ScheduleEvent& q) { return p.s < q.s; });
    out.push_back(a);
  }
  return out;
}

// Oracle tables built in waves. A wave at depth d gives every prefix of
// length d, with probability 15/16, one vertex from the wave's pool; the
// listed entry at a prefix is everything enumerated along it so far.
inline OracleAdversary random_oracle(Rng& rng, std::size_t e, std::size_t s_max, std::size_t waves,
                                     Vertex lo, Vertex hi) {
  OracleAdversary a;
  a.e = e;
  a.s_max = s_max;
  std::vector<std::size_t> depths;
  for (std::size_t w = 0; w < waves; ++w) depths.push_back(rng.between(1, s_max));
  std::sort(depths.begin(), depths.end());
  std::map<Word, std::set<Vertex>> added;
  for (std::size_t d : depths) {
    std::vector<Vertex> pool;
    std::size_t size = rng.between(1, 3);
    for (std::size_t i = 0; i < size; ++i) pool.push_back(rng.between(lo, hi));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
      if (rng.chance(15, 16)) added[binary_word(m, d)].insert(pool[rng.below(pool.size())]);
  }
  for (const auto& [p, vs] : added) {
    std::set<Vertex> all;
    for (std::size_t n = 0; n <= p.size(); ++n) {
      auto it = added.find(prefix_of(p, n));
      if (it != added.end()) all.insert(it->second.begin(), it->second.end());
    }
    a.table[p] = all;
  }
  return a;
}

inline std::vector<OracleAdversary> random_oracles(Rng& rng, std::size_t adversaries, std::size_t s_max,
                                                   Vertex lo, Vertex hi) {
  std::vector<OracleAdversary> out;
  for (std::size_t e = 0; e < adversaries; ++e) out.push_back(random_oracle(rng, e, s_max, rng.between(2, 4), lo, hi));
  return out;
}

// Predictions with distinct indices i whose sets P_i lie below the horizon.
inline std::vector<Prediction> random_predictions(Rng& rng, std::size_t count, std::size_t horizon) {
  if (horizon < 3) throw InputError("random_predictions: horizon below 3");
  std::vector<Prediction> out;
  std::vector<std::size_t> is = rng.subset(horizon - 2, std::min(count, horizon - 2));
  for (std::size_t i : is) {
    auto set = rng.subset(horizon, i + 3);
    out.push_back({i, SubsetCode(static_cast<unsigned>(i + 3)).encode(set)});
  }
  return out;
}

}  // namespace ramkit
