#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramkit/adversarial/measure.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

// mu(T) at the horizon: the least level density of the truncation.
inline Dyadic tree_measure(const FinTree& t) { return min_level_density(t); }

// Bad(n, T cap Gamma^0_F, c) for n < horizon: pinning n to 0 as well drops
// the measure below 2^{-2c}.
inline std::vector<std::size_t> bad_set(const FinTree& t, unsigned c, const std::set<std::size_t>& f = {}) {
  if (t.alphabet() != 2) throw InputError("bad_set expects a binary tree");
  FinTree base = gamma_restrict(t, f, 0);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < t.horizon(); ++n)
    if (below_pow2_neg(tree_measure(gamma_restrict(base, {n}, 0)), 2 * c)) out.push_back(n);
  return out;
}

struct GreedyStep {
  std::size_t s = 0;           // step index
  std::size_t h = 0;           // chosen position h_s
  std::size_t bad_count = 0;   // |Bad(., T cap Gamma^0_{H_s}, c 2^s)|
  Dyadic measure;              // mu(T cap Gamma^0_{H_{s+1}})
  unsigned bound_exponent = 0; // c 2^{s+1}
  bool holds = false;          // measure >= 2^{-bound_exponent}
};

struct GreedyResult {
  ColorSet h;                  // color 0
  Dyadic initial;              // mu(T)
  unsigned c = 0;
  bool initial_holds = false;  // mu(T) >= 2^{-c}
  std::vector<GreedyStep> steps;
  bool complete = false;       // false when the horizon ran out first
};

inline unsigned greedy_exponent(unsigned c, std::size_t s) {
  if (s >= 26) throw InputError("greedy_homogeneous: exponent c 2^s out of range");
  return c << s;
}

// h_s is the least position above max(H_s + {0}), below the horizon, that
// is not Bad for T cap Gamma^0_{H_s} with constant c 2^s. Every step records
// the measure certificate mu(T cap Gamma^0_{H_{s+1}}) >= 2^{-c 2^{s+1}}.
inline GreedyResult greedy_homogeneous(const FinTree& t, unsigned c, std::size_t steps) {
  if (c < 3) throw InputError("greedy_homogeneous needs c >= 3");
  GreedyResult out;
  out.c = c;
  out.initial = tree_measure(t);
  out.initial_holds = !below_pow2_neg(out.initial, c);
  if (!out.initial_holds) throw InputError("greedy_homogeneous: mu(T) < 2^{-c}");
  std::set<std::size_t> hs;
  std::size_t floor = 0;
  for (std::size_t s = 0; s < steps; ++s) {
    const unsigned cs = greedy_exponent(c, s);
    std::vector<std::size_t> bad = bad_set(t, cs, hs);
    std::optional<std::size_t> pick;
    for (std::size_t h = floor + 1; h < t.horizon() && !pick; ++h)
      if (!std::binary_search(bad.begin(), bad.end(), h)) pick = h;
    if (!pick) return out;
    hs.insert(*pick);
    floor = *pick;
    GreedyStep step;
    step.s = s;
    step.h = *pick;
    step.bad_count = bad.size();
    step.measure = tree_measure(gamma_restrict(t, hs, 0));
    step.bound_exponent = greedy_exponent(c, s + 1);
    step.holds = !below_pow2_neg(step.measure, step.bound_exponent);
    out.steps.push_back(step);
    out.h = ColorSet({hs.begin(), hs.end()}, 0);
  }
  out.complete = true;
  return out;
}

}  // namespace ramkit
