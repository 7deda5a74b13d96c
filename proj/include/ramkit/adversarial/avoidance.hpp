#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ramkit/adversarial/subset_code.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

// A converged prediction: index i and the (i+3)-element set b_{i+3}(code).
struct Prediction {
  std::size_t i = 0;
  std::uint64_t code = 0;
  std::vector<std::size_t> set() const { return SubsetCode(static_cast<unsigned>(i + 3)).decode(code); }
};

inline void validate_predictions(const std::vector<Prediction>& ps) {
  std::set<std::size_t> seen;
  for (const Prediction& p : ps)
    if (!seen.insert(p.i).second) throw InputError("avoidance: prediction index repeated");
}

// True iff sigma is constant on P and every element of P is below |sigma|.
inline bool prediction_hits(const std::vector<std::size_t>& p, const Word& sigma) {
  if (p.empty() || p.back() >= sigma.size()) return false;
  Symbol v = sigma[p.front()];
  return std::all_of(p.begin(), p.end(), [&](std::size_t q) { return sigma[q] == v; });
}

// Accepts sigma iff no prediction's set lies below |sigma| with sigma
// constant on it. Prediction i removes at most a 2 * 2^{-(i+3)} = 2^{-i-2}
// fraction of each level, so every level keeps density at least 1/2.
inline FinTree avoidance_tree(const std::vector<Prediction>& ps, std::size_t horizon) {
  validate_predictions(ps);
  std::vector<std::vector<std::size_t>> sets;
  for (const Prediction& p : ps) sets.push_back(p.set());
  return tree_from_predicate(2, horizon, [&](const Word& sigma) {
    return std::none_of(sets.begin(), sets.end(), [&](const auto& s) { return prediction_hits(s, sigma); });
  });
}

// f(i) = b_{i+3}^{-1}(first i+3 elements of H) differs from the prediction,
// or H is too small for the comparison to apply.
inline bool defeats(const ColorSet& h, const Prediction& p) {
  const std::size_t k = p.i + 3;
  if (h.positions.size() < k) return true;
  std::vector<std::size_t> first(h.positions.begin(), h.positions.begin() + static_cast<std::ptrdiff_t>(k));
  return SubsetCode(static_cast<unsigned>(k)).encode(first) != p.code;
}

}  // namespace ramkit
