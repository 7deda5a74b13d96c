#pragma once

#include <set>
#include <vector>

#include "ramkit/core/dyadic.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

// Result of re-indexing a tree along X. `positions` holds the entries of X
// that lie below the source horizon; level m of the image (m = its horizon)
// reads source nodes at the source horizon, which stands in for the next
// entry of X.
struct Localization {
  FinTree image;
  std::vector<std::size_t> positions;
  std::size_t source_horizon = 0;

  std::size_t source_length(std::size_t m) const { return m < positions.size() ? positions[m] : source_horizon; }
};

inline void require_strictly_increasing(const std::vector<std::size_t>& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] <= x[i - 1]) throw InputError("localization positions must be strictly increasing");
}

// S = {sigma : some tau in T with |tau| = x_{|sigma|} has sigma(i) = tau(x_i) for i < |sigma|}.
inline Localization localize_tree(const FinTree& t, const std::vector<std::size_t>& x) {
  require_strictly_increasing(x);
  Localization loc;
  loc.source_horizon = t.horizon();
  for (std::size_t p : x)
    if (p < t.horizon()) loc.positions.push_back(p);
  std::size_t m = loc.positions.size();
  loc.image = FinTree(t.alphabet(), m);
  for (std::size_t n = 0; n <= m; ++n) {
    for (const Word& tau : t.level(loc.source_length(n))) {
      Word sigma(n);
      for (std::size_t i = 0; i < n; ++i) sigma[i] = tau[loc.positions[i]];
      loc.image.insert(sigma);
    }
  }
  return loc;
}

// H = {x_i : i in H0}; refuses H0 that is not homogeneous for the image.
inline ColorSet decode_localized(const Localization& loc, const ColorSet& h0) {
  if (!tree_homogeneous_to_depth(loc.image, h0, loc.image.horizon()))
    throw DecodeError("decode_localized: set is not homogeneous for the localized tree");
  std::vector<std::size_t> out;
  for (std::size_t i : h0.positions) {
    if (i >= loc.positions.size()) continue;  // beyond the truncation: carries no constraint
    out.push_back(loc.positions[i]);
  }
  return ColorSet(out, h0.color);
}

struct MeasuredLocalization {
  Localization loc;
  // min over k <= m of 2^{-x_k} |T^{x_k}|; each level of the image has density at least this.
  Dyadic certified_density;
};

inline MeasuredLocalization localize_positive_measure(const FinTree& t, const std::vector<std::size_t>& x) {
  MeasuredLocalization out{localize_tree(t, x), Dyadic::one()};
  for (std::size_t k = 0; k <= out.loc.image.horizon(); ++k) {
    Dyadic d = level_density(t, out.loc.source_length(k));
    if (d < out.certified_density) out.certified_density = d;
  }
  return out;
}

}  // namespace ramkit
