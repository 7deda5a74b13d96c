#pragma once

#include <functional>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

// u_0 = 0, u_{n+1} = least i with g(i) >= u_n + 1, together with the
// tabulated values of g that were consulted.
struct USequence {
  std::vector<std::size_t> g;  // g(0), g(1), ... up to the last index examined
  std::vector<std::size_t> u;
};

using OrderFunction = std::function<std::size_t(std::size_t)>;

inline std::size_t g_half(std::size_t n) { return n / 2; }
inline std::size_t g_identity(std::size_t n) { return n; }

// Computes u_0..u_count. g must be nondecreasing with g(n) <= n; both are
// checked on every tabulated value.
inline USequence make_u_sequence(const OrderFunction& g, std::size_t count, std::size_t table_limit = 1u << 20) {
  USequence seq;
  seq.u.push_back(0);
  auto value = [&](std::size_t i) {
    while (seq.g.size() <= i) {
      std::size_t n = seq.g.size();
      std::size_t v = g(n);
      if (v > n) throw InputError("order function exceeds the identity");
      if (!seq.g.empty() && v < seq.g.back()) throw InputError("order function is not nondecreasing");
      seq.g.push_back(v);
    }
    return seq.g[i];
  };
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t target = seq.u.back() + 1;
    std::size_t i = 0;
    while (value(i) < target) {
      if (++i > table_limit) throw BudgetExceeded("order function does not reach the next u value within the table");
    }
    seq.u.push_back(i);
  }
  return seq;
}

// The word of length u_{|tau|} repeating tau(j) across [u_j, u_{j+1}).
inline Word pack_expand(const Word& tau, const USequence& seq) {
  if (seq.u.size() <= tau.size()) throw InputError("u sequence too short for the word");
  Word out;
  for (std::size_t j = 0; j < tau.size(); ++j)
    for (std::size_t i = seq.u[j]; i < seq.u[j + 1]; ++i) out.push_back(tau[j]);
  return out;
}

struct PackedTree {
  FinTree image;
  USequence seq;
};

// S = {sigma : some tau in T with |tau| = least i with |sigma| < u_i agrees
// with sigma blockwise}. A source of horizon D yields an image of horizon
// u_D - 1, the last length whose witness still has length <= D.
inline PackedTree pack_redundant(const FinTree& t, const OrderFunction& g) {
  if (t.alphabet() != 2) throw InputError("pack_redundant expects a binary tree");
  PackedTree out{FinTree(2, 0), make_u_sequence(g, t.horizon())};
  const auto& u = out.seq.u;
  const std::size_t image_horizon = t.horizon() == 0 ? 0 : u[t.horizon()] - 1;
  // The packing check reads g(0..image_horizon).
  while (out.seq.g.size() <= image_horizon) {
    const std::size_t n = out.seq.g.size();
    const std::size_t v = g(n);
    if (v > n || (n > 0 && v < out.seq.g.back())) throw InputError("order function is not a nondecreasing g(n) <= n");
    out.seq.g.push_back(v);
  }
  if (t.horizon() == 0) {
    out.image = t;
    return out;
  }
  out.image = FinTree(2, image_horizon);
  for (std::size_t n = 0; n <= image_horizon; ++n) {
    std::size_t len = 0;
    while (!(n < u[len])) ++len;
    for (const Word& tau : t.level(len)) out.image.insert(prefix_of(pack_expand(tau, out.seq), n));
  }
  return out;
}

// True iff |dom(h) restricted to [0,n)| >= g(n) for every n <= limit.
inline bool everywhere_packed(const PartialHom& h, const USequence& seq, std::size_t limit) {
  std::size_t count = 0;
  auto it = h.entries.begin();
  for (std::size_t n = 0; n <= limit; ++n) {
    while (it != h.entries.end() && it->first < n) {
      ++count;
      ++it;
    }
    if (n >= seq.g.size()) throw InputError("order function table too short for the packing check");
    if (count < seq.g[n]) return false;
  }
  return true;
}

// f(j) = h(i_j), i_j the least element of dom(h) in [u_j, u_{j+1}). Blocks
// ending at or below the image horizon must meet dom(h), which everywhere
// packed functions do; a trailing block cut by the horizon is decoded only
// when dom(h) meets it. With g = identity f has length D - 1.
inline Word decode_packed(const PartialHom& h, const PackedTree& p) {
  const std::size_t hz = p.image.horizon();
  if (!func_homogeneous_to_depth(p.image, h, hz))
    throw DecodeError("decode_packed: function is not homogeneous for the packed tree");
  const auto& u = p.seq.u;
  Word f;
  for (std::size_t j = 0; j + 1 < u.size() && u[j] < hz; ++j) {
    auto it = h.entries.lower_bound(u[j]);
    bool hit = it != h.entries.end() && it->first < u[j + 1] && it->first < hz;
    if (!hit && u[j + 1] <= hz)
      throw DecodeError("decode_packed: block [" + std::to_string(u[j]) + "," + std::to_string(u[j + 1]) +
                        ") misses the domain");
    if (!hit) break;
    f.push_back(it->second);
  }
  return f;
}

}  // namespace ramkit
