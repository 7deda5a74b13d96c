#pragma once

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"
#include "ramkit/reductions/length_lex.hpp"

namespace ramkit {

struct ChainCoded {
  FinTree image;  // alphabet = bound(horizon of the source)
  LengthLexEnum en;
  std::vector<std::uint64_t> bound;  // bound[n] exceeds the index of every length-n word
};

// S = {sigma : tau_{sigma(i)} in T, |tau_{sigma(i)}| = i, and the
// tau_{sigma(i)} form a chain}. A node of S of length n+1 is the chain of
// prefixes of one node of T of length n, so the image horizon is D+1.
inline ChainCoded chain_code_tree(const FinTree& t) {
  ChainCoded out{FinTree(1, 0), LengthLexEnum(t.alphabet()), {}};
  for (std::size_t n = 0; n <= t.horizon(); ++n) out.bound.push_back(out.en.bound_for_length(n));
  std::uint64_t k = out.bound.back();
  if (k > (std::uint64_t{1} << 31)) throw InputError("chain_code_tree: index alphabet too large");
  out.image = FinTree(static_cast<std::uint32_t>(k), t.horizon() + 1);
  if (t.empty()) return out;
  out.image.insert(Word{});
  for (const Word& tau : t.nodes()) {
    Word sigma;
    for (std::size_t i = 0; i <= tau.size(); ++i) sigma.push_back(static_cast<Symbol>(out.en.index_of(prefix_of(tau, i))));
    out.image.insert(sigma);
  }
  return out;
}

// The union of tau_{h(i)} over dom(h), checked to be a chain and a node of T.
inline Word decode_chain_code(const PartialHom& h, const ChainCoded& c, const FinTree& t) {
  if (!func_homogeneous_to_depth(c.image, h, c.image.horizon()))
    throw DecodeError("decode_chain_code: function is not homogeneous for the coded tree");
  Word f;
  for (const auto& [i, v] : h.entries) {
    if (i >= c.image.horizon()) continue;
    Word w = c.en.word_at(v);
    if (is_prefix(f, w)) {
      f = w;
    } else if (!is_prefix(w, f)) {
      throw DecodeError("decode_chain_code: coded words do not form a chain");
    }
  }
  if (!t.contains(f)) throw DecodeError("decode_chain_code: union is not a node of the source tree");
  return f;
}

}  // namespace ramkit
