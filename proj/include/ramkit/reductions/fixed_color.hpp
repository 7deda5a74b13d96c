#pragma once

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"
#include "ramkit/reductions/length_lex.hpp"

namespace ramkit {

// T = {sigma : some tau in S^{|sigma|} has sigma(i) = 0 iff tau_i is a prefix of tau}.
// Position i of a node records whether the i-th word of the enumeration lies
// on the chosen node of S.
inline FinTree fixed_color_tree(const FinTree& s, const LengthLexEnum& en = LengthLexEnum(2)) {
  if (s.alphabet() != 2 || en.alphabet() != 2) throw InputError("fixed_color_tree expects binary trees");
  FinTree t(2, s.horizon());
  std::vector<Word> taus;
  for (std::size_t i = 0; i < s.horizon(); ++i) taus.push_back(en.word_at(i));
  for (std::size_t n = 0; n <= s.horizon(); ++n)
    for (const Word& tau : s.level(n)) {
      Word sigma(n);
      for (std::size_t i = 0; i < n; ++i) sigma[i] = is_prefix(taus[i], tau) ? 0 : 1;
      t.insert(sigma);
    }
  return t;
}

// f = union of tau_i over i in H. H must be homogeneous with color 0 for
// the fixed-color tree built from S; the union is then a node of S.
inline Word decode_fixed_color(const ColorSet& h, const FinTree& s, const LengthLexEnum& en = LengthLexEnum(2)) {
  if (h.color != 0) throw DecodeError("decode_fixed_color: the set must carry color 0");
  if (!tree_homogeneous_to_depth(fixed_color_tree(s, en), h, s.horizon()))
    throw DecodeError("decode_fixed_color: set is not homogeneous for the fixed-color tree");
  Word f;
  for (std::size_t i : h.positions) {
    if (i >= s.horizon()) continue;
    Word w = en.word_at(i);
    if (is_prefix(f, w)) {
      f = w;
    } else if (!is_prefix(w, f)) {
      throw DecodeError("decode_fixed_color: enumerated words do not form a chain");
    }
  }
  if (!s.contains(f)) throw DecodeError("decode_fixed_color: union is not a node of S");
  return f;
}

}  // namespace ramkit
