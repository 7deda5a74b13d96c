#pragma once

#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

// Smallest k with 2^k >= alphabet (at least 1).
inline unsigned bits_for_alphabet(std::uint32_t alphabet) {
  unsigned k = 1;
  while ((std::uint64_t{1} << k) < alphabet) ++k;
  return k;
}

// The same tree viewed over the alphabet 2^k. Paths are unchanged; the
// original alphabet is recorded so decoded colors can be checked against it.
struct PaddedTree {
  FinTree tree;
  std::uint32_t original_alphabet;
  unsigned bits;
};

inline PaddedTree pad_alphabet(const FinTree& t) {
  unsigned k = bits_for_alphabet(t.alphabet());
  FinTree out(static_cast<std::uint32_t>(1u << k), t.horizon());
  for (const Word& w : t.nodes()) out.insert(w);
  return {out, t.alphabet(), k};
}

// Digit j (MSB first) of symbol a < 2^k.
inline Symbol binary_digit(Symbol a, unsigned k, unsigned j) { return (a >> (k - 1 - j)) & 1u; }

// S_0: all prefixes of the binary expansions tau_sigma(k*i + j) = sigma(i)(j).
inline FinTree kary_to_binary(const FinTree& t) {
  std::uint32_t q = t.alphabet();
  if (q < 2 || (q & (q - 1)) != 0) throw InputError("kary_to_binary needs a power-of-two alphabet; pad first");
  unsigned k = bits_for_alphabet(q);
  FinTree out(2, k * t.horizon());
  for (const Word& w : t.nodes()) {
    Word b;
    for (Symbol a : w)
      for (unsigned j = 0; j < k; ++j) b.push_back(binary_digit(a, k, j));
    out.insert_with_prefixes(b);
  }
  return out;
}

// X_0 = positions congruent to 0 mod k below the binary horizon.
inline std::vector<std::size_t> kary_initial_positions(unsigned k, std::size_t binary_horizon) {
  std::vector<std::size_t> x;
  for (std::size_t n = 0; n < binary_horizon; n += k) x.push_back(n);
  return x;
}

struct KaryStep {
  FinTree next;
  std::vector<std::size_t> positions;  // X_{l+1}
};

// S_{l+1} = nodes of S_l taking color c_l on H_l; X_{l+1} = {n+1 : n in H_l}.
inline KaryStep kary_refine_step(const FinTree& s, const ColorSet& h, unsigned level, unsigned k) {
  for (std::size_t p : h.positions)
    if (p % k != level % k) throw InputError("kary_refine_step: position not congruent to the step index mod k");
  FinTree next(s.alphabet(), s.horizon());
  for (const Word& w : s.nodes())
    if (word_homogeneous(h, w)) next.insert(w);
  std::vector<std::size_t> x;
  for (std::size_t p : h.positions) x.push_back(p + 1);
  return {next, x};
}

// H = {n : k n + (k-1) in H_{k-1}} with color whose binary expansion is c_0...c_{k-1}.
inline ColorSet decode_kary(const ColorSet& last, const std::vector<Symbol>& colors, unsigned k) {
  if (colors.size() != k) throw InputError("decode_kary needs one color per bit");
  Symbol a = 0;
  for (Symbol c : colors) {
    if (c > 1) throw InputError("decode_kary: bit colors must be 0 or 1");
    a = (a << 1) | c;
  }
  std::vector<std::size_t> out;
  for (std::size_t p : last.positions) {
    if (p % k != k - 1) throw InputError("decode_kary: position not congruent to k-1 mod k");
    out.push_back(p / k);
  }
  return ColorSet(out, a);
}

// A color introduced by padding can only come back on a set with no
// position below the horizon, where every color is homogeneous; map it to 0.
inline ColorSet unpad_color(const PaddedTree& p, ColorSet h) {
  if (h.color < p.original_alphabet) return h;
  for (std::size_t pos : h.positions)
    if (pos < p.tree.horizon()) throw DecodeError("decoded color lies in the padding but the set is not vacuous");
  h.color = 0;
  return h;
}

}  // namespace ramkit
