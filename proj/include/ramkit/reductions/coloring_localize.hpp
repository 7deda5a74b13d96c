#pragma once

#include <cstdint>
#include <vector>

#include "ramkit/adversarial/subset_code.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/reductions/localize.hpp"

namespace ramkit {

// A coloring of the n-element subsets of [0, domain) with k colors,
// tabulated in colexicographic order of the subsets.
class TupleColoring {
 public:
  TupleColoring(unsigned n, std::uint32_t k, std::size_t domain)
      : n_(n), k_(k), domain_(domain), code_(n), table_(binomial(domain, n), 0) {}

  unsigned arity() const { return n_; }
  std::uint32_t colors() const { return k_; }
  std::size_t domain() const { return domain_; }
  std::size_t table_size() const { return table_.size(); }

  Symbol at(const std::vector<std::size_t>& tuple) const { return table_.at(code_.encode(tuple)); }
  void set(const std::vector<std::size_t>& tuple, Symbol c) {
    if (c >= k_) throw InputError("tuple color outside the palette");
    for (std::size_t v : tuple)
      if (v >= domain_) throw InputError("tuple entry outside the domain");
    table_.at(code_.encode(tuple)) = c;
  }
  Symbol at_rank(std::uint64_t r) const { return table_.at(r); }
  void set_rank(std::uint64_t r, Symbol c) { table_.at(r) = c; }
  std::vector<std::size_t> tuple_at_rank(std::uint64_t r) const { return code_.decode(r); }

 private:
  unsigned n_;
  std::uint32_t k_;
  std::size_t domain_;
  SubsetCode code_;
  std::vector<Symbol> table_;
};

// Every n-subset of H gets color c (vacuous when |H| < n).
inline bool coloring_homogeneous(const TupleColoring& f, const std::vector<std::size_t>& h, Symbol c) {
  const unsigned n = f.arity();
  if (h.size() < n) return true;
  std::vector<std::size_t> idx(n);
  for (unsigned i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> tuple(n);
    for (unsigned i = 0; i < n; ++i) tuple[i] = h[idx[i]];
    if (f.at(tuple) != c) return false;
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && idx[i] == h.size() - n + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (unsigned j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct LocalizedColoring {
  TupleColoring image;
  std::vector<std::size_t> positions;  // entries of X inside the domain
};

// g(i_0,...,i_{n-1}) = f(x_{i_0},...,x_{i_{n-1}}).
inline LocalizedColoring localize_coloring(const TupleColoring& f, const std::vector<std::size_t>& x) {
  require_strictly_increasing(x);
  std::vector<std::size_t> kept;
  for (std::size_t p : x)
    if (p < f.domain()) kept.push_back(p);
  LocalizedColoring out{TupleColoring(f.arity(), f.colors(), kept.size()), kept};
  for (std::uint64_t r = 0; r < out.image.table_size(); ++r) {
    auto t = out.image.tuple_at_rank(r);
    for (auto& v : t) v = kept[v];
    out.image.set_rank(r, f.at(t));
  }
  return out;
}

// H = {x_i : i in H0}.
inline std::vector<std::size_t> decode_localized_coloring(const LocalizedColoring& loc, const std::vector<std::size_t>& h0,
                                                          Symbol c) {
  if (!coloring_homogeneous(loc.image, h0, c)) throw DecodeError("set is not homogeneous for the localized coloring");
  std::vector<std::size_t> out;
  for (std::size_t i : h0) out.push_back(loc.positions.at(i));
  return out;
}

}  // namespace ramkit
