#pragma once

#include <cstdint>
#include <vector>

#include "ramkit/core/errors.hpp"

namespace ramkit {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r >> 63) throw InputError("binomial coefficient overflow");
  }
  return static_cast<std::uint64_t>(r);
}

// The combinatorial number system b_k: k-element subsets {c_1 < ... < c_k}
// correspond to N via rank = sum_j C(c_j, j), i.e. colexicographic order.
class SubsetCode {
 public:
  explicit SubsetCode(unsigned k) : k_(k) {
    if (k == 0) throw InputError("subset code needs k >= 1");
  }

  unsigned k() const { return k_; }

  std::uint64_t encode(const std::vector<std::size_t>& subset) const {
    if (subset.size() != k_) throw InputError("subset has the wrong size for this code");
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (j > 0 && subset[j] <= subset[j - 1]) throw InputError("subset must be strictly increasing");
      r += binomial(subset[j], j + 1);
    }
    return r;
  }

  std::vector<std::size_t> decode(std::uint64_t rank) const {
    std::vector<std::size_t> out(k_);
    for (unsigned j = k_; j >= 1; --j) {
      // largest c with C(c, j) <= rank
      std::size_t c = j - 1;
      while (binomial(c + 1, j) <= rank) ++c;
      out[j - 1] = c;
      rank -= binomial(c, j);
    }
    return out;
  }

 private:
  unsigned k_;
};

}  // namespace ramkit
