#pragma once

#include <cstdint>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/word.hpp"

namespace ramkit {

// The length-lexicographic enumeration tau_0, tau_1, ... of k^{<N}:
// tau_0 is the empty word, then all words of length 1 in order, and so on.
class LengthLexEnum {
 public:
  explicit LengthLexEnum(std::uint32_t k = 2) : k_(k) {
    if (k == 0) throw InputError("enumeration alphabet must be positive");
  }

  std::uint32_t alphabet() const { return k_; }

  // Number of words of length < n, i.e. the index of the first length-n word.
  std::uint64_t offset(std::size_t n) const {
    std::uint64_t total = 0, pow = 1;
    for (std::size_t m = 0; m < n; ++m) {
      total += pow;
      pow *= k_;
      if (total > (std::uint64_t{1} << 60)) throw InputError("enumeration index overflow");
    }
    return total;
  }

  std::uint64_t index_of(const Word& w) const {
    std::uint64_t v = 0;
    for (Symbol a : w) {
      if (a >= k_) throw InputError("symbol outside the enumeration alphabet");
      v = v * k_ + a;
    }
    return offset(w.size()) + v;
  }

  Word word_at(std::uint64_t index) const {
    std::size_t n = 0;
    std::uint64_t pow = 1;
    while (index >= pow) {
      index -= pow;
      pow *= k_;
      ++n;
    }
    Word w(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      w[i] = static_cast<Symbol>(index % k_);
      index /= k_;
    }
    return w;
  }

  // Every length-n word has index below this bound.
  std::uint64_t bound_for_length(std::size_t n) const { return offset(n + 1); }

 private:
  std::uint32_t k_;
};

}  // namespace ramkit
