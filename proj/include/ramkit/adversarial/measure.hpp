#pragma once

#include <cstdint>
#include <functional>

#include "ramkit/core/dyadic.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/core/word.hpp"

namespace ramkit {

inline constexpr std::size_t kMaxMeasureLength = 24;

// The binary word of length s whose bits are the binary expansion of m,
// most significant bit first.
inline Word binary_word(std::uint64_t m, std::size_t s) {
  Word w(s);
  for (std::size_t i = 0; i < s; ++i) w[i] = (m >> (s - 1 - i)) & 1;
  return w;
}

// mu of the union of the cylinders [sigma] for sigma in 2^s satisfying the
// predicate: (number of satisfying sigma) / 2^s, exactly.
inline Dyadic exact_measure(std::size_t s, const std::function<bool(const Word&)>& pred) {
  if (s > kMaxMeasureLength) throw BudgetExceeded("exact_measure: prefix length above 24");
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s); ++m)
    if (pred(binary_word(m, s))) ++count;
  return Dyadic(count, static_cast<unsigned>(s));
}

// d < 2^{-e}. Exponents beyond the Dyadic range are handled for densities
// of trees whose horizon is at most 62, where a positive density is at
// least 2^{-62}.
inline bool below_pow2_neg(const Dyadic& d, unsigned e) {
  if (e > Dyadic::kMaxLog2) return d == Dyadic::zero();
  return d < Dyadic::pow2_neg(e);
}

}  // namespace ramkit
