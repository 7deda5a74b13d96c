#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "ramkit/core/errors.hpp"

namespace ramkit {

// Exact dyadic rational numerator / 2^log2_den. Values are kept normalized
// (odd numerator or zero exponent) so equality is structural.
class Dyadic {
 public:
  static constexpr unsigned kMaxLog2 = 62;

  constexpr Dyadic() = default;
  Dyadic(std::uint64_t numerator, unsigned log2_den) : num_(numerator), log2_(log2_den) {
    if (log2_den > kMaxLog2) throw InputError("dyadic exponent exceeds 2^62");
    normalize();
  }

  static Dyadic zero() { return Dyadic(0, 0); }
  static Dyadic one() { return Dyadic(1, 0); }
  // 2^{-e}
  static Dyadic pow2_neg(unsigned e) { return Dyadic(1, e); }

  std::uint64_t numerator() const { return num_; }
  unsigned log2_denominator() const { return log2_; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.log2_ == b.log2_;
  }

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned e = a.log2_ > b.log2_ ? a.log2_ : b.log2_;
    unsigned __int128 x = static_cast<unsigned __int128>(a.num_) << (e - a.log2_);
    unsigned __int128 y = static_cast<unsigned __int128>(b.num_) << (e - b.log2_);
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Three-way comparison against the ordinary fraction p/q (q > 0).
  std::strong_ordering compare_fraction(std::uint64_t p, std::uint64_t q) const {
    if (q == 0) throw InputError("fraction with zero denominator");
    unsigned __int128 lhs = static_cast<unsigned __int128>(num_) * q;
    unsigned __int128 rhs = static_cast<unsigned __int128>(p) << log2_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool greater_than(std::uint64_t p, std::uint64_t q) const {
    return compare_fraction(p, q) == std::strong_ordering::greater;
  }

  Dyadic operator+(const Dyadic& o) const {
    unsigned e = log2_ > o.log2_ ? log2_ : o.log2_;
    unsigned __int128 s = (static_cast<unsigned __int128>(num_) << (e - log2_)) +
                          (static_cast<unsigned __int128>(o.num_) << (e - o.log2_));
    return from_wide(s, e);
  }

  Dyadic operator*(const Dyadic& o) const {
    unsigned __int128 p = static_cast<unsigned __int128>(num_) * o.num_;
    return from_wide(p, log2_ + o.log2_);
  }

  // Renders "0", "1", "3/16" and so on.
  std::string to_string() const {
    if (log2_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << log2_);
  }

 private:
  static Dyadic from_wide(unsigned __int128 v, unsigned e) {
    while (e > 0 && (v & 1) == 0) {
      v >>= 1;
      --e;
    }
    if (v >> 64 || e > kMaxLog2) throw InputError("dyadic value out of representable range");
    return Dyadic(static_cast<std::uint64_t>(v), e);
  }

  void normalize() {
    if (num_ == 0) {
      log2_ = 0;
      return;
    }
    while (log2_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --log2_;
    }
  }

  std::uint64_t num_ = 0;
  unsigned log2_ = 0;
};

}  // namespace ramkit
