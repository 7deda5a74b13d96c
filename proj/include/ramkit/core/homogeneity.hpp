#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"

namespace ramkit {

// A set of positions together with a single color.
struct ColorSet {
  std::vector<std::size_t> positions;  // sorted, duplicate-free
  Symbol color = 0;

  ColorSet() = default;
  ColorSet(std::vector<std::size_t> p, Symbol c) : positions(std::move(p)), color(c) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;
  friend bool operator<(const ColorSet& a, const ColorSet& b) {
    if (a.positions != b.positions) return a.positions < b.positions;
    return a.color < b.color;
  }
};

// A finite partial map from positions to symbols.
struct PartialHom {
  std::map<std::size_t, Symbol> entries;

  static PartialHom constant(const ColorSet& h) {
    PartialHom out;
    for (std::size_t p : h.positions) out.entries[p] = h.color;
    return out;
  }
  friend bool operator==(const PartialHom&, const PartialHom&) = default;
  friend bool operator<(const PartialHom& a, const PartialHom& b) { return a.entries < b.entries; }
};

inline bool word_homogeneous(const ColorSet& h, const Word& w) {
  for (std::size_t p : h.positions) {
    if (p >= w.size()) break;
    if (w[p] != h.color) return false;
  }
  return true;
}

inline bool word_matches(const PartialHom& h, const Word& w) {
  for (const auto& [p, v] : h.entries) {
    if (p >= w.size()) break;
    if (w[p] != v) return false;
  }
  return true;
}

// True iff every level l <= d holds a node on which H is homogeneous.
inline bool tree_homogeneous_to_depth(const FinTree& t, const ColorSet& h, std::size_t d) {
  if (d > t.horizon()) throw InputError("depth exceeds the tree horizon");
  for (std::size_t l = 0; l <= d; ++l) {
    const auto& lv = t.level(l);
    if (!std::any_of(lv.begin(), lv.end(), [&](const Word& w) { return word_homogeneous(h, w); })) return false;
  }
  return true;
}

inline bool func_homogeneous_to_depth(const FinTree& t, const PartialHom& h, std::size_t d) {
  if (d > t.horizon()) throw InputError("depth exceeds the tree horizon");
  for (std::size_t l = 0; l <= d; ++l) {
    const auto& lv = t.level(l);
    if (!std::any_of(lv.begin(), lv.end(), [&](const Word& w) { return word_matches(h, w); })) return false;
  }
  return true;
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;

// Every ColorSet with positions in [0, bound) that is homogeneous to depth d,
// ordered by positions (lexicographically) and then by color. The search
// visits all 2^bound * k candidates, so it refuses when that product exceeds
// the budget.
inline std::vector<ColorSet> enumerate_homogeneous(const FinTree& t, std::size_t d, std::size_t bound,
                                                   std::uint64_t budget = kDefaultEnumerationBudget) {
  if (bound >= 40 || ((std::uint64_t{1} << bound) * t.alphabet()) > budget)
    throw BudgetExceeded("enumerate_homogeneous: 2^bound * k exceeds the enumeration budget");
  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bound); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < bound; ++i)
      if (mask >> i & 1) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<ColorSet> out;
  for (const auto& s : subsets)
    for (Symbol c = 0; c < t.alphabet(); ++c) {
      ColorSet h(s, c);
      if (tree_homogeneous_to_depth(t, h, d)) out.push_back(std::move(h));
    }
  return out;
}

// Every PartialHom with domain in [0, bound) that is homogeneous to depth d,
// found by filtering all (k+1)^bound candidates.
inline std::vector<PartialHom> enumerate_func_homogeneous(const FinTree& t, std::size_t d, std::size_t bound,
                                                          std::uint64_t budget = kDefaultEnumerationBudget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < bound; ++i) {
    count *= (t.alphabet() + 1);
    if (count > budget) throw BudgetExceeded("enumerate_func_homogeneous: (k+1)^bound exceeds the budget");
  }
  std::vector<PartialHom> out;
  std::vector<Symbol> digits(bound, 0);  // 0 = absent, v+1 = value v
  for (std::uint64_t n = 0; n < count; ++n) {
    PartialHom h;
    for (std::size_t i = 0; i < bound; ++i)
      if (digits[i] > 0) h.entries[i] = digits[i] - 1;
    if (func_homogeneous_to_depth(t, h, d)) out.push_back(std::move(h));
    for (std::size_t i = 0; i < bound; ++i) {
      if (++digits[i] <= t.alphabet()) break;
      digits[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The homogeneous partial functions of a prefix-closed tree at its horizon
// are exactly the restrictions of horizon nodes. This enumerates them
// directly, which stays feasible for large alphabets.
inline std::vector<PartialHom> horizon_restrictions(const FinTree& t, std::uint64_t budget = kDefaultEnumerationBudget) {
  std::size_t d = t.horizon();
  if (d >= 40 || (std::uint64_t{1} << d) * std::max<std::size_t>(1, t.level(d).size()) > budget)
    throw BudgetExceeded("horizon_restrictions: 2^horizon * |T^horizon| exceeds the budget");
  std::set<PartialHom> seen;
  for (const Word& w : t.level(d))
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      PartialHom h;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1) h.entries[i] = w[i];
      seen.insert(std::move(h));
    }
  return {seen.begin(), seen.end()};
}

}  // namespace ramkit
