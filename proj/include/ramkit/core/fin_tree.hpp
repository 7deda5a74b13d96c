#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "ramkit/core/dyadic.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/core/word.hpp"

namespace ramkit {

// A finite set of words over [0, alphabet) of length at most `horizon`,
// stored level by level in lexicographic order. The container accepts any
// words so that validate_tree can reject malformed input; every builder in
// this library produces prefix-closed trees.
class FinTree {
 public:
  FinTree() : FinTree(2, 0) {}
  FinTree(std::uint32_t alphabet, std::size_t horizon) : k_(alphabet), levels_(horizon + 1) {
    if (alphabet == 0) throw InputError("alphabet must be positive");
  }

  std::uint32_t alphabet() const { return k_; }
  std::size_t horizon() const { return levels_.size() - 1; }

  const std::vector<Word>& level(std::size_t s) const { return levels_.at(s); }

  bool contains(const Word& w) const {
    if (w.size() > horizon()) return false;
    const auto& lv = levels_[w.size()];
    return std::binary_search(lv.begin(), lv.end(), w);
  }

  void insert(const Word& w) {
    if (w.size() > horizon()) throw InputError("word longer than the tree horizon");
    auto& lv = levels_[w.size()];
    auto it = std::lower_bound(lv.begin(), lv.end(), w);
    if (it == lv.end() || *it != w) lv.insert(it, w);
  }

  // Inserts w together with all of its prefixes.
  void insert_with_prefixes(const Word& w) {
    for (std::size_t n = 0; n <= w.size(); ++n) insert(prefix_of(w, n));
  }

  bool empty() const {
    return std::all_of(levels_.begin(), levels_.end(), [](const auto& lv) { return lv.empty(); });
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& lv : levels_) n += lv.size();
    return n;
  }

  // All nodes in length-lexicographic order.
  std::vector<Word> nodes() const {
    std::vector<Word> out;
    for (const auto& lv : levels_) out.insert(out.end(), lv.begin(), lv.end());
    return out;
  }

  std::vector<std::size_t> level_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& lv : levels_) out.push_back(lv.size());
    return out;
  }

  // Immediate successors of w that lie in the tree.
  std::vector<Word> children(const Word& w) const {
    std::vector<Word> out;
    if (w.size() >= horizon()) return out;
    const auto& lv = levels_[w.size() + 1];
    auto it = std::lower_bound(lv.begin(), lv.end(), w);
    for (; it != lv.end() && is_prefix(w, *it); ++it) out.push_back(*it);
    return out;
  }

  bool has_node_per_level() const {
    return std::all_of(levels_.begin(), levels_.end(), [](const auto& lv) { return !lv.empty(); });
  }

  friend bool operator==(const FinTree& a, const FinTree& b) {
    return a.k_ == b.k_ && a.levels_ == b.levels_;
  }

 private:
  std::uint32_t k_;
  std::vector<std::vector<Word>> levels_;
};

inline bool validate_tree(const FinTree& t) {
  bool seen_empty_level = false;
  for (std::size_t s = 0; s <= t.horizon(); ++s) {
    const auto& lv = t.level(s);
    if (lv.empty()) {
      seen_empty_level = true;
      continue;
    }
    if (seen_empty_level) return false;
    for (const Word& w : lv) {
      for (Symbol a : w)
        if (a >= t.alphabet()) return false;
      if (s > 0 && !t.contains(prefix_of(w, s - 1))) return false;
    }
  }
  return true;
}

// Builds the subtree of k^{<=D} generated by a prefix-closed predicate: a
// word is added when the predicate accepts it and its parent was added.
inline FinTree tree_from_predicate(std::uint32_t k, std::size_t horizon,
                                   const std::function<bool(const Word&)>& accept) {
  FinTree t(k, horizon);
  if (!accept(Word{})) return t;
  t.insert(Word{});
  std::vector<Word> frontier{Word{}};
  for (std::size_t s = 0; s < horizon; ++s) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Symbol a = 0; a < k; ++a) {
        Word c = w;
        c.push_back(a);
        if (accept(c)) {
          t.insert(c);
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return t;
}

inline FinTree full_tree(std::uint32_t k, std::size_t horizon) {
  return tree_from_predicate(k, horizon, [](const Word&) { return true; });
}

// All prefixes of one word; the horizon is the word's length.
inline FinTree chain_tree(const Word& w, std::uint32_t k) {
  FinTree t(k, w.size());
  t.insert_with_prefixes(w);
  return t;
}

// Gamma^v_F truncated to k^{<=D}: words equal to v at every position of F.
inline FinTree gamma_tree(const std::set<std::size_t>& f, Symbol v, std::uint32_t k, std::size_t horizon) {
  return tree_from_predicate(k, horizon, [&](const Word& w) {
    return w.empty() || !f.count(w.size() - 1) || w.back() == v;
  });
}

// T intersected with Gamma^v_F.
inline FinTree gamma_restrict(const FinTree& t, const std::set<std::size_t>& f, Symbol v) {
  if (v >= t.alphabet()) throw InputError("restriction value outside the alphabet");
  FinTree out(t.alphabet(), t.horizon());
  for (std::size_t s = 0; s <= t.horizon(); ++s)
    for (const Word& w : t.level(s)) {
      bool ok = true;
      for (std::size_t p : f)
        if (p < w.size() && w[p] != v) {
          ok = false;
          break;
        }
      if (ok) out.insert(w);
    }
  return out;
}

// Keeps the nodes that extend to a node at the horizon.
inline FinTree prune(const FinTree& t) {
  FinTree out(t.alphabet(), t.horizon());
  for (const Word& w : t.level(t.horizon())) out.insert_with_prefixes(w);
  return out;
}

// Nodes of length equal to the horizon, in lexicographic order.
inline std::vector<Word> paths_at_horizon(const FinTree& t) { return t.level(t.horizon()); }

// min over 0 <= s <= horizon of 2^{-s} |T^s|, exactly.
inline Dyadic min_level_density(const FinTree& t) {
  if (t.alphabet() != 2) throw InputError("level density is defined for binary trees only");
  Dyadic best = Dyadic::one();
  for (std::size_t s = 0; s <= t.horizon(); ++s) {
    Dyadic d(t.level(s).size(), static_cast<unsigned>(s));
    if (d < best) best = d;
  }
  return best;
}

inline Dyadic level_density(const FinTree& t, std::size_t s) {
  if (t.alphabet() != 2) throw InputError("level density is defined for binary trees only");
  return Dyadic(t.level(s).size(), static_cast<unsigned>(s));
}

}  // namespace ramkit
