#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"
#include "ramkit/sat/formula.hpp"

namespace ramkit {

// An indexed clause list over atoms a_0 .. a_{atoms-1}.
struct ClauseSet {
  std::size_t atoms = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

// A set of atoms together with the truth value they are pinned to.
struct SatHomSet {
  std::vector<std::size_t> atoms;  // sorted, duplicate-free
  bool value = false;

  SatHomSet() = default;
  SatHomSet(std::vector<std::size_t> a, bool v) : atoms(std::move(a)), value(v) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  }
  friend bool operator==(const SatHomSet&, const SatHomSet&) = default;
  friend bool operator<(const SatHomSet& a, const SatHomSet& b) {
    if (a.atoms != b.atoms) return a.atoms < b.atoms;
    return a.value < b.value;
  }
};

// The i-th literal of every clause is built from atom a_i.
inline bool is_two_branching(const std::vector<Clause>& cs) {
  for (const Clause& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i].atom != i) return false;
  return true;
}

inline std::size_t clause_span(const Clause& c) {
  std::size_t m = 0;
  for (const Literal& l : c) m = std::max(m, l.atom + 1);
  return m;
}

inline bool clause_true(const Clause& c, const Assignment& v) {
  return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return v.at(l.atom) == l.positive; });
}

inline constexpr std::size_t kMaxBruteForceAtoms = 24;

// Searches all assignments of atoms [0, span) respecting the pins.
inline bool exists_assignment(std::size_t span, const std::vector<std::size_t>& pinned, bool pin_value,
                              const std::function<bool(const Assignment&)>& accept) {
  if (span > kMaxBruteForceAtoms) throw BudgetExceeded("brute-force satisfiability over more than 24 atoms");
  std::vector<char> is_pinned(span, 0);
  for (std::size_t a : pinned)
    if (a < span) is_pinned[a] = 1;
  Assignment v(span, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << span); ++mask) {
    bool skip = false;
    for (std::size_t a = 0; a < span; ++a) {
      v[a] = (mask >> a) & 1;
      if (is_pinned[a] && v[a] != pin_value) {
        skip = true;
        break;
      }
    }
    if (!skip && accept(v)) return true;
  }
  return false;
}

// theta_sigma = OR_i l_i with l_i = a_i when sigma(i) = 0 and not a_i when
// sigma(i) = 1, for every binary sigma of length <= horizon outside T, in
// length-lexicographic order of sigma.
inline ClauseSet tree_to_clauses(const FinTree& t) {
  if (t.alphabet() != 2) throw InputError("tree_to_clauses expects a binary tree");
  ClauseSet out{t.horizon(), {}};
  for (std::size_t n = 0; n <= t.horizon(); ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Word sigma(n);
      for (std::size_t i = 0; i < n; ++i) sigma[i] = (m >> (n - 1 - i)) & 1;
      if (t.contains(sigma)) continue;
      Clause c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(Literal{i, sigma[i] == 1 ? false : true});
      out.clauses.push_back(std::move(c));
    }
  return out;
}

// H = {i : a_i in H0}, color 1 for true and 0 for false.
inline ColorSet decode_sat_hom(const SatHomSet& h) { return ColorSet(h.atoms, h.value ? 1 : 0); }

inline std::size_t prefix_span(const ClauseSet& c, std::size_t n) {
  std::size_t span = 0;
  for (std::size_t i = 0; i < n && i < c.clauses.size(); ++i) span = std::max(span, clause_span(c.clauses[i]));
  return span;
}

// The first n clauses have a common satisfying assignment with H pinned.
inline bool sat_homogeneous(const ClauseSet& c, const SatHomSet& h, std::size_t n) {
  n = std::min(n, c.clauses.size());
  return exists_assignment(prefix_span(c, n), h.atoms, h.value, [&](const Assignment& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (!clause_true(c.clauses[i], v)) return false;
    return true;
  });
}

inline bool finitely_satisfiable(const ClauseSet& c, std::size_t n) { return sat_homogeneous(c, SatHomSet{}, n); }

inline std::size_t formula_prefix_span(const std::vector<PropFormula>& fs, std::size_t n) {
  std::size_t span = 0;
  for (std::size_t i = 0; i < n && i < fs.size(); ++i) span = std::max(span, atom_span(fs[i]));
  return span;
}

inline bool sat_homogeneous(const std::vector<PropFormula>& fs, const SatHomSet& h, std::size_t n) {
  n = std::min(n, fs.size());
  return exists_assignment(formula_prefix_span(fs, n), h.atoms, h.value, [&](const Assignment& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (!eval_total(fs[i], v)) return false;
    return true;
  });
}

inline bool finitely_satisfiable(const std::vector<PropFormula>& fs, std::size_t n) {
  return sat_homogeneous(fs, SatHomSet{}, n);
}

// T = {sigma : no i < |sigma| has nu_sigma(phi_i) = false}, nu_sigma(a_i) =
// (sigma(i) = 1); a formula with an atom at or beyond |sigma| is undefined
// and therefore not false.
inline FinTree formulas_to_tree(const std::vector<PropFormula>& fs, std::size_t horizon) {
  for (std::size_t n = 1; n <= std::min(horizon, fs.size()); ++n)
    if (!finitely_satisfiable(fs, n))
      throw InputError("formulas_to_tree: the first " + std::to_string(n) + " formulas are unsatisfiable");
  return tree_from_predicate(2, horizon, [&](const Word& sigma) {
    Assignment v(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) v[i] = sigma[i] == 1;
    for (std::size_t i = 0; i < sigma.size() && i < fs.size(); ++i) {
      auto r = eval_partial(fs[i], v);
      if (r.has_value() && !*r) return false;
    }
    return true;
  });
}

// Every SatHomSet with atoms in [0, bound) for which the first n clauses
// stay satisfiable, ordered by atoms then value.
template <class Instance>
std::vector<SatHomSet> enumerate_sat_homogeneous(const Instance& c, std::size_t n, std::size_t bound) {
  if (bound > 20) throw BudgetExceeded("enumerate_sat_homogeneous: atom bound above 20");
  std::vector<SatHomSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bound); ++mask) {
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < bound; ++i)
      if (mask >> i & 1) atoms.push_back(i);
    for (bool v : {false, true}) {
      SatHomSet h(atoms, v);
      if (sat_homogeneous(c, h, n)) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ramkit
