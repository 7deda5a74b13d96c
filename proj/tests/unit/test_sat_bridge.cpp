#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramkit/ramkit.hpp"
#include "roundtrip.hpp"

using namespace ramkit;

namespace {

Literal pos(std::size_t a) { return {a, true}; }
Literal neg(std::size_t a) { return {a, false}; }

FinTree from_words(std::size_t horizon, std::initializer_list<const char*> words) {
  FinTree t(2, horizon);
  for (const char* w : words) t.insert(bits(w));
  return t;
}

}  // namespace

TEST(TreeToClauses, Examples) {
  EXPECT_TRUE(tree_to_clauses(full_tree(2, 2)).clauses.empty());
  ClauseSet cs = tree_to_clauses(from_words(2, {"", "0", "00", "01"}));
  ASSERT_EQ(cs.clauses.size(), 3u);
  EXPECT_EQ(cs.clauses[0], (Clause{neg(0)}));
  EXPECT_EQ(cs.clauses[1], (Clause{neg(0), pos(1)}));
  EXPECT_EQ(cs.clauses[2], (Clause{neg(0), neg(1)}));
  EXPECT_TRUE(is_two_branching(cs.clauses));
}

// Each clause is falsified by exactly the word it excludes.
TEST(TreeToClauses, ClauseFalsifiedExactlyByItsWord) {
  Rng rng(9);
  FinTree t = random_tree(rng, 2, 4);
  ClauseSet cs = tree_to_clauses(t);
  for (const Clause& c : cs.clauses) {
    std::size_t falsified = 0;
    for (const Word& w : oracle::all_words(2, c.size())) {
      std::vector<bool> v(w.begin(), w.end());
      if (!oracle::clause_holds(c, v)) {
        ++falsified;
        EXPECT_FALSE(t.contains(w));
      }
    }
    EXPECT_EQ(falsified, 1u);
  }
}

TEST(FormulasToTree, Examples) {
  EXPECT_EQ(formulas_to_tree({PropFormula::var(0)}, 3), gamma_tree({0}, 1, 2, 3));
  EXPECT_EQ(formulas_to_tree({}, 3), full_tree(2, 3));
  auto f = formulas_to_tree({PropFormula::disj(PropFormula::var(0), PropFormula::var(1)),
                             PropFormula::negation(PropFormula::var(0))},
                            2);
  // Brute force: sigma of length 2 survives unless a0 or a1 is violated.
  std::vector<Word> want;
  for (const Word& w : oracle::all_words(2, 2))
    if ((w[0] == 1 || w[1] == 1) && w[0] == 0) want.push_back(w);
  EXPECT_EQ(f.level(2), want);
  EXPECT_THROW(formulas_to_tree({PropFormula::var(0), PropFormula::negation(PropFormula::var(0))}, 2), InputError);
}

TEST(Satisfiability, Examples) {
  ClauseSet contradiction{1, {{pos(0)}, {neg(0)}}};
  EXPECT_FALSE(finitely_satisfiable(contradiction, 2));
  EXPECT_TRUE(finitely_satisfiable(ClauseSet{0, {}}, 0));
  EXPECT_TRUE(finitely_satisfiable(tree_to_clauses(gamma_tree({1}, 0, 2, 3)), 100));
  ClauseSet c{1, {{neg(0)}}};
  EXPECT_FALSE(sat_homogeneous(c, SatHomSet({0}, true), 1));
  EXPECT_TRUE(sat_homogeneous(c, SatHomSet({0}, false), 1));
  EXPECT_EQ(sat_homogeneous(contradiction, SatHomSet{}, 2), finitely_satisfiable(contradiction, 2));
}

// Property: sat_homogeneous agrees with the assignment oracle on random
// clause lists and every pinned set.
TEST(Satisfiability, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    ClauseSet cs = random_clauses(rng, 1 + rng.below(5), 4);
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      std::vector<std::size_t> atoms;
      for (std::size_t i = 0; i < 4; ++i)
        if (mask >> i & 1) atoms.push_back(i);
      for (bool v : {false, true})
        ASSERT_EQ(sat_homogeneous(cs, SatHomSet(atoms, v), cs.clauses.size()),
                  oracle::clauses_homogeneous(cs.clauses, atoms, v));
    }
  }
}

TEST(Dimacs, RoundTripAndErrors) {
  Rng rng(5);
  ClauseSet cs = random_clauses(rng, 6, 4);
  ClauseSet back = clauses_from_dimacs(clauses_to_dimacs(cs));
  EXPECT_EQ(back.atoms, cs.atoms);
  EXPECT_EQ(back.clauses, cs.clauses);
  EXPECT_THROW(clauses_from_dimacs("1 2 0\n"), InputError);
  EXPECT_THROW(clauses_from_dimacs("p cnf 2 1\n1 3 0\n"), InputError);
  EXPECT_THROW(clauses_from_dimacs("p cnf 2 2\n1 2 0\n"), InputError);
  EXPECT_THROW(clauses_from_dimacs("p cnf 2 1\n1 x 0\n"), InputError);
  EXPECT_THROW(clauses_from_dimacs("p cnf 2 1\n1 2\n"), InputError);
}

TEST(Formula, TextRoundTripAndPartialEvaluation) {
  PropFormula f = formula_from_text("imp a0 or a1 not a2");
  EXPECT_EQ(formula_to_text(formula_from_text(formula_to_text(f))), formula_to_text(f));
  EXPECT_EQ(atom_span(f), 3u);
  EXPECT_FALSE(eval_partial(f, {true, false}).has_value());
  EXPECT_TRUE(eval_total(f, {false, false, true}));
}

TEST(RoundTrip, TreeToClausesOnAllSmallTrees) {
  roundtrip::Stats st;
  for (std::size_t d = 0; d <= 3; ++d)
    for (const FinTree& t : oracle::all_binary_trees(d)) st.merge(roundtrip::tree2cnf(t));
  EXPECT_EQ(st.failures, 0u) << st.first_failure;
  EXPECT_GT(st.checks, 0u);
}

TEST(RoundTrip, ClausesToTreeOnSeededLists) {
  roundtrip::Stats st;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    ClauseSet cs = random_clauses(rng, 1 + rng.below(4), 4);
    if (!oracle::clauses_homogeneous(cs.clauses, {}, false)) continue;
    st.merge(roundtrip::cnf2tree(cs, 4));
  }
  EXPECT_EQ(st.failures, 0u) << st.first_failure;
  EXPECT_GT(st.instances, 10u);
}

TEST(EnumerateSatHomogeneous, MatchesOracle) {
  ClauseSet cs{2, {{pos(0), neg(1)}, {neg(0)}}};
  auto sets = enumerate_sat_homogeneous(cs, 2, 2);
  for (const auto& h : sets) EXPECT_TRUE(oracle::clauses_homogeneous(cs.clauses, h.atoms, h.value));
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < 4; ++mask)
    for (bool v : {false, true}) {
      std::vector<std::size_t> atoms;
      for (std::size_t i = 0; i < 2; ++i)
        if (mask >> i & 1) atoms.push_back(i);
      count += oracle::clauses_homogeneous(cs.clauses, atoms, v);
    }
  EXPECT_EQ(sets.size(), count);
}
