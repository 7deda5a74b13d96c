#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramkit/ramkit.hpp"

using namespace ramkit;

// Sanity checks on the test oracles themselves, against hand counts.

TEST(Oracles, BinaryTreeCounts) {
  // t(d) = (1 + t(d - 1))^2 counts trees below the root.
  EXPECT_EQ(oracle::all_binary_trees(0).size(), 1u);
  EXPECT_EQ(oracle::all_binary_trees(1).size(), 4u);
  EXPECT_EQ(oracle::all_binary_trees(2).size(), 25u);
  EXPECT_EQ(oracle::all_binary_trees(3).size(), 676u);
}

TEST(Oracles, PrunedTreeCounts) {
  // p(d) = 2 p(d - 1) + p(d - 1)^2 with p(0) = 1.
  EXPECT_EQ(oracle::all_pruned_binary_trees(1).size(), 3u);
  EXPECT_EQ(oracle::all_pruned_binary_trees(2).size(), 15u);
  EXPECT_EQ(oracle::all_pruned_binary_trees(3).size(), 255u);
  EXPECT_EQ(oracle::all_pruned_binary_trees(4).size(), 65535u);
}

TEST(Oracles, AllWords) {
  auto w = oracle::all_words(3, 2);
  EXPECT_EQ(w.size(), 9u);
  EXPECT_EQ(w.front(), (Word{0, 0}));
  EXPECT_EQ(w.back(), (Word{2, 2}));
}

TEST(Oracles, TreeHomogeneousByHand) {
  FinTree t(2, 2);
  for (const char* s : {"", "0", "1", "00", "11"}) t.insert(bits(s));
  EXPECT_TRUE(oracle::tree_homogeneous(t, {0, 1}, 0, 2));
  EXPECT_TRUE(oracle::tree_homogeneous(t, {0, 1}, 1, 2));
  FinTree mixed(2, 2);
  for (const char* s : {"", "0", "1", "01", "10"}) mixed.insert(bits(s));
  EXPECT_FALSE(oracle::tree_homogeneous(mixed, {0, 1}, 0, 2));
}

TEST(Oracles, SmallGraph2HomByHand) {
  // Path 0-1-2: {0, 2} is homogeneous, {0, 1} is not.
  oracle::SmallGraph2Hom p(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.homogeneous(0b101));
  EXPECT_FALSE(p.homogeneous(0b011));
  // Triangle: not 2-colorable, so even the empty set fails.
  oracle::SmallGraph2Hom tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(tri.homogeneous(0));
}

TEST(Oracles, ClausesHomogeneousByHand) {
  std::vector<Clause> cs{{{0, true}, {1, true}}};
  EXPECT_TRUE(oracle::clauses_homogeneous(cs, {0, 1}, true));
  EXPECT_FALSE(oracle::clauses_homogeneous(cs, {0, 1}, false));
  EXPECT_TRUE(oracle::clauses_homogeneous(cs, {0}, false));
}

TEST(Oracles, MeasureAtLeastPow2ByHand) {
  FinTree t = gamma_tree({0, 1}, 1, 2, 5);
  EXPECT_TRUE(oracle::measure_at_least_pow2(t, {}, 2));
  EXPECT_FALSE(oracle::measure_at_least_pow2(t, {}, 1));
  EXPECT_TRUE(oracle::measure_at_least_pow2(t, {3}, 3));
  EXPECT_FALSE(oracle::measure_at_least_pow2(t, {0}, 40));
}

TEST(Oracles, OddPathChecker) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  EXPECT_TRUE(oracle::is_odd_path(g, {0, 1, 2, 3}, 0, 3));
  EXPECT_FALSE(oracle::is_odd_path(g, {0, 1, 2}, 0, 2));
  EXPECT_FALSE(oracle::is_odd_path(g, {0, 2}, 0, 2));
}
