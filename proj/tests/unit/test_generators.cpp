#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramkit/ramkit.hpp"

using namespace ramkit;

TEST(Generators, SameSeedSameInstance) {
  Rng a(42), b(42);
  EXPECT_EQ(random_tree(a, 2, 6), random_tree(b, 2, 6));
  EXPECT_EQ(random_graph(a, 9), random_graph(b, 9));
  ClauseSet ca = random_clauses(a, 5, 4), cb = random_clauses(b, 5, 4);
  EXPECT_EQ(ca.clauses, cb.clauses);
  EXPECT_EQ(oracle_to_json(random_oracle(a, 0, 6, 3, 3, 15)), oracle_to_json(random_oracle(b, 0, 6, 3, 3, 15)));
}

TEST(Generators, RandomTreeHasEveryLevel) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    FinTree t = random_tree(rng, 2, 7);
    EXPECT_TRUE(validate_tree(t));
    EXPECT_TRUE(oracle::has_node_every_level(t));
  }
}

TEST(Generators, PositiveTreeMeetsItsBound) {
  for (unsigned c = 3; c <= 5; ++c)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      FinTree t = random_positive_tree(rng, 10, c);
      EXPECT_TRUE(oracle::measure_at_least_pow2(t, {}, c));
    }
}

TEST(Generators, ClausesAreTwoBranching) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    ClauseSet cs = random_clauses(rng, 6, 5);
    EXPECT_TRUE(is_two_branching(cs.clauses));
    for (const Clause& c : cs.clauses) EXPECT_FALSE(c.empty());
  }
}

TEST(Generators, BipartiteGraphsAreBipartite) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    EXPECT_TRUE(oracle::two_coloring(random_bipartite_graph(rng, 10)).has_value());
  }
}

TEST(Generators, OraclesAreMonotone) {
  Rng rng(7);
  for (const auto& a : random_oracles(rng, 3, 8, 3, 19)) EXPECT_NO_THROW(validate_oracle(a));
}

TEST(Generators, PredictionsDecodeBelowHorizon) {
  Rng rng(8);
  for (const Prediction& p : random_predictions(rng, 5, 9)) {
    auto s = p.set();
    EXPECT_EQ(s.size(), p.i + 3);
    EXPECT_LT(s.back(), 9u);
  }
}
