#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramkit/ramkit.hpp"
#include "roundtrip.hpp"

using namespace ramkit;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST(Graph, EdgesAreSortedAndSelfLoopsRejected) {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  g.add_edge(0, 1);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
}

TEST(OddPath, CyclesAndPaths) {
  EXPECT_TRUE(odd_cycle_exists(cycle(5)));
  EXPECT_FALSE(odd_cycle_exists(cycle(6)));
  Graph p = path(5);
  auto w = odd_path(p, 0, 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(oracle::is_odd_path(p, *w, 0, 3));
  EXPECT_FALSE(odd_path(p, 0, 4).has_value());
  EXPECT_FALSE(odd_path(p, 0, 0).has_value());
}

// Property: on random bipartite graphs every returned witness is a genuine
// odd path, and a pair has one exactly when the BFS 2-coloring separates it.
TEST(OddPath, AgreesWithTwoColoringOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    Graph g = random_bipartite_graph(rng, 2 + rng.below(8));
    auto col = oracle::two_coloring(g);
    ASSERT_TRUE(col.has_value());
    auto comp = oracle::components(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = 0; y < g.vertex_count(); ++y) {
        bool expect = x != y && comp[x] == comp[y] && (*col)[x] != (*col)[y];
        auto w = odd_path(g, x, y);
        ASSERT_EQ(w.has_value(), expect);
        if (w) {
          ASSERT_TRUE(oracle::is_odd_path(g, *w, x, y));
        }
      }
  }
}

TEST(KHomogeneous, Examples) {
  Graph p = path(4);
  EXPECT_TRUE(is_k_homogeneous(p, {0, 2}, 2).holds());
  EXPECT_FALSE(is_k_homogeneous(p, {0, 1}, 2).holds());
  EXPECT_FALSE(is_k_homogeneous(cycle(5), {}, 2).holds());
  EXPECT_TRUE(is_k_homogeneous(cycle(5), {0, 2}, 3).holds());
  Graph k4(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  EXPECT_FALSE(is_k_homogeneous(k4, {}, 3).holds());
  EXPECT_EQ(verdict_name(is_k_homogeneous(k4, {}, 4).verdict), "yes");
  EXPECT_THROW(is_k_homogeneous(p, {9}, 2), InputError);
}

// Property: the parity test matches the induced-subgraph definition on
// every graph with at most 5 vertices.
TEST(KHomogeneous, TwoAgreesWithDefinitionUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < static_cast<int>(n); ++u)
      for (int v = u + 1; v < static_cast<int>(n); ++v) slots.emplace_back(u, v);
    for (std::uint32_t em = 0; em < (1u << slots.size()); ++em) {
      Graph g(n);
      std::vector<std::pair<int, int>> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (em >> i & 1) {
          edges.push_back(slots[i]);
          g.add_edge(slots[i].first, slots[i].second);
        }
      oracle::SmallGraph2Hom ref(n, edges);
      for (std::uint32_t h = 0; h < (1u << n); ++h) {
        std::vector<Vertex> hv;
        for (Vertex v = 0; v < n; ++v)
          if (h >> v & 1) hv.push_back(v);
        auto r = is_k_homogeneous(g, hv, 2);
        ASSERT_EQ(r.holds(), ref.homogeneous(h));
        if (r.holds()) {
          ASSERT_TRUE(oracle::proper(g, r.witness));
          for (Vertex v : hv) ASSERT_EQ(r.witness[v], 0);
        }
      }
    }
  }
}

// Property: k = 3 search agrees with the plain DFS oracle.
TEST(KHomogeneous, ThreeAgreesWithDfsOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    Graph g = random_graph(rng, 2 + rng.below(7), 1, 2);
    std::vector<Vertex> h;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng.below(3) == 0) h.push_back(v);
    ASSERT_EQ(is_k_homogeneous(g, h, 3).holds(), oracle::coloring_with_class(g, 3, h).has_value());
  }
}

TEST(Colorings, CountsAndBudget) {
  EXPECT_EQ(enumerate_colorings(cycle(3), 3).size(), 6u);
  EXPECT_EQ(enumerate_colorings(cycle(4), 2).size(), 2u);
  EXPECT_TRUE(enumerate_colorings(cycle(5), 2).empty());
  Coloring pins{0, -1, -1};
  EXPECT_EQ(enumerate_colorings(cycle(3), 3, pins).size(), 2u);
  for (const Coloring& c : enumerate_colorings(path(4), 3)) EXPECT_TRUE(is_proper_coloring(path(4), c, 3));
  EXPECT_EQ(enumerate_colorings(path(4), 3).size(), 24u);
}

TEST(LocalizeGraph, OddPairAddsAChain) {
  Graph p = path(5);
  LocalizedGraph loc = localize_graph(p, {0, 4, 1});
  ASSERT_EQ(loc.pairs.size(), 2u);
  EXPECT_EQ(loc.pairs[0].x, 0u);
  EXPECT_EQ(loc.pairs[0].y, 1u);
  EXPECT_EQ(loc.pairs[1].x, 1u);
  EXPECT_EQ(loc.pairs[1].y, 4u);
  EXPECT_EQ(loc.image.vertex_count(), 9u);
  EXPECT_EQ(loc.image.edge_count(), 6u);
  EXPECT_TRUE(loc.image.has_edge(0, loc.a(0)));
  EXPECT_TRUE(loc.image.has_edge(loc.b(0), 1));
  auto h = decode_localized_graph(p, loc, {0, 4});
  EXPECT_EQ(h, (std::vector<Vertex>{0, 4}));
  EXPECT_THROW(localize_graph(cycle(3), {0}), InputError);
}

TEST(LocalizeGraph, NoOddPairsReturnsX) {
  Graph p = path(5);
  LocalizedGraph loc = localize_graph(p, {0, 2, 4});
  EXPECT_TRUE(loc.pairs.empty());
  EXPECT_EQ(loc.image.edge_count(), 0u);
  EXPECT_EQ(decode_localized_graph(p, loc, {}), (std::vector<Vertex>{0, 2, 4}));
}

TEST(Clique, AugmentTriangle) {
  CliqueAugmented a = clique_augment(cycle(3), 4);
  EXPECT_EQ(a.image.vertex_count(), 4u);
  EXPECT_EQ(a.image.edge_count(), 6u);
  EXPECT_TRUE(clique_augment(cycle(3), 3).image == cycle(3));
  EXPECT_THROW(clique_augment(cycle(3), 2), InputError);
  EXPECT_EQ(decode_clique(a, {0}, 4), (std::vector<Vertex>{0}));
  EXPECT_THROW(decode_clique(a, {0, 1}, 4), DecodeError);
}

TEST(ColoringTree, TriangleHasSixLeaves) {
  ColoringTree ct = graph_to_coloring_tree(cycle(3), 3);
  EXPECT_EQ(ct.tree.level(3).size(), 6u);
  DecodedColoring d = decode_coloring_tree(cycle(3), ct, ColorSet({1}, 2));
  EXPECT_EQ(d.vertices, (std::vector<Vertex>{1}));
  EXPECT_TRUE(is_proper_coloring(cycle(3), d.witness, 3));
  EXPECT_EQ(d.witness[1], 0);
  EXPECT_THROW(decode_coloring_tree(cycle(3), ct, ColorSet({0, 1}, 0)), DecodeError);
}

TEST(RoundTrip, GraphToTreeOnSmallGraphs) {
  roundtrip::Stats st;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed);
    Graph g = random_graph(rng, 1 + rng.below(5));
    st.merge(roundtrip::graph2tree(g, 2));
    st.merge(roundtrip::graph2tree(g, 3));
  }
  EXPECT_EQ(st.failures, 0u) << st.first_failure;
}

TEST(GraphIo, DotAndAdjacencyRoundTrip) {
  Rng rng(11);
  Graph g = random_graph(rng, 7);
  g.ensure_vertex(8);
  EXPECT_EQ(graph_from_dot(graph_to_dot(g)), g);
  EXPECT_EQ(graph_from_adjacency(graph_to_adjacency(g)), g);
  EXPECT_EQ(graph_from_dot("// note\n" + graph_to_dot(g)), g);
  EXPECT_THROW(graph_from_dot("graph G { 0 -- }"), InputError);
}
