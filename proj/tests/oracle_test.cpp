#include <gtest/gtest.h>

#include <random>

#include "ore/construct.hpp"
#include "ore/enumerate.hpp"
#include "ore/oracle.hpp"
#include "support/fixtures.hpp"

namespace ore {
namespace {

TEST(HamiltonianExact, Examples) {
  const auto c5 = hamiltonian_exact(testing::cycle_graph(5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_FALSE(validate_cycle(testing::cycle_graph(5), HamiltonCycleCert{*c5}).has_value());
  EXPECT_FALSE(hamiltonian_exact(testing::petersen_graph()).has_value());
  EXPECT_FALSE(hamiltonian_exact(testing::complete_bipartite(2, 3)).has_value());
  EXPECT_TRUE(hamiltonian_exact(testing::complete_bipartite(3, 3)).has_value());
  EXPECT_TRUE(hamiltonian_exact(Graph::edgeless(1)).has_value());
  EXPECT_TRUE(hamiltonian_exact(testing::path_graph(2)).has_value());
  EXPECT_FALSE(hamiltonian_exact(Graph::edgeless(2)).has_value());
  EXPECT_FALSE(hamiltonian_exact(Graph::edgeless(0)).has_value());
}

TEST(LongestPathExact, Examples) {
  EXPECT_EQ(longest_path_exact(testing::star_graph(3)).size(), 3U);
  EXPECT_EQ(longest_path_exact(testing::cycle_graph(6)).size(), 6U);
  EXPECT_EQ(longest_path_exact(Graph::edgeless(3)).size(), 1U);
  EXPECT_EQ(longest_path_exact(testing::petersen_graph()).size(), 10U);
}

TEST(MinLeafExact, Examples) {
  EXPECT_EQ(min_leaf_spanning_tree_exact(testing::star_graph(3))->leaf_count, 3U);
  EXPECT_EQ(min_leaf_spanning_tree_exact(testing::cycle_graph(6))->leaf_count, 2U);
  EXPECT_EQ(min_leaf_spanning_tree_exact(testing::petersen_graph())->leaf_count, 2U);
  EXPECT_EQ(min_leaf_spanning_tree_exact(Graph::edgeless(1))->leaf_count, 0U);
  EXPECT_FALSE(min_leaf_spanning_tree_exact(testing::two_k2()).has_value());

  // Spider with three legs of length 2: no Hamilton path, three leaves suffice.
  const Graph spider = testing::make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const auto t = min_leaf_spanning_tree_exact(spider);
  EXPECT_EQ(t->leaf_count, 3U);
  EXPECT_FALSE(validate_tree(spider, KTreeCert{t->edges, t->leaf_count}).has_value());
}

TEST(Oracles, BudgetsAreEnforced) {
  EXPECT_THROW(hamiltonian_exact(testing::cycle_graph(13)), BudgetExceeded);
  EXPECT_THROW(longest_path_exact(testing::cycle_graph(13)), BudgetExceeded);
  EXPECT_THROW(min_leaf_spanning_tree_exact(testing::cycle_graph(11)), BudgetExceeded);
}

TEST(Oracles, AgreeWithBruteForceExhaustively) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      const auto ham = hamiltonian_exact(g);
      ASSERT_EQ(ham.has_value(), testing::brute_hamiltonian(g));
      if (ham && n >= 3) {
        ASSERT_FALSE(validate_cycle(g, HamiltonCycleCert{*ham}).has_value());
      }

      const Path lp = longest_path_exact(g);
      ASSERT_TRUE(is_path(g, lp));
      ASSERT_EQ(lp.size(), testing::brute_longest_path_order(g));

      const auto ml = min_leaf_spanning_tree_exact(g);
      const auto brute = testing::brute_min_leaf(g);
      ASSERT_EQ(ml.has_value(), brute.has_value());
      if (ml) {
        ASSERT_EQ(ml->leaf_count, *brute);
        ASSERT_FALSE(validate_tree(g, KTreeCert{ml->edges, ml->leaf_count}).has_value());
      }
    }
  }
}

TEST(Oracles, MinLeafAgreesOnRandomSevenVertexGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_connected_graph(7, 0.25 + 0.005 * i, rng);
    ASSERT_EQ(min_leaf_spanning_tree_exact(g)->leaf_count, *testing::brute_min_leaf(g));
  }
}

}  // namespace
}  // namespace ore
