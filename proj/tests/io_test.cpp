#include <gtest/gtest.h>

#include <set>

#include "ore/enumerate.hpp"
#include "ore/io.hpp"
#include "support/fixtures.hpp"

namespace ore {
namespace {

TEST(Graph6, Fixtures) {
  EXPECT_EQ(parse_graph6("C~"), testing::complete_graph(4));
  EXPECT_EQ(parse_graph6("Ch"), testing::path_graph(4));
  EXPECT_EQ(parse_graph6("@"), Graph::edgeless(1));
  EXPECT_EQ(parse_graph6("?"), Graph::edgeless(0));
  EXPECT_EQ(write_graph6(testing::complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(testing::path_graph(4)), "Ch");
  EXPECT_EQ(write_graph6(testing::petersen_graph()), "IheA@GUAo");
}

TEST(Graph6, StrictDecoding) {
  // n = 2 uses one data bit; "A_" sets it, "A`" also sets a padding bit.
  EXPECT_EQ(parse_graph6("A_"), testing::path_graph(2));
  EXPECT_THROW(parse_graph6("A`"), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
  EXPECT_THROW(parse_graph6("C ~"), ParseError);
  EXPECT_THROW(parse_graph6("~??"), ParseError);
}

TEST(Graph6, RoundTripExhaustive) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) ASSERT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

TEST(Graph6, Stream) {
  const auto gs = parse_graph6_stream("C~\r\n\nCh\n@");
  ASSERT_EQ(gs.size(), 3U);
  EXPECT_EQ(gs[1], testing::path_graph(4));
  EXPECT_TRUE(looks_like_graph6("\nC~\n"));
  EXPECT_FALSE(looks_like_graph6("4 3\n0 1\n"));
}

TEST(EdgeList, ParseAndWrite) {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(g, testing::path_graph(4));
  EXPECT_EQ(write_edge_list(g), "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(parse_edge_list(write_edge_list(testing::petersen_graph())), testing::petersen_graph());
  EXPECT_EQ(parse_edge_list("3 0"), Graph::edgeless(3));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("4 3\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("4 1\n0 1\n2 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("4 1\n0 4\n"), GraphError);
  EXPECT_THROW(parse_edge_list("4 1\n2 2\n"), GraphError);
  EXPECT_THROW(parse_edge_list("-1 0"), ParseError);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(all_labeled_graphs(1).size(), 1U);
  EXPECT_EQ(all_labeled_graphs(2).size(), 2U);
  EXPECT_EQ(all_labeled_graphs(4).size(), 64U);
  EXPECT_EQ(all_labeled_graphs(6).size(), 32768U);
  EXPECT_THROW(all_labeled_graphs(7), GraphError);
}

TEST(Enumerate, CanonicalFormCountsIsomorphismClasses) {
  // Unlabeled graph counts: 1, 2, 4, 11, 34.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> forms;
    for (const Graph& g : all_labeled_graphs(n)) forms.insert(canonical_form(g));
    EXPECT_EQ(forms.size(), expected[n]) << n;
  }
}

TEST(Enumerate, CanonicalFormIsRelabelingInvariant) {
  const Graph g = testing::make(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(canonical_form(g), canonical_form(testing::relabel(g, {5, 3, 1, 0, 2, 4})));
  EXPECT_NE(canonical_form(g), canonical_form(testing::path_graph(6)));
  EXPECT_THROW(canonical_form(testing::cycle_graph(9)), GraphError);
}

}  // namespace
}  // namespace ore
