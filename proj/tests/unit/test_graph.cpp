//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "btr/common.h"
#include "btr/construct.h"
#include "btr/graph.h"
#include "btr/graph_io.h"
#include "oracles.h"

namespace btr {
namespace {

TEST(Graph, FromEdgesDedupesAndCounts) {
  const Graph g = Graph::from_edges(4, { { 0, 1 }, { 1, 0 }, { 2, 3 } });
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degrees(), (std::vector<int> { 1, 1, 1, 1 }));
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph::from_edges(3, { { 1, 1 } }), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, { { 0, 3 } }), std::invalid_argument);
  EXPECT_THROW(Graph::empty(5000), std::invalid_argument);
}

TEST(Graph, ToggleIsAnInvolution) {
  const Graph g = petersen();
  const Graph h = g.toggled(0, 2);
  EXPECT_EQ(h.edge_count(), 16);
  EXPECT_EQ(h.toggled(0, 2), g);
}

TEST(Graph, PairMaskOrder) {
  // bit 0 -> (0,1), bit 1 -> (0,2), bit 2 -> (1,2)
  const Graph g = Graph::from_pair_mask(3, 0b100);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(g.edge_count(), 1);
}

// Outer 5-cycle, spokes, inner pentagram.
Graph labeled_petersen() {
  return Graph::from_edges(10, { { 0, 1 }, { 0, 4 }, { 0, 5 }, { 1, 2 }, { 1, 6 },
                                 { 2, 3 }, { 2, 7 }, { 3, 4 }, { 3, 8 }, { 4, 9 },
                                 { 5, 7 }, { 5, 8 }, { 6, 8 }, { 6, 9 }, { 7, 9 } });
}

TEST(Graph, CommonNeighborhoodAndInduced) {
  const Graph k4 = complete_graph(4);
  const VertexSet x = VertexSet::of(4, { 0, 1 });
  EXPECT_EQ(common_neighborhood(k4, x).members(), (std::vector<int> { 2, 3 }));
  EXPECT_THROW(common_neighborhood(k4, VertexSet::empty(4)), std::invalid_argument);
  const Graph sub = induced_subgraph(labeled_petersen(), VertexSet::of(10, { 0, 1, 2, 3, 4 }));
  EXPECT_EQ(sub.edge_count(), 5);
  EXPECT_EQ(complement(k4).edge_count(), 0);
}

TEST(Graph, Components) {
  const Graph g = Graph::from_edges(5, { { 0, 1 }, { 3, 4 } });
  EXPECT_EQ(connected_components(g).size(), 3u);
}

// Strings produced by an independent graph6 writer.
TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(encode_graph6(labeled_petersen()), "IheA@GUAo");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), labeled_petersen());
  EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(encode_graph6(cycle(5)), "Dhc");
  EXPECT_EQ(encode_graph6(Graph::empty(0)), "?");
  EXPECT_EQ(encode_graph6(Graph::empty(1)), "@");
  EXPECT_EQ(encode_graph6(path(63)).substr(0, 6), "~??~hC");
  EXPECT_EQ(encode_graph6(path(63)).size(), 330u);
  EXPECT_EQ(encode_graph6(complete_graph(64)).size(), 340u);
}

TEST(Graph6, DecodesAndHeader) {
  const Graph p = parse_graph6("IheA@GUAo");
  EXPECT_EQ(p.edge_count(), 15);
  EXPECT_TRUE(p.adjacent(0, 5));
  EXPECT_TRUE(p.adjacent(7, 9));
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int n : { 0, 1, 2, 5, 62, 63, 64, 100, 300 }) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g) << n;
  }
}

TEST(Graph6, ErrorsCarryOffsets) {
  try {
    parse_graph6("C~ ");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated
  EXPECT_THROW(parse_graph6("C~~"), ParseError);   // trailing byte
  EXPECT_THROW(parse_graph6("Bx"), ParseError);    // nonzero padding
  EXPECT_THROW(parse_graph6("~??C~"), ParseError);  // non-minimal length
  EXPECT_THROW(parse_graph6("~??~hC", 10), ParseError);  // over cap
}

TEST(EdgeList, ParseAndFormat) {
  std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
  const Graph g = parse_edge_list(in);
  EXPECT_EQ(g, path(4));
  std::istringstream again(format_edge_list(g));
  EXPECT_EQ(parse_edge_list(again), g);
}

TEST(EdgeList, BadLineNumber) {
  std::istringstream in("3 2\n0 1\n1 9\n");
  try {
    parse_edge_list(in);
    FAIL();
  } catch (const ParseError &e) {
    ASSERT_TRUE(e.line().has_value());
    EXPECT_EQ(*e.line(), 3u);
  }
}

TEST(ReadGraphs, MixedCorpusLines) {
  std::istringstream in("C~\n\nIheA@GUAo\n");
  const auto recs = read_graphs(in);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].line, 1u);
  EXPECT_EQ(recs[1].line, 3u);
  std::istringstream bad("C~\nC\n");
  try {
    read_graphs(bad);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line().value_or(0), 2u);
  }
}

TEST(ReadGraphs, EdgeListDetected) {
  std::istringstream in("3 1\n0 2\n");
  const auto recs = read_graphs(in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].graph.adjacent(0, 2));
}

TEST(BigCount, CheckedArithmetic) {
  EXPECT_EQ(to_string(binomial(27, 2) * binomial(25, 3)), "807300");
  EXPECT_EQ(to_string(binomial(100, 50)), "100891344545564193334812497256");
  EXPECT_EQ(binomial(5, 7), 0);
  const BigCount big = checked_pow(2, 127);
  EXPECT_THROW(checked_mul(big, 2), OverflowError);
  EXPECT_THROW(checked_add(big, big), OverflowError);
  EXPECT_EQ(to_int64(binomial(10, 3)), 120);
}

}  // namespace
}  // namespace btr
