//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "btr/construct.h"
#include "btr/counting.h"
#include "btr/spectral.h"
#include "oracles.h"

namespace btr {
namespace {

std::int64_t as_i64(BigCount c) { return to_int64(c); }

TEST(Counting, FrozenValues) {
  EXPECT_EQ(count_c4(complete_graph(4)), 3);
  EXPECT_EQ(count_c4(complete_bipartite(3, 3)), 9);
  EXPECT_EQ(count_c4(petersen()), 0);
  EXPECT_EQ(count_c4(heawood()), 0);
  EXPECT_EQ(count_triangles(complete_graph(5)), 10);
  EXPECT_EQ(clique_number(petersen()), 2);
  EXPECT_EQ(clique_number(complete_graph(7)), 7);
  EXPECT_EQ(as_i64(count_k2s(complete_graph(27), 3)), 807300);
  EXPECT_EQ(as_i64(independent_set_count(petersen(), 2)), 30);
  EXPECT_EQ(as_i64(independent_set_count(petersen(), 4)), 5);
  EXPECT_EQ(as_i64(independent_set_count(cycle(5), 2)), 5);
  EXPECT_EQ(as_i64(pair_degree_moment(petersen(), 2)), 30);
  EXPECT_EQ(as_i64(pair_degree_moment(complete_graph(4), 2)), 24);
  EXPECT_EQ(as_i64(pair_degree_moment(complete_graph(4), 3)), 48);
  EXPECT_EQ(as_i64(pair_binomial_sum(complete_bipartite(3, 3), 2)), 18);
}

TEST(Counting, AgainstOraclesOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 12;
    const double p = 0.1 + 0.8 * ((trial * 7) % 10) / 10.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const auto a = oracle::matrix(g);
    SCOPED_TRACE(encode_graph6(g));
    EXPECT_EQ(count_c4(g), oracle::c4(a));
    EXPECT_EQ(count_c4_by_pairs(g), count_c4_by_paths(g));
    EXPECT_EQ(count_triangles(g), oracle::triangles(a));
    EXPECT_EQ(clique_number(g), oracle::clique_number(a));
    for (int s = 1; s <= 5; ++s) {
      EXPECT_EQ(as_i64(clique_count(g, s)), oracle::cliques(a, s)) << s;
      EXPECT_EQ(as_i64(independent_set_count(g, s)), oracle::independent_sets(a, s)) << s;
    }
    for (int s = 1; s <= 3; ++s)
      EXPECT_EQ(as_i64(independent_pair_degree_sum(g, s)),
                oracle::independent_pair_degree_sum(a, s))
          << s;

    std::int64_t moments[5] = { 0, 0, 0, 0, 0 };
    std::int64_t binoms[4] = { 0, 0, 0, 0 };
    std::int64_t k2s3 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t d = oracle::codegree(a, i, j);
        for (int k = 1; k <= 4; ++k)
          moments[k] += static_cast<std::int64_t>(std::pow(d, k));
        for (int s = 1; s <= 3; ++s)
          binoms[s] += oracle::binom(d, s);
      }
    // K_{2,3} copies by direct vertex-set enumeration.
    oracle::subsets(n, 2, [&](const std::vector<int> &x) {
      oracle::subsets(n, 3, [&](const std::vector<int> &y) {
        for (int v : y)
          if (v == x[0] || v == x[1] || !a[x[0]][v] || !a[x[1]][v])
            return;
        ++k2s3;
      });
    });
    for (int k = 1; k <= 4; ++k)
      EXPECT_EQ(as_i64(pair_degree_moment(g, k)), moments[k]) << k;
    for (int s = 1; s <= 3; ++s)
      EXPECT_EQ(as_i64(pair_binomial_sum(g, s)), binoms[s]) << s;
    EXPECT_EQ(as_i64(count_k2s(g, 3)), k2s3);

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::int64_t e = 0;
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y)
            e += a[i][x] & a[j][x] & a[i][y] & a[j][y] & a[x][y];
        EXPECT_EQ(edges_in_common_neighborhood(g, VertexSet::of(n, { i, j })), e);
      }
  }
}

TEST(Counting, MaximumCliqueIsAClique) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(30, 0.5, rng);
    const auto c = maximum_clique(g);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        EXPECT_TRUE(g.adjacent(c[i], c[j]));
    EXPECT_EQ(as_i64(clique_count(g, static_cast<int>(c.size()) + 1)), 0);
  }
}

TEST(Counting, ArgumentChecks) {
  EXPECT_THROW(count_k2s(petersen(), 2), std::invalid_argument);
  EXPECT_THROW(pair_degree_moment(petersen(), 9), std::invalid_argument);
  EXPECT_THROW(independent_set_count(petersen(), 0), std::invalid_argument);
  EXPECT_THROW(edges_in_common_neighborhood(petersen(), VertexSet::of(10, { 1 })),
               std::invalid_argument);
}

TEST(Counting, BudgetIsEnforced) {
  SearchLimits tiny;
  tiny.node_budget = 5;
  std::mt19937_64 rng(23);
  const Graph g = oracle::random_graph(60, 0.5, rng);
  EXPECT_THROW(clique_count(g, 6, tiny), BudgetExceeded);
}

TEST(Counting, MotzkinStrausBound) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 20, 0.3, rng);
    if (g.edge_count() == 0)
      continue;
    const SpectralSummary s = spectral_radius(g);
    const int w = clique_number(g);
    EXPECT_LE(motzkin_straus_value(g, s.perron), (w - 1.0) / (2.0 * w) + 1e-12);
  }
  std::vector<double> bad(10, 1.0);
  EXPECT_THROW(motzkin_straus_value(petersen(), bad), std::invalid_argument);
}

TEST(Counting, Summary) {
  const int ks[] = { 2 };
  const int ss[] = { 2, 3 };
  const CountSummary s = summarize_counts(petersen(), ks, ss);
  EXPECT_EQ(s.c4, 0);
  EXPECT_EQ(s.k3, 0);
  EXPECT_EQ(s.omega, 2);
  EXPECT_EQ(as_i64(s.pair_moments.at(2)), 30);
  EXPECT_EQ(as_i64(s.is_counts.at(2)), 30);
}

}  // namespace
}  // namespace btr
