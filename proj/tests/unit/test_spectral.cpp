//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "btr/construct.h"
#include "btr/dense_eigen.h"
#include "btr/spectral.h"
#include "oracles.h"

namespace btr {
namespace {

SpectralOptions power_opts() {
  SpectralOptions o;
  o.mode = SpectralMode::kPowerIteration;
  return o;
}

TEST(Spectral, KnownRadii) {
  EXPECT_NEAR(spectral_radius(petersen()).lambda, 3.0, 1e-10);
  EXPECT_NEAR(spectral_radius(cycle(5)).lambda, 2.0, 1e-10);
  EXPECT_NEAR(spectral_radius(complete_bipartite(8, 8)).lambda, 8.0, 1e-10);
  EXPECT_NEAR(spectral_radius(heawood()).lambda, 3.0, 1e-10);
  EXPECT_NEAR(spectral_radius(complete_bipartite(2, 3)).lambda, std::sqrt(6.0), 1e-10);
  EXPECT_DOUBLE_EQ(spectral_radius(Graph::empty(4)).lambda, 0.0);
  EXPECT_THROW(spectral_radius(Graph::empty(0)), std::invalid_argument);
}

TEST(Spectral, PowerMatchesDenseOnBipartite) {
  // Bipartite graphs have -lambda in the spectrum; the shift handles it.
  for (const Graph &g : { complete_bipartite(8, 8), heawood(), path(7), star(5) })
    EXPECT_NEAR(spectral_radius(g, power_opts()).lambda, spectral_radius(g).lambda, 1e-8);
}

TEST(Spectral, DenseSolverAgainstEigen) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 30;
    const Graph g = oracle::random_graph(n, 0.1 + 0.02 * trial, rng);
    const auto ref = oracle::spectrum(g);
    const SpectralSummary full = full_spectrum(g);
    ASSERT_TRUE(full.eigenvalues.has_value());
    ASSERT_EQ(full.eigenvalues->size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      EXPECT_NEAR((*full.eigenvalues)[i], ref[i], 1e-9);
    EXPECT_NEAR(full.lambda, ref.front(), 1e-9);
  }
}

TEST(Spectral, PerronVectorProperties) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(5 + trial, 0.15, rng);
    for (const SpectralOptions &o : { SpectralOptions {}, power_opts() }) {
      const SpectralSummary s = spectral_radius(g, o);
      double norm = 0.0;
      for (double x : s.perron) {
        EXPECT_GE(x, 0.0);
        norm += x * x;
      }
      EXPECT_NEAR(norm, 1.0, 1e-9);
      EXPECT_LT(eigen_residual(g, s.perron, s.lambda), 1e-6);
      EXPECT_NEAR(s.lambda, oracle::lambda(g), 1e-8);
    }
  }
}

TEST(Spectral, WarmStartAgrees) {
  std::mt19937_64 rng(13);
  Graph g = oracle::random_graph(20, 0.2, rng);
  SpectralSummary s = spectral_radius(g);
  for (int step = 0; step < 50; ++step) {
    const int u = static_cast<int>(rng() % 20);
    const int v = static_cast<int>((u + 1 + rng() % 19) % 20);
    g = g.toggled(u, v);
    s = spectral_radius_from(g, s.perron, power_opts());
    EXPECT_NEAR(s.lambda, oracle::lambda(g), 1e-8);
  }
}

TEST(Spectral, DisconnectedPicksLargestComponent) {
  // K4 on 0..3 plus C5 on 4..8.
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      edges.push_back({ i, j });
  for (int i = 0; i < 5; ++i)
    edges.push_back({ 4 + i, 4 + (i + 1) % 5 });
  const Graph g = Graph::from_edges(9, edges);
  for (const SpectralOptions &o : { SpectralOptions {}, power_opts() }) {
    const SpectralSummary s = spectral_radius(g, o);
    EXPECT_NEAR(s.lambda, 3.0, 1e-9);
    for (int v = 4; v < 9; ++v)
      EXPECT_EQ(s.perron[v], 0.0);
  }
}

TEST(Spectral, DenseCap) {
  SpectralOptions o;
  o.dense_cap = 8;
  EXPECT_THROW(spectral_radius(complete_graph(9), o), std::invalid_argument);
  EXPECT_NO_THROW(spectral_radius(complete_graph(9), power_opts()));
}

TEST(Spectral, ClosedWalksMatchTraceAndSpectrum) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(3 + trial, 0.3, rng);
    const auto a = oracle::matrix(g);
    std::int64_t trace = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::int64_t c = oracle::codegree(a, i, j);
        trace += c * c;
      }
    EXPECT_EQ(closed_walks_4(g), trace);
    double sum = 0.0;
    for (double l : oracle::spectrum(g))
      sum += l * l * l * l;
    EXPECT_NEAR(static_cast<double>(trace), sum, 1e-8 * std::max(1.0, sum));
  }
}

TEST(Spectral, HofmeisterMarginNonnegative) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 25, 0.05 * (1 + trial % 19), rng);
    EXPECT_GE(hofmeister_margin(g), -1e-9);
  }
  EXPECT_NEAR(hofmeister_margin(petersen()), 0.0, 1e-9);  // regular: equality
}

TEST(DenseEigen, DiagonalAndSmall) {
  const std::vector<double> m = { 2, 1, 1, 2 };
  const SymmetricEigen e = symmetric_eigen(m, 2);
  EXPECT_NEAR(e.values[0], 1.0, 1e-12);
  EXPECT_NEAR(e.values[1], 3.0, 1e-12);
  EXPECT_NEAR(std::abs(e.vector_entry(0, 1)), std::sqrt(0.5), 1e-12);
  EXPECT_THROW(symmetric_eigen(m, 3), std::invalid_argument);
}

TEST(Spectral, BackendNames) {
  EXPECT_EQ(to_string(SpectralMode::kDenseFull), "dense_full");
  EXPECT_EQ(to_string(SpectralMode::kPowerIteration), "power_iteration");
}

}  // namespace
}  // namespace btr
