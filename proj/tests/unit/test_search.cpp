//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>

#include <gtest/gtest.h>

#include "btr/bounds.h"
#include "btr/construct.h"
#include "btr/counting.h"
#include "btr/report_json.h"
#include "btr/search.h"
#include "btr/spectral.h"

namespace btr {
namespace {

ConstraintSet triangle_free() {
  ConstraintSet c;
  c.subgraphs.push_back(complete_graph(3));
  return c;
}

ConstraintSet c4_free() {
  ConstraintSet c;
  c.subgraphs.push_back(cycle(4));
  return c;
}

ConstraintSet triangle_and_induced_k22_free() {
  ConstraintSet c = triangle_free();
  c.induced_kst.push_back({ 2, 2 });
  return c;
}

TEST(Construct, ProjectivePlaneIncidence) {
  for (int q : { 2, 3, 5 }) {
    const Graph g = pp_incidence(q);
    const int pts = q * q + q + 1;
    EXPECT_EQ(g.order(), 2 * pts);
    EXPECT_EQ(g.edge_count(), static_cast<std::int64_t>(pts) * (q + 1));
    EXPECT_EQ(count_c4(g), 0);
    const double lambda = spectral_radius(g).lambda;
    EXPECT_NEAR(lambda, q + 1, 1e-8);
    EXPECT_LE(lambda, nikiforov_kst_bound(2, 2, g.order()));
  }
  EXPECT_THROW(pp_incidence(4), std::invalid_argument);
  EXPECT_EQ(heawood(), pp_incidence(2));
}

TEST(Construct, NamedGraphs) {
  EXPECT_EQ(named_graph("Petersen")->edge_count(), 15);
  EXPECT_EQ(named_graph("k88")->edge_count(), 64);
  EXPECT_EQ(named_graph("K33")->edge_count(), 9);
  EXPECT_EQ(named_graph("K3,4")->edge_count(), 12);
  EXPECT_EQ(named_graph("c5")->edge_count(), 5);
  EXPECT_EQ(named_graph("P4")->edge_count(), 3);
  EXPECT_EQ(named_graph("E3")->edge_count(), 0);
  EXPECT_FALSE(named_graph("nonsense").has_value());
  EXPECT_EQ(kneser(5, 2).edge_count(), 15);
  EXPECT_EQ(count_triangles(petersen()), 0);
  EXPECT_EQ(count_c4(petersen()), 0);
}

TEST(Constraints, SatisfiedBy) {
  EXPECT_TRUE(triangle_free().satisfied_by(complete_bipartite(3, 3)));
  EXPECT_FALSE(triangle_free().satisfied_by(complete_graph(3)));
  EXPECT_FALSE(triangle_and_induced_k22_free().satisfied_by(cycle(4)));
  EXPECT_TRUE(triangle_and_induced_k22_free().satisfied_by(cycle(5)));
  EXPECT_TRUE(ConstraintSet {}.satisfied_by(complete_graph(5)));
}

TEST(Scan, KnownOptima) {
  const auto k3 = exhaustive_scan(5, triangle_free(), ScanObjective::kMaxLambda);
  ASSERT_EQ(k3.size(), 5u);
  EXPECT_NEAR(k3[4].best_lambda, std::sqrt(6.0), 1e-9);
  EXPECT_EQ(k3[4].scanned, 1024);
  const auto free4 = exhaustive_scan(4, {}, ScanObjective::kMaxLambda);
  EXPECT_NEAR(free4[3].best_lambda, 3.0, 1e-9);
  EXPECT_EQ(free4[3].feasible, 64);
  // Frozen from an independent enumeration over unlabeled graphs.
  const auto c4 = exhaustive_scan(6, c4_free(), ScanObjective::kMaxLambda);
  EXPECT_NEAR(c4[4].best_lambda, 2.5615528128, 1e-9);
  EXPECT_NEAR(c4[5].best_lambda, 2.7092753594, 1e-9);
  const auto mixed = exhaustive_scan(6, triangle_and_induced_k22_free(), ScanObjective::kMaxLambda);
  EXPECT_NEAR(mixed[4].best_lambda, 2.0, 1e-9);
  EXPECT_NEAR(mixed[5].best_lambda, std::sqrt(5.0), 1e-9);
  EXPECT_THROW(exhaustive_scan(8, {}, ScanObjective::kMaxLambda), std::invalid_argument);
}

TEST(Search, UnconstrainedReachesCompleteGraph) {
  const SearchRecord r = local_search(8, {}, 20000, 1, 2);
  EXPECT_NEAR(r.best_lambda, 7.0, 1e-8);
  EXPECT_EQ(r.best, complete_graph(8));
  EXPECT_TRUE(r.improved());
}

TEST(Search, RespectsConstraints) {
  const SearchRecord r = local_search(9, triangle_and_induced_k22_free(), 20000, 3, 3);
  EXPECT_TRUE(triangle_and_induced_k22_free().satisfied_by(r.best));
  EXPECT_NEAR(r.best_lambda, spectral_radius(r.best).lambda, 1e-8);
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    EXPECT_GT(r.trace[i].lambda, r.trace[i - 1].lambda);
}

TEST(Search, DeterministicForSeedAndJobs) {
  SearchConfig cfg;
  cfg.n = 8;
  cfg.constraints = triangle_and_induced_k22_free();
  cfg.budget = 5000;
  cfg.restarts = 4;
  cfg.seed = 42;
  const std::string a = to_json(local_search(cfg)).dump();
  const std::string b = to_json(local_search(cfg)).dump();
  EXPECT_EQ(a, b);
  cfg.jobs = 4;
  EXPECT_EQ(to_json(local_search(cfg)).dump(), a);
  cfg.seed = 43;
  EXPECT_EQ(local_search(cfg).seed, 43u);
}

TEST(Search, MatchesExhaustiveOptimaOnSmallOrders) {
  for (const ConstraintSet &c : { triangle_free(), c4_free(), triangle_and_induced_k22_free() }) {
    const auto scan = exhaustive_scan(6, c, ScanObjective::kMaxLambda);
    for (int n = 2; n <= 6; ++n) {
      const SearchRecord r = local_search(n, c, 20000, 7, 4);
      EXPECT_NEAR(r.best_lambda, scan[n - 1].best_lambda, 1e-8) << n;
    }
  }
}

TEST(Search, RejectsBadConfigs) {
  EXPECT_THROW(local_search(1, {}, 10, 0, 1), std::invalid_argument);
  EXPECT_THROW(local_search(5, {}, 0, 0, 1), std::invalid_argument);
  ConstraintSet bad;
  bad.subgraphs.push_back(Graph::empty(2));
  EXPECT_THROW(local_search(5, bad, 10, 0, 1), Error);
}

TEST(SearchConfigJson, RoundTrip) {
  SearchConfig cfg;
  cfg.n = 7;
  cfg.constraints = triangle_and_induced_k22_free();
  cfg.constraints.induced.push_back(path(3));
  cfg.budget = 123;
  cfg.restarts = 3;
  cfg.seed = 9;
  const SearchConfig back = search_config_from_json(to_json(cfg));
  EXPECT_EQ(to_json(back).dump(), to_json(cfg).dump());
  Json j = to_json(cfg);
  j["bogus"] = 1;
  EXPECT_THROW(search_config_from_json(j), std::exception);
}

}  // namespace
}  // namespace btr
