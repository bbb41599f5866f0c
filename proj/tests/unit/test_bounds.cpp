//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "btr/bounds.h"
#include "btr/checks.h"
#include "btr/construct.h"
#include "oracles.h"

namespace btr {
namespace {

BoundParams params(const Graph &h, int s, int t, int r = 2) {
  BoundParams p;
  p.h = h;
  p.s = s;
  p.t = t;
  p.r = r;
  return p;
}

TEST(Tolerance, Relative) {
  EXPECT_DOUBLE_EQ(relative_tol(0.0, 0.5), 1e-9);
  EXPECT_DOUBLE_EQ(relative_tol(-300.0, 20.0), 3e-7);
}

TEST(Nikiforov, PlugIn) {
  EXPECT_NEAR(nikiforov_kst_bound(2, 2, 26), 0.5 + std::sqrt(25.25), 1e-12);
  EXPECT_NEAR(nikiforov_kst_bound(2, 2, 26), 5.5249, 1e-4);
  EXPECT_NEAR(nikiforov_kst_bound(3, 3, 100),
              std::pow(100.0, 2.0 / 3) + 2 * std::cbrt(100.0) + 1, 1e-9);
  EXPECT_NEAR(nikiforov_kst_bound(3, 3, 100), 31.827, 1e-3);
  EXPECT_DOUBLE_EQ(nikiforov_kst_bound(2, 2, 1), 1.0);
  EXPECT_DOUBLE_EQ(nikiforov_kst_bound(5, 2, 1), 1.0);
  EXPECT_THROW(nikiforov_kst_bound(2, 3, 10), std::invalid_argument);
}

TEST(Thresholds, Theorem1) {
  const Threshold k3 = th1_threshold(params(complete_graph(3), 3, 3), 1000);
  EXPECT_NEAR(k3.value, std::pow(6.0, 5.0 / 3) * 100, 1e-9);
  EXPECT_NEAR(k3.value, 1981.2, 0.05);
  ASSERT_EQ(k3.provenance.size(), 2u);
  EXPECT_EQ(k3.provenance[0].value.upper, 6);

  const double n = 343;
  EXPECT_NEAR(th1_threshold(params(path(3), 3, 3), n).value,
              std::pow(5.0, 2.0 / 3) * 5 * std::pow(n, 2.0 / 3), 1e-9);
  EXPECT_NEAR(th1_threshold(params(complete_graph(2), 3, 3), n).value,
              std::pow(3.0, 2.0 / 3) * 3 * std::pow(n, 2.0 / 3), 1e-9);
  EXPECT_THROW(th1_threshold(params(complete_graph(3), 2, 2), n), std::invalid_argument);
  EXPECT_THROW(th1_threshold(params(complete_graph(3), 4, 3), n), std::invalid_argument);
}

TEST(Thresholds, OverrideKeepsMinimum) {
  BoundParams p = params(complete_graph(3), 3, 3);
  p.k_const = 1.0;
  const Threshold th = th1_threshold(p, 1000);
  EXPECT_DOUBLE_EQ(th.k_const, 1.0);
  EXPECT_NEAR(th.k_min, std::pow(6.0, 5.0 / 3), 1e-9);
  EXPECT_DOUBLE_EQ(th.value, 100.0);
}

TEST(Thresholds, Theorem2) {
  EXPECT_DOUBLE_EQ(th0_threshold(params(Graph::empty(1), 2, 2, 2), 16).value, 8.0);
  EXPECT_DOUBLE_EQ(th0_threshold(params(Graph::empty(1), 2, 3, 3), 100).value, 60.0);
  EXPECT_DOUBLE_EQ(th0_threshold(params(Graph::empty(1), 2, 5, 2), 4).value, 10.0);
  EXPECT_THROW(th0_threshold(params(Graph::empty(1), 2, 1, 2), 4), std::invalid_argument);
}

TEST(Thresholds, Theorem3LeadingTerm) {
  EXPECT_NEAR(th3_leading_coefficient(2), std::sqrt(4 + std::sqrt(0.375)), 1e-15);
  EXPECT_NEAR(th3_bound(2, 1e4), 214.76, 5e-3);
  EXPECT_NEAR(th3_bound(3, 1e4), 257.15, 5e-3);
}

TEST(Thresholds, CorollaryEdgeBound) {
  const double n = 100;
  EXPECT_NEAR(corollary_edge_bound(params(complete_graph(3), 2, 2), n).value,
              4.5 * std::pow(n, 1.5), 1e-6);
  EXPECT_NEAR(corollary_edge_bound(params(complete_graph(2), 2, 2), n).value,
              2 * std::pow(n, 1.5), 1e-6);
  // Second evaluation path through logarithms.
  const double logged = std::exp(std::log(0.5) + (2.0 / 3) * std::log(6.0) + std::log(6.0)
                                 + (5.0 / 3) * std::log(1000.0));
  const double direct = corollary_edge_bound(params(complete_graph(3), 3, 3), 1000).value;
  EXPECT_NEAR(direct / logged, 1.0, 1e-12);
  EXPECT_NEAR(direct, 9.906e5, 1e2);
}

TEST(Furedi, IdentityAndFactorTwo) {
  for (auto [q, t] : { std::pair { 4, 2 }, { 5, 3 }, { 7, 4 } }) {
    const FurediCheck c = furedi_tightness(q, t);
    EXPECT_EQ(c.n, 2 * (q * q - 1) / (t - 1));
    EXPECT_EQ(c.half_tn_plus_one, q * q);
    EXPECT_TRUE(c.identity_holds);
    EXPECT_DOUBLE_EQ(c.spectral_radius, q);
    EXPECT_TRUE(c.within_factor_two_t2);
    EXPECT_TRUE(c.within_factor_two);
    EXPECT_NEAR(c.th3_leading_term_t2, th3_bound(2, static_cast<double>(c.n)), 1e-12);
  }
  EXPECT_THROW(furedi_tightness(4, 3), std::invalid_argument);
  EXPECT_THROW(furedi_tightness(4, 1), std::invalid_argument);
}

TEST(Lemma1, KnownGraphs) {
  const BoundReport p = lemma1_rhs(petersen(), complete_graph(3), 2, Lemma1Variant::kVertex);
  EXPECT_EQ(p.verdict, Verdict::kHolds);
  EXPECT_NEAR(p.lhs.value, 9.0, 1e-8);
  EXPECT_NEAR(p.rhs.value, 30.0, 1e-12);
  EXPECT_NEAR(p.margin, 21.0, 1e-8);

  const BoundReport h = lemma1_rhs(heawood(), complete_graph(3), 2, Lemma1Variant::kVertex);
  EXPECT_EQ(h.verdict, Verdict::kHolds);
  EXPECT_NEAR(h.rhs.value, 42.0, 1e-12);

  const BoundReport e = lemma1_rhs(Graph::empty(7), complete_graph(3), 2, Lemma1Variant::kVertex);
  EXPECT_EQ(e.verdict, Verdict::kHolds);
  EXPECT_DOUBLE_EQ(e.lhs.value, 0.0);
}

TEST(Lemma1, PremiseAndVariants) {
  // K4 contains K3.
  EXPECT_EQ(lemma1_rhs(complete_graph(4), complete_graph(3), 2, Lemma1Variant::kVertex).verdict,
            Verdict::kPremiseUnmet);
  // C4 is an induced K2,2.
  EXPECT_EQ(lemma1_rhs(cycle(4), complete_graph(3), 2, Lemma1Variant::kVertex).verdict,
            Verdict::kPremiseUnmet);
  EXPECT_THROW(lemma1_rhs(petersen(), complete_graph(3), 2, Lemma1Variant::kNonadjacentPair),
               std::invalid_argument);
  // Petersen has girth 5.
  EXPECT_EQ(lemma1_rhs(petersen(), cycle(5), 2, Lemma1Variant::kNonadjacentPair).verdict,
            Verdict::kPremiseUnmet);
  const BoundReport pair = lemma1_rhs(petersen(), cycle(4), 2, Lemma1Variant::kNonadjacentPair);
  EXPECT_EQ(pair.verdict, Verdict::kHolds);
  EXPECT_NEAR(pair.rhs.value, 30.0, 1e-12);
}

TEST(Proposition1, KnownGraphs) {
  const BoundReport p = verify_proposition1(petersen());
  EXPECT_EQ(p.lhs.exact.value(), 30u);
  EXPECT_NEAR(p.rhs.value, -4.5, 1e-7);
  EXPECT_EQ(p.verdict, Verdict::kHolds);
  const BoundReport c = verify_proposition1(cycle(5));
  EXPECT_EQ(c.lhs.exact.value(), 5u);
  EXPECT_NEAR(c.rhs.value, -2.0, 1e-7);
  const BoundReport k = verify_proposition1(complete_graph(4));
  EXPECT_EQ(k.lhs.exact.value(), 24u);
  EXPECT_NEAR(k.rhs.value, 22.5, 1e-7);
  EXPECT_EQ(k.verdict, Verdict::kHolds);
}

TEST(Proposition1, HoldsOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 20, 0.05 + 0.3 * (trial % 4), rng);
    const BoundReport r = verify_proposition1(g);
    EXPECT_EQ(r.verdict, Verdict::kHolds);
    const oracle::Matrix a = oracle::matrix(g);
    std::int64_t moment = 0;
    for (int i = 0; i < g.order(); ++i)
      for (int j = i + 1; j < g.order(); ++j)
        moment += oracle::codegree(a, i, j) * oracle::codegree(a, i, j);
    EXPECT_EQ(r.lhs.exact.value(), static_cast<BigCount>(moment));
    const double l = oracle::lambda(g);
    EXPECT_NEAR(r.rhs.value, 0.5 * (l * l * l * l - g.order() * l * l),
                1e-7 * std::max(1.0, std::abs(r.rhs.value)));
  }
}

TEST(Proposition2, KnownGraphs) {
  const BoundReport k2 = verify_proposition2(complete_graph(4), 2);
  EXPECT_EQ(k2.lhs.exact.value(), 24u);
  EXPECT_NEAR(k2.rhs.value, 22.5, 1e-7);
  EXPECT_EQ(k2.verdict, Verdict::kHolds);
  const BoundReport k3 = verify_proposition2(complete_graph(4), 3);
  EXPECT_EQ(k3.lhs.exact.value(), 48u);
  EXPECT_NEAR(k3.rhs.value, 27.0 * std::pow(5.0, 1.5) / 8, 1e-7);
  EXPECT_NEAR(k3.rhs.value, 37.73, 5e-3);
  EXPECT_EQ(verify_proposition2(cycle(5), 2).verdict, Verdict::kPremiseUnmet);
  EXPECT_THROW(verify_proposition2(cycle(5), 1), std::invalid_argument);
}

TEST(Proposition3, CompleteGraphs) {
  const BoundReport k27 = verify_proposition3(complete_graph(27), 3, 2.0);
  EXPECT_EQ(k27.verdict, Verdict::kHolds);
  EXPECT_EQ(k27.lhs.exact.value(), 807300u);
  EXPECT_NEAR(k27.rhs.value, 23400.0, 1e-6);
  EXPECT_EQ(verify_proposition3(complete_graph(64), 3, 2.0).verdict, Verdict::kHolds);
  EXPECT_EQ(verify_proposition3(cycle(5), 3, 2.0).verdict, Verdict::kPremiseUnmet);
  EXPECT_THROW(verify_proposition3(cycle(5), 2, 2.0), std::invalid_argument);
  EXPECT_THROW(verify_proposition3(cycle(5), 3, 1.5), std::invalid_argument);
}

TEST(Proposition4, KnownGraphs) {
  // R(K3, K2) = 3: binom(10,2) / binom(3,2) - 1.
  const BoundReport p = verify_proposition4(petersen(), complete_graph(3), 2);
  EXPECT_EQ(p.lhs.exact.value(), 30u);
  EXPECT_NEAR(p.rhs.value, 14.0, 1e-12);
  EXPECT_EQ(p.verdict, Verdict::kHolds);
  const BoundReport c = verify_proposition4(cycle(5), complete_graph(3), 2);
  EXPECT_EQ(c.lhs.exact.value(), 5u);
  EXPECT_NEAR(c.rhs.value, 10.0 / 3 - 1, 1e-12);
  // With s = 3, R(K3, K3) = 6: binom(10,3) / binom(6,3) - 1.
  EXPECT_NEAR(verify_proposition4(petersen(), complete_graph(3), 3).rhs.value, 5.0, 1e-12);
  EXPECT_EQ(c.verdict, Verdict::kHolds);
  EXPECT_EQ(verify_proposition4(complete_graph(4), complete_graph(3), 2).verdict,
            Verdict::kPremiseUnmet);
  const BoundReport small = verify_proposition4(path(3), complete_graph(3), 3);
  EXPECT_EQ(small.verdict, Verdict::kHolds);
  EXPECT_TRUE(small.details["trivial_regime"].get<bool>());
}

TEST(Theorems, CompleteBipartiteWitness) {
  const Graph g = complete_bipartite(8, 8);
  const BoundReport r = theorem_verdict(g, params(Graph::empty(1), 2, 2, 2), Theorem::kTh0);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_NEAR(r.lhs.value, 8.0, 1e-8);
  EXPECT_NEAR(r.rhs.value, 8.0, 1e-12);
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_EQ(r.witness->vertices.size(), 4u);
  const auto &w = r.witness->vertices;
  EXPECT_FALSE(g.adjacent(w[0], w[1]));
  EXPECT_FALSE(g.adjacent(w[2], w[3]));
  for (int i : { w[0], w[1] })
    for (int j : { w[2], w[3] })
      EXPECT_TRUE(g.adjacent(i, j));
}

TEST(Theorems, VacuousAndPremise) {
  EXPECT_EQ(theorem_verdict(petersen(), params(Graph::empty(1), 2, 2, 2), Theorem::kTh0).verdict,
            Verdict::kVacuous);
  const BoundReport th1 =
      theorem_verdict(complete_graph(5), params(complete_graph(3), 3, 3), Theorem::kTh1);
  EXPECT_EQ(th1.verdict, Verdict::kPremiseUnmet);
  ASSERT_TRUE(th1.witness.has_value());
  EXPECT_EQ(th1.witness->vertices.size(), 3u);
  EXPECT_EQ(theorem_verdict(complete_graph(4), params(Graph::empty(1), 2, 2, 2), Theorem::kTh0)
                .verdict,
            Verdict::kPremiseUnmet);
}

TEST(Theorems, IntermediateChainsHoldOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 9, 0.2 + 0.2 * (trial % 3), rng);
    const BoundReport r = theorem_verdict(g, params(Graph::empty(1), 2, 2, 2), Theorem::kTh0);
    EXPECT_NE(r.verdict, Verdict::kFails);
    if (r.details.contains("chain_holds")) {
      EXPECT_TRUE(r.details["chain_holds"].get<bool>()) << encode_graph6(g);
    }
  }
}

TEST(C5PairCount, KnownGraphs) {
  const BoundReport k4 = verify_c5_pair_count(complete_graph(4));
  EXPECT_EQ(k4.lhs.exact.value(), 6u);
  EXPECT_EQ(k4.rhs.exact.value(), 6u);
  EXPECT_EQ(k4.verdict, Verdict::kHolds);
  EXPECT_DOUBLE_EQ(k4.margin, 0.0);
  const BoundReport k33 = verify_c5_pair_count(complete_bipartite(3, 3));
  EXPECT_EQ(k33.lhs.exact.value(), 0u);
  EXPECT_EQ(k33.rhs.exact.value(), 15u);
  EXPECT_EQ(verify_c5_pair_count(cycle(5)).verdict, Verdict::kPremiseUnmet);
}

TEST(Checks, NamesAndParsing) {
  EXPECT_EQ(parse_check_list("all"), check_names());
  EXPECT_EQ(parse_check_list("prop1,lemma1"), (std::vector<std::string> { "prop1", "lemma1" }));
  EXPECT_THROW(parse_check_list("prop1,nope"), std::invalid_argument);
}

TEST(Checks, AllChecksOnSmallGraphsNeverFail) {
  CheckConfig cfg;
  cfg.k = { 2, 3, 4 };
  const BoundContext ctx;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 9, 0.5, rng);
    const GraphFacts f(g, ctx.spectral);
    for (const std::string &name : check_names())
      for (const BoundReport &r : run_check(name, f, cfg, ctx))
        EXPECT_NE(r.verdict, Verdict::kFails) << name << " " << encode_graph6(g);
  }
}

TEST(Checks, ExactIdentitiesHaveZeroMargin) {
  const Graph g = petersen();
  for (const BoundReport &r : { check_identity_c4(g), check_identity_in(g), check_identity_in3(g) }) {
    EXPECT_EQ(r.verdict, Verdict::kHolds) << r.which;
    EXPECT_EQ(r.margin, 0.0) << r.which;
    EXPECT_FALSE(std::signbit(r.margin)) << r.which;
  }
}

TEST(Checks, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::kHolds), "holds");
  EXPECT_EQ(to_string(Verdict::kFails), "fails");
  EXPECT_EQ(to_string(Verdict::kPremiseUnmet), "premise_unmet");
  EXPECT_EQ(to_string(Verdict::kVacuous), "vacuous");
}

}  // namespace
}  // namespace btr
