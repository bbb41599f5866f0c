//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_CHECKS_H_
#define BTR_CHECKS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btr/bounds.h"

namespace btr {

// Parameters shared by the named checks.
struct CheckConfig {
  Graph h = Graph::from_edges(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } });
  int s = 2;
  int t = 2;
  int r = 2;
  std::vector<int> k = { 2 };
  double prop3_k = 2.0;
  std::optional<double> theorem_k;
  Lemma1Variant variant = Lemma1Variant::kVertex;
};

// Every registered check, in reporting order.
const std::vector<std::string> &check_names();

// Splits a comma list; "all" expands to every check. Throws
// std::invalid_argument on an unknown name.
std::vector<std::string> parse_check_list(std::string_view csv);

// Runs one named check. Most checks yield one report; prop2 yields one per
// k and turan-step one per r in {2, 3, 4}. Throws BudgetExceeded when a
// pattern search runs out of nodes.
std::vector<BoundReport> run_check(std::string_view name, const GraphFacts &f,
                                   const CheckConfig &cfg, const BoundContext &ctx);

// Identity reports; margin is -|lhs - rhs|.
BoundReport check_identity_c4(const Graph &g);
BoundReport check_identity_in(const Graph &g);
BoundReport check_identity_in3(const Graph &g);
BoundReport check_identity_cw4(const GraphFacts &f);

BoundReport check_hofmeister(const GraphFacts &f);
BoundReport check_motzkin(const GraphFacts &f);
BoundReport check_turan_step(const GraphFacts &f, int r);
BoundReport check_kst_consistency(const Graph &g, const SearchLimits &limits = {});

}  // namespace btr

#endif  // BTR_CHECKS_H_
