//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_COUNTING_H_
#define BTR_COUNTING_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "btr/common.h"
#include "btr/graph.h"

namespace btr {

// Enumeration limit shared by every exponential search in the library.
// Exceeding it raises BudgetExceeded; nothing ever degrades into a silent
// "not found".
struct SearchLimits {
  std::int64_t node_budget = 10'000'000;
};

// Number of 4-cycles. Computed from pair codegrees (sum of binom(d(X), 2),
// halved) and, when the wedge count is below kC4CrossCheckWedges, again by
// explicit 2-path counting; a disagreement throws InternalError.
std::int64_t count_c4(const Graph &g);
std::int64_t count_c4_by_pairs(const Graph &g);
std::int64_t count_c4_by_paths(const Graph &g);
inline constexpr std::int64_t kC4CrossCheckWedges = std::int64_t { 4 } << 30;

std::int64_t count_triangles(const Graph &g);

// A maximum clique (ascending), by branch and bound with a greedy-coloring
// bound.
std::vector<int> maximum_clique(const Graph &g);
int clique_number(const Graph &g);

// Number of s-cliques, via pivot-based clique-tree enumeration.
BigCount clique_count(const Graph &g, int s, const SearchLimits &limits = {});

// i_s(G) = number of s-cliques of the complement.
BigCount independent_set_count(const Graph &g, int s,
                               const SearchLimits &limits = {});

// Sum over unordered pairs X of d(X)^k, 1 <= k <= 8.
BigCount pair_degree_moment(const Graph &g, int k);

// Sum over unordered pairs X of binom(d(X), s).
BigCount pair_binomial_sum(const Graph &g, int s);

// Copies of K_{2,s}: sum over pairs of binom(d(X), s); s >= 3 only, since
// for s = 2 each K_{2,2} is counted from both of its sides.
BigCount count_k2s(const Graph &g, int s);

// Sum over independent s-sets I of binom(d(I), 2).
BigCount independent_pair_degree_sum(const Graph &g, int s,
                                     const SearchLimits &limits = {});

// e(G[Γ(X)]) for a 2-set X.
std::int64_t edges_in_common_neighborhood(const Graph &g, const VertexSet &x);

// Sum over edges ij of x_i^2 x_j^2 for a nonnegative unit vector x.
double motzkin_straus_value(const Graph &g, std::span<const double> x,
                            double tol = 1e-9);

struct CountSummary {
  std::int64_t c4 = 0;
  std::int64_t k3 = 0;
  int omega = 0;
  std::map<int, BigCount> pair_moments;
  std::map<int, BigCount> is_counts;
};

CountSummary summarize_counts(const Graph &g, std::span<const int> moment_ks,
                              std::span<const int> is_sizes,
                              const SearchLimits &limits = {});

}  // namespace btr

#endif  // BTR_COUNTING_H_
