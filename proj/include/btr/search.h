//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_SEARCH_H_
#define BTR_SEARCH_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "btr/bounds.h"
#include "btr/checks.h"
#include "btr/graph.h"
#include "btr/pattern.h"

namespace btr {

struct KstConstraint {
  int s = 2;
  int t = 2;
  friend bool operator==(const KstConstraint &, const KstConstraint &) = default;
};

// A graph satisfies the set when none of the patterns occurs.
struct ConstraintSet {
  std::vector<Graph> subgraphs;
  std::vector<Graph> induced;
  std::vector<KstConstraint> induced_kst;

  bool empty() const { return subgraphs.empty() && induced.empty() && induced_kst.empty(); }
  // Full (non-incremental) check.
  bool satisfied_by(const Graph &g, const SearchLimits &limits = {}) const;
};

struct Schedule {
  double t0 = 0.5;
  double cooling = 0.999;        // per accepted move
  int tabu = 50;                 // capped at half the number of pairs
  int plateau = 2000;            // consecutive rejections before a reset
  int dense_refresh = 1000;      // accepted moves between exact solves
  double power_tol = 1e-8;
};

struct SearchConfig {
  int n = 2;
  ConstraintSet constraints;
  std::int64_t budget = 100000;  // proposed moves per restart
  int restarts = 1;
  std::uint64_t seed = 0;
  Schedule schedule;
  SearchLimits limits;
  int jobs = 1;
  std::int64_t log_every = 0;
};

struct TracePoint {
  std::int64_t step = 0;
  double lambda = 0.0;
};

struct SearchRecord {
  Graph best;
  double best_lambda = 0.0;
  // Improvements of the best-ever graph in the winning restart.
  std::vector<TracePoint> trace;
  std::uint64_t seed = 0;
  std::int64_t moves_used = 0;   // summed over restarts
  int best_restart = 0;
  int resets = 0;                // plateau resets, summed over restarts
  SearchConfig config;

  bool improved() const { return !trace.empty(); }
};

// (restart, step, best lambda so far); may be called from worker threads.
using SearchProgress = std::function<void(int, std::int64_t, double)>;

// Throws std::invalid_argument on n < 2 or budget <= 0, and Error when the
// edgeless start violates the constraints.
SearchRecord local_search(const SearchConfig &cfg, const SearchProgress &progress = {});
SearchRecord local_search(int n, const ConstraintSet &c, std::int64_t budget,
                          std::uint64_t seed, int restarts);

enum class ScanObjective { kMaxLambda, kVerify };

struct ScanViolation {
  std::string graph6;
  BoundReport report;
};

struct ScanOrderResult {
  int n = 0;
  std::int64_t scanned = 0;
  std::int64_t feasible = 0;
  // kMaxLambda: first extremal graph in mask order.
  std::optional<Graph> best;
  double best_lambda = 0.0;
  // kVerify: check name -> verdict -> count.
  std::map<std::string, std::map<std::string, std::int64_t>> histogram;
  std::vector<ScanViolation> violations;
  std::int64_t errors = 0;
  std::vector<std::string> error_samples;
  // Graphs with at least one failing report; graphs with an error and no
  // failure.
  std::int64_t failed_graphs = 0;
  std::int64_t errored_graphs = 0;
};

struct ScanConfig {
  int n_min = 1;
  int n_max = 1;
  ConstraintSet constraints;
  ScanObjective objective = ScanObjective::kMaxLambda;
  std::vector<std::string> checks;
  CheckConfig check_config;
  BoundContext ctx;
  int jobs = 1;
};

inline constexpr int kScanMaxOrder = 7;

// Iterates every labeled graph of each order in [n_min, n_max]. Throws
// std::invalid_argument when n_max > 7.
std::vector<ScanOrderResult> exhaustive_scan(const ScanConfig &cfg);
std::vector<ScanOrderResult> exhaustive_scan(int n_max, const ConstraintSet &c,
                                             ScanObjective objective);

}  // namespace btr

#endif  // BTR_SEARCH_H_
