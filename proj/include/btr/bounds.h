//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_BOUNDS_H_
#define BTR_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "btr/common.h"
#include "btr/counting.h"
#include "btr/graph.h"
#include "btr/ramsey.h"
#include "btr/spectral.h"

namespace btr {

enum class Verdict { kHolds, kFails, kPremiseUnmet, kVacuous };

std::string_view to_string(Verdict v);

// A side of an inequality: exact when combinatorial, real otherwise.
struct Quantity {
  double value = 0.0;
  std::optional<BigCount> exact;

  static Quantity count(BigCount c) { return { to_double(c), c }; }
  static Quantity real(double v) { return { v, std::nullopt }; }
};

struct Witness {
  std::string kind;  // e.g. "induced_K2,2", "H", "clique", "pair"
  std::vector<int> vertices;
};

struct RamseyProvenance {
  std::string role;     // which constant of the formula this value fed
  std::string pattern;  // graph6 of H
  int t = 0;
  RamseyValue value;
};

struct BoundReport {
  std::string which;
  Quantity lhs;
  Quantity rhs;
  // Oriented so that margin >= 0 means the inequality holds.
  double margin = 0.0;
  double tol = 0.0;
  Verdict verdict = Verdict::kHolds;
  std::optional<Witness> witness;
  std::vector<RamseyProvenance> ramsey_provenance;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// 1e-9 * max(1, |lhs|, |rhs|).
double relative_tol(double lhs, double rhs);

struct BoundParams {
  int s = 2;
  int t = 2;
  int r = 2;
  Graph h;                         // forbidden subgraph H
  std::optional<double> k_const;   // overrides the Ramsey-derived K
};

struct BoundContext {
  SpectralOptions spectral;
  SearchLimits limits;
  RamseyOracle ramsey;
};

// Lazily computed per-graph quantities shared by several verifiers. Not
// thread-safe; use one instance per thread.
class GraphFacts {
public:
  GraphFacts(const Graph &g, const SpectralOptions &opts);

  const Graph &graph() const { return g_; }
  const SpectralSummary &spectrum() const;
  double lambda() const { return spectrum().lambda; }
  const std::vector<int> &max_clique() const;
  int omega() const { return static_cast<int>(max_clique().size()); }

private:
  const Graph &g_;
  SpectralOptions opts_;
  mutable std::optional<SpectralSummary> spectrum_;
  mutable std::optional<std::vector<int>> clique_;
};

// Closed-form evaluators --------------------------------------------------

// Spectral bound for K_{s,t}-free graphs, s >= t >= 2.
double nikiforov_kst_bound(int s, int t, double n);

struct Threshold {
  double value = 0.0;
  double k_const = 0.0;
  // Smallest admissible K given the Ramsey upper bounds.
  double k_min = 0.0;
  std::vector<RamseyProvenance> provenance;
};

// K n^{1 - 1/s}, K = R(H,K_t)^{2/s} R(H,K_s) from upper bounds. t >= s >= 3.
Threshold th1_threshold(const BoundParams &p, double n,
                        const RamseyOracle &oracle = {});
// K n^{1/2}, K = R(K_r, K_t). r, t >= 2.
Threshold th0_threshold(const BoundParams &p, double n,
                        const RamseyOracle &oracle = {});
// 1/2 R(H,K_t)^{2/s} R(H,K_s) n^{2 - 1/s}. t >= s >= 2.
Threshold corollary_edge_bound(const BoundParams &p, double n,
                               const RamseyOracle &oracle = {});

// sqrt(2t + 0.375^{1/2}); the lower-order term has no explicit constant.
double th3_leading_coefficient(int t);
double th3_bound(int t, double n);

// Bipartite q-regular K_{2,t}-free graphs with (q^2 - 1)/(t - 1) vertices
// per part have spectral radius sqrt((t - 1) n / 2 + 1) = q.
struct FurediCheck {
  int q = 0;
  int t = 0;
  std::int64_t n = 0;
  std::int64_t half_tn_plus_one = 0;  // (t - 1) n / 2 + 1, exact
  bool identity_holds = false;        // equals q^2
  double spectral_radius = 0.0;
  double th3_leading_term = 0.0;      // th3_bound(t, n)
  bool within_factor_two = false;     // radius <= 2 * leading term
  double th3_leading_term_t2 = 0.0;   // th3_bound(2, n)
  bool within_factor_two_t2 = false;
};

// Throws std::invalid_argument unless t >= 2 and (t - 1) | (q^2 - 1).
FurediCheck furedi_tightness(int q, int t);

// Verifiers over concrete graphs ------------------------------------------

enum class Lemma1Variant { kVertex, kNonadjacentPair };

std::string_view to_string(Lemma1Variant v);

// Asserts lambda^2 <= (R + 1) n + 2 (sum_{ij in E} d(i,j)^2)^{1/2}
// ((w - 1) / (2w))^{1/2}; the form without the factor 2 is reported in
// details but not asserted.
BoundReport lemma1_rhs(const GraphFacts &f, const Graph &h, int t,
                       Lemma1Variant variant, const BoundContext &ctx);
BoundReport lemma1_rhs(const Graph &g, const Graph &h, int t,
                       Lemma1Variant variant, const BoundContext &ctx = {});

BoundReport verify_proposition1(const GraphFacts &f);
BoundReport verify_proposition1(const Graph &g, const BoundContext &ctx = {});

BoundReport verify_proposition2(const GraphFacts &f, int k);
BoundReport verify_proposition2(const Graph &g, int k,
                                const BoundContext &ctx = {});

BoundReport verify_proposition3(const GraphFacts &f, int s, double k_const);
BoundReport verify_proposition3(const Graph &g, int s, double k_const,
                                const BoundContext &ctx = {});

BoundReport verify_proposition4(const GraphFacts &f, const Graph &h, int s,
                                const BoundContext &ctx);
BoundReport verify_proposition4(const Graph &g, const Graph &h, int s,
                                const BoundContext &ctx = {});

enum class Theorem { kTh0, kTh1 };

BoundReport theorem_verdict(const GraphFacts &f, const BoundParams &p,
                            Theorem which, const BoundContext &ctx);
BoundReport theorem_verdict(const Graph &g, const BoundParams &p,
                            Theorem which, const BoundContext &ctx = {});

BoundReport verify_c5_pair_count(const GraphFacts &f, const BoundContext &ctx);
BoundReport verify_c5_pair_count(const Graph &g, const BoundContext &ctx = {});

// e(G) against the edge bound, for H-free graphs without induced K_{s,t}.
BoundReport verify_corollary(const GraphFacts &f, const BoundParams &p,
                             const BoundContext &ctx);

// lambda against nikiforov_kst_bound for K_{s,t}-free graphs (s >= t).
BoundReport verify_nikiforov(const GraphFacts &f, int s, int t,
                             const BoundContext &ctx);

}  // namespace btr

#endif  // BTR_BOUNDS_H_
