//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_RAMSEY_H_
#define BTR_RAMSEY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "btr/graph.h"

namespace btr {

enum class RamseySource { kTable, kClosedForm, kBruteForce, kUserBound };

std::string_view to_string(RamseySource source);

// R(H, K_t) as an exact value or a certified interval [lower, upper].
struct RamseyValue {
  std::int64_t lower = 1;
  std::int64_t upper = 1;
  bool exact = true;
  RamseySource source = RamseySource::kClosedForm;
  std::string formula;  // closed-form id or bound rule
  std::string note;     // citation for table entries

  friend bool operator==(const RamseyValue &, const RamseyValue &) = default;
};

struct RamseyTableEntry {
  int p;
  int t;
  std::int64_t value;
  std::string note;
};

// Curated exact values of R(K_p, K_t), read from lines "Kp t value note".
class RamseyTable {
public:
  // Throws ParseError with the line number of a malformed entry.
  static RamseyTable parse(std::string_view text);
  static const RamseyTable &builtin();
  static std::string_view builtin_text();

  // Symmetric in (p, t).
  const RamseyTableEntry *find(int p, int t) const;
  const std::vector<RamseyTableEntry> &entries() const { return entries_; }

private:
  std::vector<RamseyTableEntry> entries_;
};

// Lexicographically least graph6 over all relabelings for orders <= 8;
// the identity labeling above that.
std::string canonical_graph6(const Graph &h);

class RamseyOracle {
public:
  RamseyOracle();
  explicit RamseyOracle(RamseyTable table);

  // Caller-asserted R(H, K_t) <= upper; reported as source=user_bound.
  void add_user_bound(const Graph &h, int t, std::int64_t upper);
  bool has_user_bounds() const { return !user_.empty(); }

  // Exact for: t = 1; edgeless H; t = 2 with H having an edge; H = K_p with
  // (p, t) tabulated or p = 2; H = P3 (2t - 1). Otherwise an interval with
  // lower max(v(H), t) and upper R(K_{v(H)}, K_t) from the table or the
  // bound binom(v + t - 2, v - 1).
  RamseyValue lookup(const Graph &h, int t) const;

  const RamseyTable &table() const { return table_; }

private:
  RamseyTable table_;
  std::map<std::pair<std::string, int>, std::int64_t> user_;
};

RamseyValue ramsey_lookup(const Graph &h, int t);

inline constexpr int kRamseyBruteForceMaxOrder = 7;

// Smallest n <= n_max such that every labeled graph on n vertices contains
// h or an independent t-set. If none, the interval [n_max + 1, upper] with
// the oracle's upper bound. Threads split the labeled-graph space per order.
RamseyValue ramsey_brute_force(const Graph &h, int t, int n_max,
                               const RamseyOracle &oracle = {}, int jobs = 0);

}  // namespace btr

#endif  // BTR_RAMSEY_H_
