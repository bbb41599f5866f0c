//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_PATTERN_H_
#define BTR_PATTERN_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "btr/counting.h"
#include "btr/graph.h"

namespace btr {

enum class PatternMode { kSubgraph, kInduced };

std::string_view to_string(PatternMode mode);

// witness[i] is the host vertex playing pattern vertex i.
using VertexMap = std::vector<int>;

struct CompleteBipartiteSides {
  std::vector<int> left;
  std::vector<int> right;
};

// The pattern H (subgraph mode) or a pattern whose induced copies are
// forbidden. Complete bipartite patterns are recognized at construction and
// searched with the specialized K_{s,t} routine.
class PatternQuery {
public:
  PatternQuery(Graph pattern, PatternMode mode);
  static PatternQuery complete_bipartite(int s, int t, PatternMode mode);

  const Graph &pattern() const { return pattern_; }
  PatternMode mode() const { return mode_; }
  const std::optional<CompleteBipartiteSides> &kst() const { return kst_; }

private:
  Graph pattern_;
  PatternMode mode_;
  std::optional<CompleteBipartiteSides> kst_;
};

struct PatternResult {
  std::optional<VertexMap> witness;
  bool pattern_larger_than_host = false;
  std::int64_t nodes = 0;

  bool found() const { return witness.has_value(); }
};

// Bipartition of a complete bipartite graph K_{a,b} (a, b >= 1), or nullopt.
std::optional<CompleteBipartiteSides> complete_bipartite_sides(const Graph &h);

PatternResult find_pattern(const Graph &g, const PatternQuery &q,
                           const SearchLimits &limits = {});

// Backtracking with degree and neighbor-degree pruning and smallest-domain
// variable ordering.
PatternResult find_pattern_generic(const Graph &g, const Graph &pattern,
                                   PatternMode mode,
                                   const SearchLimits &limits = {});

// Enumerates candidate s-sets (the smaller side) with their running common
// neighborhood and looks for the other side inside it. The witness follows
// the labeling of complete_bipartite_graph(s, t): left side first.
PatternResult find_kst(const Graph &g, int s, int t, PatternMode mode,
                       const SearchLimits &limits = {});

// Only embeddings whose image contains both u and v. After toggling the
// pair {u, v} in a pattern-free graph, any new copy must be of this kind.
PatternResult find_pattern_touching(const Graph &g, const PatternQuery &q,
                                    int u, int v,
                                    const SearchLimits &limits = {});

bool is_embedding(const Graph &g, const Graph &pattern, PatternMode mode,
                  const VertexMap &map);

}  // namespace btr

#endif  // BTR_PATTERN_H_
