//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_CONSTRUCT_H_
#define BTR_CONSTRUCT_H_

#include <optional>
#include <string_view>

#include "btr/graph.h"

namespace btr {

// Each builder verifies its output (order, size, regularity where it
// applies) and throws InternalError if a post-check fails.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph kneser(int m, int k);
Graph petersen();

// Point-line incidence graph of PG(2, q) over the prime field: 2(q^2+q+1)
// vertices, (q + 1)-regular, girth 6. Points come first, then lines.
// Throws std::invalid_argument unless q is a prime with q^2 + q + 1 <= 2048.
Graph pp_incidence(int q);

Graph heawood();

// petersen, heawood, c5, k4, k33, k88, and the families K<n>, K<a>,<b>,
// C<n>, P<n>, E<n> (edgeless). Case-insensitive. nullopt when unknown.
std::optional<Graph> named_graph(std::string_view name);

}  // namespace btr

#endif  // BTR_CONSTRUCT_H_
