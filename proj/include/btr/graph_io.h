//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_GRAPH_IO_H_
#define BTR_GRAPH_IO_H_

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "btr/graph.h"

namespace btr {

struct GraphRecord {
  Graph graph;
  std::size_t line;  // 1-based line of the record in its source
};

enum class GraphFormat { kGraph6, kEdgeList };

// Edge-list text: first line "n m", then m lines "u v". Blank lines and
// lines starting with '#' are ignored.
Graph parse_edge_list(std::istream &in, int cap = kDefaultOrderCap);
std::string format_edge_list(const Graph &g);

// A first significant line of two integers selects the edge-list format;
// otherwise every non-blank line is one graph6 record.
GraphFormat detect_format(const std::string &text);

// Throws ParseError carrying the offending line number.
std::vector<GraphRecord> read_graphs(std::istream &in,
                                     int cap = kDefaultOrderCap);

}  // namespace btr

#endif  // BTR_GRAPH_IO_H_
