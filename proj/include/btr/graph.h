//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_GRAPH_H_
#define BTR_GRAPH_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btr/common.h"

namespace btr {

inline constexpr int kDefaultOrderCap = 4096;

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr int words_for(int bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Raw bit-row helpers shared by the counting code.
namespace bits {

inline bool test(std::span<const Word> row, int i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> row, int i) {
  row[i / kWordBits] |= Word { 1 } << (i % kWordBits);
}

inline void reset(std::span<Word> row, int i) {
  row[i / kWordBits] &= ~(Word { 1 } << (i % kWordBits));
}

inline int count(std::span<const Word> row) {
  int c = 0;
  for (Word w: row)
    c += std::popcount(w);
  return c;
}

inline int count_and(std::span<const Word> a, std::span<const Word> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += std::popcount(a[i] & b[i]);
  return c;
}

inline bool any(std::span<const Word> row) {
  for (Word w: row)
    if (w != 0)
      return true;
  return false;
}

template <class F>
void for_each(std::span<const Word> row, F &&f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    Word w = row[i];
    while (w != 0) {
      const int b = std::countr_zero(w);
      f(static_cast<int>(i) * kWordBits + b);
      w &= w - 1;
    }
  }
}

// Smallest set bit, or -1.
inline int first(std::span<const Word> row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0)
      return static_cast<int>(i) * kWordBits + std::countr_zero(row[i]);
  return -1;
}

}  // namespace bits

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge &, const Edge &) = default;
};

// Immutable subset of {0, ..., universe - 1}.
class VertexSet {
public:
  VertexSet() = default;

  static VertexSet empty(int universe);
  static VertexSet all(int universe);
  static VertexSet of(int universe, std::span<const int> members);
  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet from_words(int universe, std::vector<Word> words);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(int v) const;
  std::span<const Word> words() const { return words_; }
  std::vector<int> members() const;

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  int universe_ = 0;
  int size_ = 0;
  std::vector<Word> words_;
};

// Immutable simple undirected graph on vertices 0..n-1, stored as symmetric
// bitset rows with a zero diagonal.
class Graph {
public:
  Graph() = default;

  static Graph empty(int n, int cap = kDefaultOrderCap);
  // Duplicate edges are collapsed. Throws std::invalid_argument on an
  // out-of-range endpoint, a self-loop or n over the cap.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          int cap = kDefaultOrderCap);
  static Graph from_edges(int n, std::initializer_list<Edge> edges,
                          int cap = kDefaultOrderCap);
  // Rows must already be symmetric with a zero diagonal (validated).
  static Graph from_rows(int n, std::vector<Word> rows,
                         int cap = kDefaultOrderCap);
  // Upper-triangle bitmask in lexicographic pair order (0,1),(0,2),...,
  // (0,n-1),(1,2),... ; n <= 11.
  static Graph from_pair_mask(int n, std::uint64_t mask);

  int order() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int words_per_row() const { return wpr_; }

  std::span<const Word> row(int v) const {
    return { rows_.data() + static_cast<std::size_t>(v) * wpr_,
             static_cast<std::size_t>(wpr_) };
  }
  bool adjacent(int u, int v) const { return bits::test(row(u), v); }
  int degree(int v) const { return bits::count(row(v)); }
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<Edge> edges() const;

  // Single-edge toggle; the only mutation-like operation, used by search.
  Graph toggled(int u, int v) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  Graph(int n, std::vector<Word> rows);

  int n_ = 0;
  int wpr_ = 0;
  std::int64_t m_ = 0;
  std::vector<Word> rows_;
};

// Γ(X): vertices adjacent to every member of x. Throws std::invalid_argument
// for an empty x or a universe mismatch.
VertexSet common_neighborhood(const Graph &g, const VertexSet &x);

// G[S]; vertex i of the result is the i-th smallest member of s.
Graph induced_subgraph(const Graph &g, const VertexSet &s);

Graph complement(const Graph &g);

// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph &g);

// graph6 (optional ">>graph6<<" header). Throws ParseError with the byte
// offset of the problem.
Graph parse_graph6(std::string_view text, int cap = kDefaultOrderCap);
std::string encode_graph6(const Graph &g);

}  // namespace btr

#endif  // BTR_GRAPH_H_
