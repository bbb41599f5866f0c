//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/graph.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace btr {
namespace {

void check_order(int n, int cap) {
  if (n < 0)
    throw std::invalid_argument("negative vertex count");
  if (n > cap)
    throw std::invalid_argument("order " + std::to_string(n)
                                + " exceeds the cap " + std::to_string(cap));
}

}  // namespace

VertexSet VertexSet::empty(int universe) {
  VertexSet s;
  s.universe_ = universe;
  s.words_.assign(words_for(universe), 0);
  return s;
}

VertexSet VertexSet::all(int universe) {
  VertexSet s = empty(universe);
  for (int i = 0; i < universe; ++i)
    bits::set(s.words_, i);
  s.size_ = universe;
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
  VertexSet s = empty(universe);
  for (int v: members) {
    if (v < 0 || v >= universe)
      throw std::invalid_argument("vertex " + std::to_string(v)
                                  + " outside 0.." + std::to_string(universe));
    bits::set(s.words_, v);
  }
  s.size_ = bits::count(s.words_);
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::from_words(int universe, std::vector<Word> words) {
  if (static_cast<int>(words.size()) != words_for(universe))
    throw std::invalid_argument("word count does not match the universe");
  if (universe % kWordBits != 0 && !words.empty()
      && (words.back() >> (universe % kWordBits)) != 0)
    throw std::invalid_argument("bits set beyond the universe");
  VertexSet s;
  s.universe_ = universe;
  s.words_ = std::move(words);
  s.size_ = bits::count(s.words_);
  return s;
}

bool VertexSet::contains(int v) const {
  return v >= 0 && v < universe_ && bits::test(words_, v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size_);
  bits::for_each(words_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n, std::vector<Word> rows)
    : n_(n), wpr_(words_for(n)), rows_(std::move(rows)) {
  std::int64_t total = 0;
  for (Word w: rows_)
    total += std::popcount(w);
  m_ = total / 2;
}

Graph Graph::empty(int n, int cap) {
  check_order(n, cap);
  return Graph(n, std::vector<Word>(
                      static_cast<std::size_t>(n) * words_for(n), 0));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, int cap) {
  check_order(n, cap);
  const int wpr = words_for(n);
  std::vector<Word> rows(static_cast<std::size_t>(n) * wpr, 0);
  for (const Edge &e: edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: "
                                  + std::to_string(e.u) + " "
                                  + std::to_string(e.v));
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex "
                                  + std::to_string(e.u));
    bits::set({ rows.data() + static_cast<std::size_t>(e.u) * wpr,
                static_cast<std::size_t>(wpr) },
              e.v);
    bits::set({ rows.data() + static_cast<std::size_t>(e.v) * wpr,
                static_cast<std::size_t>(wpr) },
              e.u);
  }
  return Graph(n, std::move(rows));
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges, int cap) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()),
                    cap);
}

Graph Graph::from_rows(int n, std::vector<Word> rows, int cap) {
  check_order(n, cap);
  const int wpr = words_for(n);
  if (rows.size() != static_cast<std::size_t>(n) * wpr)
    throw std::invalid_argument("row storage size mismatch");
  Graph g(n, std::move(rows));
  for (int i = 0; i < n; ++i) {
    if (g.adjacent(i, i))
      throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    if (n % kWordBits != 0 && (g.row(i).back() >> (n % kWordBits)) != 0)
      throw std::invalid_argument("adjacency bits beyond the order");
    bits::for_each(g.row(i), [&](int j) {
      if (!g.adjacent(j, i))
        throw std::invalid_argument("asymmetric adjacency at "
                                    + std::to_string(i) + ","
                                    + std::to_string(j));
    });
  }
  return g;
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > 11)
    throw std::invalid_argument("pair masks support orders 0..11");
  std::vector<Word> rows(n, 0);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[i] |= Word { 1 } << j;
        rows[j] |= Word { 1 } << i;
      }
    }
  }
  return Graph(n, std::move(rows));
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v)
    out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    bits::for_each(row(u), [&](int v) {
      if (v > u)
        out.push_back({ u, v });
    });
  return out;
}

Graph Graph::toggled(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
    throw std::invalid_argument("invalid toggle pair");
  std::vector<Word> rows = rows_;
  const auto flip = [&](int a, int b) {
    rows[static_cast<std::size_t>(a) * wpr_ + b / kWordBits] ^=
        Word { 1 } << (b % kWordBits);
  };
  flip(u, v);
  flip(v, u);
  return Graph(n_, std::move(rows));
}

VertexSet common_neighborhood(const Graph &g, const VertexSet &x) {
  if (x.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph");
  if (x.empty())
    throw std::invalid_argument("common neighborhood of the empty set");
  std::vector<Word> acc;
  bool first = true;
  bits::for_each(x.words(), [&](int v) {
    const auto r = g.row(v);
    if (first) {
      acc.assign(r.begin(), r.end());
      first = false;
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] &= r[i];
    }
  });
  return VertexSet::from_words(g.order(), std::move(acc));
}

Graph induced_subgraph(const Graph &g, const VertexSet &s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph");
  const std::vector<int> keep = s.members();
  const int k = static_cast<int>(keep.size());
  const int wpr = words_for(k);
  std::vector<Word> rows(static_cast<std::size_t>(k) * wpr, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.adjacent(keep[i], keep[j]))
        rows[static_cast<std::size_t>(i) * wpr + j / kWordBits] |=
            Word { 1 } << (j % kWordBits);
  return Graph::from_rows(k, std::move(rows), std::max(k, kDefaultOrderCap));
}

Graph complement(const Graph &g) {
  const int n = g.order();
  const int wpr = g.words_per_row();
  std::vector<Word> rows(static_cast<std::size_t>(n) * wpr, 0);
  for (int i = 0; i < n; ++i) {
    const auto r = g.row(i);
    Word *out = rows.data() + static_cast<std::size_t>(i) * wpr;
    for (int w = 0; w < wpr; ++w)
      out[w] = ~r[w];
    if (n % kWordBits != 0)
      out[wpr - 1] &= (Word { 1 } << (n % kWordBits)) - 1;
    out[i / kWordBits] &= ~(Word { 1 } << (i % kWordBits));
  }
  return Graph::from_rows(n, std::move(rows), std::max(n, kDefaultOrderCap));
}

std::vector<std::vector<int>> connected_components(const Graph &g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0)
      continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      bits::for_each(g.row(v), [&](int w) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace btr
