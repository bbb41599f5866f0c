//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/pattern.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace btr {
namespace {

using Row = std::vector<Word>;

std::vector<std::vector<int>> sorted_neighbor_degrees(const Graph &g) {
  const std::vector<int> deg = g.degrees();
  std::vector<std::vector<int>> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    bits::for_each(g.row(v), [&](int w) { out[v].push_back(deg[w]); });
    std::sort(out[v].begin(), out[v].end(), std::greater<>());
  }
  return out;
}

class Matcher {
public:
  Matcher(const Graph &host, const Graph &pattern, PatternMode mode,
          std::int64_t budget)
      : host_(host), pattern_(pattern), mode_(mode), budget_(budget),
        p_(pattern.order()), wpr_(host.words_per_row()),
        map_(p_, -1), used_(wpr_, 0) {
    init_domains();
  }

  bool run(const std::vector<std::pair<int, int>> &anchors) {
    for (const auto &[a, v]: anchors) {
      if (!bits::test(domains_[a], v) || bits::test(used_, v))
        return false;
      for (int b = 0; b < p_; ++b) {
        if (map_[b] < 0)
          continue;
        const bool pe = pattern_.adjacent(a, b);
        const bool he = host_.adjacent(v, map_[b]);
        if ((pe && !he) || (mode_ == PatternMode::kInduced && pe != he))
          return false;
      }
      map_[a] = v;
      bits::set(used_, v);
    }
    return recurse(static_cast<int>(anchors.size()));
  }

  // Clears the partial map; domains and the node count are kept.
  void reset() {
    std::fill(map_.begin(), map_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
  }

  const VertexMap &witness() const { return map_; }
  std::int64_t nodes() const { return nodes_; }

private:
  void init_domains() {
    const int n = host_.order();
    const std::vector<int> hdeg = host_.degrees();
    const std::vector<int> pdeg = pattern_.degrees();
    const auto hnd = sorted_neighbor_degrees(host_);
    const auto pnd = sorted_neighbor_degrees(pattern_);
    domains_.assign(p_, Row(wpr_, 0));
    for (int a = 0; a < p_; ++a) {
      for (int v = 0; v < n; ++v) {
        if (hdeg[v] < pdeg[a])
          continue;
        if (mode_ == PatternMode::kInduced
            && (n - 1 - hdeg[v]) < (p_ - 1 - pdeg[a]))
          continue;
        bool ok = true;
        for (std::size_t i = 0; i < pnd[a].size(); ++i)
          if (hnd[v][i] < pnd[a][i]) {
            ok = false;
            break;
          }
        if (ok)
          bits::set(domains_[a], v);
      }
    }
  }

  Row candidates(int a) const {
    Row cand = domains_[a];
    for (int i = 0; i < wpr_; ++i)
      cand[i] &= ~used_[i];
    for (int b = 0; b < p_; ++b) {
      if (map_[b] < 0)
        continue;
      const auto nb = host_.row(map_[b]);
      if (pattern_.adjacent(a, b)) {
        for (int i = 0; i < wpr_; ++i)
          cand[i] &= nb[i];
      } else if (mode_ == PatternMode::kInduced) {
        for (int i = 0; i < wpr_; ++i)
          cand[i] &= ~nb[i];
      }
    }
    return cand;
  }

  bool recurse(int assigned) {
    if (assigned == p_)
      return true;
    if (++nodes_ > budget_)
      throw BudgetExceeded("pattern search exceeded its node budget",
                           budget_);

    int best = -1;
    int best_size = std::numeric_limits<int>::max();
    Row best_cand;
    for (int a = 0; a < p_; ++a) {
      if (map_[a] >= 0)
        continue;
      Row cand = candidates(a);
      const int size = bits::count(cand);
      if (size == 0)
        return false;
      if (size < best_size) {
        best = a;
        best_size = size;
        best_cand = std::move(cand);
      }
    }

    bool found = false;
    std::vector<int> order;
    order.reserve(best_size);
    bits::for_each(best_cand, [&](int v) { order.push_back(v); });
    for (int v: order) {
      map_[best] = v;
      bits::set(used_, v);
      found = recurse(assigned + 1);
      if (found)
        return true;
      bits::reset(used_, v);
      map_[best] = -1;
    }
    return false;
  }

  const Graph &host_;
  const Graph &pattern_;
  PatternMode mode_;
  std::int64_t budget_;
  int p_;
  int wpr_;
  std::int64_t nodes_ = 0;
  VertexMap map_;
  Row used_;
  std::vector<Row> domains_;
};

Graph complete_bipartite_pattern(int s, int t) {
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j)
      edges.push_back({ i, s + j });
  return Graph::from_edges(s + t, edges);
}

class KstSearch {
public:
  KstSearch(const Graph &g, int small, int large, PatternMode mode,
            std::int64_t budget)
      : g_(g), a_(small), b_(large), mode_(mode), budget_(budget) { }

  bool run() {
    Row cand(g_.words_per_row(), 0);
    for (int v = 0; v < g_.order(); ++v)
      bits::set(cand, v);
    return choose_side(std::move(cand), Row());
  }

  const std::vector<int> &small_side() const { return s_; }
  const std::vector<int> &large_side() const { return t_; }
  std::int64_t nodes() const { return nodes_; }

private:
  void tick() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("K_{s,t} search exceeded its node budget",
                           budget_);
  }

  bool choose_side(Row cand, const Row &common) {
    tick();
    const int depth = static_cast<int>(s_.size());
    if (depth == a_)
      return complete(common);
    while (bits::any(cand)) {
      if (depth + bits::count(cand) < a_)
        return false;
      const int v = bits::first(cand);
      bits::reset(cand, v);
      const auto nv = g_.row(v);
      Row next_common(nv.begin(), nv.end());
      if (depth > 0)
        for (std::size_t i = 0; i < next_common.size(); ++i)
          next_common[i] &= common[i];
      if (bits::count(next_common) < b_)
        continue;
      Row next = cand;
      if (mode_ == PatternMode::kInduced)
        for (std::size_t i = 0; i < next.size(); ++i)
          next[i] &= ~nv[i];
      s_.push_back(v);
      if (choose_side(std::move(next), next_common))
        return true;
      s_.pop_back();
    }
    return false;
  }

  bool complete(const Row &common) {
    if (bits::count(common) < b_)
      return false;
    if (mode_ == PatternMode::kSubgraph) {
      bits::for_each(common, [&](int v) {
        if (static_cast<int>(t_.size()) < b_)
          t_.push_back(v);
      });
      return true;
    }
    return independent_in(common);
  }

  // Independent b-set inside `cand`, extending t_.
  bool independent_in(Row cand) {
    tick();
    if (static_cast<int>(t_.size()) == b_)
      return true;
    while (bits::any(cand)) {
      if (static_cast<int>(t_.size()) + bits::count(cand) < b_)
        return false;
      const int v = bits::first(cand);
      bits::reset(cand, v);
      Row next = cand;
      const auto nv = g_.row(v);
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] &= ~nv[i];
      t_.push_back(v);
      if (independent_in(std::move(next)))
        return true;
      t_.pop_back();
    }
    return false;
  }

  const Graph &g_;
  int a_;
  int b_;
  PatternMode mode_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<int> s_;
  std::vector<int> t_;
};

}  // namespace

std::string_view to_string(PatternMode mode) {
  return mode == PatternMode::kSubgraph ? "subgraph" : "induced";
}

std::optional<CompleteBipartiteSides> complete_bipartite_sides(const Graph &h) {
  const int p = h.order();
  if (p < 2)
    return std::nullopt;
  std::vector<int> color(p, -1);
  color[0] = 0;
  std::vector<int> stack = { 0 };
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    bool clash = false;
    bits::for_each(h.row(v), [&](int w) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        clash = true;
      }
    });
    if (clash)
      return std::nullopt;
  }
  CompleteBipartiteSides sides;
  for (int v = 0; v < p; ++v) {
    if (color[v] < 0)
      return std::nullopt;
    (color[v] == 0 ? sides.left : sides.right).push_back(v);
  }
  if (static_cast<std::int64_t>(sides.left.size() * sides.right.size())
      != h.edge_count())
    return std::nullopt;
  return sides;
}

PatternQuery::PatternQuery(Graph pattern, PatternMode mode)
    : pattern_(std::move(pattern)), mode_(mode),
      kst_(complete_bipartite_sides(pattern_)) { }

PatternQuery PatternQuery::complete_bipartite(int s, int t, PatternMode mode) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("K_{s,t} needs s, t >= 1");
  PatternQuery q(complete_bipartite_pattern(s, t), mode);
  CompleteBipartiteSides sides;
  for (int i = 0; i < s; ++i)
    sides.left.push_back(i);
  for (int j = 0; j < t; ++j)
    sides.right.push_back(s + j);
  q.kst_ = std::move(sides);
  return q;
}

PatternResult find_pattern_generic(const Graph &g, const Graph &pattern,
                                   PatternMode mode,
                                   const SearchLimits &limits) {
  PatternResult out;
  if (pattern.order() > g.order()) {
    out.pattern_larger_than_host = true;
    return out;
  }
  if (pattern.order() == 0) {
    out.witness = VertexMap();
    return out;
  }
  Matcher m(g, pattern, mode, limits.node_budget);
  const bool found = m.run({});
  out.nodes = m.nodes();
  if (found)
    out.witness = m.witness();
  return out;
}

PatternResult find_kst(const Graph &g, int s, int t, PatternMode mode,
                       const SearchLimits &limits) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("K_{s,t} needs s, t >= 1");
  PatternResult out;
  if (s + t > g.order()) {
    out.pattern_larger_than_host = true;
    return out;
  }
  KstSearch search(g, std::min(s, t), std::max(s, t), mode,
                   limits.node_budget);
  const bool found = search.run();
  out.nodes = search.nodes();
  if (!found)
    return out;
  const auto &left = s <= t ? search.small_side() : search.large_side();
  const auto &right = s <= t ? search.large_side() : search.small_side();
  VertexMap map;
  map.insert(map.end(), left.begin(), left.end());
  map.insert(map.end(), right.begin(), right.end());
  out.witness = std::move(map);
  return out;
}

PatternResult find_pattern(const Graph &g, const PatternQuery &q,
                           const SearchLimits &limits) {
  if (!q.kst())
    return find_pattern_generic(g, q.pattern(), q.mode(), limits);

  const auto &sides = *q.kst();
  const int s = static_cast<int>(sides.left.size());
  const int t = static_cast<int>(sides.right.size());
  PatternResult r = find_kst(g, s, t, q.mode(), limits);
  if (r.witness) {
    VertexMap map(q.pattern().order(), -1);
    for (int i = 0; i < s; ++i)
      map[sides.left[i]] = (*r.witness)[i];
    for (int j = 0; j < t; ++j)
      map[sides.right[j]] = (*r.witness)[s + j];
    r.witness = std::move(map);
  }
  return r;
}

PatternResult find_pattern_touching(const Graph &g, const PatternQuery &q,
                                    int u, int v, const SearchLimits &limits) {
  PatternResult out;
  const Graph &pattern = q.pattern();
  const int p = pattern.order();
  if (p > g.order()) {
    out.pattern_larger_than_host = true;
    return out;
  }
  if (p < 2)
    return out;
  const bool host_edge = g.adjacent(u, v);
  Matcher m(g, pattern, q.mode(), limits.node_budget);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (a == b)
        continue;
      const bool pe = pattern.adjacent(a, b);
      if ((pe && !host_edge) || (q.mode() == PatternMode::kInduced && pe != host_edge))
        continue;
      m.reset();
      const bool found = m.run({ { a, u }, { b, v } });
      out.nodes = m.nodes();
      if (found) {
        out.witness = m.witness();
        return out;
      }
    }
  }
  return out;
}

bool is_embedding(const Graph &g, const Graph &pattern, PatternMode mode,
                  const VertexMap &map) {
  const int p = pattern.order();
  if (static_cast<int>(map.size()) != p)
    return false;
  std::vector<char> seen(g.order(), 0);
  for (int v: map) {
    if (v < 0 || v >= g.order() || seen[v])
      return false;
    seen[v] = 1;
  }
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) {
      const bool pe = pattern.adjacent(a, b);
      const bool he = g.adjacent(map[a], map[b]);
      if (pe && !he)
        return false;
      if (mode == PatternMode::kInduced && !pe && he)
        return false;
    }
  return true;
}

}  // namespace btr
