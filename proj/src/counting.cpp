//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/counting.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace btr {
namespace {

using Row = std::vector<Word>;

Row and_rows(std::span<const Word> a, std::span<const Word> b) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] & b[i];
  return out;
}

class MaxCliqueSearch {
public:
  explicit MaxCliqueSearch(const Graph &g): g_(g) { }

  std::vector<int> run() {
    if (g_.order() == 0)
      return {};
    Row p(g_.words_per_row(), 0);
    for (int v = 0; v < g_.order(); ++v)
      bits::set(p, v);
    expand(p);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  void color_sort(const Row &p, std::vector<int> &order,
                  std::vector<int> &bound) const {
    Row uncolored = p;
    int color = 0;
    while (bits::any(uncolored)) {
      ++color;
      Row q = uncolored;
      while (bits::any(q)) {
        const int v = bits::first(q);
        bits::reset(q, v);
        bits::reset(uncolored, v);
        const auto nv = g_.row(v);
        for (std::size_t i = 0; i < q.size(); ++i)
          q[i] &= ~nv[i];
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(Row p) {
    std::vector<int> order, bound;
    color_sort(p, order, bound);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (current_.size() + bound[idx] <= best_.size())
        return;
      const int v = order[idx];
      current_.push_back(v);
      Row next = and_rows(p, g_.row(v));
      if (bits::any(next))
        expand(std::move(next));
      else if (current_.size() > best_.size())
        best_ = current_;
      current_.pop_back();
      bits::reset(p, v);
    }
  }

  const Graph &g_;
  std::vector<int> current_;
  std::vector<int> best_;
};

// Counts s-cliques over a succinct clique tree: each leaf with `held`
// mandatory and `pivots` optional vertices contributes
// binom(pivots, s - held) cliques of size s.
class PivotCliqueCounter {
public:
  PivotCliqueCounter(const Graph &g, int s, const SearchLimits &limits)
      : g_(g), s_(s), budget_(limits.node_budget) { }

  BigCount run() {
    Row c(g_.words_per_row(), 0);
    for (int v = 0; v < g_.order(); ++v)
      bits::set(c, v);
    recurse(c, 0, 0);
    return total_;
  }

private:
  void recurse(const Row &c, int held, int pivots) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("clique counting exceeded its node budget",
                           budget_);
    if (held > s_)
      return;
    const int csize = bits::count(c);
    if (held + pivots + csize < s_)
      return;
    if (csize == 0) {
      total_ = checked_add(total_, binomial(pivots, s_ - held));
      return;
    }

    int pivot = -1;
    int pivot_deg = -1;
    bits::for_each(c, [&](int u) {
      const int d = bits::count_and(c, g_.row(u));
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = u;
      }
    });

    recurse(and_rows(c, g_.row(pivot)), held, pivots + 1);

    Row rest(c.size());
    const auto np = g_.row(pivot);
    for (std::size_t i = 0; i < c.size(); ++i)
      rest[i] = c[i] & ~np[i];
    bits::reset(rest, pivot);
    Row remaining = c;
    bits::reset(remaining, pivot);
    bits::for_each(rest, [&](int v) {
      recurse(and_rows(remaining, g_.row(v)), held + 1, pivots);
      bits::reset(remaining, v);
    });
  }

  const Graph &g_;
  int s_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  BigCount total_ = 0;
};

class IndependentSetWalker {
public:
  IndependentSetWalker(const Graph &g, int s, const SearchLimits &limits)
      : g_(g), s_(s), budget_(limits.node_budget) { }

  BigCount run() {
    Row cand(g_.words_per_row(), 0);
    for (int v = 0; v < g_.order(); ++v)
      bits::set(cand, v);
    recurse(cand, Row(), 0);
    return total_;
  }

private:
  void recurse(Row cand, const Row &common, int depth) {
    if (++nodes_ > budget_)
      throw BudgetExceeded(
          "independent set enumeration exceeded its node budget", budget_);
    if (depth == s_) {
      total_ = checked_add(total_, binomial(bits::count(common), 2));
      return;
    }
    if (depth + bits::count(cand) < s_)
      return;
    while (bits::any(cand)) {
      const int v = bits::first(cand);
      bits::reset(cand, v);
      const auto nv = g_.row(v);
      Row next(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i)
        next[i] = cand[i] & ~nv[i];
      Row next_common =
          depth == 0 ? Row(nv.begin(), nv.end()) : and_rows(common, nv);
      recurse(std::move(next), next_common, depth + 1);
      if (depth + 1 + bits::count(cand) < s_)
        break;
    }
  }

  const Graph &g_;
  int s_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  BigCount total_ = 0;
};

}  // namespace

std::int64_t count_c4_by_pairs(const Graph &g) {
  const int n = g.order();
  BigCount twice = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      twice += binomial(bits::count_and(g.row(i), g.row(j)), 2);
  return static_cast<std::int64_t>(twice / 2);
}

std::int64_t count_c4_by_paths(const Graph &g) {
  // For each start a, count 2-paths a-b-c with c > a; a pair {a, c} joined
  // by p such paths closes binom(p, 2) 4-cycles through it as a diagonal.
  const int n = g.order();
  std::vector<std::int64_t> paths(n, 0);
  std::vector<int> touched;
  BigCount twice = 0;
  for (int a = 0; a < n; ++a) {
    touched.clear();
    bits::for_each(g.row(a), [&](int b) {
      bits::for_each(g.row(b), [&](int c) {
        if (c > a) {
          if (paths[c] == 0)
            touched.push_back(c);
          ++paths[c];
        }
      });
    });
    for (int c: touched) {
      twice += static_cast<BigCount>(paths[c]) * (paths[c] - 1) / 2;
      paths[c] = 0;
    }
  }
  return static_cast<std::int64_t>(twice / 2);
}

std::int64_t count_c4(const Graph &g) {
  const std::int64_t by_pairs = count_c4_by_pairs(g);
  std::int64_t wedges = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    wedges += d * d;
  }
  if (wedges <= kC4CrossCheckWedges) {
    const std::int64_t by_paths = count_c4_by_paths(g);
    if (by_paths != by_pairs)
      throw InternalError("C4 count mismatch: pair aggregation "
                          + std::to_string(by_pairs) + ", path counting "
                          + std::to_string(by_paths));
  }
  return by_pairs;
}

std::int64_t count_triangles(const Graph &g) {
  const int n = g.order();
  std::int64_t total = 0;
  for (int u = 0; u < n; ++u) {
    const auto a = g.row(u);
    bits::for_each(a, [&](int v) {
      if (v <= u)
        return;
      const auto b = g.row(v);
      const std::size_t w0 = static_cast<std::size_t>(v / kWordBits);
      const int shift = v % kWordBits;
      // Count common neighbors w > v so each triangle is seen once.
      Word first = a[w0] & b[w0];
      first = shift == kWordBits - 1 ? 0 : first >> (shift + 1);
      total += std::popcount(first);
      for (std::size_t i = w0 + 1; i < a.size(); ++i)
        total += std::popcount(a[i] & b[i]);
    });
  }
  return total;
}

std::vector<int> maximum_clique(const Graph &g) {
  return MaxCliqueSearch(g).run();
}

int clique_number(const Graph &g) {
  return static_cast<int>(maximum_clique(g).size());
}

BigCount clique_count(const Graph &g, int s, const SearchLimits &limits) {
  if (s < 0)
    throw std::invalid_argument("clique size must be nonnegative");
  if (s == 0)
    return 1;
  return PivotCliqueCounter(g, s, limits).run();
}

BigCount independent_set_count(const Graph &g, int s,
                               const SearchLimits &limits) {
  if (s < 1)
    throw std::invalid_argument("independent set size must be >= 1");
  if (s == 1)
    return static_cast<BigCount>(g.order());
  return clique_count(complement(g), s, limits);
}

BigCount pair_degree_moment(const Graph &g, int k) {
  if (k < 1 || k > 8)
    throw std::invalid_argument("pair degree moment exponent must be 1..8");
  const int n = g.order();
  BigCount total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      total = checked_add(
          total, checked_pow(bits::count_and(g.row(i), g.row(j)), k));
  return total;
}

BigCount pair_binomial_sum(const Graph &g, int s) {
  const int n = g.order();
  BigCount total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      total = checked_add(total,
                          binomial(bits::count_and(g.row(i), g.row(j)), s));
  return total;
}

BigCount count_k2s(const Graph &g, int s) {
  if (s < 3)
    throw std::invalid_argument(
        "K_{2,s} counting via pair codegrees needs s >= 3");
  return pair_binomial_sum(g, s);
}

BigCount independent_pair_degree_sum(const Graph &g, int s,
                                     const SearchLimits &limits) {
  if (s < 1)
    throw std::invalid_argument("independent set size must be >= 1");
  return IndependentSetWalker(g, s, limits).run();
}

std::int64_t edges_in_common_neighborhood(const Graph &g, const VertexSet &x) {
  if (x.size() != 2)
    throw std::invalid_argument("expected a vertex pair");
  const VertexSet gamma = common_neighborhood(g, x);
  std::int64_t twice = 0;
  bits::for_each(gamma.words(),
                 [&](int v) { twice += bits::count_and(g.row(v), gamma.words()); });
  return twice / 2;
}

double motzkin_straus_value(const Graph &g, std::span<const double> x,
                            double tol) {
  if (static_cast<int>(x.size()) != g.order())
    throw std::invalid_argument("vector length does not match the order");
  double norm = 0.0;
  for (double e: x) {
    if (e < -tol)
      throw std::invalid_argument("Motzkin-Straus needs a nonnegative vector");
    norm += e * e;
  }
  if (std::abs(norm - 1.0) > tol)
    throw std::invalid_argument("Motzkin-Straus needs a unit vector");
  double total = 0.0;
  for (const Edge &e: g.edges())
    total += x[e.u] * x[e.u] * x[e.v] * x[e.v];
  return total;
}

CountSummary summarize_counts(const Graph &g, std::span<const int> moment_ks,
                              std::span<const int> is_sizes,
                              const SearchLimits &limits) {
  CountSummary out;
  out.c4 = count_c4(g);
  out.k3 = count_triangles(g);
  out.omega = clique_number(g);
  for (int k: moment_ks)
    out.pair_moments[k] = pair_degree_moment(g, k);
  for (int s: is_sizes)
    out.is_counts[s] = independent_set_count(g, s, limits);
  return out;
}

}  // namespace btr
