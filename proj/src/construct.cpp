//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/construct.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "btr/common.h"

namespace btr {
namespace {

void post_check(bool ok, const char *what) {
  if (!ok)
    throw InternalError(std::string("construction post-check failed: ") + what);
}

bool regular(const Graph &g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d)
      return false;
  return true;
}

bool is_prime(int q) {
  if (q < 2)
    return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0)
      return false;
  return true;
}

// Nonzero triples mod q scaled so the first nonzero entry is 1.
std::vector<std::array<int, 3>> projective_points(int q) {
  std::vector<std::array<int, 3>> pts;
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c)
      pts.push_back({ 1, b, c });
  for (int c = 0; c < q; ++c)
    pts.push_back({ 0, 1, c });
  pts.push_back({ 0, 0, 1 });
  return pts;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    return std::nullopt;
  return v;
}

}  // namespace

Graph complete_graph(int n) {
  if (n < 0)
    throw std::invalid_argument("complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({ i, j });
  Graph g = Graph::from_edges(n, edges);
  post_check(regular(g, n ? n - 1 : 0), "K_n is (n-1)-regular");
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("complete bipartite needs a, b >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      edges.push_back({ i, a + j });
  Graph g = Graph::from_edges(a + b, edges);
  post_check(g.edge_count() == static_cast<std::int64_t>(a) * b, "e(K_{a,b}) = ab");
  return g;
}

Graph cycle(int n) {
  if (n < 3)
    throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({ i, (i + 1) % n });
  Graph g = Graph::from_edges(n, edges);
  post_check(regular(g, 2), "C_n is 2-regular");
  return g;
}

Graph path(int n) {
  if (n < 1)
    throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({ i, i + 1 });
  Graph g = Graph::from_edges(n, edges);
  post_check(g.edge_count() == n - 1, "e(P_n) = n - 1");
  return g;
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph kneser(int m, int k) {
  if (k < 1 || m < 2 * k || m > 20)
    throw std::invalid_argument("kneser needs 1 <= k, 2k <= m <= 20");
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < (1U << m); ++s)
    if (std::popcount(s) == k)
      sets.push_back(s);
  if (sets.size() > static_cast<std::size_t>(kDefaultOrderCap))
    throw std::invalid_argument("kneser graph exceeds the order cap");
  std::vector<Edge> edges;
  const int n = static_cast<int>(sets.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((sets[i] & sets[j]) == 0)
        edges.push_back({ i, j });
  Graph g = Graph::from_edges(n, edges);
  post_check(n == static_cast<int>(to_int64(binomial(m, k))), "|V| = binom(m, k)");
  post_check(regular(g, static_cast<int>(to_int64(binomial(m - k, k)))),
             "kneser graph is binom(m-k, k)-regular");
  return g;
}

Graph petersen() { return kneser(5, 2); }

Graph pp_incidence(int q) {
  if (!is_prime(q))
    throw std::invalid_argument("pp_incidence needs a prime q");
  const std::int64_t count = static_cast<std::int64_t>(q) * q + q + 1;
  if (2 * count > kDefaultOrderCap)
    throw std::invalid_argument("pp_incidence(q) exceeds the order cap");
  const auto pts = projective_points(q);
  const int n = static_cast<int>(pts.size());
  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < n; ++l) {
      const auto &a = pts[p];
      const auto &b = pts[l];
      if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0)
        edges.push_back({ p, n + l });
    }
  Graph g = Graph::from_edges(2 * n, edges);
  post_check(n == count, "q^2 + q + 1 points");
  post_check(regular(g, q + 1), "(q + 1)-regular");
  post_check(g.edge_count() == count * (q + 1), "(q^2+q+1)(q+1) edges");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      post_check(bits::count_and(g.row(i), g.row(j)) == 1, "two points span one line");
  return g;
}

Graph heawood() { return pp_incidence(2); }

std::optional<Graph> named_graph(std::string_view name) {
  std::string s(name);
  for (char &c : s)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "petersen")
    return petersen();
  if (s == "heawood")
    return heawood();
  if (s == "k33")
    return complete_bipartite(3, 3);
  if (s == "k88")
    return complete_bipartite(8, 8);
  if (s.size() < 2)
    return std::nullopt;
  const std::string_view rest = std::string_view(s).substr(1);
  const char head = s[0];
  if (head == 'k') {
    const auto comma = rest.find(',');
    if (comma != std::string_view::npos) {
      const auto a = parse_int(rest.substr(0, comma));
      const auto b = parse_int(rest.substr(comma + 1));
      if (a && b && *a >= 0 && *b >= 0 && *a + *b <= kDefaultOrderCap)
        return complete_bipartite(*a, *b);
      return std::nullopt;
    }
  }
  const auto v = parse_int(rest);
  if (!v || *v < 0 || *v > kDefaultOrderCap)
    return std::nullopt;
  switch (head) {
  case 'k':
    return complete_graph(*v);
  case 'c':
    if (*v >= 3)
      return cycle(*v);
    return std::nullopt;
  case 'p':
    if (*v >= 1)
      return path(*v);
    return std::nullopt;
  case 'e':
    return Graph::empty(*v);
  default:
    return std::nullopt;
  }
}

}  // namespace btr
