//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/ramsey.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "btr/common.h"
#include "btr/parallel.h"
#include "btr/pattern.h"

namespace btr {
namespace {

// Kept byte-identical to data/ramsey_table.txt (checked by the tests).
constexpr std::string_view kBuiltinTable =
    "# Exact two-color classical Ramsey numbers R(K_p, K_t).\n"
    "# Format: Kp t value source-note\n"
    "# Values as collected in S. Radziszowski, \"Small Ramsey Numbers\",\n"
    "# Electronic Journal of Combinatorics, Dynamic Survey DS1.\n"
    "K3 3 6 Greenwood-Gleason 1955\n"
    "K3 4 9 Greenwood-Gleason 1955\n"
    "K3 5 14 Greenwood-Gleason 1955\n"
    "K3 6 18 Kery 1964\n"
    "K3 7 23 Kalbfleisch 1966; Graver-Yackel 1968\n"
    "K3 8 28 Grinstead-Roberts 1982; McKay-Min 1992\n"
    "K3 9 36 Grinstead-Roberts 1982\n"
    "K4 4 18 Greenwood-Gleason 1955\n"
    "K4 5 25 McKay-Radziszowski 1995\n";

bool is_complete(const Graph &h) {
  const std::int64_t v = h.order();
  return h.edge_count() == v * (v - 1) / 2;
}

bool is_p3(const Graph &h) {
  return h.order() == 3 && h.edge_count() == 2;
}

RamseyValue exact(std::int64_t value, RamseySource source, std::string formula,
                  std::string note = {}) {
  return { value, value, true, source, std::move(formula), std::move(note) };
}

// Independent t-set in an order <= 8 graph given as row masks.
bool has_independent_set(const std::vector<unsigned> &rows,
                         const std::vector<unsigned> &subsets) {
  for (unsigned s: subsets) {
    bool independent = true;
    for (unsigned rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (rows[v] & s) {
        independent = false;
        break;
      }
    }
    if (independent)
      return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(RamseySource source) {
  switch (source) {
  case RamseySource::kTable:
    return "table";
  case RamseySource::kClosedForm:
    return "closed_form";
  case RamseySource::kBruteForce:
    return "brute_force";
  case RamseySource::kUserBound:
    return "user_bound";
  }
  return "unknown";
}

std::string_view RamseyTable::builtin_text() {
  return kBuiltinTable;
}

RamseyTable RamseyTable::parse(std::string_view text) {
  RamseyTable out;
  std::size_t lineno = 0;
  std::size_t offset = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    text = nl == std::string_view::npos ? std::string_view()
                                        : text.substr(nl + 1);
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#')
      continue;

    RamseyTableEntry e;
    const auto fail = [&](const char *what) {
      return ParseError(what, line_offset, lineno);
    };
    if (line.front() != 'K')
      throw fail("entry must start with Kp");
    std::size_t pos = 1;
    auto read_int = [&](auto &out) {
      while (pos < line.size() && line[pos] == ' ')
        ++pos;
      const char *b = line.data() + pos;
      auto [ptr, ec] = std::from_chars(b, line.data() + line.size(), out);
      if (ec != std::errc() || ptr == b)
        return false;
      pos = ptr - line.data();
      return true;
    };
    if (!read_int(e.p) || !read_int(e.t) || !read_int(e.value))
      throw fail("expected \"Kp t value source-note\"");
    if (e.p < 1 || e.t < 1 || e.value < 1)
      throw fail("table values must be positive");
    while (pos < line.size() && line[pos] == ' ')
      ++pos;
    e.note = std::string(line.substr(pos));
    out.entries_.push_back(std::move(e));
  }
  return out;
}

const RamseyTable &RamseyTable::builtin() {
  static const RamseyTable table = parse(kBuiltinTable);
  return table;
}

const RamseyTableEntry *RamseyTable::find(int p, int t) const {
  for (const auto &e: entries_)
    if ((e.p == p && e.t == t) || (e.p == t && e.t == p))
      return &e;
  return nullptr;
}

std::string canonical_graph6(const Graph &h) {
  const int n = h.order();
  if (n > 8)
    return encode_graph6(h);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Edge> edges = h.edges();
  std::string best;
  std::vector<Edge> relabeled(edges.size());
  do {
    for (std::size_t i = 0; i < edges.size(); ++i)
      relabeled[i] = { perm[edges[i].u], perm[edges[i].v] };
    std::string code = encode_graph6(Graph::from_edges(n, relabeled));
    if (best.empty() || code < best)
      best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

RamseyOracle::RamseyOracle(): table_(RamseyTable::builtin()) { }

RamseyOracle::RamseyOracle(RamseyTable table): table_(std::move(table)) { }

void RamseyOracle::add_user_bound(const Graph &h, int t, std::int64_t upper) {
  if (h.order() < 1 || t < 1 || upper < 1)
    throw std::invalid_argument("user Ramsey bound needs v(H) >= 1, t >= 1, "
                                "value >= 1");
  const auto key = std::make_pair(canonical_graph6(h), t);
  auto it = user_.find(key);
  if (it == user_.end())
    user_.emplace(key, upper);
  else
    it->second = std::min(it->second, upper);
}

RamseyValue RamseyOracle::lookup(const Graph &h, int t) const {
  const int v = h.order();
  if (v < 1)
    throw std::invalid_argument("Ramsey lookup needs a nonempty pattern");
  if (t < 1)
    throw std::invalid_argument("Ramsey lookup needs t >= 1");

  RamseyValue out;
  if (t == 1) {
    out = exact(1, RamseySource::kClosedForm, "t=1");
  } else if (h.edge_count() == 0) {
    out = exact(v, RamseySource::kClosedForm, "edgeless:v(H)");
  } else if (t == 2) {
    out = exact(v, RamseySource::kClosedForm, "t=2:v(H)");
  } else if (is_complete(h) && v == 2) {
    out = exact(t, RamseySource::kClosedForm, "K2:t");
  } else if (const auto *e = is_complete(h) ? table_.find(v, t) : nullptr) {
    out = exact(e->value, RamseySource::kTable,
                "R(" + std::to_string(e->p) + "," + std::to_string(e->t) + ")",
                e->note);
  } else if (is_p3(h)) {
    out = exact(2 * static_cast<std::int64_t>(t) - 1,
                RamseySource::kClosedForm, "P3:2t-1", "Parsons 1973");
  } else {
    out.lower = std::max<std::int64_t>(v, t);
    out.exact = false;
    if (const auto *e = table_.find(v, t)) {
      out.upper = e->value;
      out.source = RamseySource::kTable;
      out.formula = "R(H,K_t)<=R(K_v(H),K_t)";
      out.note = e->note;
    } else {
      out.upper = to_int64(binomial(v + t - 2, v - 1));
      out.source = RamseySource::kClosedForm;
      out.formula = "R(H,K_t)<=binom(v(H)+t-2,v(H)-1)";
    }
    if (out.lower == out.upper)
      out.exact = true;
  }

  if (!user_.empty()) {
    const auto it = user_.find({ canonical_graph6(h), t });
    if (it != user_.end() && it->second < out.upper) {
      if (it->second < out.lower)
        throw std::invalid_argument(
            "user Ramsey bound " + std::to_string(it->second)
            + " is below the certified lower bound "
            + std::to_string(out.lower));
      out.upper = it->second;
      out.source = RamseySource::kUserBound;
      out.formula = "user";
      out.exact = out.lower == out.upper;
    }
  }
  return out;
}

RamseyValue ramsey_lookup(const Graph &h, int t) {
  static const RamseyOracle oracle;
  return oracle.lookup(h, t);
}

RamseyValue ramsey_brute_force(const Graph &h, int t, int n_max,
                               const RamseyOracle &oracle, int jobs) {
  if (n_max > kRamseyBruteForceMaxOrder)
    throw std::invalid_argument(
        "brute force is capped at order 7: order 8 would scan 2^28 "
        "labeled graphs");
  if (n_max < 1 || t < 1 || h.order() < 1)
    throw std::invalid_argument("brute force needs n_max, t, v(H) >= 1");

  for (int n = 1; n <= n_max; ++n) {
    const int pairs = n * (n - 1) / 2;
    const std::int64_t total = std::int64_t { 1 } << pairs;
    std::vector<unsigned> subsets;
    for (unsigned s = 0; s < (1U << n); ++s)
      if (std::popcount(s) == t)
        subsets.push_back(s);

    std::atomic<bool> counterexample { false };
    parallel_chunks(total, jobs, 4096, [&](std::int64_t b, std::int64_t e) {
      std::vector<unsigned> rows(n);
      for (std::int64_t mask = b; mask < e; ++mask) {
        if (counterexample.load(std::memory_order_relaxed))
          return;
        std::fill(rows.begin(), rows.end(), 0U);
        int bit = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) {
              rows[i] |= 1U << j;
              rows[j] |= 1U << i;
            }
        if (has_independent_set(rows, subsets))
          continue;
        const Graph g = Graph::from_pair_mask(n, static_cast<std::uint64_t>(mask));
        if (find_pattern_generic(g, h, PatternMode::kSubgraph).found())
          continue;
        counterexample.store(true);
        return;
      }
    });
    if (!counterexample.load())
      return exact(n, RamseySource::kBruteForce,
                   "exhaustive:n<=" + std::to_string(n_max));
  }

  const RamseyValue known = oracle.lookup(h, t);
  if (known.upper < n_max + 1)
    throw InternalError("brute force found no threshold up to order "
                        + std::to_string(n_max) + " but the oracle claims "
                        + std::to_string(known.upper));
  RamseyValue out;
  out.lower = std::max<std::int64_t>(n_max + 1, known.lower);
  out.upper = known.upper;
  out.exact = out.lower == out.upper;
  out.source = known.source;
  out.formula = "exhaustive:n<=" + std::to_string(n_max) + ";upper:"
                + known.formula;
  out.note = known.note;
  return out;
}

}  // namespace btr
