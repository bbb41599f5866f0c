//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/checks.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "btr/pattern.h"

namespace btr {
namespace {

// Equality of two exact integers.
BoundReport exact_identity(std::string which, BigCount lhs, BigCount rhs) {
  BoundReport r;
  r.which = std::move(which);
  r.lhs = Quantity::count(lhs);
  r.rhs = Quantity::count(rhs);
  r.margin = lhs == rhs ? 0.0 : -std::abs(r.lhs.value - r.rhs.value);
  r.tol = relative_tol(r.lhs.value, r.rhs.value);
  r.verdict = lhs == rhs ? Verdict::kHolds : Verdict::kFails;
  return r;
}

BigCount sum_degree_sq(const Graph &g) {
  BigCount s = 0;
  for (int v = 0; v < g.order(); ++v)
    s += static_cast<BigCount>(g.degree(v)) * static_cast<BigCount>(g.degree(v));
  return s;
}

}  // namespace

const std::vector<std::string> &check_names() {
  static const std::vector<std::string> names = {
    "prop1",        "prop2",       "prop3",        "prop4",
    "lemma1",       "c5pair",      "th0",          "th1",
    "corollary",    "nikiforov",   "identity-c4",  "identity-in",
    "identity-in3", "identity-cw4", "hofmeister",  "motzkin",
    "turan-step",   "kst-consistency",
  };
  return names;
}

std::vector<std::string> parse_check_list(std::string_view csv) {
  std::vector<std::string> out;
  const auto &known = check_names();
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string item(csv.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty())
      continue;
    if (item == "all") {
      for (const auto &n : known)
        if (std::find(out.begin(), out.end(), n) == out.end())
          out.push_back(n);
      continue;
    }
    if (std::find(known.begin(), known.end(), item) == known.end())
      throw std::invalid_argument("unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), item) == out.end())
      out.push_back(item);
  }
  return out;
}

BoundReport check_identity_c4(const Graph &g) {
  return exact_identity("identity-c4", pair_binomial_sum(g, 2),
                        2 * static_cast<BigCount>(count_c4_by_paths(g)));
}

BoundReport check_identity_in(const Graph &g) {
  const BigCount rhs = 4 * static_cast<BigCount>(count_c4(g)) + sum_degree_sq(g) / 2
                     - static_cast<BigCount>(g.edge_count());
  return exact_identity("identity-in", pair_degree_moment(g, 2), rhs);
}

BoundReport check_identity_in3(const Graph &g) {
  const BigCount cw4 = static_cast<BigCount>(closed_walks_4(g));
  return exact_identity("identity-in3", 2 * pair_degree_moment(g, 2),
                        cw4 - sum_degree_sq(g));
}

BoundReport check_identity_cw4(const GraphFacts &f) {
  const Graph &g = f.graph();
  const SpectralSummary &sp = f.spectrum();
  std::vector<double> values;
  if (sp.eigenvalues) {
    values = *sp.eigenvalues;
  } else {
    SpectralOptions dense;
    dense.mode = SpectralMode::kDenseFull;
    values = *full_spectrum(g, dense).eigenvalues;
  }
  double sum = 0.0;
  for (double l : values)
    sum += l * l * l * l;
  BoundReport r;
  r.which = "identity-cw4";
  r.lhs = Quantity::count(static_cast<BigCount>(closed_walks_4(g)));
  r.rhs = Quantity::real(sum);
  r.margin = -std::abs(r.lhs.value - r.rhs.value);
  r.tol = 1e-8 * std::max({ 1.0, std::abs(r.lhs.value), std::abs(sum) });
  r.verdict = r.margin >= -r.tol ? Verdict::kHolds : Verdict::kFails;
  return r;
}

BoundReport check_hofmeister(const GraphFacts &f) {
  const Graph &g = f.graph();
  BoundReport r;
  r.which = "hofmeister";
  const double l = f.lambda();
  r.lhs = Quantity::real(l * l);
  r.rhs = Quantity::real(g.order() ? to_double(sum_degree_sq(g)) / g.order() : 0.0);
  r.margin = r.lhs.value - r.rhs.value;
  r.tol = relative_tol(r.lhs.value, r.rhs.value);
  r.verdict = r.margin >= -r.tol ? Verdict::kHolds : Verdict::kFails;
  return r;
}

BoundReport check_motzkin(const GraphFacts &f) {
  const Graph &g = f.graph();
  BoundReport r;
  r.which = "motzkin";
  const int omega = std::max(1, f.omega());
  const double bound = (omega - 1.0) / (2.0 * omega);
  const double value = g.order() ? motzkin_straus_value(g, f.spectrum().perron) : 0.0;
  r.lhs = Quantity::real(value);
  r.rhs = Quantity::real(bound);
  r.margin = bound - value;
  r.tol = relative_tol(value, bound);
  r.verdict = r.margin >= -r.tol ? Verdict::kHolds : Verdict::kFails;
  r.details["omega"] = omega;
  return r;
}

BoundReport check_turan_step(const GraphFacts &f, int r_param) {
  const Graph &g = f.graph();
  BoundReport r;
  r.which = "turan-step";
  r.details["r"] = r_param;
  if (f.omega() > r_param) {
    r.verdict = Verdict::kPremiseUnmet;
    r.details["premise"] = "G contains K_{r+1}";
    return r;
  }
  const double c = (r_param - 2.0) / (2.0 * (r_param - 1.0));
  const int n = g.order();
  const int wpr = g.words_per_row();
  std::vector<Word> mask(static_cast<std::size_t>(wpr));
  double worst = 0.0;
  std::int64_t worst_k2 = 0;
  double worst_bound = 0.0;
  std::vector<int> worst_pair;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int w = 0; w < wpr; ++w)
        mask[w] = g.row(i)[w] & g.row(j)[w];
      const int d = bits::count(mask);
      std::int64_t twice = 0;
      bits::for_each(mask, [&](int v) { twice += bits::count_and(g.row(v), mask); });
      const std::int64_t k2 = twice / 2;
      const double bound = c * d * d;
      const double m = bound - static_cast<double>(k2);
      if (worst_pair.empty() || m < worst) {
        worst = m;
        worst_k2 = k2;
        worst_bound = bound;
        worst_pair = { i, j };
      }
    }
  r.lhs = Quantity::count(static_cast<BigCount>(worst_k2));
  r.rhs = Quantity::real(worst_bound);
  r.margin = worst;
  r.tol = relative_tol(r.lhs.value, worst_bound);
  r.verdict = r.margin >= -r.tol ? Verdict::kHolds : Verdict::kFails;
  if (!worst_pair.empty())
    r.witness = Witness { "pair", worst_pair };
  return r;
}

BoundReport check_kst_consistency(const Graph &g, const SearchLimits &limits) {
  std::int64_t agree = 0;
  std::int64_t cases = 0;
  nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
  for (int s = 1; s <= 3; ++s)
    for (int t = s; t <= 3; ++t)
      for (PatternMode mode : { PatternMode::kSubgraph, PatternMode::kInduced }) {
        ++cases;
        const Graph k = PatternQuery::complete_bipartite(s, t, mode).pattern();
        const PatternResult a = find_kst(g, s, t, mode, limits);
        const PatternResult b = find_pattern_generic(g, k, mode, limits);
        bool ok = a.found() == b.found();
        if (a.found())
          ok = ok && is_embedding(g, k, mode, *a.witness);
        if (b.found())
          ok = ok && is_embedding(g, k, mode, *b.witness);
        if (ok)
          ++agree;
        else
          mismatches.push_back({ s, t, std::string(to_string(mode)) });
      }
  BoundReport r = exact_identity("kst-consistency", agree, cases);
  r.details["mismatches"] = std::move(mismatches);
  return r;
}

std::vector<BoundReport> run_check(std::string_view name, const GraphFacts &f,
                                   const CheckConfig &cfg, const BoundContext &ctx) {
  const Graph &g = f.graph();
  if (name == "prop1")
    return { verify_proposition1(f) };
  if (name == "prop2") {
    std::vector<BoundReport> out;
    for (int k : cfg.k)
      out.push_back(verify_proposition2(f, k));
    return out;
  }
  if (name == "prop3") {
    const int s = std::max(cfg.s, 3);
    if (g.order() < s - 1) {
      BoundReport r;
      r.which = "prop3";
      r.verdict = Verdict::kPremiseUnmet;
      r.details["premise"] = "n < s - 1";
      return { r };
    }
    return { verify_proposition3(f, s, cfg.prop3_k) };
  }
  if (name == "prop4")
    return { verify_proposition4(f, cfg.h, cfg.s, ctx) };
  if (name == "lemma1")
    return { lemma1_rhs(f, cfg.h, cfg.t, cfg.variant, ctx) };
  if (name == "c5pair")
    return { verify_c5_pair_count(f, ctx) };
  if (name == "th0" || name == "th1") {
    BoundParams p;
    p.h = cfg.h;
    p.r = cfg.r;
    p.k_const = cfg.theorem_k;
    if (name == "th0") {
      p.t = cfg.t;
      return { theorem_verdict(f, p, Theorem::kTh0, ctx) };
    }
    p.s = std::max(cfg.s, 3);
    p.t = std::max(cfg.t, p.s);
    return { theorem_verdict(f, p, Theorem::kTh1, ctx) };
  }
  if (name == "corollary") {
    BoundParams p;
    p.h = cfg.h;
    p.s = std::min(cfg.s, cfg.t);
    p.t = std::max(cfg.s, cfg.t);
    return { verify_corollary(f, p, ctx) };
  }
  if (name == "nikiforov")
    return { verify_nikiforov(f, std::max(cfg.s, cfg.t), std::min(cfg.s, cfg.t), ctx) };
  if (name == "identity-c4")
    return { check_identity_c4(g) };
  if (name == "identity-in")
    return { check_identity_in(g) };
  if (name == "identity-in3")
    return { check_identity_in3(g) };
  if (name == "identity-cw4")
    return { check_identity_cw4(f) };
  if (name == "hofmeister")
    return { check_hofmeister(f) };
  if (name == "motzkin")
    return { check_motzkin(f) };
  if (name == "turan-step")
    return { check_turan_step(f, 2), check_turan_step(f, 3), check_turan_step(f, 4) };
  if (name == "kst-consistency")
    return { check_kst_consistency(g, ctx.limits) };
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

}  // namespace btr
