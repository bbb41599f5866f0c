//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/bounds.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "btr/pattern.h"

namespace btr {
namespace {

using json = nlohmann::ordered_json;

RamseyProvenance provenance(std::string role, const Graph &h, int t,
                            const RamseyValue &value) {
  return { std::move(role), encode_graph6(h), t, value };
}

double upper_of(const RamseyValue &v) {
  if (v.upper < 1)
    throw Error("Ramsey oracle returned no finite upper bound");
  return static_cast<double>(v.upper);
}

// Fills margin, tol and verdict. lhs_le_rhs selects the orientation.
void settle(BoundReport &r, bool lhs_le_rhs) {
  r.margin = lhs_le_rhs ? r.rhs.value - r.lhs.value : r.lhs.value - r.rhs.value;
  if (r.tol == 0.0)
    r.tol = relative_tol(r.lhs.value, r.rhs.value);
  bool holds = r.margin >= -r.tol;
  if (r.lhs.exact && r.rhs.exact)
    holds = lhs_le_rhs ? *r.lhs.exact <= *r.rhs.exact
                       : *r.lhs.exact >= *r.rhs.exact;
  r.verdict = holds ? Verdict::kHolds : Verdict::kFails;
}

std::vector<int> map_to_vector(const VertexMap &m) { return { m.begin(), m.end() }; }

BoundReport premise_unmet(BoundReport r, std::string kind, std::vector<int> vertices,
                          std::string reason) {
  r.verdict = Verdict::kPremiseUnmet;
  r.witness = Witness { std::move(kind), std::move(vertices) };
  r.details["premise"] = std::move(reason);
  return r;
}

// Returns a witness copy of h in g, if any.
std::optional<VertexMap> find_copy(const Graph &g, const Graph &h,
                                   const SearchLimits &limits) {
  return find_pattern(g, PatternQuery(h, PatternMode::kSubgraph), limits).witness;
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({ i, (i + 1) % n });
  return Graph::from_edges(n, edges);
}

BigCount sum_edge_codegree_sq(const Graph &g) {
  BigCount s = 0;
  for (const Edge &e : g.edges()) {
    const auto d = static_cast<BigCount>(bits::count_and(g.row(e.u), g.row(e.v)));
    s = checked_add(s, d * d);
  }
  return s;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::kHolds:
    return "holds";
  case Verdict::kFails:
    return "fails";
  case Verdict::kPremiseUnmet:
    return "premise_unmet";
  case Verdict::kVacuous:
    return "vacuous";
  }
  return "unknown";
}

std::string_view to_string(Lemma1Variant v) {
  return v == Lemma1Variant::kVertex ? "vertex" : "nonadjacent_pair";
}

double relative_tol(double lhs, double rhs) {
  return 1e-9 * std::max({ 1.0, std::abs(lhs), std::abs(rhs) });
}

GraphFacts::GraphFacts(const Graph &g, const SpectralOptions &opts)
    : g_(g), opts_(opts) {}

const SpectralSummary &GraphFacts::spectrum() const {
  if (!spectrum_)
    spectrum_ = spectral_radius(g_, opts_);
  return *spectrum_;
}

const std::vector<int> &GraphFacts::max_clique() const {
  if (!clique_)
    clique_ = maximum_clique(g_);
  return *clique_;
}

// Formula evaluators ------------------------------------------------------

double nikiforov_kst_bound(int s, int t, double n) {
  if (t < 2 || s < t)
    throw std::invalid_argument("nikiforov_kst_bound needs s >= t >= 2");
  if (n < 1)
    throw std::invalid_argument("nikiforov_kst_bound needs n >= 1");
  if (t == 2)
    return 0.5 + std::sqrt((s - 1) * (n - 1) + 0.25);
  const double tt = t;
  return std::pow(s - t + 1, 1.0 / tt) * std::pow(n, 1.0 - 1.0 / tt)
       + (tt - 1) * std::pow(n, 1.0 - 2.0 / tt) + tt - 2;
}

namespace {

// U(R(H,K_t))^{2/s} U(R(H,K_s)) with provenance.
Threshold ramsey_constant(const BoundParams &p, const RamseyOracle &oracle) {
  Threshold th;
  const RamseyValue rt = oracle.lookup(p.h, p.t);
  const RamseyValue rs = oracle.lookup(p.h, p.s);
  th.provenance.push_back(provenance("R(H,K_t)", p.h, p.t, rt));
  th.provenance.push_back(provenance("R(H,K_s)", p.h, p.s, rs));
  th.k_min = std::pow(upper_of(rt), 2.0 / p.s) * upper_of(rs);
  th.k_const = p.k_const.value_or(th.k_min);
  return th;
}

}  // namespace

Threshold th1_threshold(const BoundParams &p, double n, const RamseyOracle &oracle) {
  if (p.s < 3 || p.t < p.s)
    throw std::invalid_argument("th1_threshold needs t >= s >= 3");
  if (p.h.order() < 1)
    throw std::invalid_argument("th1_threshold needs a nonempty H");
  Threshold th = ramsey_constant(p, oracle);
  th.value = th.k_const * std::pow(n, 1.0 - 1.0 / p.s);
  return th;
}

Threshold th0_threshold(const BoundParams &p, double n, const RamseyOracle &oracle) {
  if (p.r < 2 || p.t < 2)
    throw std::invalid_argument("th0_threshold needs r >= 2 and t >= 2");
  Threshold th;
  std::vector<Edge> edges;
  for (int i = 0; i < p.r; ++i)
    for (int j = i + 1; j < p.r; ++j)
      edges.push_back({ i, j });
  const Graph clique = Graph::from_edges(p.r, edges);
  const RamseyValue v = oracle.lookup(clique, p.t);
  th.provenance.push_back(provenance("R(K_r,K_t)", clique, p.t, v));
  th.k_min = upper_of(v);
  th.k_const = p.k_const.value_or(th.k_min);
  th.value = th.k_const * std::sqrt(n);
  return th;
}

Threshold corollary_edge_bound(const BoundParams &p, double n,
                               const RamseyOracle &oracle) {
  if (p.s < 2 || p.t < p.s)
    throw std::invalid_argument("corollary_edge_bound needs t >= s >= 2");
  if (p.h.order() < 1)
    throw std::invalid_argument("corollary_edge_bound needs a nonempty H");
  Threshold th = ramsey_constant(p, oracle);
  th.value = 0.5 * th.k_const * std::pow(n, 2.0 - 1.0 / p.s);
  return th;
}

double th3_leading_coefficient(int t) {
  if (t < 2)
    throw std::invalid_argument("th3 needs t >= 2");
  return std::sqrt(2.0 * t + std::sqrt(0.375));
}

double th3_bound(int t, double n) { return th3_leading_coefficient(t) * std::sqrt(n); }

FurediCheck furedi_tightness(int q, int t) {
  if (t < 2 || q < 2)
    throw std::invalid_argument("furedi_tightness needs q >= 2 and t >= 2");
  const std::int64_t q2m1 = static_cast<std::int64_t>(q) * q - 1;
  if (q2m1 % (t - 1) != 0)
    throw std::invalid_argument("furedi_tightness needs (t - 1) | (q^2 - 1)");
  FurediCheck c;
  c.q = q;
  c.t = t;
  c.n = 2 * q2m1 / (t - 1);
  c.half_tn_plus_one = (t - 1) * c.n / 2 + 1;
  c.identity_holds = c.half_tn_plus_one == static_cast<std::int64_t>(q) * q;
  c.spectral_radius = std::sqrt(static_cast<double>(c.half_tn_plus_one));
  c.th3_leading_term = th3_bound(t, static_cast<double>(c.n));
  c.within_factor_two = c.spectral_radius <= 2.0 * c.th3_leading_term;
  c.th3_leading_term_t2 = th3_bound(2, static_cast<double>(c.n));
  c.within_factor_two_t2 = c.spectral_radius <= 2.0 * c.th3_leading_term_t2;
  return c;
}

// Verifiers ---------------------------------------------------------------

BoundReport lemma1_rhs(const GraphFacts &f, const Graph &h, int t,
                       Lemma1Variant variant, const BoundContext &ctx) {
  const Graph &g = f.graph();
  if (h.order() < 2)
    throw std::invalid_argument("lemma1 needs |V(H)| >= 2");
  if (t < 2)
    throw std::invalid_argument("lemma1 needs t >= 2");

  // Smallest certified R over admissible removals.
  std::optional<RamseyValue> best;
  std::vector<int> removed;
  Graph best_sub;
  auto consider = [&](std::vector<int> drop) {
    std::vector<int> keep;
    for (int v = 0; v < h.order(); ++v)
      if (std::find(drop.begin(), drop.end(), v) == drop.end())
        keep.push_back(v);
    if (keep.empty())
      return;
    const Graph sub = induced_subgraph(h, VertexSet::of(h.order(), keep));
    const RamseyValue val = ctx.ramsey.lookup(sub, t);
    if (!best || val.upper < best->upper) {
      best = val;
      removed = std::move(drop);
      best_sub = sub;
    }
  };
  if (variant == Lemma1Variant::kVertex) {
    for (int x = 0; x < h.order(); ++x)
      consider({ x });
  } else {
    for (int x = 0; x < h.order(); ++x)
      for (int y = x + 1; y < h.order(); ++y)
        if (!h.adjacent(x, y))
          consider({ x, y });
    if (!best)
      throw std::invalid_argument(
          "lemma1 pair variant needs H with a nonadjacent pair leaving a vertex");
  }

  BoundReport r;
  r.which = "lemma1";
  r.details["variant"] = to_string(variant);
  r.details["t"] = t;
  r.ramsey_provenance.push_back(provenance("R(H-removed,K_t)", best_sub, t, *best));
  r.details["removed"] = removed;

  if (auto w = find_copy(g, h, ctx.limits))
    return premise_unmet(std::move(r), "H", map_to_vector(*w), "G contains H");
  if (auto w = find_kst(g, 2, t, PatternMode::kInduced, ctx.limits).witness)
    return premise_unmet(std::move(r), "induced_K2," + std::to_string(t),
                         map_to_vector(*w), "G contains an induced K_{2,t}");

  const double n = g.order();
  const double lambda = f.lambda();
  const double R = upper_of(*best);
  const BigCount s_sq = sum_edge_codegree_sq(g);
  const int omega = std::max(1, f.omega());
  const double ms = (omega - 1.0) / (2.0 * omega);
  const double cs = std::sqrt(to_double(s_sq)) * std::sqrt(ms);

  r.lhs = Quantity::real(lambda * lambda);
  r.rhs = Quantity::real((R + 1) * n + 2.0 * cs);
  settle(r, true);

  const double stated = (R + 1) * n + cs;
  r.details["R_used"] = best->upper;
  r.details["sum_edge_codegree_sq"] = to_string(s_sq);
  r.details["omega"] = omega;
  r.details["as_stated_rhs"] = stated;
  r.details["as_stated_margin"] = stated - lambda * lambda;
  r.details["as_stated_holds"] = stated - lambda * lambda >= -relative_tol(lambda * lambda, stated);

  // Intermediate quantities of the proof chain.
  const auto &x = f.spectrum().perron;
  double weighted = 0.0;
  double sq = 0.0;
  int max_nonedge = 0;
  for (const Edge &e : g.edges()) {
    const int d = bits::count_and(g.row(e.u), g.row(e.v));
    weighted += d * x[e.u] * x[e.v];
    sq += x[e.u] * x[e.u] * x[e.v] * x[e.v];
  }
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j))
        max_nonedge = std::max(max_nonedge, bits::count_and(g.row(i), g.row(j)));
  r.details["max_nonedge_codegree"] = max_nonedge;
  r.details["nonedge_codegree_below_R"] = g.order() < 2 || max_nonedge <= R;
  r.details["sum_edge_codegree_xixj"] = weighted;
  r.details["cauchy_bound"] = std::sqrt(to_double(s_sq)) * std::sqrt(sq);
  r.details["sum_edge_xi2xj2"] = sq;
  r.details["motzkin_straus_bound"] = ms;
  return r;
}

BoundReport lemma1_rhs(const Graph &g, const Graph &h, int t, Lemma1Variant variant,
                       const BoundContext &ctx) {
  return lemma1_rhs(GraphFacts(g, ctx.spectral), h, t, variant, ctx);
}

BoundReport verify_proposition1(const GraphFacts &f) {
  const Graph &g = f.graph();
  const double n = g.order();
  const double l2 = f.lambda() * f.lambda();
  BoundReport r;
  r.which = "prop1";
  r.lhs = Quantity::count(pair_degree_moment(g, 2));
  r.rhs = Quantity::real(0.5 * (l2 * l2 - n * l2));
  settle(r, false);
  r.details["lambda"] = f.lambda();
  return r;
}

BoundReport verify_proposition1(const Graph &g, const BoundContext &ctx) {
  return verify_proposition1(GraphFacts(g, ctx.spectral));
}

BoundReport verify_proposition2(const GraphFacts &f, int k) {
  if (k < 2)
    throw std::invalid_argument("proposition 2 needs k >= 2");
  const Graph &g = f.graph();
  const double n = g.order();
  const double lambda = f.lambda();
  BoundReport r;
  r.which = "prop2";
  r.details["k"] = k;
  r.details["lambda"] = lambda;
  const double root_n = std::sqrt(n);
  if (n < 1 || lambda < root_n - relative_tol(lambda, root_n)) {
    r.verdict = Verdict::kPremiseUnmet;
    r.details["premise"] = "lambda < sqrt(n)";
    return r;
  }
  const double gap = std::max(0.0, lambda * lambda - n);
  r.lhs = Quantity::count(pair_degree_moment(g, k));
  r.rhs = Quantity::real(std::pow(lambda, k) * std::pow(gap, 0.5 * k)
                         / (2.0 * std::pow(n, k - 2)));
  settle(r, false);

  // Power-mean step: (mean d^k)^{1/k} >= (mean d^2)^{1/2}.
  if (n >= 2) {
    const double pairs = n * (n - 1) / 2;
    const double mk = std::pow(r.lhs.value / pairs, 1.0 / k);
    const double m2 = std::sqrt(to_double(pair_degree_moment(g, 2)) / pairs);
    r.details["power_mean_k"] = mk;
    r.details["power_mean_2"] = m2;
  }
  return r;
}

BoundReport verify_proposition2(const Graph &g, int k, const BoundContext &ctx) {
  return verify_proposition2(GraphFacts(g, ctx.spectral), k);
}

BoundReport verify_proposition3(const GraphFacts &f, int s, double k_const) {
  const Graph &g = f.graph();
  if (s < 3)
    throw std::invalid_argument("proposition 3 needs s >= 3");
  if (!(k_const >= 2))
    throw std::invalid_argument("proposition 3 needs K >= 2");
  if (g.order() < s - 1)
    throw std::invalid_argument("proposition 3 needs n >= s - 1");
  const double n = g.order();
  const double lambda = f.lambda();
  const double need = k_const * std::pow(n, 1.0 - 1.0 / s);
  BoundReport r;
  r.which = "prop3";
  r.details["s"] = s;
  r.details["K"] = k_const;
  r.details["lambda"] = lambda;
  r.details["lambda_threshold"] = need;
  if (lambda < need - relative_tol(lambda, need)) {
    r.verdict = Verdict::kPremiseUnmet;
    r.details["premise"] = "lambda < K n^{1-1/s}";
    return r;
  }
  r.lhs = Quantity::count(count_k2s(g, s));
  r.rhs = Quantity::real(std::pow(k_const, s) * binomial_real(n, s));
  settle(r, false);
  if (s <= 8)
    r.details["sum_pair_degree_s"] = to_string(pair_degree_moment(g, s));
  return r;
}

BoundReport verify_proposition3(const Graph &g, int s, double k_const,
                                const BoundContext &ctx) {
  return verify_proposition3(GraphFacts(g, ctx.spectral), s, k_const);
}

BoundReport verify_proposition4(const GraphFacts &f, const Graph &h, int s,
                                const BoundContext &ctx) {
  const Graph &g = f.graph();
  if (s < 2)
    throw std::invalid_argument("proposition 4 needs s >= 2");
  BoundReport r;
  r.which = "prop4";
  r.details["s"] = s;
  const RamseyValue rv = ctx.ramsey.lookup(h, s);
  r.ramsey_provenance.push_back(provenance("R(H,K_s)", h, s, rv));
  if (auto w = find_copy(g, h, ctx.limits))
    return premise_unmet(std::move(r), "H", map_to_vector(*w), "G contains H");

  const double n = g.order();
  const double u = upper_of(rv);
  const double ratio = binomial_real(n, s) / binomial_real(u, s);
  r.lhs = Quantity::count(independent_set_count(g, s, ctx.limits));
  r.rhs = Quantity::real(ratio - 1.0);
  settle(r, false);
  r.details["R_upper"] = rv.upper;
  r.details["weakened_rhs"] = !rv.exact;
  r.details["trivial_regime"] = n < u;
  r.details["stronger_form_rhs"] = ratio;
  r.details["stronger_form_holds"] = r.lhs.value - ratio >= -relative_tol(r.lhs.value, ratio);
  return r;
}

BoundReport verify_proposition4(const Graph &g, const Graph &h, int s,
                                const BoundContext &ctx) {
  return verify_proposition4(GraphFacts(g, ctx.spectral), h, s, ctx);
}

BoundReport theorem_verdict(const GraphFacts &f, const BoundParams &p, Theorem which,
                            const BoundContext &ctx) {
  const Graph &g = f.graph();
  const double n = g.order();
  const bool th1 = which == Theorem::kTh1;
  const Threshold th = th1 ? th1_threshold(p, n, ctx.ramsey) : th0_threshold(p, n, ctx.ramsey);
  const int a = th1 ? p.s : 2;
  const int b = p.t;

  BoundReport r;
  r.which = th1 ? "th1" : "th0";
  r.ramsey_provenance = th.provenance;
  r.details["s"] = a;
  r.details["t"] = b;
  if (!th1)
    r.details["r"] = p.r;
  r.details["K"] = th.k_const;
  r.details["K_min"] = th.k_min;

  if (th.k_const < th.k_min * (1 - 1e-12)) {
    r.verdict = Verdict::kPremiseUnmet;
    r.details["premise"] = "K below the Ramsey-derived minimum";
    return r;
  }
  if (th1) {
    if (auto w = find_copy(g, p.h, ctx.limits))
      return premise_unmet(std::move(r), "H", map_to_vector(*w), "G contains H");
  } else if (f.omega() > p.r) {
    std::vector<int> c(f.max_clique().begin(), f.max_clique().begin() + p.r + 1);
    return premise_unmet(std::move(r), "clique", std::move(c), "G contains K_{r+1}");
  }

  const double lambda = f.lambda();
  r.lhs = Quantity::real(lambda);
  r.rhs = Quantity::real(th.value);
  r.margin = lambda - th.value;
  r.tol = relative_tol(lambda, th.value);

  // Intermediate quantities; both chains hold for every graph meeting the
  // forbidden-subgraph premise, regardless of lambda.
  try {
    const BigCount sum = independent_pair_degree_sum(g, a, ctx.limits);
    r.details["independent_pair_degree_sum"] = to_string(sum);
    if (th1) {
      const double main_rhs = binomial_real(upper_of(ctx.ramsey.lookup(p.h, p.t)), 2)
                            * binomial_real(n, a);
      r.details["main_rhs"] = main_rhs;
      r.details["main_holds"] = to_double(sum) >= main_rhs - relative_tol(to_double(sum), main_rhs);
      const double rs = upper_of(ctx.ramsey.lookup(p.h, a));
      const double in6 = -binomial_real(n, 2)
                       + to_double(pair_binomial_sum(g, a)) / binomial_real(rs, a);
      r.details["in6_rhs"] = in6;
      r.details["in6_holds"] = to_double(sum) >= in6 - relative_tol(to_double(sum), in6);
    } else {
      const double chain = lambda * lambda * (lambda * lambda - p.r * n) / (4.0 * (p.r - 1));
      r.details["chain_rhs"] = chain;
      r.details["chain_holds"] = to_double(sum) >= chain - relative_tol(to_double(sum), chain);
      r.details["target_rhs"] = th.k_const * binomial_real(n, 2);
    }
  } catch (const BudgetExceeded &e) {
    r.details["intermediates"] = std::string("withheld: ") + e.what();
  }

  if (r.margin < -r.tol) {
    r.verdict = Verdict::kVacuous;
    r.details["premise"] = "lambda below threshold";
    return r;
  }
  const PatternResult found = find_kst(g, a, b, PatternMode::kInduced, ctx.limits);
  if (found.found()) {
    r.verdict = Verdict::kHolds;
    r.witness = Witness { "induced_K" + std::to_string(a) + "," + std::to_string(b),
                          map_to_vector(*found.witness) };
  } else {
    r.verdict = Verdict::kFails;
    r.details["falsification_event"] = true;
  }
  return r;
}

BoundReport theorem_verdict(const Graph &g, const BoundParams &p, Theorem which,
                            const BoundContext &ctx) {
  return theorem_verdict(GraphFacts(g, ctx.spectral), p, which, ctx);
}

BoundReport verify_c5_pair_count(const GraphFacts &f, const BoundContext &ctx) {
  const Graph &g = f.graph();
  BoundReport r;
  r.which = "c5pair";
  if (g.order() >= 5) {
    if (auto w = find_copy(g, cycle_graph(5), ctx.limits))
      return premise_unmet(std::move(r), "C5", map_to_vector(*w), "G contains C5");
  }
  const int n = g.order();
  std::map<std::pair<int, int>, int> mult;
  BigCount lhs = 0;
  BigCount sum_codeg = 0;
  for (const Edge &e : g.edges()) {
    std::vector<int> common;
    for (std::size_t w = 0; w < static_cast<std::size_t>(g.words_per_row()); ++w) {
      Word m = g.row(e.u)[w] & g.row(e.v)[w];
      while (m) {
        common.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(m));
        m &= m - 1;
      }
    }
    const auto d = static_cast<std::int64_t>(common.size());
    lhs = checked_add(lhs, binomial(d, 2));
    sum_codeg = checked_add(sum_codeg, static_cast<BigCount>(d));
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        ++mult[{ common[i], common[j] }];
  }
  r.lhs = Quantity::count(lhs);
  r.rhs = Quantity::count(binomial(n, 2));
  settle(r, true);

  int max_mult = 0;
  for (const auto &[pair, c] : mult)
    max_mult = std::max(max_mult, c);
  r.details["pairs_covered"] = mult.size();
  r.details["max_pair_multiplicity"] = max_mult;
  r.details["sum_edge_codegree"] = to_string(sum_codeg);
  r.details["triangles"] = count_triangles(g);
  if (n <= 64) {
    json list = json::array();
    for (const auto &[pair, c] : mult)
      list.push_back({ pair.first, pair.second, c });
    r.details["multiplicities"] = std::move(list);
  }
  return r;
}

BoundReport verify_c5_pair_count(const Graph &g, const BoundContext &ctx) {
  return verify_c5_pair_count(GraphFacts(g, ctx.spectral), ctx);
}

BoundReport verify_corollary(const GraphFacts &f, const BoundParams &p,
                             const BoundContext &ctx) {
  const Graph &g = f.graph();
  const Threshold th = corollary_edge_bound(p, g.order(), ctx.ramsey);
  BoundReport r;
  r.which = "corollary";
  r.ramsey_provenance = th.provenance;
  r.details["s"] = p.s;
  r.details["t"] = p.t;
  if (auto w = find_copy(g, p.h, ctx.limits))
    return premise_unmet(std::move(r), "H", map_to_vector(*w), "G contains H");
  if (auto w = find_kst(g, p.s, p.t, PatternMode::kInduced, ctx.limits).witness)
    return premise_unmet(std::move(r), "induced_K" + std::to_string(p.s) + "," + std::to_string(p.t),
                         map_to_vector(*w), "G contains an induced K_{s,t}");
  r.lhs = Quantity::count(static_cast<BigCount>(g.edge_count()));
  r.rhs = Quantity::real(th.value);
  settle(r, true);
  return r;
}

BoundReport verify_nikiforov(const GraphFacts &f, int s, int t, const BoundContext &ctx) {
  const Graph &g = f.graph();
  BoundReport r;
  r.which = "nikiforov";
  r.details["s"] = s;
  r.details["t"] = t;
  if (auto w = find_kst(g, s, t, PatternMode::kSubgraph, ctx.limits).witness)
    return premise_unmet(std::move(r), "K" + std::to_string(s) + "," + std::to_string(t),
                         map_to_vector(*w), "G contains K_{s,t}");
  const double bound = g.order() >= 1 ? nikiforov_kst_bound(s, t, g.order()) : 0.0;
  r.lhs = Quantity::real(f.lambda());
  r.rhs = Quantity::real(bound);
  settle(r, true);
  return r;
}

}  // namespace btr
