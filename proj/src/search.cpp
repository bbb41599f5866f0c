//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/search.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>
#include <utility>

#include "btr/parallel.h"
#include "btr/spectral.h"

namespace btr {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Queries {
  std::vector<PatternQuery> subgraph;
  std::vector<PatternQuery> induced;

  explicit Queries(const ConstraintSet &c) {
    for (const Graph &h : c.subgraphs)
      subgraph.emplace_back(h, PatternMode::kSubgraph);
    for (const Graph &h : c.induced)
      induced.emplace_back(h, PatternMode::kInduced);
    for (const KstConstraint &k : c.induced_kst)
      induced.push_back(PatternQuery::complete_bipartite(k.s, k.t, PatternMode::kInduced));
  }

  // A toggle of uv can only create embeddings that use both u and v; a
  // removal cannot create a (non-induced) subgraph copy.
  bool toggle_ok(const Graph &g, int u, int v, bool added,
                 const SearchLimits &limits) const {
    if (added)
      for (const auto &q : subgraph)
        if (find_pattern_touching(g, q, u, v, limits).found())
          return false;
    for (const auto &q : induced)
      if (find_pattern_touching(g, q, u, v, limits).found())
        return false;
    return true;
  }
};

struct RunResult {
  Graph best;
  double best_lambda = 0.0;
  std::vector<TracePoint> trace;
  std::int64_t moves = 0;
  int resets = 0;
};

RunResult run_restart(const SearchConfig &cfg, const Queries &queries, int index,
                      const SearchProgress &progress) {
  const int n = cfg.n;
  const Schedule &sch = cfg.schedule;
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(index))));

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  const int npairs = static_cast<int>(pairs.size());
  const int tabu_cap = std::max(0, std::min(sch.tabu, npairs / 2));

  SpectralOptions power;
  power.mode = SpectralMode::kPowerIteration;
  power.tol = sch.power_tol;
  SpectralOptions dense;
  dense.mode = SpectralMode::kDenseFull;

  RunResult out;
  Graph g = Graph::empty(n);
  SpectralSummary cur = spectral_radius(g, dense);
  double temp = sch.t0;
  std::deque<int> tabu;
  std::int64_t accepted = 0;
  int rejections = 0;
  out.best = g;
  out.best_lambda = cur.lambda;

  auto reset = [&] {
    g = Graph::empty(n);
    cur = spectral_radius(g, dense);
    temp = sch.t0;
    tabu.clear();
    rejections = 0;
    ++out.resets;
  };

  for (std::int64_t step = 1; step <= cfg.budget; ++step) {
    out.moves = step;
    int p = 0;
    for (int tries = 0; tries < 64; ++tries) {
      p = static_cast<int>(rng() % static_cast<std::uint64_t>(npairs));
      if (std::find(tabu.begin(), tabu.end(), p) == tabu.end())
        break;
    }
    const auto [u, v] = pairs[p];
    Graph next = g.toggled(u, v);
    const bool added = next.adjacent(u, v);

    bool accept = false;
    SpectralSummary cand;
    if (queries.toggle_ok(next, u, v, added, cfg.limits)) {
      cand = spectral_radius_from(next, cur.perron, power);
      const double delta = cand.lambda - cur.lambda;
      accept = delta >= 0 || uniform01(rng) < std::exp(delta / temp);
    }

    // Rejected proposals enter as blanks so entries age on every move.
    if (tabu_cap > 0) {
      tabu.push_back(accept ? p : -1);
      if (static_cast<int>(tabu.size()) > tabu_cap)
        tabu.pop_front();
    }
    if (accept) {
      g = std::move(next);
      cur = std::move(cand);
      temp *= sch.cooling;
      rejections = 0;
      if (++accepted % sch.dense_refresh == 0)
        cur = spectral_radius(g, dense);
      if (cur.lambda > out.best_lambda + 1e-9) {
        out.best = g;
        out.best_lambda = cur.lambda;
        out.trace.push_back({ step, cur.lambda });
      }
    } else if (++rejections >= sch.plateau) {
      reset();
    }

    if (progress && cfg.log_every > 0 && step % cfg.log_every == 0)
      progress(index, step, out.best_lambda);
  }
  return out;
}

}  // namespace

bool ConstraintSet::satisfied_by(const Graph &g, const SearchLimits &limits) const {
  for (const Graph &h : subgraphs)
    if (find_pattern(g, PatternQuery(h, PatternMode::kSubgraph), limits).found())
      return false;
  for (const Graph &h : induced)
    if (find_pattern(g, PatternQuery(h, PatternMode::kInduced), limits).found())
      return false;
  for (const KstConstraint &k : induced_kst)
    if (find_kst(g, k.s, k.t, PatternMode::kInduced, limits).found())
      return false;
  return true;
}

SearchRecord local_search(const SearchConfig &cfg, const SearchProgress &progress) {
  if (cfg.n < 2)
    throw std::invalid_argument("local search needs n >= 2");
  if (cfg.budget <= 0)
    throw std::invalid_argument("local search needs a positive budget");
  if (cfg.restarts < 1)
    throw std::invalid_argument("local search needs restarts >= 1");
  if (cfg.schedule.dense_refresh < 1 || cfg.schedule.plateau < 1
      || !(cfg.schedule.t0 > 0) || !(cfg.schedule.cooling > 0 && cfg.schedule.cooling <= 1))
    throw std::invalid_argument("invalid search schedule");
  for (const KstConstraint &k : cfg.constraints.induced_kst)
    if (k.s < 1 || k.t < 1)
      throw std::invalid_argument("induced K_{s,t} constraint needs s, t >= 1");
  if (!cfg.constraints.satisfied_by(Graph::empty(cfg.n), cfg.limits))
    throw Error("the edgeless start graph violates the constraints");

  const Queries queries(cfg.constraints);
  std::vector<RunResult> runs(static_cast<std::size_t>(cfg.restarts));
  parallel_chunks(cfg.restarts, cfg.jobs, 1, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i)
      runs[i] = run_restart(cfg, queries, static_cast<int>(i), progress);
  });

  SpectralOptions dense;
  dense.mode = SpectralMode::kDenseFull;
  SearchRecord rec;
  rec.seed = cfg.seed;
  rec.config = cfg;
  std::string best_g6;
  for (int i = 0; i < cfg.restarts; ++i) {
    const RunResult &r = runs[i];
    rec.moves_used += r.moves;
    rec.resets += r.resets;
    const double lam = spectral_radius(r.best, dense).lambda;
    const std::string g6 = encode_graph6(r.best);
    const bool better = i == 0 || lam > rec.best_lambda + 1e-9
                     || (std::abs(lam - rec.best_lambda) <= 1e-9 && g6 < best_g6);
    if (better) {
      rec.best = r.best;
      rec.best_lambda = lam;
      rec.trace = r.trace;
      rec.best_restart = i;
      best_g6 = g6;
    }
  }
  if (!cfg.constraints.satisfied_by(rec.best, cfg.limits))
    throw InternalError("search emitted a graph violating its constraints");
  return rec;
}

SearchRecord local_search(int n, const ConstraintSet &c, std::int64_t budget,
                          std::uint64_t seed, int restarts) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.constraints = c;
  cfg.budget = budget;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return local_search(cfg);
}

namespace {

struct ScanPartial {
  std::int64_t scanned = 0;
  std::int64_t feasible = 0;
  std::int64_t best_mask = -1;
  double best_lambda = 0.0;
  std::map<std::string, std::map<std::string, std::int64_t>> histogram;
  std::vector<ScanViolation> violations;
  std::int64_t errors = 0;
  std::vector<std::string> error_samples;
  std::int64_t failed_graphs = 0;
  std::int64_t errored_graphs = 0;
};

constexpr std::size_t kMaxSamples = 20;

}  // namespace

std::vector<ScanOrderResult> exhaustive_scan(const ScanConfig &cfg) {
  if (cfg.n_max > kScanMaxOrder)
    throw std::invalid_argument("exhaustive scan is capped at order 7");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
    throw std::invalid_argument("exhaustive scan needs 1 <= n_min <= n_max");
  for (const auto &name : cfg.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw std::invalid_argument("unknown check '" + name + "'");

  SpectralOptions dense;
  dense.mode = SpectralMode::kDenseFull;
  const bool verify = cfg.objective == ScanObjective::kVerify;
  std::vector<ScanOrderResult> out;

  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const std::int64_t total = std::int64_t { 1 } << (n * (n - 1) / 2);
    const std::int64_t chunk = 1024;
    std::vector<ScanPartial> parts(static_cast<std::size_t>((total + chunk - 1) / chunk));

    parallel_chunks(total, cfg.jobs, chunk, [&](std::int64_t b, std::int64_t e) {
      ScanPartial &part = parts[static_cast<std::size_t>(b / chunk)];
      for (std::int64_t mask = b; mask < e; ++mask) {
        ++part.scanned;
        const Graph g = Graph::from_pair_mask(n, static_cast<std::uint64_t>(mask));
        if (!cfg.constraints.satisfied_by(g, cfg.ctx.limits))
          continue;
        ++part.feasible;
        if (!verify) {
          const double lam = spectral_radius(g, dense).lambda;
          if (part.best_mask < 0 || lam > part.best_lambda + 1e-9) {
            part.best_mask = mask;
            part.best_lambda = lam;
          }
          continue;
        }
        const GraphFacts facts(g, cfg.ctx.spectral);
        bool failed = false;
        bool errored = false;
        for (const auto &name : cfg.checks) {
          try {
            for (BoundReport &r : run_check(name, facts, cfg.check_config, cfg.ctx)) {
              ++part.histogram[name][std::string(to_string(r.verdict))];
              if (r.verdict == Verdict::kFails) {
                failed = true;
                part.violations.push_back({ encode_graph6(g), std::move(r) });
              }
            }
          } catch (const std::exception &ex) {
            ++part.errors;
            errored = true;
            ++part.histogram[name]["error"];
            if (part.error_samples.size() < kMaxSamples)
              part.error_samples.push_back(name + " on " + encode_graph6(g) + ": " + ex.what());
          }
        }
        if (failed)
          ++part.failed_graphs;
        else if (errored)
          ++part.errored_graphs;
      }
    });

    ScanOrderResult res;
    res.n = n;
    std::int64_t best_mask = -1;
    for (ScanPartial &p : parts) {
      res.scanned += p.scanned;
      res.feasible += p.feasible;
      if (p.best_mask >= 0 && (best_mask < 0 || p.best_lambda > res.best_lambda + 1e-9)) {
        best_mask = p.best_mask;
        res.best_lambda = p.best_lambda;
      }
      for (auto &[name, verdicts] : p.histogram)
        for (auto &[v, c] : verdicts)
          res.histogram[name][v] += c;
      for (auto &v : p.violations)
        res.violations.push_back(std::move(v));
      res.errors += p.errors;
      res.failed_graphs += p.failed_graphs;
      res.errored_graphs += p.errored_graphs;
      for (auto &s : p.error_samples)
        if (res.error_samples.size() < kMaxSamples)
          res.error_samples.push_back(std::move(s));
    }
    if (best_mask >= 0)
      res.best = Graph::from_pair_mask(n, static_cast<std::uint64_t>(best_mask));
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<ScanOrderResult> exhaustive_scan(int n_max, const ConstraintSet &c,
                                             ScanObjective objective) {
  ScanConfig cfg;
  cfg.n_max = n_max;
  cfg.constraints = c;
  cfg.objective = objective;
  if (objective == ScanObjective::kVerify)
    cfg.checks = { "prop1" };
  return exhaustive_scan(cfg);
}

}  // namespace btr
