//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/spectral.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "btr/counting.h"
#include "btr/dense_eigen.h"

namespace btr {
namespace {

struct ComponentSpectrum {
  double lambda = 0.0;
  std::vector<double> x;  // local coordinates
  std::vector<double> eigenvalues;
};

std::vector<std::vector<int>> local_adjacency(const Graph &g,
                                              const std::vector<int> &verts,
                                              std::vector<int> &local) {
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    local[verts[i]] = i;
  std::vector<std::vector<int>> adj(verts.size());
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    bits::for_each(g.row(verts[i]),
                   [&](int w) { adj[i].push_back(local[w]); });
  return adj;
}

ComponentSpectrum dense_component(const Graph &g,
                                  const std::vector<int> &verts) {
  const int k = static_cast<int>(verts.size());
  std::vector<double> a(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.adjacent(verts[i], verts[j]))
        a[static_cast<std::size_t>(i) * k + j] = 1.0;
  const SymmetricEigen eig = symmetric_eigen(a, k);
  ComponentSpectrum out;
  out.lambda = eig.values.back();
  out.x.resize(k);
  for (int i = 0; i < k; ++i)
    out.x[i] = eig.vector_entry(i, k - 1);
  out.eigenvalues = eig.values;
  return out;
}

ComponentSpectrum power_component(const std::vector<std::vector<int>> &adj,
                                  std::vector<double> x,
                                  const SpectralOptions &opts) {
  const int k = static_cast<int>(adj.size());
  ComponentSpectrum out;
  if (k == 1) {
    out.x = { 1.0 };
    return out;
  }
  int shift = 0;
  for (const auto &nb: adj)
    shift = std::max(shift, static_cast<int>(nb.size()));

  const auto normalize = [](std::vector<double> &v) {
    double s = 0.0;
    for (double e: v)
      s += e * e;
    s = std::sqrt(s);
    for (double &e: v)
      e /= s;
  };
  normalize(x);

  std::vector<double> y(k);
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opts.max_iterations; ++it) {
    for (int i = 0; i < k; ++i) {
      double s = 0.0;
      for (int j: adj[i])
        s += x[j];
      y[i] = s;
    }
    double lambda = 0.0;
    for (int i = 0; i < k; ++i)
      lambda += x[i] * y[i];
    double r2 = 0.0;
    for (int i = 0; i < k; ++i) {
      const double d = y[i] - lambda * x[i];
      r2 += d * d;
    }
    residual = std::sqrt(r2);
    if (residual <= opts.tol * std::max(1.0, lambda)) {
      out.lambda = lambda;
      out.x = std::move(x);
      return out;
    }
    for (int i = 0; i < k; ++i)
      x[i] = y[i] + shift * x[i];
    normalize(x);
  }
  throw ConvergenceError("power iteration exceeded "
                             + std::to_string(opts.max_iterations)
                             + " iterations",
                         residual);
}

void fix_sign(std::vector<double> &x, double tol) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[arg]))
      arg = i;
  if (!x.empty() && x[arg] < 0)
    for (double &e: x)
      e = -e;
  const double clamp = std::max(tol, 1e-12);
  double s = 0.0;
  for (double &e: x) {
    if (e < 0) {
      if (e < -clamp)
        throw InternalError("Perron vector has a negative entry "
                            + std::to_string(e));
      e = 0.0;
    }
    s += e * e;
  }
  s = std::sqrt(s);
  for (double &e: x)
    e /= s;
}

SpectralSummary assemble(const Graph &g,
                         const std::vector<std::vector<int>> &comps,
                         std::vector<ComponentSpectrum> &specs,
                         SpectralMode mode, double tol) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < specs.size(); ++c)
    if (specs[c].lambda > specs[best].lambda)
      best = c;

  SpectralSummary out;
  out.method = mode;
  out.lambda = specs[best].lambda;
  fix_sign(specs[best].x, tol);
  out.perron.assign(g.order(), 0.0);
  for (std::size_t i = 0; i < comps[best].size(); ++i)
    out.perron[comps[best][i]] = specs[best].x[i];

  if (mode == SpectralMode::kDenseFull) {
    std::vector<double> all;
    all.reserve(g.order());
    for (const auto &s: specs)
      all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    out.eigenvalues = std::move(all);
  }
  out.residual = eigen_residual(g, out.perron, out.lambda);
  return out;
}

SpectralSummary power_run(const Graph &g, std::span<const double> start,
                          const SpectralOptions &opts) {
  const auto comps = connected_components(g);
  std::vector<int> local(g.order(), -1);
  std::vector<ComponentSpectrum> specs;
  specs.reserve(comps.size());
  for (const auto &verts: comps) {
    const auto adj = local_adjacency(g, verts, local);
    std::vector<double> x(verts.size(), 1.0);
    if (!start.empty())
      for (std::size_t i = 0; i < verts.size(); ++i)
        x[i] = std::abs(start[verts[i]]) + 1e-3;
    specs.push_back(power_component(adj, std::move(x), opts));
  }
  return assemble(g, comps, specs, SpectralMode::kPowerIteration, opts.tol);
}

}  // namespace

int default_dense_cap() {
  if (const char *env = std::getenv("BTR_DENSE_CAP")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(std::min<long>(v, 1 << 20));
  }
  return kDefaultDenseCap;
}

std::string_view to_string(SpectralMode mode) {
  return mode == SpectralMode::kDenseFull ? "dense_full" : "power_iteration";
}

double eigen_residual(const Graph &g, std::span<const double> x,
                      double lambda) {
  double r2 = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    double s = 0.0;
    bits::for_each(g.row(i), [&](int j) { s += x[j]; });
    const double d = s - lambda * x[i];
    r2 += d * d;
  }
  return std::sqrt(r2);
}

SpectralSummary spectral_radius(const Graph &g, const SpectralOptions &opts) {
  if (g.order() == 0)
    throw std::invalid_argument("spectral radius of the empty graph");
  if (opts.mode == SpectralMode::kPowerIteration)
    return power_run(g, {}, opts);

  const auto comps = connected_components(g);
  std::vector<ComponentSpectrum> specs;
  specs.reserve(comps.size());
  for (const auto &verts: comps) {
    if (static_cast<int>(verts.size()) > opts.dense_cap)
      throw std::invalid_argument(
          "component of order " + std::to_string(verts.size())
          + " exceeds the dense eigensolver cap "
          + std::to_string(opts.dense_cap));
    specs.push_back(dense_component(g, verts));
  }
  return assemble(g, comps, specs, SpectralMode::kDenseFull, opts.tol);
}

SpectralSummary spectral_radius_from(const Graph &g,
                                     std::span<const double> start,
                                     const SpectralOptions &opts) {
  if (g.order() == 0)
    throw std::invalid_argument("spectral radius of the empty graph");
  if (static_cast<int>(start.size()) != g.order())
    throw std::invalid_argument("warm-start vector has the wrong length");
  return power_run(g, start, opts);
}

SpectralSummary full_spectrum(const Graph &g, const SpectralOptions &opts) {
  if (g.order() > opts.dense_cap)
    throw std::invalid_argument("order " + std::to_string(g.order())
                                + " exceeds the dense eigensolver cap "
                                + std::to_string(opts.dense_cap));
  SpectralOptions dense = opts;
  dense.mode = SpectralMode::kDenseFull;
  SpectralSummary out = spectral_radius(g, dense);
  out.cw4 = closed_walks_4(g);
  return out;
}

std::int64_t closed_walks_4(const Graph &g) {
  const int n = g.order();
  // trace(A^4) = sum_{i,j} (A^2)_{ij}^2, with (A^2)_{ij} = |N(i) & N(j)|.
  BigCount trace = 0;
  BigCount sum_deg_sq = 0;
  for (int i = 0; i < n; ++i) {
    const BigCount d = static_cast<BigCount>(g.degree(i));
    trace = checked_add(trace, d * d);
    sum_deg_sq = checked_add(sum_deg_sq, d * d);
    for (int j = i + 1; j < n; ++j) {
      const BigCount c = static_cast<BigCount>(bits::count_and(g.row(i), g.row(j)));
      trace = checked_add(trace, 2 * c * c);
    }
  }
  const BigCount c4 = static_cast<BigCount>(count_c4(g));
  const BigCount via_c4 = checked_add(checked_mul(8, c4), 2 * sum_deg_sq)
                          - 2 * static_cast<BigCount>(g.edge_count());
  if (via_c4 != trace)
    throw InternalError("CW4 mismatch: trace(A^4) = " + to_string(trace)
                        + " but 8C4 + 2 sum d^2 - 2e = " + to_string(via_c4));
  if (trace > static_cast<BigCount>(std::numeric_limits<std::int64_t>::max()))
    throw OverflowError("CW4 exceeds 64 bits");
  return static_cast<std::int64_t>(trace);
}

double hofmeister_margin(const Graph &g, double lambda) {
  const int n = g.order();
  if (n == 0)
    throw std::invalid_argument("Hofmeister bound needs n >= 1");
  double mean_sq = 0.0;
  for (int v = 0; v < n; ++v) {
    const double d = g.degree(v);
    mean_sq += d * d;
  }
  mean_sq /= n;
  return lambda * lambda - mean_sq;
}

double hofmeister_margin(const Graph &g, const SpectralOptions &opts) {
  return hofmeister_margin(g, spectral_radius(g, opts).lambda);
}

}  // namespace btr
