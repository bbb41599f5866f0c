//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_SPECTRAL_H_
#define BTR_SPECTRAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "btr/graph.h"

namespace btr {

inline constexpr int kDefaultDenseCap = 2048;

// BTR_DENSE_CAP overrides the default when set to a positive integer.
int default_dense_cap();

enum class SpectralMode { kDenseFull, kPowerIteration };

std::string_view to_string(SpectralMode mode);

struct SpectralOptions {
  SpectralMode mode = SpectralMode::kDenseFull;
  double tol = 1e-10;
  int max_iterations = 100000;
  int dense_cap = default_dense_cap();
};

struct SpectralSummary {
  double lambda = 0.0;
  // Descending; present only when the dense backend ran.
  std::optional<std::vector<double>> eigenvalues;
  // Unit 2-norm, nonnegative, supported on one component attaining lambda.
  std::vector<double> perron;
  // Closed 4-walks, exact; filled by full_spectrum().
  std::optional<std::int64_t> cw4;
  SpectralMode method = SpectralMode::kDenseFull;
  double residual = 0.0;
};

// Largest adjacency eigenvalue, computed per connected component.
// Throws std::invalid_argument for n = 0 and ConvergenceError when power
// iteration exhausts its budget.
SpectralSummary spectral_radius(const Graph &g, const SpectralOptions &opts = {});

// Power iteration warm-started from `start` (length n; e.g. the previous
// Perron vector). Used by the search loop.
SpectralSummary spectral_radius_from(const Graph &g, std::span<const double> start,
                                     const SpectralOptions &opts);

// All n eigenvalues plus exact CW4. Throws std::invalid_argument above the
// dense cap.
SpectralSummary full_spectrum(const Graph &g, const SpectralOptions &opts = {});

// trace(A^4), cross-checked against 8 C4 + 2 sum d(v)^2 - 2 e(G).
// Throws InternalError if the two disagree.
std::int64_t closed_walks_4(const Graph &g);

// lambda^2 - (1/n) sum_v d(v)^2; never below -tol.
double hofmeister_margin(const Graph &g, const SpectralOptions &opts = {});
double hofmeister_margin(const Graph &g, double lambda);

// ||A x - lambda x||_2.
double eigen_residual(const Graph &g, std::span<const double> x, double lambda);

}  // namespace btr

#endif  // BTR_SPECTRAL_H_
