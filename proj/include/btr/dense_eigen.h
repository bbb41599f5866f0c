//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_DENSE_EIGEN_H_
#define BTR_DENSE_EIGEN_H_

#include <vector>

namespace btr {

// Eigen-decomposition of a dense real symmetric matrix by Householder
// tridiagonalization followed by the implicit QL method.
struct SymmetricEigen {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n; column k pairs values[k]

  double vector_entry(int row, int k) const {
    return vectors[static_cast<std::size_t>(row) * n + k];
  }
};

// `matrix` is row-major n x n and must be symmetric. Throws
// ConvergenceError if QL fails to converge.
SymmetricEigen symmetric_eigen(const std::vector<double> &matrix, int n);

}  // namespace btr

#endif  // BTR_DENSE_EIGEN_H_
