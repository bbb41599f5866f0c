//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/dense_eigen.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "btr/common.h"

namespace btr {
namespace {

class Tridiagonalizer {
public:
  Tridiagonalizer(std::vector<double> &v, std::vector<double> &d,
                  std::vector<double> &e, int n)
      : v_(v), d_(d), e_(e), n_(n) { }

  double &V(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }

  // Householder reduction to tridiagonal form, accumulating the orthogonal
  // transformation in V.
  void reduce() {
    const int n = n_;
    for (int j = 0; j < n; ++j)
      d_[j] = V(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
      double scale = 0.0;
      double h = 0.0;
      for (int k = 0; k < i; ++k)
        scale += std::abs(d_[k]);
      if (scale == 0.0) {
        e_[i] = d_[i - 1];
        for (int j = 0; j < i; ++j) {
          d_[j] = V(i - 1, j);
          V(i, j) = 0.0;
          V(j, i) = 0.0;
        }
      } else {
        for (int k = 0; k < i; ++k) {
          d_[k] /= scale;
          h += d_[k] * d_[k];
        }
        double f = d_[i - 1];
        double g = std::sqrt(h);
        if (f > 0)
          g = -g;
        e_[i] = scale * g;
        h -= f * g;
        d_[i - 1] = f - g;
        for (int j = 0; j < i; ++j)
          e_[j] = 0.0;

        for (int j = 0; j < i; ++j) {
          f = d_[j];
          V(j, i) = f;
          g = e_[j] + V(j, j) * f;
          for (int k = j + 1; k <= i - 1; ++k) {
            g += V(k, j) * d_[k];
            e_[k] += V(k, j) * f;
          }
          e_[j] = g;
        }
        f = 0.0;
        for (int j = 0; j < i; ++j) {
          e_[j] /= h;
          f += e_[j] * d_[j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j < i; ++j)
          e_[j] -= hh * d_[j];
        for (int j = 0; j < i; ++j) {
          f = d_[j];
          g = e_[j];
          for (int k = j; k <= i - 1; ++k)
            V(k, j) -= (f * e_[k] + g * d_[k]);
          d_[j] = V(i - 1, j);
          V(i, j) = 0.0;
        }
      }
      d_[i] = h;
    }

    for (int i = 0; i < n - 1; ++i) {
      V(n - 1, i) = V(i, i);
      V(i, i) = 1.0;
      const double h = d_[i + 1];
      if (h != 0.0) {
        for (int k = 0; k <= i; ++k)
          d_[k] = V(k, i + 1) / h;
        for (int j = 0; j <= i; ++j) {
          double g = 0.0;
          for (int k = 0; k <= i; ++k)
            g += V(k, i + 1) * V(k, j);
          for (int k = 0; k <= i; ++k)
            V(k, j) -= g * d_[k];
        }
      }
      for (int k = 0; k <= i; ++k)
        V(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
      d_[j] = V(n - 1, j);
      V(n - 1, j) = 0.0;
    }
    V(n - 1, n - 1) = 1.0;
    e_[0] = 0.0;
  }

  // Implicit QL iterations on the tridiagonal (d, e).
  void diagonalize() {
    const int n = n_;
    for (int i = 1; i < n; ++i)
      e_[i - 1] = e_[i];
    e_[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_sweeps = 60 * std::max(n, 1);
    for (int l = 0; l < n; ++l) {
      tst1 = std::max(tst1, std::abs(d_[l]) + std::abs(e_[l]));
      int m = l;
      while (m < n) {
        if (std::abs(e_[m]) <= eps * tst1)
          break;
        ++m;
      }
      if (m == n)
        m = n - 1;

      if (m > l) {
        int iter = 0;
        do {
          if (++iter > max_sweeps)
            throw ConvergenceError("implicit QL did not converge",
                                   std::abs(e_[l]));
          double g = d_[l];
          double p = (d_[l + 1] - g) / (2.0 * e_[l]);
          double r = std::hypot(p, 1.0);
          if (p < 0)
            r = -r;
          d_[l] = e_[l] / (p + r);
          d_[l + 1] = e_[l] * (p + r);
          const double dl1 = d_[l + 1];
          double h = g - d_[l];
          for (int i = l + 2; i < n; ++i)
            d_[i] -= h;
          f += h;

          p = d_[m];
          double c = 1.0, c2 = 1.0, c3 = 1.0;
          const double el1 = e_[l + 1];
          double s = 0.0, s2 = 0.0;
          for (int i = m - 1; i >= l; --i) {
            c3 = c2;
            c2 = c;
            s2 = s;
            g = c * e_[i];
            h = c * p;
            r = std::hypot(p, e_[i]);
            e_[i + 1] = s * r;
            s = e_[i] / r;
            c = p / r;
            p = c * d_[i] - s * g;
            d_[i + 1] = h + s * (c * g + s * d_[i]);
            for (int k = 0; k < n; ++k) {
              h = V(k, i + 1);
              V(k, i + 1) = s * V(k, i) + c * h;
              V(k, i) = c * V(k, i) - s * h;
            }
          }
          p = -s * s2 * c3 * el1 * e_[l] / dl1;
          e_[l] = s * p;
          d_[l] = c * p;
        } while (std::abs(e_[l]) > eps * tst1);
      }
      d_[l] += f;
      e_[l] = 0.0;
    }
  }

private:
  std::vector<double> &v_;
  std::vector<double> &d_;
  std::vector<double> &e_;
  int n_;
};

}  // namespace

SymmetricEigen symmetric_eigen(const std::vector<double> &matrix, int n) {
  if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix size does not match n");
  SymmetricEigen out;
  out.n = n;
  if (n == 0)
    return out;

  std::vector<double> v = matrix;
  std::vector<double> d(n), e(n);
  Tridiagonalizer t(v, d, e, n);
  t.reduce();
  t.diagonalize();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d[a] < d[b]; });
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (int i = 0; i < n; ++i)
      out.vectors[static_cast<std::size_t>(i) * n + k] =
          v[static_cast<std::size_t>(i) * n + order[k]];
  }
  return out;
}

}  // namespace btr
