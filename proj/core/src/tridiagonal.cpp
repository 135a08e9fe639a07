// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/detail/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "tanglekit/errors.hpp"

namespace tanglekit::detail {

// The reduction works on the lower triangle in row-major terms, row i
// holding a(i, 0..i). Column-major Eigen storage makes m(k, i) the contiguous
// view of that row, so L(i, k) below is m(k, i).
Tridiagonal householder_tridiagonalize(Eigen::MatrixXd m, bool accumulate) {
  const Eigen::Index n = m.rows();
  auto L = [&m](Eigen::Index i, Eigen::Index k) -> double& { return m(k, i); };

  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);

  for (Eigen::Index i = n - 1; i >= 1; --i) {
    const Eigen::Index l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (Eigen::Index k = 0; k <= l; ++k) scale += std::abs(L(i, k));
      if (scale == 0.0) {
        e(i) = L(i, l);
      } else {
        for (Eigen::Index k = 0; k <= l; ++k) {
          L(i, k) /= scale;
          h += L(i, k) * L(i, k);
        }
        double f = L(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e(i) = scale * g;
        h -= f * g;
        L(i, l) = f - g;
        f = 0.0;
        for (Eigen::Index j = 0; j <= l; ++j) {
          if (accumulate) L(j, i) = L(i, j) / h;
          g = 0.0;
          for (Eigen::Index k = 0; k <= j; ++k) g += L(j, k) * L(i, k);
          for (Eigen::Index k = j + 1; k <= l; ++k) g += L(k, j) * L(i, k);
          e(j) = g / h;
          f += e(j) * L(i, j);
        }
        const double hh = f / (h + h);
        for (Eigen::Index j = 0; j <= l; ++j) {
          f = L(i, j);
          g = e(j) - hh * f;
          e(j) = g;
          for (Eigen::Index k = 0; k <= j; ++k) L(j, k) -= f * e(k) + g * L(i, k);
        }
      }
    } else {
      e(i) = L(i, l);
    }
    d(i) = h;
  }

  Tridiagonal out;
  if (accumulate) {
    d(0) = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index l = i - 1;
      if (d(i) != 0.0) {
        for (Eigen::Index j = 0; j <= l; ++j) {
          double g = 0.0;
          for (Eigen::Index k = 0; k <= l; ++k) g += L(i, k) * L(k, j);
          for (Eigen::Index k = 0; k <= l; ++k) L(k, j) -= g * L(k, i);
        }
      }
      d(i) = L(i, i);
      L(i, i) = 1.0;
      for (Eigen::Index j = 0; j <= l; ++j) {
        L(j, i) = 0.0;
        L(i, j) = 0.0;
      }
    }
    // L(i, k) is Q(i, k); undo the storage transpose.
    out.transform = m.transpose();
  } else {
    for (Eigen::Index i = 0; i < n; ++i) d(i) = L(i, i);
  }
  out.diagonal = std::move(d);
  out.off_diagonal = std::move(e);
  return out;
}

void implicit_ql(Eigen::VectorXd& d, Eigen::VectorXd e, Eigen::MatrixXd* z, int max_iterations) {
  const Eigen::Index n = d.size();
  if (n == 0) return;
  for (Eigen::Index i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Off-diagonals below eps * |T| are negligible even when the neighboring
  // diagonal entries are themselves round-off, which the relative test alone
  // never accepts.
  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) norm = std::max(norm, std::abs(d(i)) + std::abs(e(i)));
  const double floor = eps * norm;

  for (Eigen::Index l = 0; l < n; ++l) {
    int iterations = 0;
    Eigen::Index m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d(m)) + std::abs(d(m + 1));
        if (std::abs(e(m)) <= eps * dd || std::abs(e(m)) <= floor) break;
      }
      if (m == l) break;
      if (++iterations > max_iterations) {
        throw NumericalError("implicit QL did not converge within " + std::to_string(max_iterations) +
                             " iterations");
      }
      // Wilkinson shift from the leading 2x2 block.
      double g = (d(l + 1) - d(l)) / (2.0 * e(l));
      double r = std::hypot(g, 1.0);
      g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (Eigen::Index i = m - 1; i >= l; --i) {
        const double f = s * e(i);
        const double b = c * e(i);
        r = std::hypot(f, g);
        e(i + 1) = r;
        if (r == 0.0) {
          d(i + 1) -= p;
          e(m) = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + 2.0 * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (Eigen::Index k = 0; k < z->rows(); ++k) {
            const double t = (*z)(k, i + 1);
            (*z)(k, i + 1) = s * (*z)(k, i) + c * t;
            (*z)(k, i) = c * (*z)(k, i) - s * t;
          }
        }
      }
      if (underflow) continue;
      d(l) -= p;
      e(l) = g;
      e(m) = 0.0;
    } while (m != l);
  }
}

EigenSystem symmetric_eigensystem(const Eigen::MatrixXd& a, bool want_vectors) {
  if (a.rows() != a.cols()) throw InvalidArgument("eigensolver needs a square matrix");
  Tridiagonal t = householder_tridiagonalize(a, want_vectors);
  implicit_ql(t.diagonal, t.off_diagonal, want_vectors ? &t.transform : nullptr);

  const Eigen::Index n = t.diagonal.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return t.diagonal(x) < t.diagonal(y); });

  EigenSystem out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.values(j) = t.diagonal(src);
    if (want_vectors) out.vectors.col(j) = t.transform.col(src);
  }
  return out;
}

}  // namespace tanglekit::detail
