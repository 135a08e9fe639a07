// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/density_operator.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "tanglekit/errors.hpp"

namespace tanglekit {

DensityOperator::DensityOperator(SupportBasis support, ComplexMatrix matrix)
    : support_(std::move(support)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(support_.size());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw InvalidArgument("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " but the support has " +
                          std::to_string(d) + " states");
  }
  const double tol = kHermitianTolerance * std::max(1.0, max_abs_entry());
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i) {
      if (std::abs(matrix_(i, j) - std::conj(matrix_(j, i))) > tol) {
        throw InvalidArgument("operator is not Hermitian at (" + support_[static_cast<std::size_t>(i)].to_string() +
                              ", " + support_[static_cast<std::size_t>(j)].to_string() + ")");
      }
    }
  }
}

Amplitude DensityOperator::element(const BasisState& a, const BasisState& b) const {
  const auto i = support_.lookup(a);
  const auto j = support_.lookup(b);
  if (!i || !j) return {0.0, 0.0};
  return matrix_(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*j));
}

double DensityOperator::max_abs_entry() const {
  return matrix_.size() == 0 ? 0.0 : matrix_.cwiseAbs().maxCoeff();
}

bool DensityOperator::is_real() const {
  return matrix_.size() == 0 || matrix_.imag().cwiseAbs().maxCoeff() == 0.0;
}

DensityOperator DensityOperator::compacted(double tol) const {
  const auto d = static_cast<Eigen::Index>(dimension());
  std::vector<Eigen::Index> keep;
  std::vector<BasisState> states;
  for (Eigen::Index i = 0; i < d; ++i) {
    const bool live = (matrix_.row(i).cwiseAbs().array() > tol).any() ||
                      (matrix_.col(i).cwiseAbs().array() > tol).any();
    if (live) {
      keep.push_back(i);
      states.push_back(support_[static_cast<std::size_t>(i)]);
    }
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  ComplexMatrix m(k, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    for (Eigen::Index r = 0; r < k; ++r) {
      m(r, c) = matrix_(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(c)]);
    }
  }
  return DensityOperator(SupportBasis(num_qubits(), std::move(states)), std::move(m));
}

bool approx_equal(const DensityOperator& a, const DensityOperator& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  const SupportBasis all = union_support(a.support(), b.support());
  for (const auto& row : all) {
    for (const auto& col : all) {
      if (std::abs(a.element(row, col) - b.element(row, col)) > tol) return false;
    }
  }
  return true;
}

}  // namespace tanglekit
