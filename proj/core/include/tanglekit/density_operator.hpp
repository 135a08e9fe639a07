// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "tanglekit/basis.hpp"

namespace tanglekit {

using Amplitude = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Entrywise Hermiticity tolerance, scaled by max(1, largest |entry|).
inline constexpr double kHermitianTolerance = 1e-12;

/// Hermitian operator restricted to an explicit support basis.
///
/// Row and column j of the matrix belong to support()[j]; every element
/// outside the support is zero.
class DensityOperator {
 public:
  /// Throws InvalidArgument unless the matrix is square, matches the support
  /// size and is Hermitian within kHermitianTolerance.
  DensityOperator(SupportBasis support, ComplexMatrix matrix);

  [[nodiscard]] int num_qubits() const noexcept { return support_.num_qubits(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return support_.size(); }
  [[nodiscard]] const SupportBasis& support() const noexcept { return support_; }
  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// <a|rho|b>, zero when either state is outside the support.
  [[nodiscard]] Amplitude element(const BasisState& a, const BasisState& b) const;

  [[nodiscard]] Amplitude trace() const { return matrix_.trace(); }

  /// Largest |entry|, or 0 for an empty operator.
  [[nodiscard]] double max_abs_entry() const;

  /// True when every imaginary part is exactly zero.
  [[nodiscard]] bool is_real() const;

  /// Drops support members whose row and column are entirely below tol in
  /// magnitude.
  [[nodiscard]] DensityOperator compacted(double tol = 0.0) const;

 private:
  SupportBasis support_;
  ComplexMatrix matrix_;
};

/// Compares two operators element by element over the union of their
/// supports.
bool approx_equal(const DensityOperator& a, const DensityOperator& b, double tol);

}  // namespace tanglekit
