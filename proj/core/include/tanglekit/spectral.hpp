// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "tanglekit/density_operator.hpp"

namespace tanglekit {

/// Relative scale of the negative-eigenvalue cutoff; see negative_threshold().
inline constexpr double kNegativeEigenvalueScale = 1e-12;

/// Input Hermiticity tolerance of the eigensolver, scaled like the cutoff.
inline constexpr double kSolverHermitianTolerance = 1e-10;

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, with multiplicity
  double negative_sum = 0.0;        // sum of |lambda| over lambda < -threshold
  double trace = 0.0;               // sum of the eigenvalues
  double threshold = 0.0;           // cutoff used for negative_sum

  [[nodiscard]] std::size_t negative_count() const;
  [[nodiscard]] double trace_norm() const;
};

/// Cutoff 1e-12 * max(1, largest |entry|) below which eigenvalues count as
/// negative.
double negative_threshold(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix. Real input goes straight to the real
/// symmetric solver. Complex input is embedded as [[Re, -Im], [Im, Re]] and
/// the doubled spectrum is halved. Throws InvalidArgument on non-Hermitian
/// input.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

/// Always takes the complex embedding path, even for real input.
Spectrum hermitian_eigenvalues_via_embedding(const ComplexMatrix& m);

Spectrum symmetric_eigenvalues(const RealMatrix& m);

Spectrum spectrum_of(const DensityOperator& rho);

/// 2 * sum of |lambda| over the negative eigenvalues.
double negativity(const DensityOperator& rho);
double negativity(const Spectrum& spectrum);

/// Sum of |lambda|.
double trace_norm(const DensityOperator& rho);

}  // namespace tanglekit
