// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tanglekit/detail/tridiagonal.hpp"
#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

double entry_scale(const ComplexMatrix& m) {
  return std::max(1.0, m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff());
}

void check_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("eigenvalues need a square matrix");
  if (m.rows() == 0) throw InvalidArgument("eigenvalues of an empty matrix");
  const double tol = kSolverHermitianTolerance * entry_scale(m);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j; i < m.rows(); ++i) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        throw InvalidArgument("matrix is not Hermitian at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
}

Spectrum summarize(std::vector<double> values, double threshold) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.threshold = threshold;
  for (double v : values) {
    if (!std::isfinite(v)) throw NumericalError("eigensolver produced a non-finite eigenvalue");
    s.trace += v;
    if (v < -threshold) s.negative_sum -= v;
  }
  s.eigenvalues = std::move(values);
  return s;
}

std::vector<double> real_eigenvalues(const RealMatrix& m) {
  const auto sys = detail::symmetric_eigensystem(m, false);
  return {sys.values.data(), sys.values.data() + sys.values.size()};
}

std::vector<double> embedded_eigenvalues(const ComplexMatrix& m) {
  const Eigen::Index d = m.rows();
  RealMatrix big(2 * d, 2 * d);
  big.topLeftCorner(d, d) = m.real();
  big.topRightCorner(d, d) = -m.imag();
  big.bottomLeftCorner(d, d) = m.imag();
  big.bottomRightCorner(d, d) = m.real();
  auto doubled = real_eigenvalues(big);
  std::sort(doubled.begin(), doubled.end());
  // Every eigenvalue of m appears twice in the embedding.
  std::vector<double> values(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] = 0.5 * (doubled[2 * j] + doubled[2 * j + 1]);
  }
  return values;
}

}  // namespace

std::size_t Spectrum::negative_count() const {
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double v) { return v < -threshold; }));
}

double Spectrum::trace_norm() const {
  double sum = 0.0;
  for (double v : eigenvalues) sum += std::abs(v);
  return sum;
}

double negative_threshold(const ComplexMatrix& m) { return kNegativeEigenvalueScale * entry_scale(m); }

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  check_hermitian(m);
  const bool real = m.imag().cwiseAbs().maxCoeff() == 0.0;
  if (real) return summarize(real_eigenvalues(m.real()), negative_threshold(m));
  return summarize(embedded_eigenvalues(m), negative_threshold(m));
}

Spectrum hermitian_eigenvalues_via_embedding(const ComplexMatrix& m) {
  check_hermitian(m);
  return summarize(embedded_eigenvalues(m), negative_threshold(m));
}

Spectrum symmetric_eigenvalues(const RealMatrix& m) {
  return hermitian_eigenvalues(m.cast<Amplitude>());
}

Spectrum spectrum_of(const DensityOperator& rho) { return hermitian_eigenvalues(rho.matrix()); }

double negativity(const Spectrum& spectrum) { return 2.0 * spectrum.negative_sum; }

double negativity(const DensityOperator& rho) { return negativity(spectrum_of(rho)); }

double trace_norm(const DensityOperator& rho) { return spectrum_of(rho).trace_norm(); }

}  // namespace tanglekit
