// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracle/dense_oracle.hpp"
#include "support.hpp"
#include "tanglekit/detail/tridiagonal.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/operators.hpp"
#include "tanglekit/spectral.hpp"
#include "tanglekit/states.hpp"

using namespace tanglekit;

namespace {

ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng, bool real) {
  std::normal_distribution<double> gauss;
  ComplexMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Amplitude(gauss(rng), real ? 0.0 : gauss(rng));
  }
  return (a + a.adjoint()) / 2.0;
}

void check_same(const std::vector<double>& got, std::vector<double> want, double tol) {
  std::sort(want.begin(), want.end());
  REQUIRE(got.size() == want.size());
  for (std::size_t j = 0; j < got.size(); ++j) CHECK_MESSAGE(std::abs(got[j] - want[j]) <= tol, j);
}

}  // namespace

TEST_CASE("identity and diagonal matrices") {
  const auto id = hermitian_eigenvalues(ComplexMatrix::Identity(5, 5));
  check_same(id.eigenvalues, {1, 1, 1, 1, 1}, 0.0);
  CHECK(id.negative_count() == 0);
  ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
  diag.diagonal() << -2.0, 0.5, 3.0;
  const auto s = hermitian_eigenvalues(diag);
  check_same(s.eigenvalues, {-2.0, 0.5, 3.0}, 0.0);
  CHECK(s.negative_sum == 2.0);
  CHECK(s.trace_norm() == doctest::Approx(5.5));
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(0, 0)), InvalidArgument);
}

TEST_CASE("2x2 example") {
  ComplexMatrix m(2, 2);
  m << 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0;
  check_same(hermitian_eigenvalues(m).eigenvalues, {(1 - std::sqrt(5.0)) / 6, (1 + std::sqrt(5.0)) / 6}, 1e-15);
}

TEST_CASE("n times the W(3) transpose has spectrum -sqrt2, 0, 0, 1, sqrt2, 2") {
  const auto pt = partial_transpose(density_of(make_w(3)), 1);
  const auto s = hermitian_eigenvalues(pt.matrix() * 3.0);
  check_same(s.eigenvalues, {-std::sqrt(2.0), 0, 0, 1, std::sqrt(2.0), 2}, 1e-14);
  CHECK(s.negative_count() == 1);
}

TEST_CASE("real and embedding paths agree and match the oracle") {
  std::mt19937_64 rng(31);
  for (Eigen::Index dim : {1, 2, 3, 7, 16, 33}) {
    const ComplexMatrix real = random_hermitian(dim, rng, true);
    const auto direct = hermitian_eigenvalues(real).eigenvalues;
    check_same(direct, oracle::eigenvalues(real), 1e-12);
    check_same(hermitian_eigenvalues_via_embedding(real).eigenvalues, direct, 1e-12);

    const ComplexMatrix complex = random_hermitian(dim, rng, false);
    check_same(hermitian_eigenvalues(complex).eigenvalues, oracle::eigenvalues(complex), 1e-12);
  }
}

TEST_CASE("eigenvectors have small residuals and are orthonormal") {
  std::mt19937_64 rng(37);
  for (Eigen::Index dim : {2, 5, 12, 40}) {
    const Eigen::MatrixXd a = random_hermitian(dim, rng, true).real();
    const auto sys = detail::symmetric_eigensystem(a, true);
    const double residual = (a * sys.vectors - sys.vectors * sys.values.asDiagonal()).cwiseAbs().maxCoeff();
    CHECK(residual <= 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()) * double(dim));
    const Eigen::MatrixXd gram = sys.vectors.transpose() * sys.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::is_sorted(sys.values.data(), sys.values.data() + dim));
  }
}

TEST_CASE("matrices with zero rows and repeated eigenvalues") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 6);
  a(4, 4) = 1.0;
  a(1, 4) = a(4, 1) = 1.0;
  const auto sys = detail::symmetric_eigensystem(a, false);
  const double r = (1 + std::sqrt(5.0)) / 2;
  std::vector<double> got(sys.values.data(), sys.values.data() + 6);
  check_same(got, {1 - r, 0, 0, 0, 0, r}, 1e-14);
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), InvalidArgument);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), InvalidArgument);
  CHECK_THROWS_AS(detail::symmetric_eigensystem(Eigen::MatrixXd::Zero(2, 3), false), InvalidArgument);
}

TEST_CASE("negative threshold scales with the largest entry") {
  CHECK(negative_threshold(ComplexMatrix::Identity(2, 2) * 0.25) == 1e-12);
  CHECK(negative_threshold(ComplexMatrix::Identity(2, 2) * 50.0) == doctest::Approx(5e-11));
  ComplexMatrix tiny = ComplexMatrix::Zero(2, 2);
  tiny(0, 0) = -1e-13;
  tiny(1, 1) = 1.0;
  CHECK(negativity(hermitian_eigenvalues(tiny)) == 0.0);
}

TEST_CASE("trace norm examples") {
  CHECK(std::abs(trace_norm(partial_transpose(density_of(make_w(3)), 1)) - 1.9428090415820636) <= 1e-14);
  CHECK(std::abs(trace_norm(partial_transpose(density_of(make_xi(4)), 1)) - 1.9797958971132712) <= 1e-14);
  CHECK(std::abs(trace_norm(partial_transpose(density_of(make_ghz(5)), 3)) - 2.0) <= 1e-14);
  CHECK(std::abs(trace_norm(partial_transpose(density_of(parse_custom("01 1")), 1)) - 1.0) <= 1e-15);
}

TEST_CASE("negativity equals trace norm minus one for transposed states") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const auto rho = density_of(testing::random_state(n, rng, trial % 2 ? 0 : 5));
    for (int q = 1; q <= n; ++q) {
      const auto s = spectrum_of(partial_transpose(rho, q));
      CHECK(std::abs(negativity(s) - (s.trace_norm() - 1.0)) <= 1e-11);
      CHECK(std::abs(s.trace - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("spectra are invariant under unitary permutation of the basis") {
  std::mt19937_64 rng(43);
  const ComplexMatrix a = random_hermitian(9, rng, false);
  std::vector<int> order(9);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(9);
  for (int j = 0; j < 9; ++j) p.indices()(j) = order[static_cast<std::size_t>(j)];
  const ComplexMatrix b = p * a * p.transpose();
  check_same(hermitian_eigenvalues(b).eigenvalues, hermitian_eigenvalues(a).eigenvalues, 1e-12);
}

TEST_CASE("large W and xi transposes converge") {
  // Tiny round-off off-diagonals once stalled the QL deflation here.
  for (int n : {58, 59, 60, 64, 100, 150}) {
    const double w = negativity(partial_transpose(density_of(make_w(n)), 1));
    CHECK(std::abs(w - 2 * std::sqrt(n - 1.0) / n) <= 1e-10);
    const double xi = negativity(partial_transpose(density_of(make_xi(n)), 1));
    CHECK(std::abs(xi - std::sqrt(8 * (n - 1.0)) / (n + 1)) <= 1e-10);
  }
}
