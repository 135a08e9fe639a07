// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference for the tests. States are plain 2^n vectors built
// from integer index rules, transposes and traces are written directly on
// 2^n x 2^n matrices, and eigenvalues come from Eigen's self-adjoint solver.
// Nothing here calls into the library.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Qubit q (1-based) sits at bit n - q of the index.
inline std::uint64_t bit(int n, int q) { return std::uint64_t{1} << (n - q); }

inline Vec normalized(Vec v) { return v / v.norm(); }

inline Vec w_vector(int n) {
  Vec v = Vec::Zero(std::int64_t{1} << n);
  for (int q = 1; q <= n; ++q) v(static_cast<Eigen::Index>(bit(n, q))) = 1.0;
  return normalized(v);
}

inline Vec ghz_vector(int n) {
  Vec v = Vec::Zero(std::int64_t{1} << n);
  v(0) = 1.0;
  v((std::int64_t{1} << n) - 1) = 1.0;
  return normalized(v);
}

inline Vec xi_vector(int n) {
  Vec v = w_vector(n) * std::sqrt(static_cast<double>(n));
  v((std::int64_t{1} << n) - 1) += 1.0;
  return normalized(v);
}

inline Vec random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec v(std::int64_t{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return normalized(v);
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

inline Mat transpose_qubit(const Mat& rho, int n, int q) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t m = bit(n, q);
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      // Swap the qubit-q digit between the row and column index.
      const std::uint64_t rq = (r & m) ? 1 : 0;
      const std::uint64_t cq = (c & m) ? 1 : 0;
      const std::uint64_t r2 = cq ? (r | m) : (r & ~m);
      const std::uint64_t c2 = rq ? (c | m) : (c & ~m);
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rho(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2));
    }
  }
  return out;
}

// 4x4 reduced state of qubits (i, k), i first, summing over every
// assignment of the remaining n - 2 qubits.
inline Mat reduce_to_pair(const Mat& rho, int n, int i, int k) {
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q) {
    if (q != i && q != k) rest.push_back(q);
  }
  Mat out = Mat::Zero(4, 4);
  for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << rest.size()); ++assignment) {
    std::uint64_t base = 0;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if ((assignment >> j) & 1U) base |= bit(n, rest[j]);
    }
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) {
        const std::uint64_t r = base | ((x & 2) ? bit(n, i) : 0) | ((x & 1) ? bit(n, k) : 0);
        const std::uint64_t c = base | ((y & 2) ? bit(n, i) : 0) | ((y & 1) ? bit(n, k) : 0);
        out(x, y) += rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
  }
  return out;
}

inline std::vector<double> eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

inline double negativity(const Mat& m) {
  double sum = 0.0;
  for (double v : eigenvalues(m)) {
    if (v < -1e-12) sum -= v;
  }
  return 2.0 * sum;
}

struct Measures {
  std::vector<double> one;                // N_i
  std::vector<std::vector<double>> pair;  // N_ik, symmetric, zero diagonal
  std::vector<double> pi_values;
  double pi = 0.0;
  double total_negativity = 0.0;
  double total_squares = 0.0;
};

inline Measures measures(const Vec& psi, int n) {
  const Mat rho = projector(psi);
  Measures out;
  out.pair.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 1; i <= n; ++i) out.one.push_back(negativity(transpose_qubit(rho, n, i)));
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      const double v = negativity(transpose_qubit(reduce_to_pair(rho, n, i, k), 2, 1));
      out.pair[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] = v;
      out.pair[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = v;
      out.total_negativity += v;
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    double pi_i = out.one[ui] * out.one[ui];
    for (int k = 0; k < n; ++k) {
      if (k != i) pi_i -= out.pair[ui][static_cast<std::size_t>(k)] * out.pair[ui][static_cast<std::size_t>(k)];
    }
    out.pi_values.push_back(pi_i);
    out.pi += pi_i / n;
    out.total_squares += out.one[ui] * out.one[ui];
  }
  return out;
}

}  // namespace oracle
