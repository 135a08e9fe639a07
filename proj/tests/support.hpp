// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include "oracle/dense_oracle.hpp"
#include "tanglekit/states.hpp"

namespace testing {

/// Library state with the amplitudes of an oracle vector (n <= 64).
inline tanglekit::PureState to_state(const oracle::Vec& v, int n) {
  tanglekit::PureState::Amplitudes amps;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != oracle::cplx(0.0, 0.0)) {
      amps.emplace(tanglekit::BasisState::from_index(n, static_cast<std::uint64_t>(i)), v(i));
    }
  }
  return tanglekit::PureState::normalized(n, std::move(amps));
}

inline oracle::Vec to_vector(const tanglekit::PureState& psi) {
  oracle::Vec v = oracle::Vec::Zero(std::int64_t{1} << psi.num_qubits());
  for (const auto& [s, a] : psi.amplitudes()) v(static_cast<Eigen::Index>(s.to_index())) = a;
  return v;
}

/// Random pure state with `terms` nonzero amplitudes (all of them when 0).
inline tanglekit::PureState random_state(int n, std::mt19937_64& rng, int terms = 0) {
  oracle::Vec v = oracle::random_vector(n, rng);
  if (terms > 0) {
    std::uniform_int_distribution<Eigen::Index> pick(0, v.size() - 1);
    oracle::Vec sparse = oracle::Vec::Zero(v.size());
    for (int t = 0; t < terms; ++t) sparse(pick(rng)) = v(pick(rng));
    if (sparse.norm() == 0.0) sparse(0) = 1.0;
    v = sparse;
  }
  return to_state(v, n);
}

/// |a - b| <= tol |b|, absolute when b is zero.
inline bool within_rel(double a, double b, double tol) {
  const double diff = std::abs(a - b);
  return b == 0.0 ? diff <= tol : diff <= tol * std::abs(b);
}

}  // namespace testing
