// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tridiagonal.hpp
 * @brief Real symmetric eigensolver: Householder reduction to tridiagonal
 * form, then implicit QL iteration with Wilkinson shifts.
 *
 * Rows that are zero left of the diagonal are skipped by the reduction and
 * stay zero under it, so embedded operators whose support is a small subset
 * of the full space cost O(|support| d^2) rather than O(d^3).
 */

#pragma once

#include <Eigen/Dense>

namespace tanglekit::detail {

struct Tridiagonal {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd off_diagonal;  // off_diagonal(i) couples i-1 and i; entry 0 unused
  Eigen::MatrixXd transform;     // orthogonal Q with A = Q T Q^T, empty unless requested
};

/// Reduces the symmetric matrix a to tridiagonal form. Only the upper
/// triangle of a is read.
Tridiagonal householder_tridiagonalize(Eigen::MatrixXd a, bool accumulate);

/// Diagonalizes a tridiagonal matrix in place. On return `diagonal` holds the
/// eigenvalues (unsorted). When vectors is non-null, its columns are rotated
/// along, so passing Q yields the eigenvectors of the original matrix.
/// Throws NumericalError after max_iterations sweeps on one eigenvalue.
void implicit_ql(Eigen::VectorXd& diagonal, Eigen::VectorXd off_diagonal, Eigen::MatrixXd* vectors,
                 int max_iterations = 64);

struct EigenSystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column j belongs to values(j); empty unless requested
};

EigenSystem symmetric_eigensystem(const Eigen::MatrixXd& a, bool want_vectors);

}  // namespace tanglekit::detail
