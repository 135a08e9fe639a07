// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file operators.hpp
 * @brief Partial transpose, partial trace and dense embedding of restricted
 * density operators.
 *
 * The restricted routines never touch the 2^n-dimensional space: the partial
 * transpose maps each nonzero element to its image and grows the support to
 * cover the images. The dense_* routines are the brute-force counterparts on
 * full 2^n matrices and share no index code with the restricted ones.
 */

#pragma once

#include <cstddef>
#include <span>

#include "tanglekit/density_operator.hpp"

namespace tanglekit {

inline constexpr std::size_t kDefaultSupportCap = 4096;
inline constexpr int kDefaultDenseCap = 10;
inline constexpr int kMaxDenseCap = 14;

/**
 * Transposes qubit q (1-based) of rho.
 *
 * Element <a|rho|b> moves to <a'|.|b'> where a' takes qubit q from b and b'
 * takes qubit q from a. The output support is the union of the input support
 * and all images. Throws ResourceCapError when the output support would
 * exceed support_cap.
 */
DensityOperator partial_transpose(const DensityOperator& rho, int q,
                                  std::size_t support_cap = kDefaultSupportCap);

/**
 * Reduces rho to qubits (i, k), tracing out every other qubit.
 *
 * The result is a 2-qubit operator on the full basis {|00>, |01>, |10>, |11>}
 * with qubit i as the left (first) qubit. Rows that are entirely zero are
 * kept.
 */
DensityOperator partial_trace_to_pair(const DensityOperator& rho, int i, int k);

/// Full 2^n x 2^n matrix agreeing with rho on its support. Throws
/// ResourceCapError when n > dense_cap and InvalidArgument when dense_cap
/// exceeds kMaxDenseCap.
ComplexMatrix embed_dense(const DensityOperator& rho, int dense_cap = kDefaultDenseCap);

/// Relabels qubits: qubit q of rho becomes qubit perm[q-1].
DensityOperator permute_qubits(const DensityOperator& rho, std::span<const int> perm);

/// Partial transpose of qubit q on a full 2^n x 2^n matrix.
ComplexMatrix dense_partial_transpose(const ComplexMatrix& rho, int n, int q);

/// 4x4 reduction of a full 2^n x 2^n matrix to qubits (i, k), qubit i first.
ComplexMatrix dense_partial_trace_to_pair(const ComplexMatrix& rho, int n, int i, int k);

}  // namespace tanglekit
