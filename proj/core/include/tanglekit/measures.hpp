// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Negativity-based entanglement measures of n-qubit pure states.
 *
 * One-tangle N_i is the negativity of the state transposed on qubit i.
 * Two-tangle N_ik is the negativity of the reduced pair state transposed on
 * its first qubit. The monogamy residual is pi_i = N_i^2 - sum_{k != i} N_ik^2
 * and the pi-tangle is the mean of the residuals.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tanglekit/operators.hpp"
#include "tanglekit/states.hpp"

namespace tanglekit {

/// Residuals above -kCkwTolerance count as satisfying the monogamy bound.
inline constexpr double kCkwTolerance = 1e-9;

/// Pair negativity at or below this is reported as PPT (separable).
inline constexpr double kPptTolerance = 1e-10;

enum class Measure { OneTangle, TwoTangle, Pi, TotalNegativity, TotalSquares };

/// "one_tangle", "two_tangle", "pi", "total_neg", "total_sq".
std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name);
inline constexpr Measure kAllMeasures[] = {Measure::OneTangle, Measure::TwoTangle, Measure::Pi,
                                           Measure::TotalNegativity, Measure::TotalSquares};

enum class Method { Numeric, ClosedForm };
std::string_view method_name(Method m);  // "numeric" or "closed_form"

/// Structured works on the restricted support; Dense embeds into 2^n
/// dimensions and transposes there.
enum class NumericRoute { Structured, Dense };

struct MeasureOptions {
  NumericRoute route = NumericRoute::Structured;
  int dense_cap = kDefaultDenseCap;
  std::size_t support_cap = kDefaultSupportCap;
  // Built-in families are permutation symmetric: evaluate qubit 1 and pair
  // (1, 2) and replicate. Never applied to Custom states.
  bool symmetric_fast_path = true;
};

struct PairValue {
  int i;
  int k;
  double value;
};

struct MeasureReport {
  int n = 0;
  StateFamily family = StateFamily::Custom;
  Method method = Method::Numeric;
  std::vector<double> one_tangles;     // index i-1
  std::vector<PairValue> two_tangles;  // every i < k, lexicographic
  std::vector<double> pi_values;       // index i-1
  double pi_tangle = 0.0;
  double total_bipartition_negativity = 0.0;
  double total_one_tangle_squares = 0.0;
  std::vector<bool> ckw_satisfied;

  /// N_ik for either order of (i, k).
  [[nodiscard]] double two_tangle(int i, int k) const;

  /// Value of a summary measure: one_tangle and two_tangle give qubit 1 and
  /// pair (1, 2).
  [[nodiscard]] double value(Measure m) const;
};

/// Builds pi values, totals and CKW flags from one-tangles and the
/// lexicographic i<k list of two-tangles.
MeasureReport assemble_report(int n, StateFamily family, Method method, std::vector<double> one_tangles,
                              std::vector<PairValue> two_tangles);

double one_tangle(const PureState& psi, int i, const MeasureOptions& options = {});
double two_tangle(const PureState& psi, int i, int k, const MeasureOptions& options = {});

struct PiTangle {
  std::vector<double> pi_values;
  double pi = 0.0;
};
PiTangle pi_tangle(const PureState& psi, const MeasureOptions& options = {});

double total_bipartition_negativity(const PureState& psi, const MeasureOptions& options = {});
double total_one_tangle_squares(const PureState& psi, const MeasureOptions& options = {});

MeasureReport ckw_report(const PureState& psi, const MeasureOptions& options = {});

/// Negativity of the partial transpose of a pair operator on its first qubit.
double pair_negativity(const DensityOperator& rho2);

/// PPT test, which decides separability for two qubits. Throws
/// InvalidArgument unless rho2 is a 2-qubit operator.
bool is_ppt_separable_pair(const DensityOperator& rho2, double tol = kPptTolerance);

/// Optional [0, 1] normalization by the family's large-n limit: W total
/// negativity by 1 and total squares by 4, xi total squares by 8. Empty when
/// the family has no such limit for the measure.
std::optional<double> normalized_total(StateFamily family, Measure total, double value);

}  // namespace tanglekit
