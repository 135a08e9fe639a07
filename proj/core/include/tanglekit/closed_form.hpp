// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file closed_form.hpp
 * @brief Exact expressions for the W and xi families, valid for arbitrary n.
 *
 * The individual functions evaluate their expression for any n >= 2, except
 * where the expression itself is only derived for n >= 4 (xi two-tangle and
 * xi pi-tangle), which raise ValidityError. evaluate() additionally applies
 * the range over which each expression agrees with the numeric path.
 */

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tanglekit/measures.hpp"
#include "tanglekit/states.hpp"

namespace tanglekit::closed_form {

using QubitCount = std::int64_t;

/// 2 sqrt(n-1) / n
double w_one_tangle(QubitCount n);
/// (sqrt((n-2)^2 + 4) - (n-2)) / n, evaluated without cancellation.
double w_two_tangle(QubitCount n);
/// w_one_tangle^2 - (n-1) w_two_tangle^2
double w_pi(QubitCount n);
/// (n-1)/2 (sqrt((n-2)^2 + 4) - (n-2))
double w_total_negativity(QubitCount n);
/// 4(n-1) / n
double w_total_squares(QubitCount n);
/// Spectrum of the W state transposed on one qubit, restricted to its
/// 2n-state support: 0 (2n-4 times), 1/n, (n-1)/n, +-sqrt(n-1)/n. Ascending.
std::vector<double> w_pt_spectrum(QubitCount n);

/// sqrt(8(n-1)) / (n+1)
double xi_one_tangle(QubitCount n);
/// -sqrt(2(n-1)) / (n+1)
double xi_negative_eigenvalue(QubitCount n);
/// 8(n-1) / (n+1)^2, n >= 4
double xi_pi(QubitCount n);
/// 8n(n-1) / (n+1)^2
double xi_total_squares(QubitCount n);
/// 0, n >= 4
double xi_two_tangle(QubitCount n);

struct ClosedFormResult {
  double value;
  QubitCount valid_from;        // smallest n for which the expression holds
  std::string_view formula_id;  // e.g. "w.two_tangle"
};

/// Smallest n at which the closed form of (family, measure) matches the
/// state. Throws ValidityError when the family has no closed form.
QubitCount valid_from(StateFamily family, Measure measure);

/// Closed-form value of a summary measure. Throws ValidityError below the
/// validity range or for families without closed forms.
ClosedFormResult evaluate(StateFamily family, Measure measure, QubitCount n);

/// Full report from closed forms (n <= kMaxQubits so lists stay bounded).
MeasureReport closed_form_report(StateFamily family, int n);

}  // namespace tanglekit::closed_form
