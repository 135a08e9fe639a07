// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/closed_form.hpp"

#include <cmath>
#include <string>

#include "tanglekit/basis.hpp"
#include "tanglekit/errors.hpp"

namespace tanglekit::closed_form {

namespace {

void require(QubitCount n, QubitCount min_n, std::string_view what) {
  if (n < min_n) {
    throw ValidityError(std::string(what) + " closed form holds for n >= " + std::to_string(min_n) +
                        ", got n = " + std::to_string(n) + "; use the numeric path");
  }
}

double as_real(QubitCount n) { return static_cast<double>(n); }

// sqrt((n-2)^2 + 4) - (n-2), rewritten as 4 / (sqrt((n-2)^2 + 4) + (n-2)).
double w_pair_gap(QubitCount n) {
  const double m = as_real(n - 2);
  return 4.0 / (std::sqrt(m * m + 4.0) + m);
}

}  // namespace

double w_one_tangle(QubitCount n) {
  require(n, 2, "W one-tangle");
  return 2.0 * std::sqrt(as_real(n - 1)) / as_real(n);
}

double w_two_tangle(QubitCount n) {
  require(n, 2, "W two-tangle");
  return w_pair_gap(n) / as_real(n);
}

double w_pi(QubitCount n) {
  require(n, 2, "W pi-tangle");
  const double one = w_one_tangle(n);
  const double two = w_two_tangle(n);
  return one * one - as_real(n - 1) * two * two;
}

double w_total_negativity(QubitCount n) {
  require(n, 2, "W total negativity");
  return 0.5 * as_real(n - 1) * w_pair_gap(n);
}

double w_total_squares(QubitCount n) {
  require(n, 2, "W total squares");
  return 4.0 * as_real(n - 1) / as_real(n);
}

std::vector<double> w_pt_spectrum(QubitCount n) {
  require(n, 2, "W transpose spectrum");
  const double nn = as_real(n);
  const double root = std::sqrt(as_real(n - 1)) / nn;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  out.push_back(-root);
  out.insert(out.end(), static_cast<std::size_t>(2 * n - 4), 0.0);
  // 1/n <= root <= (n-1)/n for n >= 2.
  out.push_back(1.0 / nn);
  out.push_back(root);
  out.push_back(as_real(n - 1) / nn);
  return out;
}

double xi_one_tangle(QubitCount n) {
  require(n, 2, "xi one-tangle");
  return std::sqrt(8.0 * as_real(n - 1)) / as_real(n + 1);
}

double xi_negative_eigenvalue(QubitCount n) {
  require(n, 2, "xi negative eigenvalue");
  return -std::sqrt(2.0 * as_real(n - 1)) / as_real(n + 1);
}

double xi_pi(QubitCount n) {
  require(n, 4, "xi pi-tangle");
  const double np1 = as_real(n + 1);
  return 8.0 * as_real(n - 1) / (np1 * np1);
}

double xi_total_squares(QubitCount n) {
  require(n, 2, "xi total squares");
  const double np1 = as_real(n + 1);
  return 8.0 * as_real(n) * as_real(n - 1) / (np1 * np1);
}

double xi_two_tangle(QubitCount n) {
  require(n, 4, "xi two-tangle");
  return 0.0;
}

QubitCount valid_from(StateFamily family, Measure measure) {
  switch (family) {
    case StateFamily::W:
      return 2;
    case StateFamily::Xi:
      // At n = 2 the transpose support collapses onto the 4-state space and
      // the single negative eigenvalue is -1/3, not the general expression.
      if (measure == Measure::OneTangle || measure == Measure::TotalSquares) return 3;
      return 4;
    case StateFamily::GHZ:
    case StateFamily::Custom:
      break;
  }
  throw ValidityError("no closed form for the " + std::string(family_name(family)) + " family");
}

ClosedFormResult evaluate(StateFamily family, Measure measure, QubitCount n) {
  const QubitCount from = valid_from(family, measure);
  require(n, from, std::string(family_name(family)) + " " + std::string(measure_name(measure)));
  if (family == StateFamily::W) {
    switch (measure) {
      case Measure::OneTangle: return {w_one_tangle(n), from, "w.one_tangle"};
      case Measure::TwoTangle: return {w_two_tangle(n), from, "w.two_tangle"};
      case Measure::Pi: return {w_pi(n), from, "w.pi"};
      case Measure::TotalNegativity: return {w_total_negativity(n), from, "w.total_negativity"};
      case Measure::TotalSquares: return {w_total_squares(n), from, "w.total_squares"};
    }
  }
  switch (measure) {
    case Measure::OneTangle: return {xi_one_tangle(n), from, "xi.one_tangle"};
    case Measure::TwoTangle: return {xi_two_tangle(n), from, "xi.two_tangle"};
    case Measure::Pi: return {xi_pi(n), from, "xi.pi"};
    // Every pair is separable, so the pair total is n(n-1)/2 zeros.
    case Measure::TotalNegativity: return {xi_two_tangle(n), from, "xi.total_negativity"};
    case Measure::TotalSquares: return {xi_total_squares(n), from, "xi.total_squares"};
  }
  throw ValidityError("unknown measure");
}

MeasureReport closed_form_report(StateFamily family, int n) {
  check_qubit_count(n);
  const double one = evaluate(family, Measure::OneTangle, n).value;
  const double two = evaluate(family, Measure::TwoTangle, n).value;
  std::vector<PairValue> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) pairs.push_back({i, k, two});
  }
  return assemble_report(n, family, Method::ClosedForm, std::vector<double>(static_cast<std::size_t>(n), one),
                         std::move(pairs));
}

}  // namespace tanglekit::closed_form
