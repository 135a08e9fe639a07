// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/measures.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "tanglekit/errors.hpp"
#include "tanglekit/spectral.hpp"

namespace tanglekit {

namespace {

void check_measurable(const PureState& psi) {
  if (psi.num_qubits() < 2) {
    throw InvalidArgument("entanglement measures need n >= 2, got " + std::to_string(psi.num_qubits()));
  }
}

void check_qubit(int q, int n) {
  if (q < 1 || q > n) {
    throw InvalidArgument("qubit index " + std::to_string(q) + " outside 1.." + std::to_string(n));
  }
}

std::size_t pair_slot(int n, int i, int k) {
  // Position of (i, k), i < k, in the lexicographic list of pairs.
  const auto a = static_cast<std::size_t>(i - 1);
  const auto nn = static_cast<std::size_t>(n);
  return a * (2 * nn - a - 1) / 2 + static_cast<std::size_t>(k - i - 1);
}

class Evaluator {
 public:
  Evaluator(const PureState& psi, const MeasureOptions& options)
      : psi_(psi), options_(options), rho_(density_of(psi)) {
    check_measurable(psi);
    if (options_.route == NumericRoute::Dense) dense_ = embed_dense(rho_, options_.dense_cap);
  }

  [[nodiscard]] int n() const { return psi_.num_qubits(); }

  [[nodiscard]] bool symmetric() const {
    return options_.symmetric_fast_path && psi_.family() != StateFamily::Custom;
  }

  double one(int i) const {
    check_qubit(i, n());
    if (options_.route == NumericRoute::Dense) {
      return negativity(hermitian_eigenvalues(dense_partial_transpose(dense_, n(), i)));
    }
    return negativity(partial_transpose(rho_, i, options_.support_cap));
  }

  double pair(int i, int k) const {
    check_qubit(i, n());
    check_qubit(k, n());
    if (i == k) throw InvalidArgument("two-tangle needs distinct qubits");
    const int a = std::min(i, k);
    const int b = std::max(i, k);
    if (options_.route == NumericRoute::Dense) {
      return pair_negativity(
          DensityOperator(SupportBasis::full(2), dense_partial_trace_to_pair(dense_, n(), a, b)));
    }
    return pair_negativity(partial_trace_to_pair(rho_, a, b));
  }

  std::vector<double> one_tangles() const {
    const auto count = static_cast<std::size_t>(n());
    if (symmetric()) return std::vector<double>(count, one(1));
    std::vector<double> out(count);
    for (int i = 1; i <= n(); ++i) out[static_cast<std::size_t>(i - 1)] = one(i);
    return out;
  }

  std::vector<PairValue> two_tangles() const {
    std::vector<PairValue> out;
    out.reserve(static_cast<std::size_t>(n()) * static_cast<std::size_t>(n() - 1) / 2);
    const double shared = symmetric() ? pair(1, 2) : 0.0;
    for (int i = 1; i <= n(); ++i) {
      for (int k = i + 1; k <= n(); ++k) out.push_back({i, k, symmetric() ? shared : pair(i, k)});
    }
    return out;
  }

 private:
  const PureState& psi_;
  MeasureOptions options_;
  DensityOperator rho_;
  ComplexMatrix dense_;
};

}  // namespace

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::OneTangle: return "one_tangle";
    case Measure::TwoTangle: return "two_tangle";
    case Measure::Pi: return "pi";
    case Measure::TotalNegativity: return "total_neg";
    case Measure::TotalSquares: return "total_sq";
  }
  return "pi";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  throw InvalidArgument("unknown measure \"" + std::string(name) + "\"");
}

std::string_view method_name(Method m) { return m == Method::Numeric ? "numeric" : "closed_form"; }

double MeasureReport::two_tangle(int i, int k) const {
  if (i == k || i < 1 || k < 1 || i > n || k > n) {
    throw InvalidArgument("no two-tangle for pair (" + std::to_string(i) + ", " + std::to_string(k) + ")");
  }
  if (i > k) std::swap(i, k);
  return two_tangles.at(pair_slot(n, i, k)).value;
}

double MeasureReport::value(Measure m) const {
  switch (m) {
    case Measure::OneTangle: return one_tangles.at(0);
    case Measure::TwoTangle: return two_tangle(1, 2);
    case Measure::Pi: return pi_tangle;
    case Measure::TotalNegativity: return total_bipartition_negativity;
    case Measure::TotalSquares: return total_one_tangle_squares;
  }
  return pi_tangle;
}

MeasureReport assemble_report(int n, StateFamily family, Method method, std::vector<double> one_tangles,
                              std::vector<PairValue> two_tangles) {
  const auto count = static_cast<std::size_t>(n);
  if (n < 2 || one_tangles.size() != count || two_tangles.size() != count * (count - 1) / 2) {
    throw InvalidArgument("report needs n one-tangles and n(n-1)/2 two-tangles");
  }
  MeasureReport r;
  r.n = n;
  r.family = family;
  r.method = method;

  std::vector<double> pair_squares(count, 0.0);
  for (const auto& p : two_tangles) {
    if (p.i < 1 || p.k > n || p.i >= p.k) throw InvalidArgument("two-tangle pairs must satisfy i < k");
    const double sq = p.value * p.value;
    pair_squares[static_cast<std::size_t>(p.i - 1)] += sq;
    pair_squares[static_cast<std::size_t>(p.k - 1)] += sq;
    r.total_bipartition_negativity += p.value;
  }
  r.pi_values.resize(count);
  r.ckw_satisfied.resize(count);
  for (std::size_t q = 0; q < count; ++q) {
    const double sq = one_tangles[q] * one_tangles[q];
    r.total_one_tangle_squares += sq;
    r.pi_values[q] = sq - pair_squares[q];
    r.ckw_satisfied[q] = r.pi_values[q] >= -kCkwTolerance;
  }
  r.pi_tangle = std::accumulate(r.pi_values.begin(), r.pi_values.end(), 0.0) / static_cast<double>(n);
  r.one_tangles = std::move(one_tangles);
  r.two_tangles = std::move(two_tangles);
  return r;
}

double one_tangle(const PureState& psi, int i, const MeasureOptions& options) {
  return Evaluator(psi, options).one(i);
}

double two_tangle(const PureState& psi, int i, int k, const MeasureOptions& options) {
  return Evaluator(psi, options).pair(i, k);
}

PiTangle pi_tangle(const PureState& psi, const MeasureOptions& options) {
  MeasureReport r = ckw_report(psi, options);
  return {std::move(r.pi_values), r.pi_tangle};
}

double total_bipartition_negativity(const PureState& psi, const MeasureOptions& options) {
  double total = 0.0;
  for (const auto& p : Evaluator(psi, options).two_tangles()) total += p.value;
  return total;
}

double total_one_tangle_squares(const PureState& psi, const MeasureOptions& options) {
  double total = 0.0;
  for (double v : Evaluator(psi, options).one_tangles()) total += v * v;
  return total;
}

MeasureReport ckw_report(const PureState& psi, const MeasureOptions& options) {
  const Evaluator eval(psi, options);
  return assemble_report(psi.num_qubits(), psi.family(), Method::Numeric, eval.one_tangles(),
                         eval.two_tangles());
}

double pair_negativity(const DensityOperator& rho2) {
  if (rho2.num_qubits() != 2) {
    throw InvalidArgument("pair operator must act on 2 qubits, got " + std::to_string(rho2.num_qubits()));
  }
  return negativity(partial_transpose(rho2, 1));
}

bool is_ppt_separable_pair(const DensityOperator& rho2, double tol) { return pair_negativity(rho2) <= tol; }

std::optional<double> normalized_total(StateFamily family, Measure total, double value) {
  if (family == StateFamily::W && total == Measure::TotalNegativity) return value;
  if (family == StateFamily::W && total == Measure::TotalSquares) return value / 4.0;
  if (family == StateFamily::Xi && total == Measure::TotalSquares) return value / 8.0;
  return std::nullopt;
}

}  // namespace tanglekit
