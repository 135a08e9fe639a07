// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "tanglekit/closed_form.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/operators.hpp"
#include "tanglekit/spectral.hpp"

namespace tanglekit::cli {

namespace {

using nlohmann::json;

void check_dense_cap(int cap) {
  if (cap < 1 || cap > kMaxDenseCap) {
    throw InvalidArgument("--dense-cap must be in 1.." + std::to_string(kMaxDenseCap));
  }
}

MeasureReport numeric_report(const PureState& psi, bool dense, int dense_cap) {
  MeasureOptions options;
  options.route = dense ? NumericRoute::Dense : NumericRoute::Structured;
  options.dense_cap = dense_cap;
  return ckw_report(psi, options);
}

double max_relative_delta(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, relative_delta(a[i], b[i]));
  return worst;
}

json deltas_json(const MeasureReport& numeric, const MeasureReport& closed) {
  std::vector<double> pn;
  std::vector<double> pc;
  for (std::size_t j = 0; j < numeric.two_tangles.size(); ++j) {
    pn.push_back(numeric.two_tangles[j].value);
    pc.push_back(closed.two_tangles[j].value);
  }
  json d;
  d["one_tangles"] = max_relative_delta(numeric.one_tangles, closed.one_tangles);
  d["two_tangles"] = max_relative_delta(pn, pc);
  d["pi_values"] = max_relative_delta(numeric.pi_values, closed.pi_values);
  d["pi_tangle"] = relative_delta(numeric.pi_tangle, closed.pi_tangle);
  d["total_bipartition_negativity"] =
      relative_delta(numeric.total_bipartition_negativity, closed.total_bipartition_negativity);
  d["total_one_tangle_squares"] =
      relative_delta(numeric.total_one_tangle_squares, closed.total_one_tangle_squares);
  double worst = 0.0;
  for (const auto& [_, v] : d.items()) worst = std::max(worst, v.get<double>());
  d["max"] = worst;
  return d;
}

void print_table(const MeasureReport& r, std::ostream& out) {
  out << "family " << family_name(r.family) << "  n " << r.n << "  method " << method_name(r.method) << "\n";
  out << "qubit  one_tangle        pi_i              ckw\n";
  for (int q = 1; q <= r.n; ++q) {
    const auto i = static_cast<std::size_t>(q - 1);
    out << std::left << std::setw(7) << q << std::setw(18) << format_real(r.one_tangles[i]) << std::setw(18)
        << format_real(r.pi_values[i]) << (r.ckw_satisfied[i] ? "ok" : "VIOLATED") << "\n";
  }
  out << "pair   two_tangle\n";
  for (const auto& p : r.two_tangles) {
    out << std::left << std::setw(7) << (std::to_string(p.i) + "," + std::to_string(p.k)) << format_real(p.value)
        << "\n";
  }
  out << "pi_tangle                     " << format_real(r.pi_tangle) << "\n";
  out << "total_bipartition_negativity  " << format_real(r.total_bipartition_negativity) << "\n";
  out << "total_one_tangle_squares      " << format_real(r.total_one_tangle_squares) << "\n";
}

bool needs_one_tangle(std::span<const Measure> measures) {
  return std::any_of(measures.begin(), measures.end(), [](Measure m) {
    return m == Measure::OneTangle || m == Measure::Pi || m == Measure::TotalSquares;
  });
}

bool needs_two_tangle(std::span<const Measure> measures) {
  return std::any_of(measures.begin(), measures.end(), [](Measure m) {
    return m == Measure::TwoTangle || m == Measure::Pi || m == Measure::TotalNegativity;
  });
}

std::vector<SweepRow> rows_for(const SweepArgs& args, int n) {
  std::vector<SweepRow> rows;
  if (n > args.numeric_cap) {
    for (Measure m : args.measures) {
      rows.push_back({args.family, n, m, closed_form::evaluate(args.family, m, n).value, Method::ClosedForm});
    }
    return rows;
  }
  // Built-in families are permutation symmetric, so qubit 1 and pair (1, 2)
  // determine every measure.
  const PureState psi = make_family(args.family, n);
  MeasureOptions options;
  options.route = args.dense ? NumericRoute::Dense : NumericRoute::Structured;
  options.dense_cap = args.dense_cap;
  const double one = needs_one_tangle(args.measures) ? one_tangle(psi, 1, options) : 0.0;
  const double two = needs_two_tangle(args.measures) ? two_tangle(psi, 1, 2, options) : 0.0;
  std::vector<PairValue> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) pairs.push_back({i, k, two});
  }
  const MeasureReport r = assemble_report(n, args.family, Method::Numeric,
                                          std::vector<double>(static_cast<std::size_t>(n), one), std::move(pairs));
  for (Measure m : args.measures) rows.push_back({args.family, n, m, r.value(m), Method::Numeric});
  return rows;
}

double worst_spread(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

std::string describe(double value) { return format_real(value); }

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  if (ec != std::errc{}) throw NumericalError("cannot format value");
  return std::string(buf, ptr);
}

double relative_delta(double a, double b) {
  const double diff = std::abs(a - b);
  return b == 0.0 ? diff : diff / std::abs(b);
}

PureState load_state(const StateSpec& spec, std::ostream& err) {
  if (spec.family != StateFamily::Custom) {
    if (!spec.state_file.empty()) throw InvalidArgument("--state-file is only valid with --family custom");
    return make_family(spec.family, spec.n);
  }
  if (spec.state_file.empty()) throw InvalidArgument("--family custom requires --state-file");
  std::ifstream in(spec.state_file);
  if (!in) throw InvalidArgument("cannot read state file " + spec.state_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ParsedState parsed = parse_custom_detailed(buffer.str());
  err << "loaded " << parsed.state.size() << " terms on " << parsed.state.num_qubits()
      << " qubits; input norm " << format_real(parsed.input_norm) << "\n";
  return std::move(parsed.state);
}

json report_to_json(const MeasureReport& r, bool normalize) {
  json j;
  j["family"] = family_name(r.family);
  j["n"] = r.n;
  j["method"] = method_name(r.method);
  j["one_tangles"] = r.one_tangles;
  json pairs = json::array();
  for (const auto& p : r.two_tangles) pairs.push_back({{"i", p.i}, {"k", p.k}, {"value", p.value}});
  j["two_tangles"] = std::move(pairs);
  j["pi_values"] = r.pi_values;
  j["pi_tangle"] = r.pi_tangle;
  j["total_bipartition_negativity"] = r.total_bipartition_negativity;
  j["total_one_tangle_squares"] = r.total_one_tangle_squares;
  j["ckw_satisfied"] = r.ckw_satisfied;
  if (normalize) {
    json norm;
    norm["convention"] = "divide by the family's large-n limit";
    const auto neg = normalized_total(r.family, Measure::TotalNegativity, r.total_bipartition_negativity);
    const auto sq = normalized_total(r.family, Measure::TotalSquares, r.total_one_tangle_squares);
    norm["total_bipartition_negativity"] = neg ? json(*neg) : json(nullptr);
    norm["total_one_tangle_squares"] = sq ? json(*sq) : json(nullptr);
    j["normalized"] = std::move(norm);
  }
  return j;
}

int cmd_measure(const MeasureArgs& args, std::ostream& out, std::ostream& err) {
  check_dense_cap(args.dense_cap);
  if (args.state.family == StateFamily::Custom && args.method != MethodChoice::Numeric) {
    throw ValidityError("custom states have no closed form; use --method numeric");
  }
  if (args.method == MethodChoice::Closed) {
    const MeasureReport r = closed_form::closed_form_report(args.state.family, args.state.n);
    if (args.table) {
      print_table(r, out);
    } else {
      out << report_to_json(r, args.normalize).dump(2) << "\n";
    }
    return kExitOk;
  }

  const PureState psi = load_state(args.state, err);
  if (args.method == MethodChoice::Numeric) {
    const MeasureReport r = numeric_report(psi, args.dense, args.dense_cap);
    if (args.table) {
      print_table(r, out);
    } else {
      out << report_to_json(r, args.normalize).dump(2) << "\n";
    }
    return kExitOk;
  }

  const MeasureReport closed = closed_form::closed_form_report(args.state.family, args.state.n);
  const MeasureReport numeric = numeric_report(psi, args.dense, args.dense_cap);
  json j;
  j["family"] = family_name(psi.family());
  j["n"] = psi.num_qubits();
  j["method"] = "both";
  j["numeric"] = report_to_json(numeric, args.normalize);
  j["closed_form"] = report_to_json(closed, args.normalize);
  j["deltas"] = deltas_json(numeric, closed);
  if (args.table) {
    print_table(numeric, out);
    print_table(closed, out);
    out << "max relative delta " << format_real(j["deltas"]["max"].get<double>()) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  if (j["deltas"]["max"].get<double>() > kBothDeltaTolerance) {
    err << "numeric and closed-form results differ by more than " << format_real(kBothDeltaTolerance) << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

std::vector<SweepRow> sweep_rows(const SweepArgs& args) {
  if (args.family == StateFamily::Custom) throw InvalidArgument("sweeps need a built-in family");
  if (args.n_min < 2 || args.n_max < args.n_min) throw InvalidArgument("sweeps need 2 <= n-min <= n-max");
  if (args.measures.empty()) throw InvalidArgument("sweeps need at least one measure");
  check_dense_cap(args.dense_cap);

  const auto count = static_cast<std::size_t>(args.n_max - args.n_min + 1);
  std::vector<std::vector<SweepRow>> per_n(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next++; slot < count; slot = next++) {
      try {
        per_n[slot] = rows_for(args, args.n_min + static_cast<int>(slot));
      } catch (...) {
        failures[slot] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<SweepRow> rows;
  for (std::size_t slot = 0; slot < count; ++slot) {
    if (failures[slot]) std::rethrow_exception(failures[slot]);
    rows.insert(rows.end(), per_n[slot].begin(), per_n[slot].end());
  }
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "family,n,measure,value,method\n";
  for (const auto& r : rows) {
    out << family_name(r.family) << ',' << r.n << ',' << measure_name(r.measure) << ',' << format_real(r.value)
        << ',' << method_name(r.method) << '\n';
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream&) {
  const auto rows = sweep_rows(args);
  if (args.out_path.empty() || args.out_path == "-") {
    write_sweep_csv(rows, out);
    return kExitOk;
  }
  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write " + args.out_path);
  write_sweep_csv(rows, file);
  file.flush();
  if (!file) throw InvalidArgument("failed writing " + args.out_path);
  return kExitOk;
}

std::vector<CheckResult> run_checks(const PureState& psi, int dense_cap) {
  check_dense_cap(dense_cap);
  const int n = psi.num_qubits();
  const bool builtin = psi.family() != StateFamily::Custom;
  std::vector<CheckResult> results;
  auto add = [&](std::string name, bool ok, std::string detail, bool info = false) {
    results.push_back({std::move(name), ok, std::move(detail), info});
  };

  const DensityOperator rho = density_of(psi);
  add("density_trace", std::abs(rho.trace() - 1.0) <= 1e-12, "trace " + describe(rho.trace().real()));

  double worst_trace = 0.0;
  double worst_norm_gap = 0.0;
  bool involution = true;
  for (int q = 1; q <= n; ++q) {
    const DensityOperator pt = partial_transpose(rho, q);
    worst_trace = std::max(worst_trace, std::abs(pt.trace() - 1.0));
    involution = involution && approx_equal(partial_transpose(pt, q), rho, 0.0);
    const Spectrum s = spectrum_of(pt);
    worst_norm_gap = std::max(worst_norm_gap, std::abs(negativity(s) - (s.trace_norm() - 1.0)));
  }
  add("pt_trace_preserved", worst_trace <= 1e-12, "max |trace - 1| " + describe(worst_trace));
  add("pt_involution", involution, "transposing twice returns the state");
  add("negativity_is_trace_norm_minus_one", worst_norm_gap <= 1e-10, "max gap " + describe(worst_norm_gap));

  MeasureOptions full;
  full.symmetric_fast_path = false;
  const MeasureReport structured = ckw_report(psi, full);

  if (n <= dense_cap) {
    const DensityOperator pt = partial_transpose(rho, 1);
    const Spectrum restricted = spectrum_of(pt);
    const Spectrum dense = hermitian_eigenvalues(embed_dense(pt, dense_cap));
    std::vector<double> padded = restricted.eigenvalues;
    padded.resize(dense.eigenvalues.size(), 0.0);
    std::sort(padded.begin(), padded.end());
    double gap = 0.0;
    for (std::size_t j = 0; j < padded.size(); ++j) gap = std::max(gap, std::abs(padded[j] - dense.eigenvalues[j]));
    add("dense_vs_structured_spectrum", gap <= 1e-10, "max eigenvalue gap " + describe(gap));

    MeasureOptions dense_options = full;
    dense_options.route = NumericRoute::Dense;
    dense_options.dense_cap = dense_cap;
    const MeasureReport oracle = ckw_report(psi, dense_options);
    double worst = 0.0;
    for (std::size_t q = 0; q < oracle.one_tangles.size(); ++q) {
      worst = std::max(worst, relative_delta(structured.one_tangles[q], oracle.one_tangles[q]));
      worst = std::max(worst, relative_delta(structured.pi_values[q], oracle.pi_values[q]));
    }
    for (std::size_t p = 0; p < oracle.two_tangles.size(); ++p) {
      worst = std::max(worst, relative_delta(structured.two_tangles[p].value, oracle.two_tangles[p].value));
    }
    add("dense_vs_structured_measures", worst <= 1e-9, "max relative delta " + describe(worst));
  } else {
    add("dense_vs_structured", true, "skipped: n above dense cap " + std::to_string(dense_cap), true);
  }

  const bool monogamous =
      std::all_of(structured.ckw_satisfied.begin(), structured.ckw_satisfied.end(), [](bool b) { return b; });
  const double min_pi = *std::min_element(structured.pi_values.begin(), structured.pi_values.end());
  add("ckw_monogamy", builtin ? monogamous : true,
      std::string(monogamous ? "all" : "not all") + " pi_i >= -1e-9 (min " + describe(min_pi) + ")", !builtin);

  if (n == 2) {
    add("two_qubit_pi_zero", std::abs(structured.pi_tangle) <= 1e-10, "pi " + describe(structured.pi_tangle));
  }

  if (!builtin) return results;

  std::vector<double> pair_values;
  for (const auto& p : structured.two_tangles) pair_values.push_back(p.value);
  const double spread = std::max(worst_spread(structured.one_tangles), worst_spread(pair_values));
  add("permutation_symmetry", spread <= 1e-10, "spread " + describe(spread));

  if (psi.family() == StateFamily::GHZ) return results;

  double worst_closed = 0.0;
  std::string compared;
  for (Measure m : kAllMeasures) {
    if (n < closed_form::valid_from(psi.family(), m)) continue;
    worst_closed = std::max(worst_closed, relative_delta(structured.value(m), closed_form::evaluate(psi.family(), m, n).value));
    compared += std::string(compared.empty() ? "" : ",") + std::string(measure_name(m));
  }
  if (!compared.empty()) {
    add("closed_vs_numeric", worst_closed <= kBothDeltaTolerance,
        compared + " max relative delta " + describe(worst_closed));
  }

  const Spectrum s = spectrum_of(partial_transpose(rho, 1));
  if (psi.family() == StateFamily::W) {
    const auto expected = closed_form::w_pt_spectrum(n);
    double gap = s.eigenvalues.size() == expected.size() ? 0.0 : INFINITY;
    for (std::size_t j = 0; j < expected.size() && j < s.eigenvalues.size(); ++j) {
      gap = std::max(gap, std::abs(s.eigenvalues[j] - expected[j]));
    }
    add("w_transpose_spectrum", gap <= 1e-10 && s.negative_count() == 1,
        std::to_string(s.negative_count()) + " negative, max gap " + describe(gap));
  } else if (n >= 3) {
    const double expected = closed_form::xi_negative_eigenvalue(n);
    const bool ok = s.negative_count() == 1 && std::abs(s.eigenvalues.front() - expected) <= 1e-10;
    add("xi_single_negative_eigenvalue", ok,
        std::to_string(s.negative_count()) + " negative, lowest " + describe(s.eigenvalues.front()));
    if (n >= 4) {
      const bool separable = is_ppt_separable_pair(partial_trace_to_pair(rho, 1, 2));
      add("xi_pairs_separable", separable, separable ? "pair (1,2) is PPT" : "pair (1,2) is NPT");
    }
  }
  return results;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  const PureState psi = load_state(args.state, err);
  const auto results = run_checks(psi, args.dense_cap);
  std::size_t failed = 0;
  for (const auto& r : results) {
    const char* tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
    if (!r.informational && !r.passed) ++failed;
    out << tag << "  " << r.name << ": " << r.detail << "\n";
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  return failed == 0 ? kExitOk : kExitNumerical;
}

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err) {
  const PureState psi = load_state(args.state, err);
  const DensityOperator pt = partial_transpose(density_of(psi), args.qubit, args.support_cap);
  const Spectrum s = spectrum_of(pt);
  out << "# family=" << family_name(psi.family()) << " n=" << psi.num_qubits() << " qubit=" << args.qubit
      << " support=" << pt.dimension() << "\n";
  for (double v : s.eigenvalues) out << format_real(std::abs(v) <= s.threshold ? 0.0 : v) << "\n";
  out << "negativity " << format_real(negativity(s)) << "\n";
  return kExitOk;
}

}  // namespace tanglekit::cli
