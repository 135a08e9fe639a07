// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tanglekit/errors.hpp"
#include "tanglekit_cli/commands.hpp"

namespace tanglekit::cli {

namespace {

const std::map<std::string, StateFamily> kFamilies{
    {"w", StateFamily::W}, {"ghz", StateFamily::GHZ}, {"xi", StateFamily::Xi}, {"custom", StateFamily::Custom}};
const std::map<std::string, StateFamily> kBuiltinFamilies{
    {"w", StateFamily::W}, {"ghz", StateFamily::GHZ}, {"xi", StateFamily::Xi}};
const std::map<std::string, MethodChoice> kMethods{
    {"numeric", MethodChoice::Numeric}, {"closed", MethodChoice::Closed}, {"both", MethodChoice::Both}};

void add_state_options(CLI::App* cmd, StateSpec& spec) {
  cmd->add_option("--family", spec.family, "w, ghz, xi or custom")
      ->required()
      ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  cmd->add_option("--n", spec.n, "qubit count (built-in families)");
  cmd->add_option("--state-file", spec.state_file, "custom state file: `<bitstring> <re> [<im>]` per line");
}

void require_n(const StateSpec& spec) {
  if (spec.family != StateFamily::Custom && spec.n < 2) {
    throw InvalidArgument("--n >= 2 is required for built-in families");
  }
}

void add_dense_cap(CLI::App* cmd, int& cap) {
  cmd->add_option("--dense-cap", cap, "largest n for dense 2^n embedding")
      ->envname("TANGLEKIT_DENSE_CAP")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negativity-based entanglement measures of n-qubit pure states", "tanglekit"};
  app.require_subcommand(1);

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "one-/two-tangles, pi-tangle and totals as JSON");
  add_state_options(measure_cmd, measure.state);
  measure_cmd->add_option("--method", measure.method, "numeric, closed or both")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  measure_cmd->add_flag("--dense", measure.dense, "use the dense 2^n route for the numeric path");
  add_dense_cap(measure_cmd, measure.dense_cap);
  measure_cmd->add_flag("--table", measure.table, "print a text table instead of JSON");
  measure_cmd->add_flag("--normalize", measure.normalize, "add totals divided by the family's large-n limit");

  SweepArgs sweep;
  std::vector<std::string> sweep_measures;
  auto* sweep_cmd = app.add_subcommand("sweep", "measures over a range of n as CSV");
  sweep_cmd->add_option("--family", sweep.family, "w, ghz or xi")
      ->required()
      ->transform(CLI::CheckedTransformer(kBuiltinFamilies, CLI::ignore_case));
  sweep_cmd->add_option("--n-min", sweep.n_min)->required();
  sweep_cmd->add_option("--n-max", sweep.n_max)->required();
  sweep_cmd->add_option("--measures", sweep_measures, "one_tangle,two_tangle,pi,total_neg,total_sq")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--out", sweep.out_path, "output CSV path, '-' for stdout")->capture_default_str();
  sweep_cmd->add_option("--numeric-cap", sweep.numeric_cap, "largest n evaluated numerically")
      ->capture_default_str();
  sweep_cmd->add_flag("--dense", sweep.dense, "use the dense 2^n route below the numeric cap");
  add_dense_cap(sweep_cmd, sweep.dense_cap);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "run the consistency checks");
  add_state_options(check_cmd, check.state);
  add_dense_cap(check_cmd, check.dense_cap);

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the state transposed on one qubit");
  add_state_options(spectrum_cmd, spectrum.state);
  spectrum_cmd->add_option("--qubit", spectrum.qubit)->capture_default_str();
  spectrum_cmd->add_option("--support-cap", spectrum.support_cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*measure_cmd) {
      require_n(measure.state);
      return cmd_measure(measure, out, err);
    }
    if (*sweep_cmd) {
      for (const auto& name : sweep_measures) sweep.measures.push_back(parse_measure(name));
      return cmd_sweep(sweep, out, err);
    }
    if (*check_cmd) {
      require_n(check.state);
      return cmd_check(check, out, err);
    }
    require_n(spectrum.state);
    return cmd_spectrum(spectrum, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidityError& e) {
    err << "validity: " << e.what() << "\n";
    return kExitValidity;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace tanglekit::cli
