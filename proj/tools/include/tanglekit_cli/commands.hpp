// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file commands.hpp
 * @brief Subcommands of the tanglekit tool: measure, sweep, check, spectrum.
 *
 * Exit codes: 0 success, 2 usage, 3 closed form outside its validity range,
 * 4 resource cap exceeded, 5 numerical failure or failed consistency check.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanglekit/measures.hpp"
#include "tanglekit/states.hpp"

namespace tanglekit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitValidity = 3,
  kExitResourceCap = 4,
  kExitNumerical = 5,
};

inline constexpr int kDefaultNumericCap = 500;
inline constexpr double kBothDeltaTolerance = 1e-8;

/// Either a built-in family at n, or a custom state file.
struct StateSpec {
  StateFamily family = StateFamily::W;
  int n = 0;
  std::string state_file;
};

/// Builds the state; logs the input norm of custom files to err.
PureState load_state(const StateSpec& spec, std::ostream& err);

enum class MethodChoice { Numeric, Closed, Both };

struct MeasureArgs {
  StateSpec state;
  MethodChoice method = MethodChoice::Numeric;
  bool dense = false;
  int dense_cap = kDefaultDenseCap;
  bool table = false;
  bool normalize = false;
};

struct SweepArgs {
  StateFamily family = StateFamily::W;
  int n_min = 2;
  int n_max = 2;
  std::vector<Measure> measures;
  std::string out_path = "-";
  int numeric_cap = kDefaultNumericCap;
  bool dense = false;
  int dense_cap = kDefaultDenseCap;
};

struct SweepRow {
  StateFamily family;
  int n;
  Measure measure;
  double value;
  Method method;
};

struct CheckArgs {
  StateSpec state;
  int dense_cap = kDefaultDenseCap;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  bool informational = false;  // reported but never fails the run
};

struct SpectrumArgs {
  StateSpec state;
  int qubit = 1;
  std::size_t support_cap = kDefaultSupportCap;
};

/// 12 significant digits, '.' separator, independent of the C locale.
std::string format_real(double value);

/// |a - b| / |b|, or |a - b| when b is zero.
double relative_delta(double a, double b);

nlohmann::json report_to_json(const MeasureReport& report, bool normalize = false);

std::vector<SweepRow> sweep_rows(const SweepArgs& args);
void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

std::vector<CheckResult> run_checks(const PureState& psi, int dense_cap);

int cmd_measure(const MeasureArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; library errors are mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tanglekit::cli
