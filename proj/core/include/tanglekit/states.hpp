// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief Sparse pure states and the built-in state families.
 *
 * The families are the generalized W state (equal superposition of the n
 * single-excitation kets), GHZ, and the xi state, which adds |1...1> to the
 * single-excitation kets with a common amplitude 1/sqrt(n+1).
 */

#pragma once

#include <map>
#include <span>
#include <string_view>

#include "tanglekit/basis.hpp"
#include "tanglekit/density_operator.hpp"

namespace tanglekit {

enum class StateFamily { W, GHZ, Xi, Custom };

/// "w", "ghz", "xi" or "custom".
std::string_view family_name(StateFamily family);

/// Inverse of family_name (case-insensitive); throws InvalidArgument.
StateFamily parse_family(std::string_view name);

/// Normalization tolerance on sum |amplitude|^2.
inline constexpr double kNormTolerance = 1e-12;

class PureState {
 public:
  using Amplitudes = std::map<BasisState, Amplitude>;

  /// Requires the amplitudes to be normalized within kNormTolerance. Zero
  /// entries are dropped.
  static PureState from_amplitudes(int n, Amplitudes amplitudes,
                                   StateFamily family = StateFamily::Custom);

  /// Divides by the 2-norm first. Throws InvalidArgument on a zero vector.
  static PureState normalized(int n, Amplitudes amplitudes,
                              StateFamily family = StateFamily::Custom);

  [[nodiscard]] int num_qubits() const noexcept { return n_; }
  [[nodiscard]] StateFamily family() const noexcept { return family_; }
  [[nodiscard]] const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
  [[nodiscard]] Amplitude amplitude(const BasisState& s) const;
  [[nodiscard]] SupportBasis support() const;

 private:
  PureState(int n, Amplitudes amplitudes, StateFamily family)
      : n_(n), amplitudes_(std::move(amplitudes)), family_(family) {}

  int n_;
  Amplitudes amplitudes_;
  StateFamily family_;
};

/// Generalized W state, amplitude 1/sqrt(n) on each single-excitation ket.
PureState make_w(int n);

/// (|0...0> + |1...1>)/sqrt(2).
PureState make_ghz(int n);

/// (|1...1> + sqrt(n)|W>)/sqrt(n+1).
PureState make_xi(int n);

/// Dispatches to make_w / make_ghz / make_xi; Custom is rejected.
PureState make_family(StateFamily family, int n);

struct ParsedState {
  PureState state;
  double input_norm;  // 2-norm of the amplitudes as written
};

/**
 * Parses the custom-state text format.
 *
 * One term per line, `<bitstring> <re> [<im>]`, qubit 1 leftmost. Text after
 * '#' is a comment; blank lines are ignored. All bitstrings must have the same
 * length, which fixes n. The amplitudes are divided by their 2-norm.
 */
ParsedState parse_custom_detailed(std::string_view text);

/// parse_custom_detailed without the norm.
PureState parse_custom(std::string_view text);

/// |psi><psi| on the support of psi.
DensityOperator density_of(const PureState& psi);

/// Relabels qubits: qubit q of psi becomes qubit perm[q-1]. The result is
/// tagged Custom.
PureState permute_qubits(const PureState& psi, std::span<const int> perm);

}  // namespace tanglekit
