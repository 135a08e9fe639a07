// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file basis.hpp
 * @brief Computational-basis labels and ordered support bases.
 *
 * Qubits are numbered 1..n from the left of the ket, so qubit 1 is the most
 * significant bit of the integer value of the label: "100" is |100> and has
 * value 4. Labels are stored in a fixed 512-bit word array, which bounds the
 * qubit count at kMaxQubits.
 */

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tanglekit {

inline constexpr int kMaxQubits = 512;

class BasisState {
 public:
  static constexpr int kWordBits = 64;
  static constexpr int kWords = kMaxQubits / kWordBits;

  /// |0...0> on n qubits.
  explicit BasisState(int n);

  /// Label whose integer value is `value` (qubit n is bit 0).
  static BasisState from_index(int n, std::uint64_t value);

  /// Parses literal 0/1 characters, qubit 1 leftmost.
  static BasisState parse(std::string_view bits);

  [[nodiscard]] int num_qubits() const noexcept { return n_; }
  [[nodiscard]] int popcount() const noexcept;
  [[nodiscard]] std::string to_string() const;

  /// Integer value of the label; requires n <= 64.
  [[nodiscard]] std::uint64_t to_index() const;

  friend bool bit_of(const BasisState& s, int q);
  friend BasisState with_bit(const BasisState& s, int q, bool v);

  friend bool operator==(const BasisState&, const BasisState&) = default;
  friend std::strong_ordering operator<=>(const BasisState& a, const BasisState& b) noexcept;

 private:
  [[nodiscard]] int position(int q) const;  // throws on q outside 1..n

  int n_;
  std::array<std::uint64_t, kWords> words_{};
};

/// Occupation of qubit q (1-based) in s.
bool bit_of(const BasisState& s, int q);

/// Copy of s with qubit q set to v.
BasisState with_bit(const BasisState& s, int q, bool v);

/// Ordered list of distinct basis states on a common qubit count.
///
/// Members are kept in ascending order of integer value, so the position of a
/// state is a pure function of the member set.
class SupportBasis {
 public:
  explicit SupportBasis(int n) : n_(n) {}

  /// Sorts the states; throws InvalidArgument on duplicates or mixed n.
  SupportBasis(int n, std::vector<BasisState> states);

  /// Every basis state of n qubits, n <= 20.
  static SupportBasis full(int n);

  [[nodiscard]] int num_qubits() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
  [[nodiscard]] bool empty() const noexcept { return states_.empty(); }
  [[nodiscard]] std::span<const BasisState> states() const noexcept { return states_; }
  [[nodiscard]] const BasisState& operator[](std::size_t i) const { return states_[i]; }
  [[nodiscard]] auto begin() const noexcept { return states_.begin(); }
  [[nodiscard]] auto end() const noexcept { return states_.end(); }

  [[nodiscard]] std::optional<std::size_t> lookup(const BasisState& s) const;
  [[nodiscard]] bool contains(const BasisState& s) const { return lookup(s).has_value(); }

  /// Position of s; throws InvalidArgument when absent.
  [[nodiscard]] std::size_t index_of(const BasisState& s) const;

  friend bool operator==(const SupportBasis&, const SupportBasis&) = default;

 private:
  int n_;
  std::vector<BasisState> states_;
};

/// Set union of two supports, ascending order. Throws on mismatched n.
SupportBasis union_support(const SupportBasis& a, const SupportBasis& b);

/// Validates a qubit count against 1..kMaxQubits.
void check_qubit_count(int n);

/// Validates that perm is a permutation of 1..n.
void check_permutation(std::span<const int> perm, int n);

/// Relabels qubits: qubit q of s becomes qubit perm[q-1] of the result.
BasisState permute_bits(const BasisState& s, std::span<const int> perm);

}  // namespace tanglekit
