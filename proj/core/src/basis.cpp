// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/basis.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <string>

#include "tanglekit/errors.hpp"

namespace tanglekit {

void check_qubit_count(int n) {
  if (n < 1) throw InvalidArgument("qubit count must be positive, got " + std::to_string(n));
  if (n > kMaxQubits) {
    throw ResourceCapError("qubit count " + std::to_string(n) + " exceeds the label width of " +
                           std::to_string(kMaxQubits) + " qubits");
  }
}

BasisState::BasisState(int n) : n_(n) { check_qubit_count(n); }

BasisState BasisState::from_index(int n, std::uint64_t value) {
  BasisState s(n);
  if (n < kWordBits && (value >> n) != 0) {
    throw InvalidArgument("basis index " + std::to_string(value) + " does not fit in " +
                          std::to_string(n) + " qubits");
  }
  s.words_[0] = value;
  return s;
}

BasisState BasisState::parse(std::string_view bits) {
  if (bits.empty()) throw InvalidArgument("empty bitstring");
  if (bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw ResourceCapError("bitstring longer than " + std::to_string(kMaxQubits) + " qubits");
  }
  BasisState s(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw InvalidArgument("invalid character '" + std::string(1, c) + "' in bitstring \"" +
                            std::string(bits) + "\"");
    }
    if (c == '1') s = with_bit(s, static_cast<int>(i) + 1, true);
  }
  return s;
}

int BasisState::position(int q) const {
  if (q < 1 || q > n_) {
    throw InvalidArgument("qubit index " + std::to_string(q) + " outside 1.." +
                          std::to_string(n_));
  }
  return n_ - q;
}

int BasisState::popcount() const noexcept {
  int count = 0;
  for (auto w : words_) count += std::popcount(w);
  return count;
}

std::string BasisState::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int q = 1; q <= n_; ++q) {
    if (bit_of(*this, q)) out[static_cast<std::size_t>(q - 1)] = '1';
  }
  return out;
}

std::uint64_t BasisState::to_index() const {
  if (n_ > kWordBits) {
    throw ResourceCapError("basis index of a " + std::to_string(n_) +
                           "-qubit state does not fit in a machine word");
  }
  return words_[0];
}

bool bit_of(const BasisState& s, int q) {
  const int pos = s.position(q);
  return (s.words_[static_cast<std::size_t>(pos / BasisState::kWordBits)] >>
          (pos % BasisState::kWordBits)) & 1U;
}

BasisState with_bit(const BasisState& s, int q, bool v) {
  const int pos = s.position(q);
  BasisState out = s;
  auto& word = out.words_[static_cast<std::size_t>(pos / BasisState::kWordBits)];
  const std::uint64_t mask = std::uint64_t{1} << (pos % BasisState::kWordBits);
  word = v ? (word | mask) : (word & ~mask);
  return out;
}

std::strong_ordering operator<=>(const BasisState& a, const BasisState& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int w = BasisState::kWords - 1; w >= 0; --w) {
    const auto i = static_cast<std::size_t>(w);
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

SupportBasis::SupportBasis(int n, std::vector<BasisState> states) : n_(n), states_(std::move(states)) {
  check_qubit_count(n);
  for (const auto& s : states_) {
    if (s.num_qubits() != n) {
      throw InvalidArgument("support member " + s.to_string() + " is not a " +
                            std::to_string(n) + "-qubit state");
    }
  }
  std::sort(states_.begin(), states_.end());
  if (auto dup = std::adjacent_find(states_.begin(), states_.end()); dup != states_.end()) {
    throw InvalidArgument("duplicate support member " + dup->to_string());
  }
}

SupportBasis SupportBasis::full(int n) {
  if (n < 1 || n > 20) throw ResourceCapError("full basis requested for " + std::to_string(n) + " qubits");
  std::vector<BasisState> states;
  states.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) states.push_back(BasisState::from_index(n, v));
  return SupportBasis(n, std::move(states));
}

std::optional<std::size_t> SupportBasis::lookup(const BasisState& s) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t SupportBasis::index_of(const BasisState& s) const {
  if (auto i = lookup(s)) return *i;
  throw InvalidArgument("state " + s.to_string() + " is not in the support");
}

SupportBasis union_support(const SupportBasis& a, const SupportBasis& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidArgument("cannot merge supports on " + std::to_string(a.num_qubits()) + " and " +
                          std::to_string(b.num_qubits()) + " qubits");
  }
  std::vector<BasisState> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return SupportBasis(a.num_qubits(), std::move(merged));
}

void check_permutation(std::span<const int> perm, int n) {
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                          std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

BasisState permute_bits(const BasisState& s, std::span<const int> perm) {
  const int n = s.num_qubits();
  BasisState out(n);
  for (int q = 1; q <= n; ++q) {
    if (bit_of(s, q)) out = with_bit(out, perm[static_cast<std::size_t>(q - 1)], true);
  }
  return out;
}

}  // namespace tanglekit
