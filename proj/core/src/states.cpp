// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/states.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

void check_family_n(int n) {
  if (n < 2) throw InvalidArgument("state families need n >= 2, got " + std::to_string(n));
  check_qubit_count(n);
}

BasisState single_excitation(int n, int q) { return with_bit(BasisState(n), q, true); }

BasisState all_ones(int n) {
  BasisState s(n);
  for (int q = 1; q <= n; ++q) s = with_bit(s, q, true);
  return s;
}

double squared_norm(const PureState::Amplitudes& amps) {
  double sum = 0.0;
  for (const auto& [_, a] : amps) sum += std::norm(a);
  return sum;
}

void check_keys(int n, PureState::Amplitudes& amps) {
  check_qubit_count(n);
  for (auto it = amps.begin(); it != amps.end();) {
    if (it->first.num_qubits() != n) {
      throw InvalidArgument("amplitude key " + it->first.to_string() + " is not a " +
                            std::to_string(n) + "-qubit state");
    }
    it = (it->second == Amplitude{0.0, 0.0}) ? amps.erase(it) : std::next(it);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InvalidArgument("line " + std::to_string(line_no) + ": malformed number \"" +
                          std::string(field) + "\"");
  }
  return value;
}

}  // namespace

std::string_view family_name(StateFamily family) {
  switch (family) {
    case StateFamily::W: return "w";
    case StateFamily::GHZ: return "ghz";
    case StateFamily::Xi: return "xi";
    case StateFamily::Custom: return "custom";
  }
  return "custom";
}

StateFamily parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "w") return StateFamily::W;
  if (lower == "ghz") return StateFamily::GHZ;
  if (lower == "xi") return StateFamily::Xi;
  if (lower == "custom") return StateFamily::Custom;
  throw InvalidArgument("unknown state family \"" + std::string(name) + "\"");
}

PureState PureState::from_amplitudes(int n, Amplitudes amplitudes, StateFamily family) {
  check_keys(n, amplitudes);
  const double norm2 = squared_norm(amplitudes);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw InvalidArgument("state is not normalized: sum |a|^2 = " + std::to_string(norm2));
  }
  return PureState(n, std::move(amplitudes), family);
}

PureState PureState::normalized(int n, Amplitudes amplitudes, StateFamily family) {
  check_keys(n, amplitudes);
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (norm == 0.0) throw InvalidArgument("state vector is zero");
  for (auto& [_, a] : amplitudes) a /= norm;
  return PureState(n, std::move(amplitudes), family);
}

Amplitude PureState::amplitude(const BasisState& s) const {
  auto it = amplitudes_.find(s);
  return it == amplitudes_.end() ? Amplitude{0.0, 0.0} : it->second;
}

SupportBasis PureState::support() const {
  std::vector<BasisState> keys;
  keys.reserve(amplitudes_.size());
  for (const auto& [s, _] : amplitudes_) keys.push_back(s);
  return SupportBasis(n_, std::move(keys));
}

PureState make_w(int n) {
  check_family_n(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  PureState::Amplitudes amps;
  for (int q = 1; q <= n; ++q) amps.emplace(single_excitation(n, q), a);
  return PureState::from_amplitudes(n, std::move(amps), StateFamily::W);
}

PureState make_ghz(int n) {
  check_family_n(n);
  const double a = 1.0 / std::sqrt(2.0);
  PureState::Amplitudes amps;
  amps.emplace(BasisState(n), a);
  amps.emplace(all_ones(n), a);
  return PureState::from_amplitudes(n, std::move(amps), StateFamily::GHZ);
}

PureState make_xi(int n) {
  check_family_n(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n) + 1.0);
  PureState::Amplitudes amps;
  amps.emplace(all_ones(n), a);
  for (int q = 1; q <= n; ++q) amps.emplace(single_excitation(n, q), a);
  return PureState::from_amplitudes(n, std::move(amps), StateFamily::Xi);
}

PureState make_family(StateFamily family, int n) {
  switch (family) {
    case StateFamily::W: return make_w(n);
    case StateFamily::GHZ: return make_ghz(n);
    case StateFamily::Xi: return make_xi(n);
    case StateFamily::Custom: break;
  }
  throw InvalidArgument("custom states are read from a file, not constructed by family");
}

ParsedState parse_custom_detailed(std::string_view text) {
  PureState::Amplitudes amps;
  std::optional<int> n;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto fields = split_fields(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw InvalidArgument("line " + std::to_string(line_no) +
                            ": expected `<bitstring> <re> [<im>]`");
    }
    const BasisState ket = BasisState::parse(fields[0]);
    if (n && ket.num_qubits() != *n) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": bitstring length " +
                            std::to_string(ket.num_qubits()) + " differs from " + std::to_string(*n));
    }
    n = ket.num_qubits();
    const double re = parse_number(fields[1], line_no);
    const double im = fields.size() == 3 ? parse_number(fields[2], line_no) : 0.0;
    if (!amps.emplace(ket, Amplitude{re, im}).second) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate bitstring " +
                            ket.to_string());
    }
  }
  if (!n) throw InvalidArgument("state file contains no terms");
  if (*n < 2) throw InvalidArgument("custom states need at least 2 qubits");
  const double norm = std::sqrt(squared_norm(amps));
  if (norm == 0.0) throw InvalidArgument("state vector is zero");
  return {PureState::normalized(*n, std::move(amps)), norm};
}

PureState parse_custom(std::string_view text) { return parse_custom_detailed(text).state; }

DensityOperator density_of(const PureState& psi) {
  SupportBasis support = psi.support();
  const auto d = static_cast<Eigen::Index>(support.size());
  Eigen::VectorXcd v(d);
  Eigen::Index i = 0;
  for (const auto& [_, a] : psi.amplitudes()) v(i++) = a;
  ComplexMatrix m = v * v.adjoint();
  return DensityOperator(std::move(support), std::move(m));
}

PureState permute_qubits(const PureState& psi, std::span<const int> perm) {
  check_permutation(perm, psi.num_qubits());
  PureState::Amplitudes out;
  for (const auto& [s, a] : psi.amplitudes()) out.emplace(permute_bits(s, perm), a);
  return PureState::from_amplitudes(psi.num_qubits(), std::move(out));
}

}  // namespace tanglekit
