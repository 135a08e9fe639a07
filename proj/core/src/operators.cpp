// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "tanglekit/operators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

void check_qubit(int q, int n) {
  if (q < 1 || q > n) {
    throw InvalidArgument("qubit index " + std::to_string(q) + " outside 1.." + std::to_string(n));
  }
}

void check_pair(int i, int k, int n) {
  check_qubit(i, n);
  check_qubit(k, n);
  if (i == k) throw InvalidArgument("pair qubits must differ, got (" + std::to_string(i) + ", " +
                                    std::to_string(k) + ")");
}

struct Element {
  BasisState row;
  BasisState col;
  Amplitude value;
};

std::uint64_t qubit_mask(int n, int q) { return std::uint64_t{1} << (n - q); }

}  // namespace

DensityOperator partial_transpose(const DensityOperator& rho, int q, std::size_t support_cap) {
  const int n = rho.num_qubits();
  check_qubit(q, n);
  const auto& support = rho.support();
  const auto& m = rho.matrix();
  const auto d = static_cast<Eigen::Index>(rho.dimension());

  std::vector<Element> images;
  std::vector<BasisState> members(support.begin(), support.end());
  for (Eigen::Index c = 0; c < d; ++c) {
    const BasisState& b = support[static_cast<std::size_t>(c)];
    const bool bit_b = bit_of(b, q);
    for (Eigen::Index r = 0; r < d; ++r) {
      const Amplitude v = m(r, c);
      if (v == Amplitude{0.0, 0.0}) continue;
      const BasisState& a = support[static_cast<std::size_t>(r)];
      const bool bit_a = bit_of(a, q);
      if (bit_a == bit_b) {
        images.push_back({a, b, v});
        continue;
      }
      Element e{with_bit(a, q, bit_b), with_bit(b, q, bit_a), v};
      members.push_back(e.row);
      members.push_back(e.col);
      images.push_back(std::move(e));
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() > support_cap) {
    throw ResourceCapError("partial transpose support of " + std::to_string(members.size()) +
                           " states exceeds the cap of " + std::to_string(support_cap));
  }

  SupportBasis out_support(n, std::move(members));
  const auto out_d = static_cast<Eigen::Index>(out_support.size());
  ComplexMatrix out = ComplexMatrix::Zero(out_d, out_d);
  for (const auto& e : images) {
    out(static_cast<Eigen::Index>(out_support.index_of(e.row)),
        static_cast<Eigen::Index>(out_support.index_of(e.col))) = e.value;
  }
  return DensityOperator(std::move(out_support), std::move(out));
}

DensityOperator partial_trace_to_pair(const DensityOperator& rho, int i, int k) {
  const int n = rho.num_qubits();
  check_pair(i, k, n);
  const auto& support = rho.support();
  const auto& m = rho.matrix();

  // Elements survive the trace only when both kets agree on every traced-out
  // qubit, so group support members by their bits outside (i, k).
  std::map<BasisState, std::vector<Eigen::Index>> groups;
  for (std::size_t s = 0; s < support.size(); ++s) {
    BasisState rest = with_bit(with_bit(support[s], i, false), k, false);
    groups[rest].push_back(static_cast<Eigen::Index>(s));
  }
  auto pair_index = [&](Eigen::Index s) {
    const BasisState& ket = support[static_cast<std::size_t>(s)];
    return (bit_of(ket, i) ? 2 : 0) + (bit_of(ket, k) ? 1 : 0);
  };

  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (const auto& [_, members] : groups) {
    for (Eigen::Index c : members) {
      for (Eigen::Index r : members) out(pair_index(r), pair_index(c)) += m(r, c);
    }
  }
  return DensityOperator(SupportBasis::full(2), std::move(out));
}

ComplexMatrix embed_dense(const DensityOperator& rho, int dense_cap) {
  if (dense_cap > kMaxDenseCap) {
    throw InvalidArgument("dense cap " + std::to_string(dense_cap) + " exceeds the maximum of " +
                          std::to_string(kMaxDenseCap));
  }
  const int n = rho.num_qubits();
  if (n > dense_cap) {
    throw ResourceCapError("dense embedding of " + std::to_string(n) +
                           " qubits exceeds the dense cap of " + std::to_string(dense_cap));
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const auto& support = rho.support();
  std::vector<Eigen::Index> index(support.size());
  for (std::size_t s = 0; s < support.size(); ++s) {
    index[s] = static_cast<Eigen::Index>(support[s].to_index());
  }
  const auto d = static_cast<Eigen::Index>(support.size());
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      out(index[static_cast<std::size_t>(r)], index[static_cast<std::size_t>(c)]) = rho.matrix()(r, c);
    }
  }
  return out;
}

DensityOperator permute_qubits(const DensityOperator& rho, std::span<const int> perm) {
  const int n = rho.num_qubits();
  check_permutation(perm, n);
  const auto& support = rho.support();
  std::vector<BasisState> moved;
  moved.reserve(support.size());
  for (const auto& s : support) moved.push_back(permute_bits(s, perm));
  SupportBasis out_support(n, moved);

  const auto d = static_cast<Eigen::Index>(support.size());
  std::vector<Eigen::Index> target(support.size());
  for (std::size_t s = 0; s < support.size(); ++s) {
    target[s] = static_cast<Eigen::Index>(out_support.index_of(moved[s]));
  }
  ComplexMatrix out(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      out(target[static_cast<std::size_t>(r)], target[static_cast<std::size_t>(c)]) = rho.matrix()(r, c);
    }
  }
  return DensityOperator(std::move(out_support), std::move(out));
}

ComplexMatrix dense_partial_transpose(const ComplexMatrix& rho, int n, int q) {
  check_qubit(q, n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(rho.rows()) != dim || static_cast<std::uint64_t>(rho.cols()) != dim) {
    throw InvalidArgument("dense operator does not have dimension 2^" + std::to_string(n));
  }
  const std::uint64_t mask = qubit_mask(n, q);
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      const std::uint64_t r2 = (r & ~mask) | (c & mask);
      const std::uint64_t c2 = (c & ~mask) | (r & mask);
      out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) =
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

ComplexMatrix dense_partial_trace_to_pair(const ComplexMatrix& rho, int n, int i, int k) {
  check_pair(i, k, n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(rho.rows()) != dim || static_cast<std::uint64_t>(rho.cols()) != dim) {
    throw InvalidArgument("dense operator does not have dimension 2^" + std::to_string(n));
  }
  const std::uint64_t mi = qubit_mask(n, i);
  const std::uint64_t mk = qubit_mask(n, k);
  const std::uint64_t kept = mi | mk;
  auto pair_index = [&](std::uint64_t s) {
    return static_cast<Eigen::Index>(((s & mi) ? 2 : 0) + ((s & mk) ? 1 : 0));
  };
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      if ((r & ~kept) != (c & ~kept)) continue;
      out(pair_index(r), pair_index(c)) += rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

}  // namespace tanglekit
