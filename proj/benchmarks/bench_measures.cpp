// Copyright 2026 The tanglekit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "tanglekit/closed_form.hpp"
#include "tanglekit/measures.hpp"
#include "tanglekit/operators.hpp"
#include "tanglekit/spectral.hpp"
#include "tanglekit/states.hpp"

namespace {

using namespace tanglekit;

void BM_PartialTranspose(benchmark::State& state) {
  const auto rho = density_of(make_xi(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(rho, 1));
}
BENCHMARK(BM_PartialTranspose)->RangeMultiplier(4)->Range(4, 256);

void BM_StructuredSpectrum(benchmark::State& state) {
  const auto pt = partial_transpose(density_of(make_w(static_cast<int>(state.range(0)))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_of(pt));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StructuredSpectrum)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_DenseSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pt = embed_dense(partial_transpose(density_of(make_w(n)), 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(pt));
}
BENCHMARK(BM_DenseSpectrum)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_CkwReport(benchmark::State& state) {
  const auto psi = make_w(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ckw_report(psi));
}
BENCHMARK(BM_CkwReport)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

void BM_CkwReportFullScan(benchmark::State& state) {
  const auto psi = make_xi(static_cast<int>(state.range(0)));
  MeasureOptions options;
  options.symmetric_fast_path = false;
  for (auto _ : state) benchmark::DoNotOptimize(ckw_report(psi, options));
}
BENCHMARK(BM_CkwReportFullScan)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedFormReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form::closed_form_report(StateFamily::W, n));
}
BENCHMARK(BM_ClosedFormReport)->Range(8, 512);

}  // namespace

BENCHMARK_MAIN();
