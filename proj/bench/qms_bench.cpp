// Copyright 2026 The qms Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference path against the OpenMP kernels. The second benchmark
// argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "qms/contraction.hpp"
#include "qms/ensembles.hpp"

namespace {

qms::Execution path(const benchmark::State& state) {
  return state.range(1) == 0 ? qms::Execution::serial : qms::Execution::parallel;
}

void BM_QubitGridTau(benchmark::State& state) {
  const qms::SuperOperator t = qms::random_channel(2, 3, 1);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qms::tau_exact_qubit(t, grid, path(state)).value);
  }
}
BENCHMARK(BM_QubitGridTau)->Args({20000, 0})->Args({20000, 1})->Unit(benchmark::kMillisecond);

void BM_MultistartNorm(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  const qms::SuperOperator l = qms::random_channel(d, 2, 2) - qms::random_channel(d, 3, 3);
  qms::OptimizerOptions opts;
  opts.execution = path(state);
  for (auto _ : state) benchmark::DoNotOptimize(qms::norm_1to1(l, opts).value);
}
BENCHMARK(BM_MultistartNorm)
    ->Args({2, 0})
    ->Args({2, 1})
    ->Args({3, 0})
    ->Args({3, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  qms::EnsembleConfig c;
  c.dim = 2;
  c.count = static_cast<int>(state.range(0));
  c.master_seed = 9;
  c.steps = 50;
  c.execution = path(state);
  c.optimizer.restarts = 16;
  for (auto _ : state) benchmark::DoNotOptimize(qms::sweep(c).size());
}
BENCHMARK(BM_Sweep)->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
