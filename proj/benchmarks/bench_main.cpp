// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>

#include "interp/kfunction.hpp"
#include "interp/operators.hpp"
#include "interp/semigroup.hpp"
#include "interp/spaces.hpp"

using namespace interp;

namespace {

Vector hat(int n) {
  Vector u(n);
  for (int i = 0; i < n; ++i) u[i] = 1.0 - std::abs(2.0 * (i + 1) / (n + 1.0) - 1.0);
  return u;
}

void BM_KProfileScalar(benchmark::State& state) {
  const auto c = accretive_couple(scalar_operator(1.0));
  const Vector x = Vector::Ones(1);
  KOptions k;
  k.brute_force = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(k_profile(c, x, LogGrid::standard(), k));
}
BENCHMARK(BM_KProfileScalar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KProfileQLaplace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = accretive_couple(qlaplace_operator(n, 3.0));
  const Vector x = hat(n);
  KOptions k;
  k.brute_force = false;
  for (auto _ : state) benchmark::DoNotOptimize(k_profile(c, x, LogGrid::standard(), k));
}
BENCHMARK(BM_KProfileQLaplace)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ResolveQLaplace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = qlaplace_operator(n, 3.0);
  const Vector x = hat(n);
  for (auto _ : state) benchmark::DoNotOptimize(op->resolve(1e-2, x));
}
BENCHMARK(BM_ResolveQLaplace)->Arg(16)->Arg(64)->Arg(256);

void BM_EvolveHeat(benchmark::State& state) {
  const auto op = qlaplace_operator(64, 2.0);
  const Vector x = hat(64);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve(*op, x, 0.1, steps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveHeat)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_NormE(benchmark::State& state) {
  const LogGrid g = LogGrid::standard();
  const GridFunction f = GridFunction::indicator(g, 0.0, 1.0);
  const SpaceSpec s = SpaceSpec::weighted_lp(0.3, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(norm_E(s, f));
}
BENCHMARK(BM_NormE)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
