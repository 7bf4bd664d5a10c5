// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "hardyleray/constants.hpp"
#include "hardyleray/minimizing.hpp"
#include "hardyleray/operators.hpp"
#include "hardyleray/spectral.hpp"
#include "hardyleray/stream2d.hpp"

namespace {

using namespace hardyleray;

void BM_SharpConstant(benchmark::State& state) {
  const Params p(3, 0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sharp_constant(p).c);
  }
}
BENCHMARK(BM_SharpConstant);

void BM_BruteForceInfimum(benchmark::State& state) {
  const Params p(static_cast<int>(state.range(0)), 1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_infimum(p, 10.0, 64, 2001).value);
  }
}
BENCHMARK(BM_BruteForceInfimum)->Arg(2)->Arg(3)->Arg(8);

void BM_ThetaSpectrum(benchmark::State& state) {
  auto grid = make_grid(-12.0, 12.0, 64, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_spectrum(*grid, 5).sum());
  }
}
BENCHMARK(BM_ThetaSpectrum)->Arg(64)->Arg(128)->Arg(256);

void BM_GradientEnergy(benchmark::State& state) {
  const Params p(3, 0.0);
  auto grid = make_grid(-12.0, 12.0, static_cast<int>(state.range(0)), 3, 256);
  const auto v = random_divfree_axisym(5, p, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_energy(v));
  }
}
BENCHMARK(BM_GradientEnergy)->Arg(512)->Arg(1024);

void BM_SolveVRho(benchmark::State& state) {
  const Params p(3, 0.0);
  auto grid = make_grid(-12.0, 12.0, 1024, 3, 256);
  const auto v = random_divfree_axisym(6, p, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_v_rho(*grid, v.v_theta, p).sum());
  }
}
BENCHMARK(BM_SolveVRho);

void BM_StreamQuotient(benchmark::State& state) {
  const Params p(2, 1.0);
  const auto f = random_divfree_2d(3, 6, p,
                                   {static_cast<int>(state.range(0)), 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_inequality_2d(f).value);
  }
}
BENCHMARK(BM_StreamQuotient)->Arg(128)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
