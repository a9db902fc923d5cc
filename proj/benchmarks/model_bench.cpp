// Copyright 2026 The slitspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "slitspin/fringe.hpp"
#include "slitspin/oracle.hpp"
#include "slitspin/rotor.hpp"

namespace {

using namespace slitspin;

std::vector<double> grid(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = -1.2 + 2.4 * static_cast<double>(k) / (n - 1.0);
  return out;
}

void BM_ApplyPair(benchmark::State& state) {
  TwoSpinState s = basis_u();
  const PairRotation r{RotationAngle{0.3}, RotationAngle{1.1}};
  for (auto _ : state) {
    s = apply_pair(r, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyPair);

void BM_MeasureFactor(benchmark::State& state) {
  const TwoSpinState psi = pair_state(0.7);
  for (auto _ : state) {
    Ensemble e = measure_factor(psi, 1, 0.2);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_MeasureFactor);

void BM_TwoSlitProfile(benchmark::State& state) {
  const auto g = SlitGeometry::uniform(2, 2e-6, 5e-7, 1.0);
  const auto thetas = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    FringeProfile p = intensity_profile(g, thetas, ModelOptions{});
    benchmark::DoNotOptimize(p);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TwoSlitProfile)->RangeMultiplier(10)->Range(100, 100000);

void BM_MultiSlitIntensity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = SlitGeometry::uniform(n, 2e-6, 5e-7, 1.0);
  const ScreenPoint p(0.123);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multi_slit_intensity(g, p, PhaseConvention::kHalf));
  }
}
BENCHMARK(BM_MultiSlitIntensity)->DenseRange(2, 10, 2);

void BM_ClassicalOracle(benchmark::State& state) {
  const oracle::WavePhaseSet ws(std::vector<double>(static_cast<std::size_t>(state.range(0)), 0.37));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::classical_intensity(ws));
}
BENCHMARK(BM_ClassicalOracle)->DenseRange(2, 10, 2);

}  // namespace

BENCHMARK_MAIN();
