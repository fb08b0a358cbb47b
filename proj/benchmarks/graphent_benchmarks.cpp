// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "graphent/census.hpp"
#include "graphent/graphon.hpp"
#include "graphent/optimizer.hpp"
#include "graphent/random.hpp"
#include "graphent/spectral.hpp"

namespace {

graphent::Matrix random_graphon(int m) {
  graphent::SplitMix64 rng(42);
  graphent::Matrix v(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) v(i, j) = v(j, i) = rng.uniform();
  }
  return v;
}

void BM_TriangleDensity(benchmark::State& state) {
  const auto v = random_graphon(static_cast<int>(state.range(0)));
  const auto motif = graphent::Motif::triangle();
  for (auto _ : state) benchmark::DoNotOptimize(graphent::kernel::motif_density(v, motif));
}
BENCHMARK(BM_TriangleDensity)->Arg(16)->Arg(64);

void BM_TriangleGradient(benchmark::State& state) {
  const auto v = random_graphon(static_cast<int>(state.range(0)));
  const auto motif = graphent::Motif::triangle();
  for (auto _ : state) benchmark::DoNotOptimize(graphent::kernel::motif_gradient(v, motif));
}
BENCHMARK(BM_TriangleGradient)->Arg(16)->Arg(64);

void BM_FourCycleDensity(benchmark::State& state) {
  const auto v = random_graphon(static_cast<int>(state.range(0)));
  const auto motif = graphent::Motif::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(graphent::kernel::motif_density(v, motif));
}
BENCHMARK(BM_FourCycleDensity)->Arg(16)->Arg(64);

void BM_Spectrum(benchmark::State& state) {
  const auto v = random_graphon(static_cast<int>(state.range(0)));
  graphent::Matrix dg = v.array() - v.mean();
  for (auto _ : state) benchmark::DoNotOptimize(graphent::kernel_operator_spectrum(dg));
}
BENCHMARK(BM_Spectrum)->Arg(16)->Arg(64);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graphent::enumerate_census(n).total());
}
BENCHMARK(BM_Census)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_MaximizeEntropy(benchmark::State& state) {
  graphent::OptimConfig config;
  config.m = static_cast<int>(state.range(0));
  const auto motif = graphent::Motif::triangle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(graphent::maximize_entropy({0.5, 0.1}, motif, config).s_value);
  }
}
BENCHMARK(BM_MaximizeEntropy)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
