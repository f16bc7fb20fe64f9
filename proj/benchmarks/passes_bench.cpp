// Copyright 2026 The irgraph Authors. All Rights Reserved.
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

#include "irgraph/constfold.hpp"
#include "irgraph/generator.hpp"
#include "irgraph/isel.hpp"
#include "irgraph/verifier.hpp"

namespace {

using namespace irgraph;

IrGraph sample(std::int64_t ops) {
  GenSpec spec;
  spec.seed = 42;
  spec.opCount = static_cast<std::size_t>(ops);
  spec.argCount = 4;
  spec.diamonds = static_cast<std::size_t>(ops / 50);
  spec.memOps = static_cast<std::size_t>(ops / 50);
  return generateGraph(spec);
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Generate)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_Fold(benchmark::State& state) {
  const IrGraph input = sample(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    IrGraph g = input;
    state.ResumeTiming();
    benchmark::DoNotOptimize(runConstantFolding(g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fold)
    ->RangeMultiplier(4)
    ->Range(256, 16384)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_Isel(benchmark::State& state) {
  IrGraph folded = sample(state.range(0));
  runConstantFolding(folded);
  for (auto _ : state) {
    state.PauseTiming();
    IrGraph g = folded;
    state.ResumeTiming();
    benchmark::DoNotOptimize(runInstructionSelection(g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Isel)
    ->RangeMultiplier(4)
    ->Range(256, 16384)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_Verify(benchmark::State& state) {
  const IrGraph g = sample(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(g, true));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Verify)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
