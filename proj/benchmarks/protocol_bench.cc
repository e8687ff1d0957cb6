/*
 * Copyright 2026 The sumlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "sumlab/adversary.h"
#include "sumlab/engine.h"

namespace sumlab {
namespace {

void BM_RunModifiedCk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Modulus m = Modulus::Default();
  const auto inputs = RandomInputs(n, m, 1);
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunProtocol(Variant::kModifiedCk, inputs, m, ++seed));
  }
  state.counters["messages"] = static_cast<double>(n) * n;
  state.SetComplexityN(n);
}
BENCHMARK(BM_RunModifiedCk)->DenseRange(4, 32, 4)->Complexity();

void BM_Replay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Modulus m = Modulus::Default();
  RunResult r = RunProtocol(Variant::kModifiedCk, RandomInputs(n, m, 1), m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Replay(r));
}
BENCHMARK(BM_Replay)->Arg(8)->Arg(16)->Arg(32);

void BM_DecideLeakage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Modulus m = Modulus::Default();
  RunResult r = RunProtocol(Variant::kModifiedCk, RandomInputs(n, m, 1), m, 1);
  const Coalition coalition = {PartyId{1}, PartyId{2}, PartyId{4}};
  for (auto _ : state) {
    CoalitionView view = ExtractView(r, coalition);
    benchmark::DoNotOptimize(DecideLeakage(view, PartyId{3}, m));
  }
}
BENCHMARK(BM_DecideLeakage)->DenseRange(5, 11, 2);

void BM_BruteForceLeakage(benchmark::State& state) {
  const Modulus m = Modulus::Make(5);
  RunResult r = RunProtocol(Variant::kModifiedCk, RandomInputs(4, m, 1), m, 1);
  const Coalition coalition = {PartyId{static_cast<int>(state.range(0))}};
  const PartyId victim{coalition[0].index % 4 + 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteForceLeakage(r, coalition, victim));
  }
}
BENCHMARK(BM_BruteForceLeakage)->DenseRange(1, 4);

void BM_PrivacyMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Modulus m = Modulus::Make(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BuildPrivacyMatrix(Variant::kModifiedCk, n, m, 0, {{}, n <= 5}));
  }
}
BENCHMARK(BM_PrivacyMatrix)->DenseRange(4, 8);

}  // namespace
}  // namespace sumlab

BENCHMARK_MAIN();
