// Copyright 2026 The hamdecomp Authors
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

#include "hamdecomp/hamdecomp.hpp"

namespace {

using namespace hamdecomp;

void BM_BuildLeading(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_leading_tournament(m));
}
BENCHMARK(BM_BuildLeading)->Arg(9)->Arg(31)->Arg(101)->Arg(301);

void BM_DecomposePrime(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_prime(m));
}
BENCHMARK(BM_DecomposePrime)->Arg(7)->Arg(31)->Arg(101)->Arg(307);

void BM_PackLeading(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pack_leading(m));
}
BENCHMARK(BM_PackLeading)->Arg(9)->Arg(105)->Arg(315);

void BM_RotationTournament(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotation_tournament(m));
}
BENCHMARK(BM_RotationTournament)->Arg(9)->Arg(25)->Arg(101);

void BM_Verify(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Tournament t = build_leading_tournament(m);
  const PackingResult p = pack_leading(m);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(t, p));
}
BENCHMARK(BM_Verify)->Arg(9)->Arg(31)->Arg(101);

void BM_SearchLeading(benchmark::State& state) {
  const Tournament t = build_leading_tournament(static_cast<int>(state.range(0)));
  const SearchOptions options{static_cast<unsigned>(state.range(1))};
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SearchOutcome out = find_decomposition(t, {}, options);
    nodes = out.nodes_explored;
    benchmark::DoNotOptimize(out);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchLeading)->Args({7, 1})->Args({9, 1})->Args({11, 1})->Args({9, 4})->Args({11, 4});

void BM_SearchRotation(benchmark::State& state) {
  const Tournament t = rotation_tournament(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_decomposition(t, {}));
}
BENCHMARK(BM_SearchRotation)->Arg(9)->Arg(11);

void BM_ExportJson(benchmark::State& state) {
  const PackingResult p = rotation_decomposition(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_json(export_json(p)));
}
BENCHMARK(BM_ExportJson)->Arg(25)->Arg(101);

}  // namespace

BENCHMARK_MAIN();
