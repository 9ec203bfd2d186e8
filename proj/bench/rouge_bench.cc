// Copyright 2026 The Astkit Authors
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
//
// Measures the leakage-screening hot loop: the OpenMP score matrix against
// the serial reference it is tested against. Run with
//   ./bench/rouge_bench --benchmark_min_time=0.25

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "astkit/rouge.h"
#include "benchmark/benchmark.h"

namespace {

astkit::TokenLists MakeTokenLists(int lists, int tokens_per_list,
                                  std::uint32_t seed) {
  static const char* kVocab[] = {"adder",  "counter", "shift",  "register",
                                 "carry",  "enable",  "reset",  "clock",
                                 "parity", "fifo",    "stream", "output"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> word(0, 11);
  astkit::TokenLists out(static_cast<std::size_t>(lists));
  for (auto& list : out) {
    list.resize(static_cast<std::size_t>(tokens_per_list));
    for (std::string& token : list) token = kVocab[word(rng)];
  }
  return out;
}

void BM_MaxRougeScoresSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  astkit::TokenLists candidates = MakeTokenLists(n, 32, 1);
  astkit::TokenLists references = MakeTokenLists(n, 32, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        astkit::MaxRougeScoresSerial(candidates, references));
  }
  state.SetComplexityN(n);
}

void BM_MaxRougeScoresOpenMp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  astkit::TokenLists candidates = MakeTokenLists(n, 32, 1);
  astkit::TokenLists references = MakeTokenLists(n, 32, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(astkit::MaxRougeScores(candidates, references));
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_MaxRougeScoresSerial)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_MaxRougeScoresOpenMp)->Arg(16)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
