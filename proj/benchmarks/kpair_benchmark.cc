// Copyright 2026 The kpair Authors
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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "kpair/netgen.h"
#include "kpair/reachability.h"
#include "kpair/solver3.h"
#include "kpair/stability.h"

namespace kpair {
namespace {

std::vector<Network> Corpus(GenMode mode, int size, int count) {
  std::vector<Network> networks;
  for (int n = 0; n < count; ++n) {
    GenConfig config;
    config.mode = mode;
    config.seed = static_cast<std::uint64_t>(n);
    config.target_vertex_count = size;
    networks.push_back(Generate(config).network);
  }
  return networks;
}

void BM_CheckStability(benchmark::State& state) {
  const auto corpus = Corpus(GenMode::kStable3, state.range(0), 32);
  std::size_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckStability(corpus[n++ % corpus.size()]));
  }
}
BENCHMARK(BM_CheckStability)->Arg(12)->Arg(24)->Arg(40);

void BM_CheckStabilityUnstable(benchmark::State& state) {
  const auto corpus = Corpus(GenMode::kUnstable3, state.range(0), 32);
  std::size_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckStability(corpus[n++ % corpus.size()]));
  }
}
BENCHMARK(BM_CheckStabilityUnstable)->Arg(14)->Arg(24);

void BM_OracleStability(benchmark::State& state) {
  const auto corpus = Corpus(GenMode::kStable3, state.range(0), 32);
  std::size_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OracleStability(corpus[n++ % corpus.size()]));
  }
}
BENCHMARK(BM_OracleStability)->Arg(12)->Arg(24);

void BM_MaxDisjointPaths(benchmark::State& state) {
  const auto corpus = Corpus(GenMode::kRandom, state.range(0), 32);
  std::size_t n = 0;
  for (auto _ : state) {
    const Network& net = corpus[n++ % corpus.size()];
    benchmark::DoNotOptimize(MaxDisjointPaths(net, 0, DisjointMode::kVertex));
  }
}
BENCHMARK(BM_MaxDisjointPaths)->Arg(14)->Arg(40);

void BM_Solve(benchmark::State& state) {
  const auto corpus = Corpus(GenMode::kStable3, state.range(0), 32);
  std::size_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(corpus[n++ % corpus.size()]));
  }
}
BENCHMARK(BM_Solve)->Arg(12)->Arg(24)->Arg(40);

void BM_GenerateStable3(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    GenConfig config;
    config.mode = GenMode::kStable3;
    config.seed = seed++;
    config.target_vertex_count = state.range(0);
    benchmark::DoNotOptimize(Generate(config));
  }
}
BENCHMARK(BM_GenerateStable3)->Arg(14)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace kpair

BENCHMARK_MAIN();
