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

#ifndef KPAIR_NETGEN_H_
#define KPAIR_NETGEN_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "kpair/network.h"

namespace kpair {

enum class GenMode { kRandom, kStable3, kUnstable3 };

std::string_view GenModeName(GenMode mode);
std::optional<GenMode> ParseGenMode(std::string_view name);

struct GenConfig {
  int k = 3;
  std::uint64_t seed = 0;
  int target_vertex_count = 12;
  GenMode mode = GenMode::kRandom;
  int max_attempts = 1000;
};

// Seeded source of randomness with a fixed algorithm: the std::mt19937_64
// engine (whose output sequence the C++ standard pins down) and unbiased
// rejection sampling for bounded integers. The same seed gives the same
// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform on [lo, hi].
  int Uniform(int lo, int hi);
  // True with probability permille / 1000.
  bool Chance(int permille) { return Uniform(0, 999) < permille; }

 private:
  std::mt19937_64 engine_;
};

struct Generated {
  Network network;
  std::string template_name;
  int attempts = 1;
};

// A random DAG on sources, internal vertices and sinks in that order, with
// forward arcs drawn at a per-seed density. Isolated internal vertices are
// dropped and the result is normalized, so it has at most
// max(target_vertex_count, 2k) vertices.
Generated GenerateRandom(const GenConfig& config);

// A random walk from the direct-arc network: each step splices shared
// pieces into the nine paths and is kept only if the result is stable.
// max_attempts bounds the steps; the walk always ends on a stable network.
Generated GenerateStable3(const GenConfig& config);

// Extra-strongly reachable 3-pair networks with a regular cycle, reached by
// the same walk. Throws kBudgetExhausted after max_attempts steps.
Generated GenerateUnstable3(const GenConfig& config);

Generated Generate(const GenConfig& config);

}  // namespace kpair

#endif  // KPAIR_NETGEN_H_
