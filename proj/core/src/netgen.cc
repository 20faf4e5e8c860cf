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

#include "kpair/netgen.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kpair/errors.h"
#include "kpair/stability.h"

namespace kpair {

std::string_view GenModeName(GenMode mode) {
  switch (mode) {
    case GenMode::kRandom:
      return "random";
    case GenMode::kStable3:
      return "stable3";
    case GenMode::kUnstable3:
      return "unstable3";
  }
  return "unknown";
}

std::optional<GenMode> ParseGenMode(std::string_view name) {
  for (GenMode mode :
       {GenMode::kRandom, GenMode::kStable3, GenMode::kUnstable3}) {
    if (GenModeName(mode) == name) return mode;
  }
  return std::nullopt;
}

int Rng::Uniform(int lo, int hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - lo + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of range, minus one; draws above it are rejected.
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x;
  do {
    x = Next();
  } while (x > limit);
  return static_cast<int>(lo + static_cast<std::int64_t>(x % range));
}

namespace {

std::string SourceName(int i) { return "s" + std::to_string(i + 1); }
std::string SinkName(int j) { return "t" + std::to_string(j + 1); }
std::string InnerName(int v) { return "v" + std::to_string(v + 1); }

std::vector<int> RandomPermutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int x = n - 1; x > 0; --x) std::swap(p[x], p[rng.Uniform(0, x)]);
  return p;
}

// Nine explicit paths, paths[i][j] from s_i to t_j, whose arc union is the
// network. Paths into one sink stay internally vertex-disjoint.
struct Sketch {
  std::array<std::array<std::vector<std::string>, 3>, 3> paths;
  int next_vertex = 0;

  std::string NewVertex() { return InnerName(next_vertex++); }

  bool OnSinkFamily(int sink, const std::string& v) const {
    for (int i = 0; i < 3; ++i) {
      const auto& p = paths[i][sink];
      if (std::find(p.begin(), p.end(), v) != p.end()) return true;
    }
    return false;
  }
};

Sketch DisjointSketch() {
  Sketch sketch;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      sketch.paths[i][j] = {SourceName(i), SinkName(j)};
    }
  }
  return sketch;
}

// The normalized arc union, or nothing if it has a cycle. Pair p of the
// sketch becomes pair pairs[p] of the network.
std::optional<Network> BuildSketch(const Sketch& sketch,
                                   const std::vector<int>& pairs) {
  NetworkBuilder builder(3);
  for (int p = 0; p < 3; ++p) {
    builder.SetSource(pairs[p], SourceName(p));
    builder.SetSink(pairs[p], SinkName(p));
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& row : sketch.paths) {
    for (const auto& path : row) {
      for (std::size_t x = 0; x + 1 < path.size(); ++x) {
        if (seen.emplace(path[x], path[x + 1]).second) {
          builder.AddArc(path[x], path[x + 1]);
        }
      }
    }
  }
  try {
    return Normalize(builder.Build()).network;
  } catch (const CycleError&) {
    return std::nullopt;
  }
}

// One random local edit. Merge: a fresh arc x->y is spliced into two paths
// with different sinks, so both traverse it. Share: a path is rerouted over
// an arc (or a single vertex) already used by a path into another sink.
Sketch Perturb(const Sketch& base, Rng& rng) {
  Sketch sketch = base;
  const int i = rng.Uniform(0, 2);
  const int j = rng.Uniform(0, 2);
  auto& path = sketch.paths[i][j];
  const int at = rng.Uniform(0, static_cast<int>(path.size()) - 2);
  const int i2 = rng.Uniform(0, 2);
  const int j2 = (j + rng.Uniform(1, 2)) % 3;
  auto& other = sketch.paths[i2][j2];
  if (rng.Chance(500)) {
    const int at2 = rng.Uniform(0, static_cast<int>(other.size()) - 2);
    const std::string x = sketch.NewVertex();
    const std::string y = sketch.NewVertex();
    path.insert(path.begin() + at + 1, {x, y});
    other.insert(other.begin() + at2 + 1, {x, y});
    return sketch;
  }
  if (other.size() < 3) return base;
  const int from = rng.Uniform(1, static_cast<int>(other.size()) - 2);
  int to = from;
  if (from + 2 < static_cast<int>(other.size()) && rng.Chance(700)) ++to;
  for (int x = from; x <= to; ++x) {
    if (sketch.OnSinkFamily(j, other[x])) return base;
  }
  std::vector<std::string> spliced(other.begin() + from,
                                   other.begin() + to + 1);
  path.insert(path.begin() + at + 1, spliced.begin(), spliced.end());
  return sketch;
}

struct WalkState {
  Sketch sketch;
  Network network;
  int attempts = 0;
  int edits = 0;
};

// Random walk over stable networks: an edit is kept only if the result is
// stable. Stops at the goal size or when the budget runs out.
WalkState StableWalk(Rng& rng, const std::vector<int>& pairs, int goal,
                     int budget) {
  WalkState state{DisjointSketch(), *BuildSketch(DisjointSketch(), pairs)};
  while (state.network.vertex_count() < goal && state.attempts < budget) {
    ++state.attempts;
    Sketch candidate = Perturb(state.sketch, rng);
    std::optional<Network> network = BuildSketch(candidate, pairs);
    if (!network || network->vertex_count() > goal) continue;
    if (!CheckStability(*network).stable) continue;
    state.sketch = std::move(candidate);
    state.network = std::move(*network);
    ++state.edits;
  }
  return state;
}

void RequireK3(const GenConfig& config) {
  if (config.k != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "stable and unstable generation need k = 3");
  }
}

}  // namespace

Generated GenerateRandom(const GenConfig& config) {
  if (config.k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  }
  Rng rng(config.seed);
  const int k = config.k;
  const int inner = std::max(config.target_vertex_count, 2 * k) - 2 * k;
  const int density = rng.Uniform(150, 600);
  // Position order: sources, internal vertices, sinks.
  std::vector<std::string> order;
  for (int i = 0; i < k; ++i) order.push_back(SourceName(i));
  for (int v = 0; v < inner; ++v) order.push_back(InnerName(v));
  for (int j = 0; j < k; ++j) order.push_back(SinkName(j));
  NetworkBuilder builder(k);
  for (int i = 0; i < k; ++i) {
    builder.SetSource(i, SourceName(i));
    builder.SetSink(i, SinkName(i));
  }
  const int n = static_cast<int>(order.size());
  for (int u = 0; u < k + inner; ++u) {
    for (int w = std::max(u + 1, k); w < n; ++w) {
      if (!rng.Chance(density)) continue;
      builder.AddArc(order[u], order[w]);
      if (rng.Chance(50)) builder.AddArc(order[u], order[w]);
    }
  }
  return Generated{Normalize(builder.Build()).network, "random", 1};
}

Generated GenerateStable3(const GenConfig& config) {
  RequireK3(config);
  Rng rng(config.seed);
  const std::vector<int> pairs = RandomPermutation(rng, 3);
  const int goal = rng.Uniform(6, std::max(6, config.target_vertex_count));
  WalkState state = StableWalk(rng, pairs, goal, config.max_attempts);
  return Generated{std::move(state.network),
                   state.edits == 0 ? "disjoint" : "merge-walk",
                   std::max(1, state.attempts)};
}

Generated GenerateUnstable3(const GenConfig& config) {
  RequireK3(config);
  Rng rng(config.seed);
  const std::vector<int> pairs = RandomPermutation(rng, 3);
  const int size = std::max(8, config.target_vertex_count);
  const int goal = rng.Uniform(6, size - 2);
  WalkState state = StableWalk(rng, pairs, goal, config.max_attempts / 2);
  while (state.attempts < config.max_attempts) {
    ++state.attempts;
    Sketch candidate = Perturb(state.sketch, rng);
    std::optional<Network> network = BuildSketch(candidate, pairs);
    if (!network || network->vertex_count() > size) continue;
    StabilityVerdict verdict = CheckStability(*network);
    if (verdict.reason == StabilityReason::kRegularCycleFound) {
      return Generated{std::move(*network), "merge-walk", state.attempts};
    }
    if (verdict.stable && network->vertex_count() < size) {
      state.sketch = std::move(candidate);
      state.network = std::move(*network);
    }
  }
  throw Error(ErrorCode::kBudgetExhausted,
              "no unstable network within " +
                  std::to_string(config.max_attempts) + " attempts");
}

Generated Generate(const GenConfig& config) {
  switch (config.mode) {
    case GenMode::kRandom:
      return GenerateRandom(config);
    case GenMode::kStable3:
      return GenerateStable3(config);
    case GenMode::kUnstable3:
      return GenerateUnstable3(config);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown generation mode");
}

}  // namespace kpair
