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

#ifndef KPAIR_REACHABILITY_H_
#define KPAIR_REACHABILITY_H_

#include <string_view>
#include <vector>

#include "kpair/network.h"

namespace kpair {

enum class DisjointMode {
  kArc,
  // Internally vertex-disjoint: paths may share only the sink.
  kVertex,
};

enum class ReachabilityLevel { kNotFully, kFully, kStrongly, kExtraStrongly };

std::string_view DisjointModeName(DisjointMode mode);
std::string_view ReachabilityLevelName(ReachabilityLevel level);

struct SinkCounts {
  int arc_disjoint = 0;
  int vertex_disjoint = 0;

  friend bool operator==(const SinkCounts&, const SinkCounts&) = default;
};

struct ReachabilityClass {
  ReachabilityLevel level = ReachabilityLevel::kNotFully;
  std::vector<SinkCounts> counts;  // Indexed by sink.
};

struct DisjointPaths {
  int count = 0;
  // At most one path per source, ordered by source index.
  std::vector<Path> family;
};

// Maximum number of mode-disjoint paths from the sources (fed by a
// super-source with unit arcs) into `sink`, computed with shortest
// augmenting paths on the unit-capacity network. Vertex mode splits every
// vertex other than the sink. The family comes from a flow decomposition
// that always continues along the flow arc whose head is earliest in
// topological order.
DisjointPaths MaxDisjointPaths(const Network& network, int sink,
                               DisjointMode mode);

// True iff every source reaches every sink.
bool IsFullyReachable(const Network& network);

ReachabilityClass ClassifyReachability(const Network& network);

// For every sink, a vertex-disjoint family when one exists, otherwise an
// arc-disjoint one. Throws kNotStronglyReachable when some sink admits fewer
// than k arc-disjoint paths.
PathSystem ExtractPathSystem(const Network& network);

}  // namespace kpair

#endif  // KPAIR_REACHABILITY_H_
