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

#ifndef KPAIR_STABILITY_H_
#define KPAIR_STABILITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/network.h"
#include "kpair/reachability.h"

namespace kpair {

// One step of a walk in a residual network: either `arc` traversed forward
// or a P-arc traversed against its direction.
struct ResidualStep {
  ArcIndex arc = 0;
  bool reversed = false;

  friend bool operator==(const ResidualStep&, const ResidualStep&) = default;
};

// The network with every arc of the family into `sink` reversed. Holds a
// reference to the network, which must outlive it.
class ResidualNetwork {
 public:
  ResidualNetwork(const Network& network, const PathSystem& system, int sink);

  const Network& network() const { return *network_; }
  int sink() const { return sink_; }
  const std::vector<Path>& family() const { return family_; }

  bool IsReversed(ArcIndex a) const { return reversed_[a]; }
  // Source index of the family path through `v`, or -1.
  int PathOf(VertexIndex v) const { return path_of_[v]; }
  bool family_vertex_disjoint() const { return vertex_disjoint_; }

  VertexIndex StepTail(ResidualStep step) const;
  VertexIndex StepHead(ResidualStep step) const;
  // Residual out-steps of `v` in arc-index order.
  std::vector<ResidualStep> OutSteps(VertexIndex v) const;

 private:
  const Network* network_;
  int sink_;
  std::vector<Path> family_;
  std::vector<bool> reversed_;
  std::vector<int> path_of_;
  bool vertex_disjoint_;
};

using ResidualCycle = std::vector<ResidualStep>;

// Vertices visited by a closed walk, first vertex repeated at the end.
std::vector<VertexIndex> CycleVertices(const ResidualNetwork& residual,
                                       const ResidualCycle& cycle);
std::string FormatCycle(const ResidualNetwork& residual,
                        const ResidualCycle& cycle);

// True iff `cycle` is a simple directed cycle of the residual network.
bool IsDirectedCycle(const ResidualNetwork& residual, const ResidualCycle& cycle);
// A directed cycle where every family vertex it passes is met by at least
// one reversed arc of the cycle.
bool IsRegularCycle(const ResidualNetwork& residual, const ResidualCycle& cycle);

// Any directed cycle of the residual network, regular or not.
std::optional<ResidualCycle> FindAnyCycle(const ResidualNetwork& residual);

// Depth-first search that, after entering a family vertex over a forward
// arc, must continue along the reversed family arc. Returns a simple regular
// cycle starting at its topologically earliest vertex, or nothing. The
// family must be internally vertex-disjoint.
std::optional<ResidualCycle> FindRegularCycle(const ResidualNetwork& residual);

struct SemiCycle {
  int sink = 0;
  std::vector<ArcIndex> on_p;   // Family arcs, in cycle order.
  std::vector<ArcIndex> off_p;  // Other arcs, in cycle order.
  // Maximal runs of the cycle, each oriented along the network's arcs.
  std::vector<Path> segments;
};

struct SemiCycleAndCrossing {
  SemiCycle semicycle;
  std::vector<Path> crossing;
};

// Throws kSingularCycle when `cycle` is not a regular cycle.
SemiCycleAndCrossing SemiCycleOf(const ResidualNetwork& residual,
                                 const ResidualCycle& cycle);

// The family obtained by swapping the semi-cycle's family arcs for its
// crossing, ordered by source index.
std::vector<Path> AlternativeFamily(const ResidualNetwork& residual,
                                    const ResidualCycle& cycle);

enum class StabilityReason {
  kStable,
  kNotExtraStronglyReachable,
  kRegularCycleFound,
  // Reported by the enumeration oracle: a second family exists.
  kAlternativeFamily,
};

std::string_view StabilityReasonName(StabilityReason reason);

struct StabilityWitness {
  int sink = 0;
  ResidualCycle cycle;  // Empty for oracle witnesses.
  SemiCycle semicycle;
  std::vector<Path> crossing;
  std::vector<Path> family;
  std::vector<Path> alternative;
};

struct StabilityVerdict {
  bool stable = false;
  StabilityReason reason = StabilityReason::kStable;
  ReachabilityClass reachability;
  // Set for kNotExtraStronglyReachable: the first sink lacking k
  // vertex-disjoint paths.
  std::optional<int> failing_sink;
  std::optional<StabilityWitness> witness;
};

StabilityVerdict CheckStability(const Network& network);

struct EnumerationLimits {
  std::int64_t max_paths_per_pair = 10000;
  std::int64_t max_families = 100000;
};

// Every source path to `sink`, in depth-first order over arc indices.
// Throws kBoundExceeded past `max_paths`.
std::vector<Path> EnumeratePaths(const Network& network, VertexIndex from,
                                 VertexIndex to, std::int64_t max_paths);

// All families of k mode-disjoint paths into `sink`, one path per source,
// each family ordered by source index. Throws kBoundExceeded past the
// limits.
std::vector<std::vector<Path>> EnumerateFamilies(
    const Network& network, int sink, DisjointMode mode,
    const EnumerationLimits& limits = {});

// Which uniqueness the oracle checks. kVertex: the internally
// vertex-disjoint family into every sink is unique. kArc: additionally no
// second arc-disjoint family exists.
enum class OracleNotion { kVertex, kArc };

std::string_view OracleNotionName(OracleNotion notion);

StabilityVerdict OracleStability(const Network& network,
                                 OracleNotion notion = OracleNotion::kVertex,
                                 const EnumerationLimits& limits = {});

}  // namespace kpair

#endif  // KPAIR_STABILITY_H_
