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

#ifndef KPAIR_TOPOLOGY3_H_
#define KPAIR_TOPOLOGY3_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/network.h"

namespace kpair {

// A contiguous piece shared by several paths; a single vertex is allowed.
struct Segment {
  std::vector<VertexIndex> vertices;
  std::vector<ArcIndex> arcs;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

// The maximal segments common to all `paths` (at least two), ordered along
// the paths. Two consecutive vertices belong to one segment only if the arc
// between them is shared as well.
std::vector<Segment> CommonSegments(std::span<const Path> paths);

// A segment of one path together with the opposite-family path it is common
// with (a source index).
struct PlacedSegment {
  Segment segment;
  int partner = 0;
};

// The segments of the paths into sinks a ("red") and b ("green") against the
// opposite family. red[x] lists the common segments of P(x, a) with every
// P(y, b), ordered along P(x, a); green[y] likewise.
struct SinkPairSegments {
  int sink_a = 0;
  int sink_b = 0;
  std::vector<std::vector<PlacedSegment>> red;
  std::vector<std::vector<PlacedSegment>> green;

  int RedEll(int x) const { return static_cast<int>(red[x].size()); }
  int GreenEll(int y) const { return static_cast<int>(green[y].size()); }
};

SinkPairSegments AnalyzeSinkPair(const PathSystem& system, int sink_a,
                                 int sink_b);

// The number of common segments of path (source, sink) with the family of
// the other sink of the pair {a, b}. Throws kInvalidArgument unless `sink`
// is a or b.
int Ell(const PathSystem& system, int source, int sink, int a, int b);

// Bitmask over source indices.
using IndexSet = std::uint32_t;

std::string FormatIndexSet(IndexSet set);
inline bool Contains(IndexSet set, int x) { return (set >> x) & 1u; }
inline IndexSet Singleton(int x) { return IndexSet{1} << x; }

// m(own, other): the sources whose path into `own` meets the family of
// `other` only in its first segment.
class MSets {
 public:
  explicit MSets(int k);

  int k() const { return k_; }
  IndexSet get(int own, int other) const { return sets_[own * k_ + other]; }
  void set(int own, int other, IndexSet value) {
    sets_[own * k_ + other] = value;
  }

  friend bool operator==(const MSets&, const MSets&) = default;

 private:
  int k_;
  std::vector<IndexSet> sets_;
};

MSets ComputeMSetsUnchecked(const PathSystem& system);
// Throws TheoremViolation when some set is empty.
MSets ComputeMSets(const PathSystem& system);

enum class ShapeKind {
  kDegenerateA,
  kDegenerateB,
  kDegenerateC,
  k111,
  k112,
  k121,
  k1221,
  k1222,
};

std::string_view ShapeKindName(ShapeKind kind);

struct PairwiseShape {
  int sink_a = 0;
  int sink_b = 0;
  ShapeKind kind = ShapeKind::kDegenerateA;
  int flow_type = 0;  // 1 or 2 when non-degenerate, 0 otherwise.
  // Role assignment in source indices. Non-degenerate: i has a red path
  // with one segment, l a green one, j is the third index.
  int i = 0;
  int j = 0;
  int l = 0;
  bool colors_swapped = false;

  bool degenerate() const {
    return kind == ShapeKind::kDegenerateA ||
           kind == ShapeKind::kDegenerateB || kind == ShapeKind::kDegenerateC;
  }
};

// Classifies the subnetwork of the two families into sinks a and b of a
// 3-pair system. Throws TheoremViolation when no branch of the case
// analysis matches.
PairwiseShape ClassifyPair(const PathSystem& system, int sink_a, int sink_b);

struct ForbiddenStructure {
  int i = 0;
  int j = 0;
  int l = 0;
  std::vector<Segment> segments;
};

// Looks for distinct i, j, l with m(i,j) = {l}, m(j,i) = {i}, m(i,l) = {l},
// m(l,i) = {j}, m(j,l) = {i}, m(l,j) = {j} and a segment common to
// P(j, i), P(l, j) and P(i, l).
std::optional<ForbiddenStructure> DetectForbiddenStructure(
    const PathSystem& system);

}  // namespace kpair

#endif  // KPAIR_TOPOLOGY3_H_
