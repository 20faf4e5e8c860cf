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

#include "kpair/topology3.h"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "kpair/errors.h"

namespace kpair {

std::vector<Segment> CommonSegments(std::span<const Path> paths) {
  if (paths.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "common segments need at least two paths");
  }
  std::vector<std::set<VertexIndex>> vertex_sets;
  std::vector<std::set<ArcIndex>> arc_sets;
  for (const Path& p : paths.subspan(1)) {
    vertex_sets.emplace_back(p.vertices.begin(), p.vertices.end());
    arc_sets.emplace_back(p.arcs.begin(), p.arcs.end());
  }
  auto common_vertex = [&](VertexIndex v) {
    return std::all_of(vertex_sets.begin(), vertex_sets.end(),
                       [v](const auto& s) { return s.count(v) > 0; });
  };
  auto common_arc = [&](ArcIndex a) {
    return std::all_of(arc_sets.begin(), arc_sets.end(),
                       [a](const auto& s) { return s.count(a) > 0; });
  };
  const Path& first = paths.front();
  std::vector<Segment> segments;
  bool open = false;
  for (size_t pos = 0; pos < first.vertices.size(); ++pos) {
    VertexIndex v = first.vertices[pos];
    if (!common_vertex(v)) {
      open = false;
      continue;
    }
    if (open && common_arc(first.arcs[pos - 1])) {
      segments.back().arcs.push_back(first.arcs[pos - 1]);
      segments.back().vertices.push_back(v);
    } else {
      segments.push_back(Segment{{v}, {}});
    }
    open = true;
  }
  return segments;
}

namespace {

std::vector<PlacedSegment> SegmentsAgainst(const Path& p,
                                           const std::vector<Path>& others) {
  std::vector<std::pair<size_t, PlacedSegment>> ordered;
  for (int y = 0; y < static_cast<int>(others.size()); ++y) {
    const std::array<Path, 2> pair{p, others[y]};
    for (Segment& s : CommonSegments(pair)) {
      size_t pos = std::find(p.vertices.begin(), p.vertices.end(),
                             s.vertices.front()) -
                   p.vertices.begin();
      ordered.push_back({pos, PlacedSegment{std::move(s), y}});
    }
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.partner) <
           std::tie(y.first, y.second.partner);
  });
  std::vector<PlacedSegment> result;
  for (auto& [pos, placed] : ordered) result.push_back(std::move(placed));
  return result;
}

void CheckSinkPair(const PathSystem& system, int a, int b) {
  if (a < 0 || a >= system.k() || b < 0 || b >= system.k() || a == b) {
    throw Error(ErrorCode::kInvalidArgument, "invalid sink pair");
  }
}

}  // namespace

SinkPairSegments AnalyzeSinkPair(const PathSystem& system, int sink_a,
                                 int sink_b) {
  CheckSinkPair(system, sink_a, sink_b);
  SinkPairSegments result;
  result.sink_a = sink_a;
  result.sink_b = sink_b;
  const std::vector<Path> red = system.Family(sink_a);
  const std::vector<Path> green = system.Family(sink_b);
  for (const Path& p : red) result.red.push_back(SegmentsAgainst(p, green));
  for (const Path& p : green) result.green.push_back(SegmentsAgainst(p, red));
  return result;
}

int Ell(const PathSystem& system, int source, int sink, int a, int b) {
  CheckSinkPair(system, a, b);
  if (sink != a && sink != b) {
    throw Error(ErrorCode::kInvalidArgument,
                "path does not end at either sink of the pair");
  }
  if (source < 0 || source >= system.k()) {
    throw Error(ErrorCode::kIndexOutOfRange, "source index out of range");
  }
  const int other = sink == a ? b : a;
  return static_cast<int>(
      SegmentsAgainst(system.path(source, sink), system.Family(other)).size());
}

std::string FormatIndexSet(IndexSet set) {
  std::string text = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (!Contains(set, x)) continue;
    if (!first) text += ",";
    text += std::to_string(x + 1);
    first = false;
  }
  return text + "}";
}

MSets::MSets(int k) : k_(k), sets_(static_cast<size_t>(k) * k, 0) {}

MSets ComputeMSetsUnchecked(const PathSystem& system) {
  MSets m(system.k());
  for (int a = 0; a < system.k(); ++a) {
    for (int b = a + 1; b < system.k(); ++b) {
      SinkPairSegments pair = AnalyzeSinkPair(system, a, b);
      IndexSet red = 0;
      IndexSet green = 0;
      for (int x = 0; x < system.k(); ++x) {
        if (pair.RedEll(x) == 1) red |= Singleton(x);
        if (pair.GreenEll(x) == 1) green |= Singleton(x);
      }
      m.set(a, b, red);
      m.set(b, a, green);
    }
  }
  return m;
}

MSets ComputeMSets(const PathSystem& system) {
  MSets m = ComputeMSetsUnchecked(system);
  for (int a = 0; a < system.k(); ++a) {
    for (int b = 0; b < system.k(); ++b) {
      if (a != b && m.get(a, b) == 0) {
        throw TheoremViolation(
            "m-set of sink " + std::to_string(a + 1) + " against sink " +
            std::to_string(b + 1) + " is empty");
      }
    }
  }
  return m;
}

std::string_view ShapeKindName(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kDegenerateA:
      return "degenerate-a";
    case ShapeKind::kDegenerateB:
      return "degenerate-b";
    case ShapeKind::kDegenerateC:
      return "degenerate-c";
    case ShapeKind::k111:
      return "1.1.1";
    case ShapeKind::k112:
      return "1.1.2";
    case ShapeKind::k121:
      return "1.2.1";
    case ShapeKind::k1221:
      return "1.2.2.1";
    case ShapeKind::k1222:
      return "1.2.2.2";
  }
  return "unknown";
}

namespace {

// Segment lookups in one color orientation. `red` and `green` may be the
// actual colors or swapped ones.
class PairView {
 public:
  PairView(const std::vector<std::vector<PlacedSegment>>& red,
           const std::vector<std::vector<PlacedSegment>>& green)
      : red_(red), green_(green) {}

  int RedEll(int x) const { return static_cast<int>(red_[x].size()); }
  int GreenEll(int y) const { return static_cast<int>(green_[y].size()); }

  // g_y(n) lies on r_x (1-based n).
  bool GreenOn(int y, int n, int x) const {
    return n <= GreenEll(y) && green_[y][n - 1].partner == x;
  }
  // g_y(n) = r_x(m).
  bool Same(int y, int n, int x, int m) const {
    return n <= GreenEll(y) && m <= RedEll(x) &&
           green_[y][n - 1].segment == red_[x][m - 1].segment;
  }

 private:
  const std::vector<std::vector<PlacedSegment>>& red_;
  const std::vector<std::vector<PlacedSegment>>& green_;
};

std::string Describe(const SinkPairSegments& pair) {
  std::string text = "segment counts for sinks " +
                     std::to_string(pair.sink_a + 1) + "," +
                     std::to_string(pair.sink_b + 1) + ": red";
  for (int x = 0; x < static_cast<int>(pair.red.size()); ++x) {
    text += " " + std::to_string(pair.RedEll(x));
  }
  text += ", green";
  for (int y = 0; y < static_cast<int>(pair.green.size()); ++y) {
    text += " " + std::to_string(pair.GreenEll(y));
  }
  return text;
}

// The case-1 tree for a non-degenerate pair with roles (i, j, l), where
// g_i(2) lies on r_j.
std::optional<ShapeKind> NonDegenerateCase1(const PairView& v, int i, int j,
                                            int l) {
  if (!v.GreenOn(i, 2, j) || !v.GreenOn(j, 2, l)) return std::nullopt;
  if (!v.Same(i, 2, j, 2)) return std::nullopt;
  if (v.GreenEll(i) == 2) {
    if (!v.Same(j, 2, l, 2)) return std::nullopt;
    if (v.GreenEll(j) == 2) return ShapeKind::k111;
    if (v.GreenEll(j) == 3 && v.Same(j, 3, j, 3)) return ShapeKind::k112;
    return std::nullopt;
  }
  if (!v.GreenOn(i, 3, l)) return std::nullopt;
  if (v.Same(j, 2, l, 2) && v.Same(i, 3, l, 3)) {
    if (v.GreenEll(j) == 2 && v.GreenEll(i) == 3) return ShapeKind::k121;
    return std::nullopt;
  }
  if (v.Same(i, 3, l, 2) && v.Same(j, 2, l, 3) && v.GreenEll(i) == 3) {
    if (v.GreenEll(j) == 2) return ShapeKind::k1221;
    if (v.GreenEll(j) == 3 && v.Same(j, 3, j, 3)) return ShapeKind::k1222;
  }
  return std::nullopt;
}

}  // namespace

PairwiseShape ClassifyPair(const PathSystem& system, int sink_a, int sink_b) {
  if (system.k() != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair classification needs a 3-pair system");
  }
  const SinkPairSegments pair = AnalyzeSinkPair(system, sink_a, sink_b);
  const PairView view(pair.red, pair.green);
  auto fail = [&](const std::string& what) -> TheoremViolation {
    return TheoremViolation("sinks " + std::to_string(sink_a + 1) + "," +
                                std::to_string(sink_b + 1) + ": " + what,
                            {Describe(pair)});
  };
  IndexSet red = 0;
  IndexSet green = 0;
  for (int x = 0; x < 3; ++x) {
    if (pair.RedEll(x) == 1) red |= Singleton(x);
    if (pair.GreenEll(x) == 1) green |= Singleton(x);
  }
  PairwiseShape shape;
  shape.sink_a = sink_a;
  shape.sink_b = sink_b;
  const int red_count = std::popcount(red);
  const int green_count = std::popcount(green);
  const IndexSet both = red & green;

  if ((red_count > 0) != (green_count > 0) || red_count == 0 ||
      (red_count == 1 && green == red) ||
      (both != 0 && (red_count == 1 || green_count == 1))) {
    throw fail("no pair of distinct sources with single-segment paths");
  }

  if (red_count == 1 && green_count == 1) {
    const int i = std::countr_zero(red);
    const int l = std::countr_zero(green);
    const int j = 3 - i - l;
    std::optional<ShapeKind> kind = NonDegenerateCase1(view, i, j, l);
    if (kind) {
      shape.i = i;
      shape.j = j;
      shape.l = l;
    } else if (view.GreenOn(i, 2, l) && view.GreenOn(j, 2, l)) {
      const PairView swapped(pair.green, pair.red);
      kind = NonDegenerateCase1(swapped, l, j, i);
      shape.i = i;
      shape.j = j;
      shape.l = l;
      shape.colors_swapped = true;
    }
    if (!kind) throw fail("non-degenerate pair matches no shape");
    shape.kind = *kind;
    const bool a = view.Same(i, 2, j, 2) && view.Same(j, 2, l, 2);
    const bool b = view.Same(i, 2, j, 2) && view.Same(j, 2, l, 3);
    const bool c = view.Same(i, 3, j, 2) && view.Same(j, 2, l, 2);
    if (a) {
      shape.flow_type = 1;
    } else if (b || c) {
      shape.flow_type = 2;
    } else {
      throw fail("non-degenerate pair satisfies none of the type clauses");
    }
    const bool type_one_shape = *kind == ShapeKind::k111 ||
                                *kind == ShapeKind::k112 ||
                                *kind == ShapeKind::k121;
    if (type_one_shape != (shape.flow_type == 1)) {
      throw fail("flow type disagrees with the shape");
    }
    return shape;
  }

  if (red == 0b111 && green == 0b111) {
    shape.kind = ShapeKind::kDegenerateA;
    shape.i = 0;
    shape.j = 1;
    shape.l = 2;
    return shape;
  }
  if (both != 0) {
    if (std::popcount(both) != 1 || red_count != 2 || green_count != 2) {
      throw fail("degenerate pair with a partial common core");
    }
    const int i = std::countr_zero(both);
    const int j = std::countr_zero(static_cast<IndexSet>(red & ~both));
    const int l = std::countr_zero(static_cast<IndexSet>(green & ~both));
    if (!view.Same(j, 2, l, 2)) {
      throw fail("degenerate pair of kind (b) without the shared segment");
    }
    shape.kind = ShapeKind::kDegenerateB;
    shape.i = i;
    shape.j = j;
    shape.l = l;
    return shape;
  }
  // Two single-segment paths of one color, one of the other.
  const bool swap = green_count == 2;
  const PairView oriented = swap ? PairView(pair.green, pair.red) : view;
  const IndexSet pair_set = swap ? green : red;
  const int l = std::countr_zero(static_cast<IndexSet>(swap ? red : green));
  const int i = std::countr_zero(pair_set);
  const int j = 3 - i - l;
  // Here "green" of the oriented view holds the paths of the pair set.
  const bool first = oriented.Same(j, 2, l, 2) && oriented.Same(i, 2, l, 3);
  const bool second = oriented.Same(i, 2, l, 2) && oriented.Same(j, 2, l, 3);
  if (!first && !second) {
    throw fail("degenerate pair of kind (c) without its two segments");
  }
  shape.kind = ShapeKind::kDegenerateC;
  shape.i = i;
  shape.j = j;
  shape.l = l;
  shape.colors_swapped = swap;
  return shape;
}

std::optional<ForbiddenStructure> DetectForbiddenStructure(
    const PathSystem& system) {
  if (system.k() != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "forbidden-structure scan needs a 3-pair system");
  }
  const MSets m = ComputeMSetsUnchecked(system);
  std::array<int, 3> order{0, 1, 2};
  do {
    const auto [i, j, l] = order;
    if (m.get(i, j) != Singleton(l) || m.get(j, i) != Singleton(i) ||
        m.get(i, l) != Singleton(l) || m.get(l, i) != Singleton(j) ||
        m.get(j, l) != Singleton(i) || m.get(l, j) != Singleton(j)) {
      continue;
    }
    const std::array<Path, 3> paths{system.path(j, i), system.path(l, j),
                                    system.path(i, l)};
    std::vector<Segment> segments = CommonSegments(paths);
    if (!segments.empty()) {
      return ForbiddenStructure{i, j, l, std::move(segments)};
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace kpair
