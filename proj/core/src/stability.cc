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

#include "kpair/stability.h"

#include <algorithm>
#include <set>

#include "kpair/errors.h"

namespace kpair {

ResidualNetwork::ResidualNetwork(const Network& network,
                                 const PathSystem& system, int sink)
    : network_(&network), sink_(sink), vertex_disjoint_(true) {
  if (sink < 0 || sink >= network.k()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sink index " + std::to_string(sink + 1) + " out of range");
  }
  if (system.k() != network.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "path system and network disagree on k");
  }
  family_ = system.Family(sink);
  reversed_.assign(network.arc_count(), false);
  path_of_.assign(network.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(family_.size()); ++i) {
    const Path& p = family_[i];
    for (ArcIndex a : p.arcs) reversed_[a] = true;
    for (size_t pos = 0; pos + 1 < p.vertices.size(); ++pos) {
      VertexIndex v = p.vertices[pos];
      if (path_of_[v] >= 0) {
        vertex_disjoint_ = false;
      } else {
        path_of_[v] = i;
      }
    }
  }
}

VertexIndex ResidualNetwork::StepTail(ResidualStep step) const {
  const Arc& arc = network_->arc(step.arc);
  return step.reversed ? arc.head : arc.tail;
}

VertexIndex ResidualNetwork::StepHead(ResidualStep step) const {
  const Arc& arc = network_->arc(step.arc);
  return step.reversed ? arc.tail : arc.head;
}

std::vector<ResidualStep> ResidualNetwork::OutSteps(VertexIndex v) const {
  std::vector<ResidualStep> steps;
  for (ArcIndex a : network_->out_arcs(v)) {
    if (!reversed_[a]) steps.push_back({a, false});
  }
  for (ArcIndex a : network_->in_arcs(v)) {
    if (reversed_[a]) steps.push_back({a, true});
  }
  std::sort(steps.begin(), steps.end(),
            [](const ResidualStep& x, const ResidualStep& y) {
              return x.arc < y.arc;
            });
  return steps;
}

std::vector<VertexIndex> CycleVertices(const ResidualNetwork& residual,
                                       const ResidualCycle& cycle) {
  std::vector<VertexIndex> vertices;
  for (const ResidualStep& step : cycle) {
    vertices.push_back(residual.StepTail(step));
  }
  if (!cycle.empty()) vertices.push_back(residual.StepHead(cycle.back()));
  return vertices;
}

std::string FormatCycle(const ResidualNetwork& residual,
                        const ResidualCycle& cycle) {
  return FormatVertices(residual.network(), CycleVertices(residual, cycle));
}

bool IsDirectedCycle(const ResidualNetwork& residual,
                     const ResidualCycle& cycle) {
  if (cycle.empty()) return false;
  std::set<VertexIndex> seen;
  for (size_t p = 0; p < cycle.size(); ++p) {
    const ResidualStep& step = cycle[p];
    if (step.arc < 0 || step.arc >= residual.network().arc_count()) return false;
    if (residual.IsReversed(step.arc) != step.reversed) return false;
    const ResidualStep& next = cycle[(p + 1) % cycle.size()];
    if (residual.StepHead(step) != residual.StepTail(next)) return false;
    if (!seen.insert(residual.StepTail(step)).second) return false;
  }
  return true;
}

bool IsRegularCycle(const ResidualNetwork& residual,
                    const ResidualCycle& cycle) {
  if (!IsDirectedCycle(residual, cycle)) return false;
  const VertexIndex sink = residual.network().sink(residual.sink());
  for (size_t p = 0; p < cycle.size(); ++p) {
    VertexIndex v = residual.StepTail(cycle[p]);
    bool on_family = v == sink || residual.PathOf(v) >= 0;
    const ResidualStep& previous = cycle[(p + cycle.size() - 1) % cycle.size()];
    if (on_family && !cycle[p].reversed && !previous.reversed) return false;
  }
  return true;
}

std::optional<ResidualCycle> FindAnyCycle(const ResidualNetwork& residual) {
  const Network& network = residual.network();
  const int n = network.vertex_count();
  enum Color { kWhite, kGray, kBlack };
  std::vector<Color> color(n, kWhite);
  struct Frame {
    VertexIndex v;
    std::vector<ResidualStep> steps;
    size_t next = 0;
  };
  for (VertexIndex root : network.topological_order()) {
    if (color[root] != kWhite) continue;
    std::vector<Frame> stack;
    std::vector<ResidualStep> taken;
    stack.push_back({root, residual.OutSteps(root)});
    color[root] = kGray;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next == frame.steps.size()) {
        color[frame.v] = kBlack;
        stack.pop_back();
        if (!taken.empty()) taken.pop_back();
        continue;
      }
      ResidualStep step = frame.steps[frame.next++];
      VertexIndex w = residual.StepHead(step);
      if (color[w] == kGray) {
        size_t start = 0;
        while (stack[start].v != w) ++start;
        ResidualCycle cycle(taken.begin() + start, taken.end());
        cycle.push_back(step);
        return cycle;
      }
      if (color[w] == kWhite) {
        color[w] = kGray;
        taken.push_back(step);
        stack.push_back({w, residual.OutSteps(w)});
      }
    }
  }
  return std::nullopt;
}

namespace {

// Search states: every vertex v has state 2v. A family vertex other than the
// sink also has state 2v+1: state 2v means it was entered over a forward
// arc, state 2v+1 over a reversed one.
struct Transition {
  int from;
  int to;
  ResidualStep step;
  bool internal;  // Move from 2v+1 to 2v without using an arc.
};

class RegularCycleSearch {
 public:
  explicit RegularCycleSearch(const ResidualNetwork& residual)
      : residual_(residual),
        network_(residual.network()),
        sink_(network_.sink(residual.sink())) {}

  std::optional<ResidualCycle> Run() {
    const int n = network_.vertex_count();
    color_.assign(2 * n, kWhite);
    for (VertexIndex v : network_.topological_order()) {
      for (int state : {2 * v, 2 * v + 1}) {
        if (state % 2 == 1 && !Split(v)) continue;
        if (color_[state] != kWhite) continue;
        if (auto cycle = Visit(state)) return Finish(*cycle);
      }
    }
    return std::nullopt;
  }

 private:
  enum Color { kWhite, kGray, kBlack };

  bool Split(VertexIndex v) const {
    return v != sink_ && residual_.PathOf(v) >= 0;
  }

  int Arrive(VertexIndex w, bool reversed) const {
    return Split(w) && reversed ? 2 * w + 1 : 2 * w;
  }

  std::vector<Transition> Successors(int state) const {
    const VertexIndex v = state / 2;
    std::vector<Transition> result;
    if (v == sink_ || (Split(v) && state % 2 == 0)) {
      for (ArcIndex a : network_.in_arcs(v)) {
        if (residual_.IsReversed(a)) {
          result.push_back(
              {state, Arrive(network_.arc(a).tail, true), {a, true}, false});
        }
      }
      return result;
    }
    for (ArcIndex a : network_.out_arcs(v)) {
      if (!residual_.IsReversed(a)) {
        result.push_back(
            {state, Arrive(network_.arc(a).head, false), {a, false}, false});
      }
    }
    if (Split(v)) result.push_back({state, 2 * v, {}, true});
    return result;
  }

  std::optional<std::vector<Transition>> Visit(int root) {
    struct Frame {
      int state;
      std::vector<Transition> out;
      size_t next = 0;
    };
    std::vector<Frame> stack;
    std::vector<Transition> taken;
    color_[root] = kGray;
    stack.push_back({root, Successors(root)});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next == frame.out.size()) {
        color_[frame.state] = kBlack;
        stack.pop_back();
        if (!taken.empty()) taken.pop_back();
        continue;
      }
      Transition t = frame.out[frame.next++];
      if (color_[t.to] == kGray) {
        size_t start = 0;
        while (stack[start].state != t.to) ++start;
        std::vector<Transition> cycle(taken.begin() + start, taken.end());
        cycle.push_back(t);
        return cycle;
      }
      if (color_[t.to] == kWhite) {
        color_[t.to] = kGray;
        taken.push_back(t);
        stack.push_back({t.to, Successors(t.to)});
      }
    }
    return std::nullopt;
  }

  // A state cycle may pass a family vertex twice, once per state. Cutting
  // at the second state and closing with the internal move leaves a shorter
  // state cycle, so repeating this yields a simple residual cycle.
  ResidualCycle Finish(std::vector<Transition> cycle) const {
    while (true) {
      std::vector<int> tail_of_vertex(network_.vertex_count(), -1);
      int cut_from = -1;
      int cut_to = -1;
      const int m = static_cast<int>(cycle.size());
      for (int p = 0; p < m && cut_from < 0; ++p) {
        if (cycle[p].internal) continue;
        VertexIndex v = cycle[p].from / 2;
        if (tail_of_vertex[v] >= 0) {
          int q = tail_of_vertex[v];
          bool q_is_in = cycle[q].from % 2 == 0;
          cut_from = q_is_in ? q : p;
          cut_to = q_is_in ? p : q;
        }
        tail_of_vertex[v] = p;
      }
      if (cut_from < 0) break;
      const int v = cycle[cut_from].from / 2;
      std::vector<Transition> shorter;
      for (int p = cut_from; p != cut_to; p = (p + 1) % m) {
        shorter.push_back(cycle[p]);
      }
      shorter.push_back({2 * v + 1, 2 * v, {}, true});
      cycle = std::move(shorter);
    }
    ResidualCycle steps;
    for (const Transition& t : cycle) {
      if (!t.internal) steps.push_back(t.step);
    }
    size_t first = 0;
    for (size_t p = 1; p < steps.size(); ++p) {
      if (network_.topological_rank(residual_.StepTail(steps[p])) <
          network_.topological_rank(residual_.StepTail(steps[first]))) {
        first = p;
      }
    }
    std::rotate(steps.begin(), steps.begin() + first, steps.end());
    return steps;
  }

  const ResidualNetwork& residual_;
  const Network& network_;
  VertexIndex sink_;
  std::vector<Color> color_;
};

}  // namespace

std::optional<ResidualCycle> FindRegularCycle(const ResidualNetwork& residual) {
  if (!residual.family_vertex_disjoint()) {
    throw Error(ErrorCode::kInvalidArgument,
                "regular-cycle search needs an internally vertex-disjoint "
                "family");
  }
  return RegularCycleSearch(residual).Run();
}

SemiCycleAndCrossing SemiCycleOf(const ResidualNetwork& residual,
                                 const ResidualCycle& cycle) {
  if (!IsRegularCycle(residual, cycle)) {
    throw Error(ErrorCode::kSingularCycle, "cycle " +
                                               FormatCycle(residual, cycle) +
                                               " is not regular");
  }
  const Network& network = residual.network();
  SemiCycleAndCrossing result;
  result.semicycle.sink = residual.sink();
  for (const ResidualStep& step : cycle) {
    (step.reversed ? result.semicycle.on_p : result.semicycle.off_p)
        .push_back(step.arc);
  }
  const size_t m = cycle.size();
  size_t start = 0;
  while (start < m && cycle[start].reversed == cycle[(start + m - 1) % m].reversed) {
    ++start;
  }
  if (start == m) {
    throw Error(ErrorCode::kInternal, "cycle without forward arcs");
  }
  std::vector<ArcIndex> run;
  for (size_t offset = 0; offset < m; ++offset) {
    const ResidualStep& step = cycle[(start + offset) % m];
    run.push_back(step.arc);
    const ResidualStep& next = cycle[(start + offset + 1) % m];
    if (next.reversed == step.reversed) continue;
    if (step.reversed) {
      std::reverse(run.begin(), run.end());
      result.semicycle.segments.push_back(PathFromArcs(network, run));
    } else {
      Path path = PathFromArcs(network, run);
      result.semicycle.segments.push_back(path);
      result.crossing.push_back(path);
    }
    run.clear();
  }
  return result;
}

std::vector<Path> AlternativeFamily(const ResidualNetwork& residual,
                                    const ResidualCycle& cycle) {
  if (!IsRegularCycle(residual, cycle)) {
    throw Error(ErrorCode::kSingularCycle, "cycle " +
                                               FormatCycle(residual, cycle) +
                                               " is not regular");
  }
  const Network& network = residual.network();
  std::vector<bool> chosen(network.arc_count(), false);
  for (const Path& p : residual.family()) {
    for (ArcIndex a : p.arcs) chosen[a] = true;
  }
  for (const ResidualStep& step : cycle) chosen[step.arc] = !step.reversed;
  const VertexIndex sink = network.sink(residual.sink());
  std::vector<Path> family;
  for (VertexIndex s : network.sources()) {
    std::vector<ArcIndex> arcs;
    VertexIndex v = s;
    while (v != sink) {
      ArcIndex next = -1;
      for (ArcIndex a : network.out_arcs(v)) {
        if (!chosen[a]) continue;
        if (next >= 0) {
          throw Error(ErrorCode::kInternal,
                      "alternative family branches at " + network.vertex_name(v));
        }
        next = a;
      }
      if (next < 0) {
        throw Error(ErrorCode::kInternal,
                    "alternative family stops at " + network.vertex_name(v));
      }
      arcs.push_back(next);
      v = network.arc(next).head;
    }
    family.push_back(PathFromArcs(network, arcs));
  }
  return family;
}

std::string_view StabilityReasonName(StabilityReason reason) {
  switch (reason) {
    case StabilityReason::kStable:
      return "stable";
    case StabilityReason::kNotExtraStronglyReachable:
      return "not-extra-strongly-reachable";
    case StabilityReason::kRegularCycleFound:
      return "regular-cycle-found";
    case StabilityReason::kAlternativeFamily:
      return "alternative-family";
  }
  return "unknown";
}

StabilityVerdict CheckStability(const Network& network) {
  StabilityVerdict verdict;
  verdict.reachability = ClassifyReachability(network);
  if (verdict.reachability.level != ReachabilityLevel::kExtraStrongly) {
    verdict.reason = StabilityReason::kNotExtraStronglyReachable;
    for (int j = 0; j < network.k(); ++j) {
      if (verdict.reachability.counts[j].vertex_disjoint < network.k()) {
        verdict.failing_sink = j;
        break;
      }
    }
    return verdict;
  }
  const PathSystem system = ExtractPathSystem(network);
  for (int j = 0; j < network.k(); ++j) {
    ResidualNetwork residual(network, system, j);
    std::optional<ResidualCycle> cycle = FindRegularCycle(residual);
    if (!cycle) continue;
    SemiCycleAndCrossing parts = SemiCycleOf(residual, *cycle);
    StabilityWitness witness;
    witness.sink = j;
    witness.cycle = *cycle;
    witness.semicycle = std::move(parts.semicycle);
    witness.crossing = std::move(parts.crossing);
    witness.family = residual.family();
    witness.alternative = AlternativeFamily(residual, *cycle);
    verdict.reason = StabilityReason::kRegularCycleFound;
    verdict.witness = std::move(witness);
    return verdict;
  }
  verdict.stable = true;
  verdict.reason = StabilityReason::kStable;
  return verdict;
}

std::vector<Path> EnumeratePaths(const Network& network, VertexIndex from,
                                 VertexIndex to, std::int64_t max_paths) {
  std::vector<bool> reaches(network.vertex_count(), false);
  reaches[to] = true;
  auto order = network.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (ArcIndex a : network.out_arcs(*it)) {
      if (reaches[network.arc(a).head]) reaches[*it] = true;
    }
  }
  std::vector<Path> paths;
  if (!reaches[from]) return paths;
  std::vector<ArcIndex> arcs;
  // Depth-first over arc indices; the DAG makes every walk a simple path.
  auto extend = [&](auto&& self, VertexIndex v) -> void {
    if (v == to) {
      if (static_cast<std::int64_t>(paths.size()) >= max_paths) {
        throw Error(ErrorCode::kBoundExceeded,
                    "more than " + std::to_string(max_paths) + " paths from " +
                        network.vertex_name(from) + " to " +
                        network.vertex_name(to));
      }
      Path p;
      p.vertices.push_back(from);
      for (ArcIndex a : arcs) p.vertices.push_back(network.arc(a).head);
      p.arcs = arcs;
      paths.push_back(std::move(p));
      return;
    }
    for (ArcIndex a : network.out_arcs(v)) {
      if (!reaches[network.arc(a).head]) continue;
      arcs.push_back(a);
      self(self, network.arc(a).head);
      arcs.pop_back();
    }
  };
  extend(extend, from);
  return paths;
}

std::vector<std::vector<Path>> EnumerateFamilies(
    const Network& network, int sink, DisjointMode mode,
    const EnumerationLimits& limits) {
  if (sink < 0 || sink >= network.k()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sink index " + std::to_string(sink + 1) + " out of range");
  }
  const int k = network.k();
  const VertexIndex target = network.sink(sink);
  std::vector<std::vector<Path>> candidates;
  for (int i = 0; i < k; ++i) {
    candidates.push_back(EnumeratePaths(network, network.source(i), target,
                                        limits.max_paths_per_pair));
    if (candidates.back().empty()) return {};
  }
  std::vector<std::vector<Path>> families;
  std::vector<Path> current;
  std::vector<int> arc_use(network.arc_count(), 0);
  std::vector<int> vertex_use(network.vertex_count(), 0);
  auto fits = [&](const Path& p) {
    if (mode == DisjointMode::kArc) {
      return std::none_of(p.arcs.begin(), p.arcs.end(),
                          [&](ArcIndex a) { return arc_use[a] > 0; });
    }
    return std::none_of(p.vertices.begin(), p.vertices.end() - 1,
                        [&](VertexIndex v) { return vertex_use[v] > 0; });
  };
  auto mark = [&](const Path& p, int delta) {
    for (ArcIndex a : p.arcs) arc_use[a] += delta;
    for (size_t pos = 0; pos + 1 < p.vertices.size(); ++pos) {
      vertex_use[p.vertices[pos]] += delta;
    }
  };
  auto choose = [&](auto&& self, int i) -> void {
    if (i == k) {
      if (static_cast<std::int64_t>(families.size()) >= limits.max_families) {
        throw Error(ErrorCode::kBoundExceeded,
                    "more than " + std::to_string(limits.max_families) +
                        " families into " + network.vertex_name(target));
      }
      families.push_back(current);
      return;
    }
    for (const Path& p : candidates[i]) {
      if (!fits(p)) continue;
      mark(p, 1);
      current.push_back(p);
      self(self, i + 1);
      current.pop_back();
      mark(p, -1);
    }
  };
  choose(choose, 0);
  return families;
}

std::string_view OracleNotionName(OracleNotion notion) {
  return notion == OracleNotion::kVertex ? "vertex" : "arc";
}

StabilityVerdict OracleStability(const Network& network, OracleNotion notion,
                                 const EnumerationLimits& limits) {
  StabilityVerdict verdict;
  std::vector<std::vector<std::vector<Path>>> vertex_families;
  for (int j = 0; j < network.k(); ++j) {
    vertex_families.push_back(
        EnumerateFamilies(network, j, DisjointMode::kVertex, limits));
    if (vertex_families.back().empty() && !verdict.failing_sink) {
      verdict.failing_sink = j;
    }
  }
  if (verdict.failing_sink) {
    verdict.reason = StabilityReason::kNotExtraStronglyReachable;
    return verdict;
  }
  verdict.reachability.level = ReachabilityLevel::kExtraStrongly;
  for (int j = 0; j < network.k(); ++j) {
    std::vector<std::vector<Path>> arc_families;
    const std::vector<std::vector<Path>>* families = &vertex_families[j];
    if (families->size() == 1 && notion == OracleNotion::kArc) {
      arc_families = EnumerateFamilies(network, j, DisjointMode::kArc, limits);
      families = &arc_families;
    }
    if (families->size() > 1) {
      verdict.reason = StabilityReason::kAlternativeFamily;
      StabilityWitness witness;
      witness.sink = j;
      witness.family = (*families)[0];
      witness.alternative = (*families)[1];
      verdict.witness = std::move(witness);
      return verdict;
    }
  }
  verdict.stable = true;
  verdict.reason = StabilityReason::kStable;
  return verdict;
}

}  // namespace kpair
