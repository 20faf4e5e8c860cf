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

#include "kpair/reachability.h"

#include <algorithm>
#include <deque>
#include <string>

#include "kpair/errors.h"

namespace kpair {
namespace {

struct FlowEdge {
  int to;
  int cap;
  ArcIndex arc;  // -1 for auxiliary and reverse edges.
};

class UnitFlowGraph {
 public:
  explicit UnitFlowGraph(int nodes) : adjacency_(nodes) {}

  void AddEdge(int from, int to, ArcIndex arc) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, 1, arc});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, -1});
  }

  int MaxFlow(int source, int target) {
    int flow = 0;
    const int n = static_cast<int>(adjacency_.size());
    while (true) {
      std::vector<int> via(n, -1);
      std::vector<bool> seen(n, false);
      std::deque<int> queue{source};
      seen[source] = true;
      while (!queue.empty() && !seen[target]) {
        int u = queue.front();
        queue.pop_front();
        for (int e : adjacency_[u]) {
          const FlowEdge& edge = edges_[e];
          if (edge.cap > 0 && !seen[edge.to]) {
            seen[edge.to] = true;
            via[edge.to] = e;
            queue.push_back(edge.to);
          }
        }
      }
      if (!seen[target]) return flow;
      for (int v = target; v != source; v = edges_[via[v] ^ 1].to) {
        --edges_[via[v]].cap;
        ++edges_[via[v] ^ 1].cap;
      }
      ++flow;
    }
  }

  // Original arcs carrying one unit of flow.
  std::vector<bool> SaturatedArcs(int arc_count) const {
    std::vector<bool> used(arc_count, false);
    for (size_t e = 0; e < edges_.size(); e += 2) {
      if (edges_[e].arc >= 0 && edges_[e].cap == 0) used[edges_[e].arc] = true;
    }
    return used;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<FlowEdge> edges_;
};

}  // namespace

std::string_view DisjointModeName(DisjointMode mode) {
  return mode == DisjointMode::kArc ? "arc" : "vertex";
}

std::string_view ReachabilityLevelName(ReachabilityLevel level) {
  switch (level) {
    case ReachabilityLevel::kNotFully:
      return "not-fully-reachable";
    case ReachabilityLevel::kFully:
      return "fully-reachable";
    case ReachabilityLevel::kStrongly:
      return "strongly-reachable";
    case ReachabilityLevel::kExtraStrongly:
      return "extra-strongly-reachable";
  }
  return "unknown";
}

DisjointPaths MaxDisjointPaths(const Network& network, int sink,
                               DisjointMode mode) {
  if (sink < 0 || sink >= network.k()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sink index " + std::to_string(sink + 1) + " out of range");
  }
  const int n = network.vertex_count();
  const VertexIndex target = network.sink(sink);
  const bool split = mode == DisjointMode::kVertex;
  // Node 2v is v (or v_in when split), 2v+1 is v_out; 2n is the
  // super-source.
  auto in_node = [](VertexIndex v) { return 2 * v; };
  auto out_node = [&](VertexIndex v) {
    return split && v != target ? 2 * v + 1 : 2 * v;
  };
  UnitFlowGraph graph(2 * n + 1);
  const int super_source = 2 * n;
  for (VertexIndex s : network.sources()) {
    graph.AddEdge(super_source, in_node(s), -1);
  }
  if (split) {
    for (VertexIndex v = 0; v < n; ++v) {
      if (v != target) graph.AddEdge(in_node(v), out_node(v), -1);
    }
  }
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    const Arc& arc = network.arc(a);
    graph.AddEdge(out_node(arc.tail), in_node(arc.head), a);
  }

  DisjointPaths result;
  result.count = graph.MaxFlow(super_source, in_node(target));
  std::vector<bool> flow = graph.SaturatedArcs(network.arc_count());
  for (VertexIndex s : network.sources()) {
    std::vector<ArcIndex> arcs;
    VertexIndex v = s;
    while (v != target) {
      ArcIndex next = -1;
      for (ArcIndex a : network.out_arcs(v)) {
        if (!flow[a]) continue;
        if (next < 0 || network.topological_rank(network.arc(a).head) <
                            network.topological_rank(network.arc(next).head)) {
          next = a;
        }
      }
      if (next < 0) break;
      flow[next] = false;
      arcs.push_back(next);
      v = network.arc(next).head;
    }
    if (v != target) {
      if (!arcs.empty()) {
        throw Error(ErrorCode::kInternal, "flow decomposition stalled");
      }
      continue;
    }
    result.family.push_back(PathFromArcs(network, arcs));
  }
  if (static_cast<int>(result.family.size()) != result.count) {
    throw Error(ErrorCode::kInternal,
                "flow decomposition does not match the flow value");
  }
  return result;
}

bool IsFullyReachable(const Network& network) {
  for (VertexIndex s : network.sources()) {
    std::vector<bool> seen(network.vertex_count(), false);
    std::vector<VertexIndex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (ArcIndex a : network.out_arcs(v)) {
        VertexIndex w = network.arc(a).head;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (VertexIndex t : network.sinks()) {
      if (!seen[t]) return false;
    }
  }
  return true;
}

ReachabilityClass ClassifyReachability(const Network& network) {
  ReachabilityClass result;
  bool strongly = true;
  bool extra = true;
  for (int j = 0; j < network.k(); ++j) {
    SinkCounts counts;
    counts.arc_disjoint = MaxDisjointPaths(network, j, DisjointMode::kArc).count;
    counts.vertex_disjoint =
        MaxDisjointPaths(network, j, DisjointMode::kVertex).count;
    strongly = strongly && counts.arc_disjoint == network.k();
    extra = extra && counts.vertex_disjoint == network.k();
    result.counts.push_back(counts);
  }
  if (!IsFullyReachable(network)) {
    result.level = ReachabilityLevel::kNotFully;
  } else if (!strongly) {
    result.level = ReachabilityLevel::kFully;
  } else {
    result.level =
        extra ? ReachabilityLevel::kExtraStrongly : ReachabilityLevel::kStrongly;
  }
  return result;
}

PathSystem ExtractPathSystem(const Network& network) {
  const int k = network.k();
  std::vector<Path> paths(k * k);
  for (int j = 0; j < k; ++j) {
    DisjointPaths found = MaxDisjointPaths(network, j, DisjointMode::kVertex);
    if (found.count < k) {
      found = MaxDisjointPaths(network, j, DisjointMode::kArc);
    }
    if (found.count < k) {
      throw Error(ErrorCode::kNotStronglyReachable,
                  "sink " + network.vertex_name(network.sink(j)) + " admits only " +
                      std::to_string(found.count) + " arc-disjoint paths");
    }
    for (const Path& p : found.family) {
      int i = network.SourceIndexOf(p.front());
      if (!paths[i * k + j].vertices.empty()) {
        throw Error(ErrorCode::kInternal,
                    "two decomposed paths start at one source");
      }
      paths[i * k + j] = p;
    }
  }
  return PathSystem(k, std::move(paths));
}

}  // namespace kpair
