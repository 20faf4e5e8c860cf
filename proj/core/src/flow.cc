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

#include "kpair/flow.h"

#include "kpair/errors.h"

namespace kpair {

Rational Excess(const Network& network, const Flow& flow, VertexIndex v) {
  if (v < 0 || v >= network.vertex_count()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex index out of range");
  }
  Rational excess = 0;
  for (ArcIndex a : network.in_arcs(v)) excess += flow.values[a];
  for (ArcIndex a : network.out_arcs(v)) excess -= flow.values[a];
  return excess;
}

Rational Excess(const Network& network, const Flow& flow,
                std::string_view vertex_name) {
  return Excess(network, flow, network.VertexOrThrow(vertex_name));
}

bool Conserves(const Network& network, const Flow& flow) {
  for (VertexIndex v = 0; v < network.vertex_count(); ++v) {
    if (v == flow.source || v == flow.sink) continue;
    if (Excess(network, flow, v) != 0) return false;
  }
  return Excess(network, flow, flow.source) ==
         -Excess(network, flow, flow.sink);
}

std::vector<Rational> Rates(const Network& network, const MultiFlow& flows) {
  std::vector<Rational> rates;
  for (const Flow& f : flows.flows) rates.push_back(Excess(network, f, f.sink));
  return rates;
}

Flow IndicatorFlow(const Network& network, const PathSystem& system,
                   int source, int sink) {
  if (source < 0 || source >= system.k() || sink < 0 || sink >= system.k()) {
    throw Error(ErrorCode::kIndexOutOfRange, "path index out of range");
  }
  Flow flow{network.source(source), network.sink(sink),
            std::vector<Rational>(network.arc_count(), Rational(0))};
  for (ArcIndex a : system.path(source, sink).arcs) flow.values[a] = 1;
  return flow;
}

MultiFlow Realize(const Network& network, const CoefficientTuple& tuple,
                  const PathSystem& system) {
  const int k = network.k();
  if (tuple.k() != k || system.k() != k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coefficient tuple, path system and network disagree on k");
  }
  MultiFlow result;
  for (int l = 0; l < k; ++l) {
    Flow flow{network.source(l), network.sink(l),
              std::vector<Rational>(network.arc_count(), Rational(0))};
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const Rational& c = tuple.at(l, i, j);
        if (c == 0) continue;
        for (ArcIndex a : system.path(i, j).arcs) flow.values[a] += c;
      }
    }
    result.flows.push_back(std::move(flow));
  }
  return result;
}

Rational Load(const MultiFlow& flows, ArcIndex arc) {
  Rational load = 0;
  for (const Flow& f : flows.flows) {
    if (arc < 0 || arc >= static_cast<ArcIndex>(f.values.size())) {
      throw Error(ErrorCode::kUnknownArc, "arc index out of range");
    }
    load += Abs(f.values[arc]);
  }
  return load;
}

Rational Load(const Network& network, const MultiFlow& flows,
              std::string_view arc_id) {
  return Load(flows, network.ArcOrThrow(arc_id));
}

Feasibility CheckFeasibility(const MultiFlow& flows) {
  Feasibility result;
  if (flows.flows.empty()) return result;
  const ArcIndex arcs = static_cast<ArcIndex>(flows.flows.front().values.size());
  for (ArcIndex a = 0; a < arcs; ++a) {
    if (Load(flows, a) > 1) result.overloaded.push_back(a);
  }
  result.feasible = result.overloaded.empty();
  return result;
}

}  // namespace kpair
