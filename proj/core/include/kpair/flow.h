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

#ifndef KPAIR_FLOW_H_
#define KPAIR_FLOW_H_

#include <string_view>
#include <vector>

#include "kpair/coefficients.h"
#include "kpair/network.h"
#include "kpair/rational.h"

namespace kpair {

// A signed source-sink flow with one exact value per arc.
struct Flow {
  VertexIndex source = 0;
  VertexIndex sink = 0;
  std::vector<Rational> values;  // Indexed by arc.

  friend bool operator==(const Flow&, const Flow&) = default;
};

// flows[l] runs from source l to sink l.
struct MultiFlow {
  std::vector<Flow> flows;
};

// Inflow minus outflow at `v`.
Rational Excess(const Network& network, const Flow& flow, VertexIndex v);
Rational Excess(const Network& network, const Flow& flow,
                std::string_view vertex_name);

// True iff the excess vanishes away from the flow's source and sink and the
// two terminal excesses cancel.
bool Conserves(const Network& network, const Flow& flow);

// Excess at sink l of flows[l], for every l.
std::vector<Rational> Rates(const Network& network, const MultiFlow& flows);

// 1 on the arcs of path (source, sink), 0 elsewhere.
Flow IndicatorFlow(const Network& network, const PathSystem& system,
                   int source, int sink);

// flows[l] = sum over (i, j) of c[l][i][j] times the indicator of path (i, j).
MultiFlow Realize(const Network& network, const CoefficientTuple& tuple,
                  const PathSystem& system);

// Sum over commodities of |flow value| on the arc.
Rational Load(const MultiFlow& flows, ArcIndex arc);
Rational Load(const Network& network, const MultiFlow& flows,
              std::string_view arc_id);

struct Feasibility {
  bool feasible = true;
  std::vector<ArcIndex> overloaded;
};

// Every load at most 1.
Feasibility CheckFeasibility(const MultiFlow& flows);

}  // namespace kpair

#endif  // KPAIR_FLOW_H_
