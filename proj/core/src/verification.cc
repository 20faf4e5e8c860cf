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

#include "kpair/verification.h"

#include <algorithm>
#include <map>
#include <set>

#include "kpair/errors.h"
#include "kpair/flow.h"

namespace kpair {

IndexPairSet MakePairSet(std::vector<IndexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::string FormatPairSet(const IndexPairSet& pairs) {
  std::string text = "{";
  for (size_t x = 0; x < pairs.size(); ++x) {
    if (x > 0) text += ",";
    text += "(" + std::to_string(pairs[x].first + 1) + "," +
            std::to_string(pairs[x].second + 1) + ")";
  }
  return text + "}";
}

bool HasDistinctSinks(const IndexPairSet& pairs) {
  std::set<int> sinks;
  for (const IndexPair& p : pairs) {
    if (!sinks.insert(p.second).second) return false;
  }
  return true;
}

const SNEntry* SNCatalog::Find(const IndexPairSet& pairs) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), pairs,
      [](const SNEntry& e, const IndexPairSet& p) { return e.pairs < p; });
  if (it == entries.end() || it->pairs != pairs) return nullptr;
  return &*it;
}

IndexPairSet PairsOnArc(const PathSystem& system, ArcIndex arc) {
  IndexPairSet pairs;
  for (int i = 0; i < system.k(); ++i) {
    for (int j = 0; j < system.k(); ++j) {
      const auto& arcs = system.path(i, j).arcs;
      if (std::find(arcs.begin(), arcs.end(), arc) != arcs.end()) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

SNCatalog ComputeSN(const Network& network, const PathSystem& system) {
  if (system.k() != network.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "path system and network disagree on k");
  }
  std::vector<IndexPairSet> on_arc(network.arc_count());
  for (int i = 0; i < system.k(); ++i) {
    for (int j = 0; j < system.k(); ++j) {
      for (ArcIndex a : system.path(i, j).arcs) on_arc[a].emplace_back(i, j);
    }
  }
  std::map<IndexPairSet, std::vector<ArcIndex>> grouped;
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    if (on_arc[a].empty()) continue;
    IndexPairSet pairs = MakePairSet(on_arc[a]);
    if (!HasDistinctSinks(pairs)) {
      throw Error(ErrorCode::kNotStronglyReachable,
                  "arc " + network.arc(a).id + " carries two paths into one "
                  "sink: " + FormatPairSet(pairs));
    }
    grouped[pairs].push_back(a);
  }
  SNCatalog catalog;
  for (auto& [pairs, arcs] : grouped) catalog.entries.push_back({pairs, arcs});
  return catalog;
}

AlphaGamma ComputeAlphaGamma(const IndexPairSet& pairs, int k) {
  AlphaGamma result;
  result.alpha = static_cast<int>(pairs.size());
  result.multiplicity.assign(k, 0);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= k || j < 0 || j >= k) {
      throw Error(ErrorCode::kIndexOutOfRange, "index pair out of range");
    }
    if (i == j) ++result.gamma;
    ++result.multiplicity[i];
    ++result.multiplicity[j];
  }
  return result;
}

Rational EvalGs(const CoefficientTuple& tuple, const IndexPairSet& pairs) {
  Rational total = 0;
  for (int l = 0; l < tuple.k(); ++l) {
    Rational g = 0;
    for (const auto& [i, j] : pairs) {
      if (i < 0 || i >= tuple.k() || j < 0 || j >= tuple.k()) {
        throw Error(ErrorCode::kIndexOutOfRange, "index pair out of range");
      }
      g += tuple.at(l, i, j);
    }
    total += Abs(g);
  }
  return total;
}

VerificationReport VerifySolution(const Network& network,
                                  const PathSystem& system,
                                  const CoefficientTuple& tuple) {
  if (tuple.k() != network.k() || system.k() != network.k()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coefficient tuple has k=" + std::to_string(tuple.k()) +
                    " but the network has k=" + std::to_string(network.k()));
  }
  VerificationReport report;
  report.rate_check = CheckRateConditions(tuple);

  const MultiFlow flows = Realize(network, tuple, system);
  report.rates = Rates(network, flows);
  report.conservation = std::all_of(
      flows.flows.begin(), flows.flows.end(),
      [&](const Flow& f) { return Conserves(network, f); });
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    ArcLoad load{a, PairsOnArc(system, a), Load(flows, a)};
    if (load.load > report.max_load) report.max_load = load.load;
    if (load.load > 1) report.overloaded.push_back(a);
    report.loads.push_back(std::move(load));
  }

  const SNCatalog catalog = ComputeSN(network, system);
  for (const SNEntry& entry : catalog.entries) {
    GsValue g{entry.pairs, EvalGs(tuple, entry.pairs)};
    if (g.value > report.max_g) report.max_g = g.value;
    report.g_values.push_back(std::move(g));
  }

  const bool rates_are_one =
      report.conservation &&
      std::all_of(report.rates.begin(), report.rates.end(),
                  [](const Rational& r) { return r == 1; });
  if (rates_are_one != report.rate_check.ok) {
    throw Error(ErrorCode::kInternal,
                "rate equations and realized flows disagree");
  }
  if (report.max_load != report.max_g) {
    throw Error(ErrorCode::kInternal, "maximum load " +
                                          ToString(report.max_load) +
                                          " differs from maximum g_s " +
                                          ToString(report.max_g));
  }
  report.verdict = report.rate_check.ok && report.max_g <= 1;
  return report;
}

}  // namespace kpair
