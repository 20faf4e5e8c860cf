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

#ifndef KPAIR_VERIFICATION_H_
#define KPAIR_VERIFICATION_H_

#include <string>
#include <utility>
#include <vector>

#include "kpair/coefficients.h"
#include "kpair/network.h"
#include "kpair/rational.h"

namespace kpair {

// (source index, sink index), 0-based.
using IndexPair = std::pair<int, int>;
// Sorted, duplicate-free.
using IndexPairSet = std::vector<IndexPair>;

IndexPairSet MakePairSet(std::vector<IndexPair> pairs);
// "{(1,1),(2,3)}" with 1-based indices.
std::string FormatPairSet(const IndexPairSet& pairs);
// No two pairs share a sink.
bool HasDistinctSinks(const IndexPairSet& pairs);

struct SNEntry {
  IndexPairSet pairs;
  std::vector<ArcIndex> arcs;
};

// The distinct index-pair sets of the arcs lying on at least one path, in
// lexicographic order of the sets.
struct SNCatalog {
  std::vector<SNEntry> entries;

  const SNEntry* Find(const IndexPairSet& pairs) const;
  bool Contains(const IndexPairSet& pairs) const {
    return Find(pairs) != nullptr;
  }
};

// The paths through `arc`.
IndexPairSet PairsOnArc(const PathSystem& system, ArcIndex arc);

// Throws kNotStronglyReachable when an entry has two pairs with one sink.
SNCatalog ComputeSN(const Network& network, const PathSystem& system);

struct AlphaGamma {
  int alpha = 0;
  int gamma = 0;
  // multiplicity[x]: occurrences of index x among all pair coordinates.
  std::vector<int> multiplicity;
};

AlphaGamma ComputeAlphaGamma(const IndexPairSet& pairs, int k);

// Sum over l of |sum over (i, j) in `pairs` of c[l][i][j]|: the load the
// tuple induces on an arc carrying exactly those paths.
Rational EvalGs(const CoefficientTuple& tuple, const IndexPairSet& pairs);

struct ArcLoad {
  ArcIndex arc = 0;
  IndexPairSet pairs;
  Rational load;
};

struct GsValue {
  IndexPairSet pairs;
  Rational value;
};

struct VerificationReport {
  RateCheck rate_check;
  std::vector<Rational> rates;  // Realized, per commodity.
  bool conservation = false;
  std::vector<ArcLoad> loads;   // Every arc.
  Rational max_load;
  std::vector<GsValue> g_values;  // Per S_N entry.
  Rational max_g;
  std::vector<ArcIndex> overloaded;
  bool verdict = false;
};

// Realizes the tuple on the path system and checks it both through the rate
// equations with the g_s bound and directly through conservation and loads.
// The two routes must agree; disagreement raises kInternal.
VerificationReport VerifySolution(const Network& network,
                                  const PathSystem& system,
                                  const CoefficientTuple& tuple);

}  // namespace kpair

#endif  // KPAIR_VERIFICATION_H_
