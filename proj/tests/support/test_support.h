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


#ifndef KPAIR_TESTS_SUPPORT_TEST_SUPPORT_H_
#define KPAIR_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/coefficients.h"
#include "kpair/network.h"
#include "kpair/rational.h"
#include "kpair/verification.h"

namespace kpair::testing {

std::filesystem::path DataPath(std::string_view name);
Network LoadFixture(std::string_view name);

// The path over the named vertices, taking the first arc between each
// consecutive pair. Fails the current test when an arc is missing.
Path PathThrough(const Network& network,
                 const std::vector<std::string>& names);

// Independent brute-force oracles. They share nothing with the library
// beyond the Network accessors and the Rational type.

// Every s-t path as an arc sequence, by plain recursion.
std::vector<std::vector<ArcIndex>> BrutePaths(const Network& network,
                                              VertexIndex from,
                                              VertexIndex to);

// Largest number of sources with pairwise disjoint paths into `sink`.
// Vertex mode forbids shared vertices other than the sink.
int BruteMaxDisjoint(const Network& network, int sink, bool vertex_mode);

// Number of families of k disjoint paths into `sink`, one per source.
std::int64_t BruteFamilyCount(const Network& network, int sink,
                              bool vertex_mode);

// Per-arc load sum_l |sum_{(i,j) on arc} c[l][i][j]|, from path membership.
std::vector<Rational> BruteLoads(const Network& network,
                                 const PathSystem& system,
                                 const CoefficientTuple& tuple);

// Net inflow at sink l of commodity l, summed arc by arc.
std::vector<Rational> BruteRates(const Network& network,
                                 const PathSystem& system,
                                 const CoefficientTuple& tuple);

// sum_l |sum_{(i,j) in pairs} c[l][i][j]|.
Rational DirectGs(const CoefficientTuple& tuple,
                  const std::vector<std::pair<int, int>>& pairs);

// All 63 nonempty index-pair sets over 3 pairs with pairwise distinct
// sinks, in canonical (sorted) form.
std::vector<IndexPairSet> AllDistinctSinkSets3();

CoefficientTuple TupleFromRows(
    int k, const std::vector<std::vector<std::vector<std::string>>>& rows);

// Seeded stable 3-pair networks from the generator, cached per process.
const std::vector<Network>& StableCorpus();
inline constexpr int kStableCorpusSize = 500;
inline constexpr int kStableCorpusMaxVertices = 40;

}  // namespace kpair::testing

#endif  // KPAIR_TESTS_SUPPORT_TEST_SUPPORT_H_
