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
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kpair/errors.h"
#include "kpair/netgen.h"
#include "kpair/reachability.h"
#include "support/test_support.h"

namespace kpair {
namespace {

using ::testing::AnyOf;
using ::testing::UnorderedElementsAre;

std::vector<std::string> Formatted(const Network& network,
                                   const std::vector<Path>& paths) {
  std::vector<std::string> text;
  for (const Path& path : paths) text.push_back(FormatPath(network, path));
  return text;
}

bool SameFamily(std::vector<Path> a, std::vector<Path> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

TEST(StabilityTest, Fig1bHasTheSemiCycleThroughI) {
  const Network network = testing::LoadFixture("fig1b.net");
  const StabilityVerdict verdict = CheckStability(network);
  EXPECT_FALSE(verdict.stable);
  EXPECT_EQ(verdict.reason, StabilityReason::kRegularCycleFound);
  ASSERT_TRUE(verdict.witness.has_value());
  const StabilityWitness& w = *verdict.witness;
  EXPECT_EQ(w.sink, 2);
  EXPECT_THAT(Formatted(network, w.semicycle.segments),
              UnorderedElementsAre("[s2,D,F,I]", "[s2,E,G,I]"));
  ASSERT_EQ(w.crossing.size(), 1u);
  EXPECT_THAT(FormatPath(network, w.crossing[0]),
              AnyOf("[s2,D,F,I]", "[s2,E,G,I]"));

  const PathSystem system = ExtractPathSystem(network);
  const ResidualNetwork residual(network, system, 2);
  EXPECT_TRUE(IsRegularCycle(residual, w.cycle));
  EXPECT_THAT(FormatCycle(residual, w.cycle),
              AnyOf("[s2,E,G,I,F,D,s2]", "[s2,D,F,I,G,E,s2]"));
  EXPECT_THAT(Formatted(network, w.alternative),
              UnorderedElementsAre(
                  "[s1,t3]", "[s3,t3]",
                  AnyOf("[s2,D,F,I,K,t3]", "[s2,E,G,I,K,t3]")));
  EXPECT_FALSE(SameFamily(w.family, w.alternative));
}

TEST(StabilityTest, Fig1bHasExactlyTwoFamiliesAtT3) {
  const Network network = testing::LoadFixture("fig1b.net");
  for (DisjointMode mode : {DisjointMode::kArc, DisjointMode::kVertex}) {
    EXPECT_EQ(EnumerateFamilies(network, 2, mode).size(), 2u);
    EXPECT_EQ(EnumerateFamilies(network, 0, mode).size(), 1u);
    EXPECT_EQ(testing::BruteFamilyCount(network, 2,
                                        mode == DisjointMode::kVertex),
              2);
  }
  const StabilityVerdict oracle = OracleStability(network);
  EXPECT_EQ(oracle.reason, StabilityReason::kAlternativeFamily);
  ASSERT_TRUE(oracle.witness.has_value());
  EXPECT_EQ(oracle.witness->sink, 2);
}

TEST(StabilityTest, Fig1aIsStable) {
  const Network network = testing::LoadFixture("fig1a.net");
  EXPECT_TRUE(CheckStability(network).stable);
  EXPECT_TRUE(OracleStability(network).stable);
  EXPECT_TRUE(OracleStability(network, OracleNotion::kArc).stable);
}

TEST(StabilityTest, SingularCycleIsNotAWitness) {
  const Network network = testing::LoadFixture("singular_cycle.net");
  const PathSystem system = ExtractPathSystem(network);
  const ResidualNetwork residual(network, system, 0);
  const std::optional<ResidualCycle> cycle = FindAnyCycle(residual);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_TRUE(IsDirectedCycle(residual, *cycle));
  EXPECT_FALSE(IsRegularCycle(residual, *cycle));
  std::vector<std::string> names;
  for (VertexIndex v : CycleVertices(residual, *cycle)) {
    names.push_back(network.vertex_name(v));
  }
  names.pop_back();
  EXPECT_THAT(names, UnorderedElementsAre("A", "C", "D"));
  EXPECT_FALSE(FindRegularCycle(residual).has_value());
  try {
    SemiCycleOf(residual, *cycle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularCycle);
  }
  EXPECT_TRUE(CheckStability(network).stable);
  EXPECT_TRUE(OracleStability(network).stable);
}

// Uniqueness among arc-disjoint families is a stronger requirement: here the
// path from s2 may pass through A once the path from s1 leaves it by D.
TEST(StabilityTest, ArcNotionSeesFamiliesThatShareVertices) {
  const Network network = testing::LoadFixture("singular_cycle.net");
  EXPECT_EQ(EnumerateFamilies(network, 0, DisjointMode::kVertex).size(), 1u);
  EXPECT_EQ(EnumerateFamilies(network, 0, DisjointMode::kArc).size(), 3u);
  const StabilityVerdict arc = OracleStability(network, OracleNotion::kArc);
  EXPECT_FALSE(arc.stable);
  EXPECT_EQ(arc.reason, StabilityReason::kAlternativeFamily);
}

TEST(StabilityTest, ResidualStepsFollowReversal) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  const ResidualNetwork residual(network, system, 0);
  const ArcIndex ab = *std::find_if(
      system.path(0, 0).arcs.begin(), system.path(0, 0).arcs.end(),
      [&](ArcIndex a) {
        return network.vertex_name(network.arc(a).tail) == "A";
      });
  EXPECT_TRUE(residual.IsReversed(ab));
  const ResidualStep step{ab, true};
  EXPECT_EQ(network.vertex_name(residual.StepTail(step)), "B");
  EXPECT_EQ(network.vertex_name(residual.StepHead(step)), "A");
  EXPECT_EQ(residual.PathOf(network.VertexOrThrow("A")), 0);
  EXPECT_EQ(residual.PathOf(network.VertexOrThrow("t1")), -1);
  EXPECT_TRUE(residual.family_vertex_disjoint());
  EXPECT_FALSE(FindAnyCycle(residual).has_value());
}

TEST(StabilityTest, NotExtraStronglyReachableNamesTheSink) {
  const Network network = testing::LoadFixture("strongly_not_extra.net");
  const StabilityVerdict verdict = CheckStability(network);
  EXPECT_EQ(verdict.reason, StabilityReason::kNotExtraStronglyReachable);
  EXPECT_EQ(verdict.failing_sink, 0);
  const StabilityVerdict oracle = OracleStability(network);
  EXPECT_EQ(oracle.reason, StabilityReason::kNotExtraStronglyReachable);
  EXPECT_EQ(oracle.failing_sink, 0);

  const PathSystem system = ExtractPathSystem(network);
  const ResidualNetwork residual(network, system, 0);
  EXPECT_FALSE(residual.family_vertex_disjoint());
  EXPECT_THROW(FindRegularCycle(residual), Error);
}

TEST(StabilityTest, EnumerationRespectsBounds) {
  const Network network = testing::LoadFixture("fig1b.net");
  try {
    EnumeratePaths(network, network.source(1), network.sink(2), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
  EnumerationLimits limits;
  limits.max_families = 1;
  EXPECT_THROW(OracleStability(network, OracleNotion::kVertex, limits),
               Error);
  EXPECT_EQ(EnumeratePaths(network, network.source(1), network.sink(2), 100)
                .size(),
            testing::BrutePaths(network, network.source(1), network.sink(2))
                .size());
}

// The residual-cycle test and the enumeration oracle agree, and every
// regular cycle yields a second family.
TEST(StabilityPropertyTest, CycleSearchAgreesWithEnumeration) {
  int extra_strongly = 0;
  int unstable = 0;
  auto check = [&](const Network& network, const std::string& label) {
    const StabilityVerdict fast = CheckStability(network);
    const StabilityVerdict oracle = OracleStability(network);
    ASSERT_EQ(fast.stable, oracle.stable) << label << "\n"
                                          << SerializeNetwork(network);
    if (fast.reason == StabilityReason::kNotExtraStronglyReachable) {
      EXPECT_EQ(oracle.reason, StabilityReason::kNotExtraStronglyReachable);
      EXPECT_EQ(fast.failing_sink, oracle.failing_sink);
      return;
    }
    ++extra_strongly;
    if (fast.stable) return;
    ++unstable;
    ASSERT_EQ(fast.reason, StabilityReason::kRegularCycleFound);
    const StabilityWitness& w = *fast.witness;
    EXPECT_FALSE(SameFamily(w.family, w.alternative)) << label;
    EXPECT_TRUE(FamilyIsVertexDisjoint(w.alternative)) << label;
    bool listed = false;
    for (const auto& family :
         EnumerateFamilies(network, w.sink, DisjointMode::kVertex)) {
      listed = listed || SameFamily(family, w.alternative);
    }
    EXPECT_TRUE(listed) << label;
  };
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig config;
    config.seed = seed;
    config.target_vertex_count = 8 + static_cast<int>(seed % 7);
    check(GenerateRandom(config).network, "random " + std::to_string(seed));
    config.target_vertex_count = 14;
    config.mode = GenMode::kUnstable3;
    check(Generate(config).network, "unstable3 " + std::to_string(seed));
  }
  EXPECT_GT(extra_strongly, 300);
  EXPECT_GT(unstable, 300);
}

}  // namespace
}  // namespace kpair
