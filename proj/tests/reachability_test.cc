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

#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kpair/errors.h"
#include "kpair/netgen.h"
#include "support/test_support.h"

namespace kpair {
namespace {

constexpr char kFunnel[] = R"(k 2
source 1 s1
source 2 s2
sink 1 t1
sink 2 t2
arc s1 A
arc s2 A
arc A t1
arc A t2
)";

TEST(ReachabilityTest, LevelsOfHandBuiltNetworks) {
  EXPECT_EQ(ClassifyReachability(testing::LoadFixture("fig1a.net")).level,
            ReachabilityLevel::kExtraStrongly);
  EXPECT_EQ(ClassifyReachability(testing::LoadFixture("fig2.net")).level,
            ReachabilityLevel::kExtraStrongly);
  const ReachabilityClass funnel = ClassifyReachability(ParseNetwork(kFunnel));
  EXPECT_EQ(funnel.level, ReachabilityLevel::kFully);
  EXPECT_EQ(funnel.counts[0], (SinkCounts{1, 1}));

  const ReachabilityClass strongly =
      ClassifyReachability(testing::LoadFixture("strongly_not_extra.net"));
  EXPECT_EQ(strongly.level, ReachabilityLevel::kStrongly);
  EXPECT_EQ(strongly.counts[0], (SinkCounts{2, 1}));
  EXPECT_EQ(strongly.counts[1], (SinkCounts{2, 1}));

  const Network cut =
      ParseNetwork("k 2\nsource 1 s1\nsource 2 s2\nsink 1 t1\nsink 2 t2\n"
                   "arc s1 t1\narc s2 t2\narc s1 t2\n");
  EXPECT_FALSE(IsFullyReachable(cut));
  EXPECT_EQ(ClassifyReachability(cut).level, ReachabilityLevel::kNotFully);
}

TEST(ReachabilityTest, LevelNames) {
  EXPECT_EQ(ReachabilityLevelName(ReachabilityLevel::kNotFully),
            "not-fully-reachable");
  EXPECT_EQ(ReachabilityLevelName(ReachabilityLevel::kExtraStrongly),
            "extra-strongly-reachable");
  EXPECT_EQ(DisjointModeName(DisjointMode::kVertex), "vertex");
}

TEST(ReachabilityTest, ExtractPathSystemPrefersVertexDisjointFamilies) {
  const Network network = testing::LoadFixture("strongly_not_extra.net");
  const PathSystem system = ExtractPathSystem(network);
  EXPECT_NO_THROW(ValidatePathSystem(network, system));
  EXPECT_FALSE(FamilyIsVertexDisjoint(system.Family(0)));

  const Network fig1a = testing::LoadFixture("fig1a.net");
  const PathSystem unique = ExtractPathSystem(fig1a);
  for (int j = 0; j < 3; ++j) {
    EXPECT_TRUE(FamilyIsVertexDisjoint(unique.Family(j)));
  }
  EXPECT_EQ(FormatPath(fig1a, unique.path(2, 0)), "[s3,C,E,F,G,t1]");

  try {
    ExtractPathSystem(ParseNetwork(kFunnel));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotStronglyReachable);
  }
}

void ExpectFamilyValid(const Network& network, int sink, DisjointMode mode,
                       const DisjointPaths& result) {
  ASSERT_EQ(static_cast<int>(result.family.size()), result.count);
  std::set<VertexIndex> sources;
  for (const Path& path : result.family) {
    EXPECT_TRUE(IsValidPath(network, path));
    EXPECT_NE(network.SourceIndexOf(path.front()), -1);
    EXPECT_EQ(path.back(), network.sink(sink));
    EXPECT_TRUE(sources.insert(path.front()).second);
  }
  EXPECT_TRUE(FamilyIsArcDisjoint(result.family));
  if (mode == DisjointMode::kVertex) {
    EXPECT_TRUE(FamilyIsVertexDisjoint(result.family));
  }
}

// Max-flow counts against exhaustive search on small random networks.
TEST(ReachabilityPropertyTest, MaxFlowMatchesExhaustiveSearch) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenConfig config;
    config.seed = seed;
    config.k = 1 + static_cast<int>(seed % 3);
    config.target_vertex_count = 9;
    const Network network = GenerateRandom(config).network;
    for (int j = 0; j < network.k(); ++j) {
      for (DisjointMode mode : {DisjointMode::kArc, DisjointMode::kVertex}) {
        const DisjointPaths result = MaxDisjointPaths(network, j, mode);
        EXPECT_EQ(result.count,
                  testing::BruteMaxDisjoint(network, j,
                                            mode == DisjointMode::kVertex))
            << "seed " << seed << " sink " << j << " mode "
            << DisjointModeName(mode) << "\n"
            << SerializeNetwork(network);
        ExpectFamilyValid(network, j, mode, result);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(ReachabilityPropertyTest, LevelIsConsistentWithCounts) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenConfig config;
    config.seed = seed;
    config.target_vertex_count = 10;
    const Network network = GenerateRandom(config).network;
    const ReachabilityClass reach = ClassifyReachability(network);
    bool full = true;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        full = full && !testing::BrutePaths(network, network.source(i),
                                            network.sink(j))
                            .empty();
      }
    }
    bool strong = full;
    bool extra = full;
    for (int j = 0; j < 3; ++j) {
      strong = strong && testing::BruteMaxDisjoint(network, j, false) == 3;
      extra = extra && testing::BruteMaxDisjoint(network, j, true) == 3;
    }
    const ReachabilityLevel expected =
        extra    ? ReachabilityLevel::kExtraStrongly
        : strong ? ReachabilityLevel::kStrongly
        : full   ? ReachabilityLevel::kFully
                 : ReachabilityLevel::kNotFully;
    EXPECT_EQ(reach.level, expected) << "seed " << seed;
    EXPECT_EQ(IsFullyReachable(network), full);
  }
}

}  // namespace
}  // namespace kpair
