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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kpair/errors.h"
#include "kpair/reachability.h"
#include "kpair/solver3.h"
#include "support/test_support.h"

namespace kpair {
namespace {

using ::testing::ElementsAre;

TEST(PairSetTest, CanonicalFormAndText) {
  const IndexPairSet set = MakePairSet({{2, 0}, {0, 1}, {2, 0}});
  EXPECT_THAT(set, ElementsAre(IndexPair{0, 1}, IndexPair{2, 0}));
  EXPECT_EQ(FormatPairSet(set), "{(1,2),(3,1)}");
  EXPECT_TRUE(HasDistinctSinks(set));
  EXPECT_FALSE(HasDistinctSinks(MakePairSet({{0, 1}, {2, 1}})));
}

TEST(AlphaGammaTest, SixPairExample) {
  // s = {(1,1),(2,2),(1,3),(3,4),(1,6)} over [6] x [6].
  const AlphaGamma ag =
      ComputeAlphaGamma(MakePairSet({{0, 0}, {1, 1}, {0, 2}, {2, 3}, {0, 5}}),
                        6);
  EXPECT_EQ(ag.alpha, 5);
  EXPECT_EQ(ag.gamma, 2);
  EXPECT_THAT(ag.multiplicity, ElementsAre(4, 2, 2, 1, 0, 1));
}

TEST(EvalGsTest, MatchesDirectSumOnEveryThreePairSet) {
  const std::vector<IndexPairSet> sets = testing::AllDistinctSinkSets3();
  ASSERT_EQ(sets.size(), 63u);
  for (CaseLabel label : kAllCaseLabels) {
    const CoefficientTuple tuple = BaseTuple(label);
    for (const IndexPairSet& s : sets) {
      EXPECT_EQ(EvalGs(tuple, s), testing::DirectGs(tuple, s))
          << CaseLabelName(label) << " " << FormatPairSet(s);
    }
  }
}

// Expected g_s of the three-pair tuple, by alpha, gamma and shape.
Rational ListedGsValue(const IndexPairSet& s) {
  int gamma = 0;
  for (const auto& [i, j] : s) gamma += i == j;
  const int alpha = static_cast<int>(s.size());
  if (gamma == 0) return Rational(alpha, 2);
  if (gamma == 2) return 1;
  if (gamma == 3) return 0;
  if (alpha != 2) return 1;
  const IndexPair& diagonal = s[0].first == s[0].second ? s[0] : s[1];
  const IndexPair& other = s[0].first == s[0].second ? s[1] : s[0];
  return other.first == diagonal.first ? Rational(1) : Rational(1, 2);
}

TEST(EvalGsTest, ThreePairTupleValues) {
  const CoefficientTuple tuple = testing::TupleFromRows(
      3, {{{"1/2", "1/4", "1/4"}, {"1/4", "-1/4", "0"}, {"1/4", "0", "-1/4"}},
          {{"-1/4", "1/4", "0"}, {"1/4", "1/2", "1/4"}, {"0", "1/4", "-1/4"}},
          {{"-1/4", "0", "1/4"}, {"0", "-1/4", "1/4"}, {"1/4", "1/4", "1/2"}}});
  EXPECT_EQ(BaseTuple(CaseLabel::k12), tuple);
  EXPECT_EQ(BaseTuple(CaseLabel::k24), tuple);
  int above_one = 0;
  for (const IndexPairSet& s : testing::AllDistinctSinkSets3()) {
    const Rational g = EvalGs(tuple, s);
    EXPECT_EQ(g, ListedGsValue(s)) << FormatPairSet(s);
    if (g > 1) {
      ++above_one;
      EXPECT_EQ(g, Rational(3, 2));
      const AlphaGamma ag = ComputeAlphaGamma(s, 3);
      EXPECT_EQ(ag.alpha, 3);
      EXPECT_EQ(ag.gamma, 0);
    }
  }
  EXPECT_EQ(above_one, 8);
}

// S_N recomputed from path membership.
std::set<IndexPairSet> BruteSN(const Network& network,
                               const PathSystem& system) {
  std::set<IndexPairSet> entries;
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    IndexPairSet pairs;
    for (int i = 0; i < system.k(); ++i) {
      for (int j = 0; j < system.k(); ++j) {
        for (ArcIndex b : system.path(i, j).arcs) {
          if (b == a) pairs.emplace_back(i, j);
        }
      }
    }
    if (!pairs.empty()) entries.insert(pairs);
  }
  return entries;
}

TEST(SNTest, CatalogMatchesPathMembership) {
  for (const char* name : {"fig1a.net", "fig2.net", "fig1b.net"}) {
    const Network network = testing::LoadFixture(name);
    const PathSystem system = ExtractPathSystem(network);
    const SNCatalog catalog = ComputeSN(network, system);
    std::set<IndexPairSet> seen;
    size_t arcs = 0;
    for (const SNEntry& entry : catalog.entries) {
      seen.insert(entry.pairs);
      arcs += entry.arcs.size();
      for (ArcIndex a : entry.arcs) {
        EXPECT_EQ(PairsOnArc(system, a), entry.pairs);
      }
      EXPECT_TRUE(catalog.Contains(entry.pairs));
    }
    EXPECT_EQ(seen, BruteSN(network, system)) << name;
    EXPECT_EQ(seen.size(), catalog.entries.size());
    EXPECT_LE(arcs, static_cast<size_t>(network.arc_count()));
    EXPECT_TRUE(std::is_sorted(
        catalog.entries.begin(), catalog.entries.end(),
        [](const SNEntry& a, const SNEntry& b) { return a.pairs < b.pairs; }));
  }
}

TEST(SNTest, SharedSinkOnAnArcIsRejected) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem good = ExtractPathSystem(network);
  // Route s2 into t1 over A -> B, which P(s1,t1) already uses.
  const Path detour = PathFromArcs(
      network, std::vector<ArcIndex>{network.ArcOrThrow("a3"),
                                     network.ArcOrThrow("a5"),
                                     network.ArcOrThrow("a6")});
  const PathSystem bad(2, {good.path(0, 0), good.path(0, 1), detour,
                           good.path(1, 1)});
  try {
    ComputeSN(network, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotStronglyReachable);
  }
}

TEST(VerifySolutionTest, ButterflyBothRoutesAgree) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  const CoefficientTuple tuple =
      testing::TupleFromRows(2, {{{"3/4", "1/4"}, {"1/4", "-1/4"}},
                                 {{"-1/4", "1/4"}, {"1/4", "3/4"}}});
  const VerificationReport report = VerifySolution(network, system, tuple);
  EXPECT_TRUE(report.verdict);
  EXPECT_TRUE(report.rate_check.ok);
  EXPECT_TRUE(report.conservation);
  EXPECT_THAT(report.rates, ElementsAre(Rational(1), Rational(1)));
  EXPECT_EQ(report.max_load, Rational(1));
  EXPECT_EQ(report.max_g, Rational(1));
  EXPECT_TRUE(report.overloaded.empty());
  const std::vector<Rational> loads =
      testing::BruteLoads(network, system, tuple);
  ASSERT_EQ(report.loads.size(), static_cast<size_t>(network.arc_count()));
  for (const ArcLoad& load : report.loads) {
    EXPECT_EQ(load.load, loads[load.arc]);
  }
  for (const GsValue& g : report.g_values) {
    EXPECT_EQ(g.value, testing::DirectGs(tuple, g.pairs));
  }
}

TEST(VerifySolutionTest, RejectsOverloadAndWrongRate) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  const CoefficientTuple identity = CoefficientTuple::IdentityDiagonal(2);
  const VerificationReport overloaded =
      VerifySolution(network, system, identity);
  EXPECT_TRUE(overloaded.rate_check.ok);
  EXPECT_FALSE(overloaded.verdict);
  EXPECT_EQ(overloaded.max_load, Rational(2));
  EXPECT_EQ(overloaded.max_g, Rational(2));
  ASSERT_EQ(overloaded.overloaded.size(), 1u);
  EXPECT_EQ(network.arc(overloaded.overloaded[0]).id, "a5");

  CoefficientTuple half(2);
  half.at(0, 0, 0) = Rational(1, 2);
  half.at(1, 1, 1) = Rational(1, 2);
  const VerificationReport slow = VerifySolution(network, system, half);
  EXPECT_FALSE(slow.rate_check.ok);
  EXPECT_FALSE(slow.verdict);
  EXPECT_THAT(slow.rates, ElementsAre(Rational(1, 2), Rational(1, 2)));
  EXPECT_TRUE(slow.overloaded.empty());
}

}  // namespace
}  // namespace kpair
