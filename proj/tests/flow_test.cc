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

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kpair/coefficients.h"
#include "kpair/errors.h"
#include "kpair/rational.h"
#include "kpair/reachability.h"
#include "support/test_support.h"

namespace kpair {
namespace {

using ::testing::ElementsAre;

CoefficientTuple ButterflyTuple() {
  return testing::TupleFromRows(2, {{{"3/4", "1/4"}, {"1/4", "-1/4"}},
                                    {{"-1/4", "1/4"}, {"1/4", "3/4"}}});
}

TEST(RationalTest, CanonicalText) {
  EXPECT_EQ(ToString(Rational(6, 8)), "3/4");
  EXPECT_EQ(ToString(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(ToString(Rational(4, 2)), "2");
  EXPECT_EQ(ParseRational("-3/12"), Rational(-1, 4));
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_THROW(ParseRational("1/0"), Error);
  EXPECT_THROW(ParseRational("x"), Error);
  EXPECT_THROW(ParseRational("1/"), Error);
  EXPECT_EQ(Abs(Rational(-5, 3)), Rational(5, 3));
}

TEST(FlowTest, IndicatorFlowsLeaveTheSourceAndEnterTheSink) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  const Flow flow = IndicatorFlow(network, system, 0, 0);
  EXPECT_EQ(Excess(network, flow, "s1"), Rational(-1));
  EXPECT_EQ(Excess(network, flow, "t1"), Rational(1));
  EXPECT_EQ(Excess(network, flow, "A"), Rational(0));
  EXPECT_TRUE(Conserves(network, flow));
  EXPECT_THROW(Excess(network, flow, "nowhere"), Error);

  Flow leaky = flow;
  leaky.values[network.ArcOrThrow("a1")] = Rational(1, 2);
  EXPECT_FALSE(Conserves(network, leaky));
}

TEST(FlowTest, ButterflyLoads) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  const CoefficientTuple tuple = ButterflyTuple();
  EXPECT_TRUE(CheckRateConditions(tuple).ok);
  const MultiFlow flows = Realize(network, tuple, system);
  EXPECT_THAT(Rates(network, flows), ElementsAre(Rational(1), Rational(1)));
  const std::vector<Rational> expected = testing::BruteLoads(network, system,
                                                             tuple);
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    const Arc& arc = network.arc(a);
    const std::string ends =
        network.vertex_name(arc.tail) + "," + network.vertex_name(arc.head);
    const Rational want =
        ends == "s1,t2" || ends == "s2,t1" ? Rational(1, 2) : Rational(1);
    EXPECT_EQ(Load(flows, a), want) << ends;
    EXPECT_EQ(Load(flows, a), expected[a]) << ends;
  }
  EXPECT_EQ(Load(network, flows, "a2"), Rational(1, 2));
  EXPECT_THROW(Load(network, flows, "zz"), Error);
  EXPECT_TRUE(CheckFeasibility(flows).feasible);
}

TEST(FlowTest, OverloadIsReported) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  CoefficientTuple tuple = CoefficientTuple::IdentityDiagonal(2);
  tuple.at(0, 1, 1) = 1;
  tuple.at(0, 1, 0) = -1;
  const Feasibility result = CheckFeasibility(Realize(network, tuple, system));
  EXPECT_FALSE(result.feasible);
  const std::vector<Rational> loads =
      testing::BruteLoads(network, system, tuple);
  std::vector<ArcIndex> expected;
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    if (loads[a] > 1) expected.push_back(a);
  }
  EXPECT_EQ(result.overloaded, expected);
  EXPECT_EQ(loads[network.ArcOrThrow("a5")], Rational(3));
}

TEST(FlowTest, DimensionsMustMatch) {
  const Network network = testing::LoadFixture("fig2.net");
  const PathSystem system = ExtractPathSystem(network);
  try {
    Realize(network, CoefficientTuple::IdentityDiagonal(3), system);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(RateConditionsTest, ListsEveryViolatedEquation) {
  EXPECT_TRUE(CheckRateConditions(CoefficientTuple::IdentityDiagonal(3)).ok);
  CoefficientTuple tuple = CoefficientTuple::IdentityDiagonal(2);
  tuple.at(0, 0, 1) = Rational(1, 2);
  const RateCheck check = CheckRateConditions(tuple);
  EXPECT_FALSE(check.ok);
  EXPECT_THAT(check.violations,
              ElementsAre("commodity 1: column 2 sums to 1/2",
                          "commodity 1: total is 3/2"));
}

TEST(RateConditionsTest, AgreesWithRealizedRates) {
  const Network network = testing::LoadFixture("fig1a.net");
  const PathSystem system = ExtractPathSystem(network);
  CoefficientTuple tuple(3);
  // A tuple with rate (1, 1/2, 0) and a nonzero off-diagonal row.
  tuple.at(0, 0, 0) = 1;
  tuple.at(1, 1, 1) = Rational(1, 2);
  tuple.at(2, 0, 0) = 1;
  tuple.at(2, 0, 1) = -1;
  EXPECT_FALSE(CheckRateConditions(tuple).ok);
  EXPECT_THAT(Rates(network, Realize(network, tuple, system)),
              ElementsAre(Rational(1), Rational(1, 2), Rational(0)));
  EXPECT_EQ(Rates(network, Realize(network, tuple, system)),
            testing::BruteRates(network, system, tuple));
}

TEST(RelabelingTest, InverseUndoes) {
  const Relabeling r{{2, 0, 1}, {1, 2, 0}};
  EXPECT_TRUE(r.IsValid(3));
  const Relabeling inverse = r.Inverse();
  for (int x = 0; x < 3; ++x) {
    EXPECT_EQ(inverse.sources[r.sources[x]], x);
    EXPECT_EQ(inverse.sinks[r.sinks[x]], x);
  }
  EXPECT_EQ(inverse.Inverse(), r);
  EXPECT_FALSE((Relabeling{{0, 0, 1}, {0, 1, 2}}).IsValid(3));
  EXPECT_FALSE(Relabeling::Identity(2).IsValid(3));
}

}  // namespace
}  // namespace kpair
