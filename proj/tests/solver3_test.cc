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

#include "kpair/solver3.h"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "kpair/errors.h"
#include "kpair/reachability.h"
#include "support/test_support.h"

namespace kpair {

void PrintTo(CaseLabel label, std::ostream* os) {
  *os << CaseLabelName(label);
}

namespace {

using ::testing::Contains;
using ::testing::Each;
using ::testing::IsEmpty;
using ::testing::Not;

std::vector<std::vector<int>> Permutations3() {
  std::vector<int> p{0, 1, 2};
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

// Sources other than l emit nothing of commodity l, sinks other than l
// absorb nothing, and the commodity carries one unit overall.
bool RatesHold(const CoefficientTuple& c) {
  for (int l = 0; l < c.k(); ++l) {
    Rational total = 0;
    for (int x = 0; x < c.k(); ++x) {
      Rational out = 0;
      Rational in = 0;
      for (int y = 0; y < c.k(); ++y) {
        out += c.at(l, x, y);
        in += c.at(l, y, x);
      }
      total += out;
      if (x != l && (out != 0 || in != 0)) return false;
    }
    if (total != 1) return false;
  }
  return true;
}

TEST(CaseLabelTest, NamesRoundTrip) {
  std::set<std::string> names;
  for (CaseLabel label : kAllCaseLabels) {
    const std::string name(CaseLabelName(label));
    names.insert(name);
    EXPECT_EQ(ParseCaseLabel(name), label);
  }
  EXPECT_EQ(names.size(), kAllCaseLabels.size());
  EXPECT_EQ(CaseLabelName(CaseLabel::k22b), "2.2b");
  EXPECT_FALSE(ParseCaseLabel("3.1").has_value());
}

TEST(BaseTupleTest, EveryCaseMeetsTheRateConditions) {
  for (CaseLabel label : kAllCaseLabels) {
    const CoefficientTuple tuple = BaseTuple(label);
    EXPECT_TRUE(RatesHold(tuple)) << CaseLabelName(label);
    EXPECT_TRUE(CheckRateConditions(tuple).ok) << CaseLabelName(label);
  }
  EXPECT_TRUE(RatesHold(TwoPairTuple()));
}

TEST(BaseTupleTest, RelabelingKeepsTheRateConditions) {
  for (CaseLabel label : kAllCaseLabels) {
    for (const std::vector<int>& p : Permutations3()) {
      const CoefficientTuple tuple =
          ApplyRelabeling(BaseTuple(label), Relabeling{p, p});
      EXPECT_TRUE(RatesHold(tuple)) << CaseLabelName(label);
    }
  }
}

TEST(BaseTupleTest, CaseOneOneEmbedsTheTwoPairTuple) {
  const CoefficientTuple tuple = BaseTuple(CaseLabel::k11);
  const CoefficientTuple two = TwoPairTuple();
  EXPECT_EQ(tuple.at(0, 0, 0), 1);
  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        EXPECT_EQ(tuple.at(l + 1, i + 1, j + 1), two.at(l, i, j));
      }
    }
    EXPECT_EQ(tuple.at(l + 1, 0, 0), 0);
    EXPECT_EQ(tuple.at(0, l + 1, l + 1), 0);
  }
}

TEST(BaseTupleTest, TwoPairTupleStaysWithinCapacityOnEverySet) {
  const CoefficientTuple two = TwoPairTuple();
  // All nonempty pair sets over [2] x [2] with distinct sinks.
  const std::vector<std::vector<std::pair<int, int>>> sets = {
      {{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}},
      {{0, 0}, {1, 1}}, {{0, 0}, {0, 1}}, {{1, 0}, {0, 1}},
      {{1, 0}, {1, 1}}};
  for (const auto& s : sets) EXPECT_LE(testing::DirectGs(two, s), 1);
}

class SupersetTest : public ::testing::TestWithParam<CaseLabel> {};

TEST_P(SupersetTest, GsStaysWithinCapacity) {
  const CoefficientTuple tuple = BaseTuple(GetParam());
  const std::vector<IndexPairSet> superset = CaseSuperset(GetParam());
  ASSERT_THAT(superset, Not(IsEmpty()));
  for (const IndexPairSet& s : superset) {
    EXPECT_TRUE(HasDistinctSinks(s)) << FormatPairSet(s);
    EXPECT_LE(testing::DirectGs(tuple, s), 1) << FormatPairSet(s);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_THAT(superset, Contains(MakePairSet({{i, j}})));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Enumerated, SupersetTest,
    ::testing::Values(CaseLabel::k13, CaseLabel::k22a, CaseLabel::k22b,
                      CaseLabel::k23a, CaseLabel::k23b),
    [](const ::testing::TestParamInfo<CaseLabel>& info) {
      std::string name(CaseLabelName(info.param));
      std::replace(name.begin(), name.end(), '.', '_');
      return "Case" + name;
    });

TEST(SupersetTest, VariantsDropTheirDistinguishingSet) {
  const IndexPairSet first = MakePairSet({{0, 0}, {0, 1}});
  const IndexPairSet second = MakePairSet({{0, 0}, {0, 2}});
  for (CaseLabel a : {CaseLabel::k22a, CaseLabel::k23a}) {
    EXPECT_THAT(CaseSuperset(a), Not(Contains(first)));
    EXPECT_THAT(CaseSuperset(a), Contains(second));
  }
  for (CaseLabel b : {CaseLabel::k22b, CaseLabel::k23b}) {
    EXPECT_THAT(CaseSuperset(b), Contains(first));
    EXPECT_THAT(CaseSuperset(b), Not(Contains(second)));
  }
  EXPECT_THAT(CaseSuperset(CaseLabel::k11), IsEmpty());
}

TEST(ApplyRelabelingTest, MovesEntriesByRole) {
  CoefficientTuple tuple(3);
  tuple.at(2, 1, 0) = Rational(1, 3);
  const Relabeling r{{0, 2, 1}, {1, 0, 2}};
  const CoefficientTuple out = ApplyRelabeling(tuple, r);
  // Only in[2][1][0] is set, so only out[2][2][1] picks it up.
  EXPECT_EQ(out.at(2, 2, 1), Rational(1, 3));
  int nonzero = 0;
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) nonzero += out.at(l, i, j) != 0;
    }
  }
  EXPECT_EQ(nonzero, 1);
  try {
    ApplyRelabeling(tuple, Relabeling{{0, 0, 1}, {0, 1, 2}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(DispatchTest, Fig1aIsCaseOneOne) {
  const Network net = testing::LoadFixture("fig1a.net");
  const PathSystem system = ExtractPathSystem(net);
  const CaseDecision decision =
      DispatchCase(ComputeMSets(system), ComputeSN(net, system));
  EXPECT_EQ(decision.label, CaseLabel::k11);
  EXPECT_EQ((std::set<int>{decision.i, decision.j, decision.l}),
            (std::set<int>{0, 1, 2}));
  EXPECT_TRUE(decision.relabeling.IsValid(3));
}

struct CaseFixture {
  const char* file;
  CaseLabel label;
};

void PrintTo(const CaseFixture& fixture, std::ostream* os) {
  *os << fixture.file;
}

class SolveFixtureTest : public ::testing::TestWithParam<CaseFixture> {};

TEST_P(SolveFixtureTest, DispatchesAndVerifies) {
  const Network net = testing::LoadFixture(GetParam().file);
  const SolveResult result = Solve(net);
  EXPECT_EQ(result.decision.label, GetParam().label);
  EXPECT_FALSE(result.used_fallback);
  EXPECT_TRUE(result.report.verdict);
  EXPECT_THAT(result.report.rates, Each(Rational(1)));
  EXPECT_LE(result.report.max_load, 1);
  EXPECT_EQ(result.tuple, ApplyRelabeling(BaseTuple(result.decision.label),
                                          result.decision.relabeling));
  const std::vector<Rational> loads =
      testing::BruteLoads(result.network, result.system, result.tuple);
  EXPECT_LE(*std::max_element(loads.begin(), loads.end()), 1);
  EXPECT_THAT(testing::BruteRates(result.network, result.system, result.tuple),
              Each(Rational(1)));
}

INSTANTIATE_TEST_SUITE_P(
    Fixtures, SolveFixtureTest,
    ::testing::Values(CaseFixture{"fig1a.net", CaseLabel::k11},
                      CaseFixture{"case_1_1.net", CaseLabel::k11},
                      CaseFixture{"case_1_2.net", CaseLabel::k12},
                      CaseFixture{"case_1_3.net", CaseLabel::k13},
                      CaseFixture{"case_2_1.net", CaseLabel::k21},
                      CaseFixture{"case_2_2a.net", CaseLabel::k22a},
                      CaseFixture{"case_2_2b.net", CaseLabel::k22b},
                      CaseFixture{"case_2_3a.net", CaseLabel::k23a},
                      CaseFixture{"case_2_3b.net", CaseLabel::k23b}),
    [](const ::testing::TestParamInfo<CaseFixture>& info) {
      std::string name = info.param.file;
      name = name.substr(0, name.find('.'));
      return name;
    });

TEST(SolveTest, RejectsUnstableNetwork) {
  try {
    Solve(testing::LoadFixture("fig1b.net"));
    FAIL() << "expected an error";
  } catch (const NotStableError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotStable);
    EXPECT_EQ(e.verdict().reason, StabilityReason::kRegularCycleFound);
  }
}

TEST(SolveTest, RejectsOtherPairCounts) {
  try {
    Solve(testing::LoadFixture("fig2.net"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

}  // namespace
}  // namespace kpair
