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
#include <initializer_list>
#include <numeric>
#include <set>

#include "kpair/reachability.h"

namespace kpair {
namespace {

// Row-major entries c[l][i][j] over a common denominator.
CoefficientTuple Tuple3(int denominator, std::initializer_list<int> entries) {
  CoefficientTuple tuple(3);
  auto it = entries.begin();
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) tuple.at(l, i, j) = Rational(*it++, denominator);
    }
  }
  return tuple;
}

// 1-based pair constructor for transcribing the case supersets.
IndexPair P(int source, int sink) { return {source - 1, sink - 1}; }

class SupersetBuilder {
 public:
  SupersetBuilder() {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) Add({P(i, j)});
    }
  }

  void Add(std::vector<IndexPair> pairs) { sets_.insert(MakePairSet(pairs)); }
  void Remove(std::vector<IndexPair> pairs) {
    sets_.erase(MakePairSet(pairs));
  }
  std::vector<IndexPairSet> Build() const {
    return {sets_.begin(), sets_.end()};
  }

 private:
  std::set<IndexPairSet> sets_;
};

std::vector<IndexPairSet> Case13Superset() {
  SupersetBuilder s;
  for (int i : {2, 3}) {
    for (int j : {1, 2, 3}) s.Add({P(i, 1), P(j, 2)});
  }
  s.Add({P(1, 1), P(1, 2)});
  for (int i : {1, 2}) {
    for (int l : {1, 2, 3}) s.Add({P(i, 1), P(l, 3)});
  }
  s.Add({P(3, 1), P(3, 3)});
  for (int j : {1, 2, 3}) {
    for (int l : {1, 2, 3}) s.Add({P(j, 2), P(l, 3)});
  }
  for (int l : {1, 2, 3}) s.Add({P(1, 1), P(1, 2), P(l, 3)});
  for (int j : {1, 2, 3}) {
    for (int l : {1, 2, 3}) s.Add({P(2, 1), P(j, 2), P(l, 3)});
  }
  for (int j : {1, 2, 3}) s.Add({P(3, 1), P(j, 2), P(3, 3)});
  return s.Build();
}

// The supersets of cases 2.2 and 2.3 differ in four families only.
SupersetBuilder Case2Superset(bool case23) {
  SupersetBuilder s;
  for (int i : {1, 2}) {
    for (int j : {2, 3}) s.Add({P(i, 1), P(j, 2)});
  }
  s.Add({P(1, 1), P(1, 2)});
  s.Add({P(3, 1), P(3, 2)});
  for (int i : {2, 3}) {
    for (int l : {1, 3}) s.Add({P(i, 1), P(l, 3)});
  }
  s.Add({P(1, 1), P(1, 3)});
  s.Add({P(2, 1), P(2, 3)});
  for (int j : {2, 3}) {
    for (int l : case23 ? std::vector<int>{1, 3} : std::vector<int>{1, 2}) {
      s.Add({P(j, 2), P(l, 3)});
    }
  }
  s.Add({P(1, 2), P(1, 3)});
  s.Add(case23 ? std::vector<IndexPair>{P(2, 2), P(2, 3)}
               : std::vector<IndexPair>{P(3, 2), P(3, 3)});
  for (int j : {1, 2, 3}) s.Add({P(1, 1), P(j, 2), P(1, 3)});
  for (int l : case23 ? std::vector<int>{1, 2, 3}
                      : std::vector<int>{1, 2}) {
    s.Add({P(2, 1), P(2, 2), P(l, 3)});
  }
  for (int l : case23 ? std::vector<int>{1, 3}
                      : std::vector<int>{1, 2, 3}) {
    s.Add({P(2, 1), P(3, 2), P(l, 3)});
  }
  for (int l : {1, 3}) s.Add({P(3, 1), P(3, 2), P(l, 3)});
  return s;
}

std::vector<IndexPairSet> VariantA(bool case23) {
  SupersetBuilder s = Case2Superset(case23);
  s.Remove({P(1, 1), P(1, 2)});
  return s.Build();
}

std::vector<IndexPairSet> VariantB(bool case23) {
  SupersetBuilder s = Case2Superset(case23);
  s.Remove({P(1, 1), P(1, 3)});
  for (int j : {2, 3}) s.Remove({P(1, 1), P(j, 2), P(1, 3)});
  return s.Build();
}

Relabeling RolesToRelabeling(int i, int j, int l) {
  Relabeling r = Relabeling::Identity(3);
  r.sources[i] = 0;
  r.sources[j] = 1;
  r.sources[l] = 2;
  r.sinks = r.sources;
  return r;
}

CaseDecision MakeDecision(CaseLabel label, int i, int j, int l) {
  return CaseDecision{label, i, j, l, RolesToRelabeling(i, j, l)};
}

std::string DescribeMSets(const MSets& m) {
  std::string text = "m-sets:";
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      text += " m(" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
              ")=" + FormatIndexSet(m.get(a, b));
    }
  }
  return text;
}

std::vector<std::array<int, 3>> OrderedTriples() {
  std::vector<std::array<int, 3>> triples;
  std::array<int, 3> t{0, 1, 2};
  do {
    triples.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return triples;
}

}  // namespace

std::string_view CaseLabelName(CaseLabel label) {
  switch (label) {
    case CaseLabel::k11:
      return "1.1";
    case CaseLabel::k12:
      return "1.2";
    case CaseLabel::k13:
      return "1.3";
    case CaseLabel::k21:
      return "2.1";
    case CaseLabel::k22a:
      return "2.2a";
    case CaseLabel::k22b:
      return "2.2b";
    case CaseLabel::k23a:
      return "2.3a";
    case CaseLabel::k23b:
      return "2.3b";
    case CaseLabel::k24:
      return "2.4";
  }
  return "unknown";
}

std::optional<CaseLabel> ParseCaseLabel(std::string_view name) {
  for (CaseLabel label : kAllCaseLabels) {
    if (CaseLabelName(label) == name) return label;
  }
  return std::nullopt;
}

SNCatalog RelabelCatalog(const SNCatalog& catalog,
                         const Relabeling& relabeling) {
  SNCatalog result;
  for (const SNEntry& entry : catalog.entries) {
    std::vector<IndexPair> pairs;
    for (const auto& [i, j] : entry.pairs) {
      pairs.emplace_back(relabeling.sources[i], relabeling.sinks[j]);
    }
    result.entries.push_back({MakePairSet(pairs), entry.arcs});
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const SNEntry& a, const SNEntry& b) { return a.pairs < b.pairs; });
  return result;
}

CaseDecision DispatchCase(const MSets& m, const SNCatalog& catalog) {
  if (m.k() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "case dispatch needs k = 3");
  }
  const auto triples = OrderedTriples();
  // Case 1: m(i,j) meets {i,j} and m(i,l) meets {i,l}.
  const std::array<std::pair<CaseLabel, std::array<int, 2>>, 3> case1 = {{
      {CaseLabel::k11, {0, 0}},  // i in m(i,j), i in m(i,l)
      {CaseLabel::k12, {1, 2}},  // j in m(i,j), l in m(i,l)
      {CaseLabel::k13, {0, 2}},  // i in m(i,j), l in m(i,l)
  }};
  for (const auto& [label, picks] : case1) {
    for (const auto& t : triples) {
      const auto [i, j, l] = t;
      if (Contains(m.get(i, j), t[picks[0]]) &&
          Contains(m.get(i, l), t[picks[1]])) {
        return MakeDecision(label, i, j, l);
      }
    }
  }

  // Case 2: the chain m(i,j) = {l}, m(j,l) = {i}, m(l,i) = {j}.
  std::optional<std::array<int, 3>> chain;
  for (const auto& t : triples) {
    const auto [i, j, l] = t;
    if (m.get(i, j) != Singleton(l)) continue;
    if (m.get(j, l) != Singleton(i) || m.get(l, i) != Singleton(j)) {
      throw TheoremViolation("m(" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") = {" +
                                 std::to_string(l + 1) +
                                 "} does not start a closed chain",
                             {DescribeMSets(m)});
    }
    chain = t;
    break;
  }
  if (!chain) {
    throw TheoremViolation("m-sets match neither case 1 nor case 2",
                           {DescribeMSets(m)});
  }
  // Memberships x in m(j,i), y in m(i,l), z in m(l,j) as role indices
  // 0 = i, 1 = j, 2 = l.
  struct Pattern {
    CaseLabel label;
    std::array<int, 3> roles;
  };
  const std::array<Pattern, 4> patterns = {{
      {CaseLabel::k21, {1, 0, 2}},
      {CaseLabel::k22a, {0, 0, 2}},
      {CaseLabel::k23a, {0, 0, 1}},
      {CaseLabel::k24, {0, 2, 1}},
  }};
  const auto [c0, c1, c2] = *chain;
  const std::array<std::array<int, 3>, 3> rotations = {
      {{c0, c1, c2}, {c1, c2, c0}, {c2, c0, c1}}};
  for (const Pattern& pattern : patterns) {
    for (const auto& t : rotations) {
      const auto [i, j, l] = t;
      if (!Contains(m.get(j, i), t[pattern.roles[0]]) ||
          !Contains(m.get(i, l), t[pattern.roles[1]]) ||
          !Contains(m.get(l, j), t[pattern.roles[2]])) {
        continue;
      }
      CaseDecision decision = MakeDecision(pattern.label, i, j, l);
      if (pattern.label == CaseLabel::k22a || pattern.label == CaseLabel::k23a) {
        const SNCatalog canonical = RelabelCatalog(catalog, decision.relabeling);
        const bool is_case23 = pattern.label == CaseLabel::k23a;
        if (!canonical.Contains(MakePairSet({P(1, 1), P(1, 2)}))) {
          decision.label = is_case23 ? CaseLabel::k23a : CaseLabel::k22a;
        } else if (!canonical.Contains(MakePairSet({P(1, 1), P(1, 3)}))) {
          decision.label = is_case23 ? CaseLabel::k23b : CaseLabel::k22b;
        } else {
          throw TheoremViolation(
              "S_N contains both {(1,1),(1,2)} and {(1,1),(1,3)} in case " +
                  std::string(is_case23 ? "2.3" : "2.2"),
              {DescribeMSets(m)});
        }
      }
      return decision;
    }
  }
  throw TheoremViolation("case 2 chain matches no subcase", {DescribeMSets(m)});
}

CoefficientTuple TwoPairTuple() {
  CoefficientTuple tuple(2);
  const int entries[2][2][2] = {{{3, 1}, {1, -1}}, {{-1, 1}, {1, 3}}};
  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) tuple.at(l, i, j) = Rational(entries[l][i][j], 4);
    }
  }
  return tuple;
}

CoefficientTuple BaseTuple(CaseLabel label) {
  switch (label) {
    case CaseLabel::k11: {
      CoefficientTuple tuple(3);
      tuple.at(0, 0, 0) = 1;
      const CoefficientTuple two = TwoPairTuple();
      for (int l = 0; l < 2; ++l) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) tuple.at(l + 1, i + 1, j + 1) = two.at(l, i, j);
        }
      }
      return tuple;
    }
    case CaseLabel::k12:
    case CaseLabel::k24:
      return Tuple3(4, {2, 1, 1, 1, -1, 0, 1, 0, -1,     //
                        -1, 1, 0, 1, 2, 1, 0, 1, -1,     //
                        -1, 0, 1, 0, -1, 1, 1, 1, 2});
    case CaseLabel::k13:
      return Tuple3(4, {3, 0, 1, 0, 0, 0, 1, 0, -1,      //
                        0, 0, 0, 0, 3, 1, 0, 1, -1,      //
                        -1, 0, 1, 0, -1, 1, 1, 1, 2});
    case CaseLabel::k21:
      return CoefficientTuple::IdentityDiagonal(3);
    case CaseLabel::k22a:
      return Tuple3(14, {8, 7, -1, 3, -5, 2, 3, -2, -1,  //
                         -3, 7, -4, 3, 7, 4, 0, 0, 0,    //
                         -3, 0, 3, 0, -2, 2, 3, 2, 9});
    case CaseLabel::k22b:
      return Tuple3(12, {6, 3, 3, 3, -3, 0, 3, 0, -3,    //
                         -3, 4, -1, 3, 7, 2, 0, 1, -1,   //
                         -3, 1, 2, 0, -2, 2, 3, 1, 8});
    case CaseLabel::k23a:
      return Tuple3(8, {4, 3, 1, 2, -2, 0, 2, -1, -1,    //
                        -2, 3, -1, 2, 4, 2, 0, 1, -1,    //
                        -2, 0, 2, 0, -2, 2, 2, 2, 4});
    case CaseLabel::k23b:
      return Tuple3(6, {4, 1, 1, 1, -1, 0, 1, 0, -1,     //
                        -2, 3, -1, 2, 2, 2, 0, 1, -1,    //
                        0, 0, 0, -1, -1, 2, 1, 1, 4});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown case label");
}

std::vector<IndexPairSet> CaseSuperset(CaseLabel label) {
  switch (label) {
    case CaseLabel::k13:
      return Case13Superset();
    case CaseLabel::k22a:
      return VariantA(false);
    case CaseLabel::k22b:
      return VariantB(false);
    case CaseLabel::k23a:
      return VariantA(true);
    case CaseLabel::k23b:
      return VariantB(true);
    default:
      return {};
  }
}

CoefficientTuple ApplyRelabeling(const CoefficientTuple& tuple,
                                 const Relabeling& relabeling) {
  const int k = tuple.k();
  if (!relabeling.IsValid(k)) {
    throw Error(ErrorCode::kInvalidArgument, "relabeling is not a permutation");
  }
  CoefficientTuple out(k);
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        out.at(l, i, j) = tuple.at(relabeling.sinks[l], relabeling.sources[i],
                                   relabeling.sinks[j]);
      }
    }
  }
  return out;
}

NotStableError::NotStableError(StabilityVerdict verdict)
    : Error(ErrorCode::kNotStable,
            "network is not stable (" +
                std::string(StabilityReasonName(verdict.reason)) + ")"),
      verdict_(std::move(verdict)) {}

SolveResult Solve(const Network& input) {
  if (input.k() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "the solver handles k = 3 only");
  }
  Network network = Normalize(input).network;
  StabilityVerdict verdict = CheckStability(network);
  if (!verdict.stable) throw NotStableError(std::move(verdict));
  PathSystem system = ExtractPathSystem(network);
  MSets msets = ComputeMSets(system);
  SNCatalog catalog = ComputeSN(network, system);
  CaseDecision decision = DispatchCase(msets, catalog);
  CoefficientTuple tuple =
      ApplyRelabeling(BaseTuple(decision.label), decision.relabeling);
  VerificationReport report = VerifySolution(network, system, tuple);

  std::vector<std::string> diagnostics;
  const std::vector<IndexPairSet> superset = CaseSuperset(decision.label);
  if (!superset.empty()) {
    for (const SNEntry& entry :
         RelabelCatalog(catalog, decision.relabeling).entries) {
      if (!std::binary_search(superset.begin(), superset.end(), entry.pairs)) {
        diagnostics.push_back("S_N entry " + FormatPairSet(entry.pairs) +
                              " lies outside the superset of case " +
                              std::string(CaseLabelName(decision.label)));
      }
    }
  }

  SolveResult result{std::move(network), std::move(system), std::move(msets),
                     std::move(catalog), decision, std::move(tuple),
                     std::move(report), std::move(diagnostics), false};
  if (result.report.verdict) return result;

  std::vector<std::string> failure = result.diagnostics;
  failure.push_back("case " + std::string(CaseLabelName(decision.label)) +
                    " tuple fails verification with maximum load " +
                    ToString(result.report.max_load));
  failure.push_back(DescribeMSets(result.msets));
  std::vector<int> perm{0, 1, 2};
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (CaseLabel label : kAllCaseLabels) {
    if (label == CaseLabel::k24) continue;  // Same tuple as 1.2.
    const CoefficientTuple base = BaseTuple(label);
    for (const auto& sources : perms) {
      for (const auto& sinks : perms) {
        Relabeling relabeling{sources, sinks};
        CoefficientTuple candidate = ApplyRelabeling(base, relabeling);
        VerificationReport candidate_report =
            VerifySolution(result.network, result.system, candidate);
        if (!candidate_report.verdict) continue;
        result.diagnostics = std::move(failure);
        result.diagnostics.push_back(
            "dispatch error: fallback solved with case " +
            std::string(CaseLabelName(label)));
        result.decision.label = label;
        result.decision.relabeling = relabeling;
        result.tuple = std::move(candidate);
        result.report = std::move(candidate_report);
        result.used_fallback = true;
        return result;
      }
    }
  }
  throw TheoremViolation("no case tuple solves the stable network",
                         std::move(failure));
}

}  // namespace kpair
