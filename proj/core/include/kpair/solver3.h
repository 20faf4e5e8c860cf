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

#ifndef KPAIR_SOLVER3_H_
#define KPAIR_SOLVER3_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/coefficients.h"
#include "kpair/errors.h"
#include "kpair/network.h"
#include "kpair/stability.h"
#include "kpair/topology3.h"
#include "kpair/verification.h"

namespace kpair {

enum class CaseLabel { k11, k12, k13, k21, k22a, k22b, k23a, k23b, k24 };

inline constexpr std::array<CaseLabel, 9> kAllCaseLabels = {
    CaseLabel::k11,  CaseLabel::k12,  CaseLabel::k13,
    CaseLabel::k21,  CaseLabel::k22a, CaseLabel::k22b,
    CaseLabel::k23a, CaseLabel::k23b, CaseLabel::k24};

std::string_view CaseLabelName(CaseLabel label);
std::optional<CaseLabel> ParseCaseLabel(std::string_view name);

struct CaseDecision {
  CaseLabel label = CaseLabel::k11;
  // Source/sink indices playing the canonical roles 1, 2, 3.
  int i = 0;
  int j = 1;
  int l = 2;
  // Maps every original index to its canonical role.
  Relabeling relabeling = Relabeling::Identity(3);
};

// S_N with every index replaced by its role under `relabeling`.
SNCatalog RelabelCatalog(const SNCatalog& catalog,
                         const Relabeling& relabeling);

// Picks the construction for a stable 3-pair system from its m-sets; S_N
// separates the a/b variants. Case 1 needs distinct i, j, l with
// m(i,j) meeting {i,j} and m(i,l) meeting {i,l}; its subcases are tried in
// the order 1.1, 1.2, 1.3 over all ordered triples. Otherwise some
// m(i,j) = {l} starts a rotation-invariant chain and the remaining
// memberships select 2.1, 2.2, 2.3 or 2.4, first match over the three
// rotations. Throws TheoremViolation when nothing matches.
CaseDecision DispatchCase(const MSets& msets, const SNCatalog& catalog);

// The coefficient tuple of a case in canonical roles.
CoefficientTuple BaseTuple(CaseLabel label);

// The 2-pair tuple used for commodities 2 and 3 in case 1.1.
CoefficientTuple TwoPairTuple();

// The index-pair sets the case analysis allows in S_N, in canonical roles.
// Empty for cases whose argument does not enumerate them.
std::vector<IndexPairSet> CaseSuperset(CaseLabel label);

// out[l][i][j] = in[sinks[l]][sources[i]][sinks[j]]. Throws
// kInvalidArgument for non-permutations.
CoefficientTuple ApplyRelabeling(const CoefficientTuple& tuple,
                                 const Relabeling& relabeling);

// Raised by Solve for networks that are not stable.
class NotStableError : public Error {
 public:
  explicit NotStableError(StabilityVerdict verdict);

  const StabilityVerdict& verdict() const { return verdict_; }

 private:
  StabilityVerdict verdict_;
};

struct SolveResult {
  Network network;  // The normalized input.
  PathSystem system;
  MSets msets;
  SNCatalog catalog;
  CaseDecision decision;
  CoefficientTuple tuple;
  VerificationReport report;
  // Findings that do not stop the solver: S_N entries outside the case
  // superset, or a fallback that rescued a failed dispatch.
  std::vector<std::string> diagnostics;
  bool used_fallback = false;
};

// Normalizes, checks stability, dispatches, relabels and verifies. When the
// dispatched tuple fails verification, every tuple under every relabeling
// is tried before TheoremViolation is raised.
SolveResult Solve(const Network& network);

}  // namespace kpair

#endif  // KPAIR_SOLVER3_H_
