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

#include "kpair/errors.h"

#include <utility>

namespace kpair {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUnknownK: return "unknown-k";
    case ErrorCode::kDuplicateArcId: return "duplicate-arc-id";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kSourceHasInArcs: return "source-has-in-arcs";
    case ErrorCode::kSinkHasOutArcs: return "sink-has-out-arcs";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kUnknownVertex: return "unknown-vertex";
    case ErrorCode::kUnknownArc: return "unknown-arc";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kNotStronglyReachable: return "not-strongly-reachable";
    case ErrorCode::kNotStable: return "not-stable";
    case ErrorCode::kSingularCycle: return "singular-cycle";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kBudgetExhausted: return "budget-exhausted";
    case ErrorCode::kTheoremViolation: return "theorem-violation";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string DescribeCycle(const std::vector<std::string>& witness) {
  std::string text = "cycle detected: ";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) text += " -> ";
    text += witness[i];
  }
  return text;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> witness)
    : Error(ErrorCode::kCycle, DescribeCycle(witness)),
      witness_(std::move(witness)) {}

TheoremViolation::TheoremViolation(const std::string& what,
                                   std::vector<std::string> diagnostics)
    : Error(ErrorCode::kTheoremViolation, what),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace kpair
