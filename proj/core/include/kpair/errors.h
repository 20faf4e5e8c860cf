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

#ifndef KPAIR_ERRORS_H_
#define KPAIR_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kpair {

enum class ErrorCode {
  kParse,
  kUnknownK,
  kDuplicateArcId,
  kIndexOutOfRange,
  kCycle,
  kSourceHasInArcs,
  kSinkHasOutArcs,
  kInvalidArgument,
  kUnknownVertex,
  kUnknownArc,
  kDimensionMismatch,
  kNotStronglyReachable,
  kNotStable,
  kSingularCycle,
  kBoundExceeded,
  kBudgetExhausted,
  kTheoremViolation,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above, so
// callers can map them onto exit codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by topological ordering. `witness` lists the vertex names of one
// directed cycle, first vertex repeated at the end.
class CycleError : public Error {
 public:
  CycleError(std::vector<std::string> witness);

  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

// A structural statement that should hold for stable 3-pair networks did not.
// The diagnostics are kept verbatim so that a failing network can be studied.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what,
                   std::vector<std::string> diagnostics = {});

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

}  // namespace kpair

#endif  // KPAIR_ERRORS_H_
