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

#ifndef KPAIR_SOLUTION_IO_H_
#define KPAIR_SOLUTION_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kpair/coefficients.h"

namespace kpair {

// Solution JSON:
//   {"k": K,
//    "coefficients": [[["p/q", ...], ...], ...],   // c[l][i][j]
//    "case": "2.2a",                                // optional
//    "relabeling": {"sources": [..], "sinks": [..]}}  // optional, 1-based
struct Solution {
  CoefficientTuple coefficients{1};
  std::optional<std::string> case_label;
  std::optional<Relabeling> relabeling;
};

std::string SerializeSolution(const Solution& solution);
// Throws kParse on malformed documents.
Solution ParseSolution(std::string_view text);
Solution LoadSolution(const std::filesystem::path& path);

}  // namespace kpair

#endif  // KPAIR_SOLUTION_IO_H_
