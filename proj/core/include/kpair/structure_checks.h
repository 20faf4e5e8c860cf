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

#ifndef KPAIR_STRUCTURE_CHECKS_H_
#define KPAIR_STRUCTURE_CHECKS_H_

#include <string>
#include <vector>

#include "kpair/network.h"
#include "kpair/verification.h"

namespace kpair {

// Structural facts that every stable 3-pair path system satisfies. Each
// check returns one line per violation and an empty list when the property
// holds; they are meant for property runs and reports, not for control
// flow.

// No path meets one opposite-family path in two consecutive common
// segments.
std::vector<std::string> CheckNoDoubleVisit(const PathSystem& system);

// For every sink pair some red and some green path with distinct sources
// each have a single common segment, and a single-segment path of one color
// always comes with one of the other color from a different source.
std::vector<std::string> CheckSingleSegmentPairs(const PathSystem& system);

// In a non-degenerate pair with roles (i, j, l), the second segment of
// green path i differs from the second segment of red path l.
std::vector<std::string> CheckNonDegenerateAttachment(const PathSystem& system);

// If source h has a single-segment path in some m-set of every sink pair,
// at most one of the sets {(h,a),(h,b)} over sink pairs {a, b} occurs in
// S_N.
std::vector<std::string> CheckSharedSourceExclusion(const PathSystem& system,
                                                    const SNCatalog& catalog);

// Two paths without a common segment never appear together in an S_N
// entry.
std::vector<std::string> CheckEntriesNeedCommonSegments(
    const PathSystem& system, const SNCatalog& catalog);

}  // namespace kpair

#endif  // KPAIR_STRUCTURE_CHECKS_H_
