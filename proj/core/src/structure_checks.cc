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

#include "kpair/structure_checks.h"

#include <array>

#include "kpair/topology3.h"

namespace kpair {
namespace {

std::string PathName(int source, int sink) {
  return "P(" + std::to_string(source + 1) + "," + std::to_string(sink + 1) +
         ")";
}

}  // namespace

std::vector<std::string> CheckNoDoubleVisit(const PathSystem& system) {
  std::vector<std::string> violations;
  for (int a = 0; a < system.k(); ++a) {
    for (int b = a + 1; b < system.k(); ++b) {
      SinkPairSegments pair = AnalyzeSinkPair(system, a, b);
      for (int side = 0; side < 2; ++side) {
        const auto& lists = side == 0 ? pair.red : pair.green;
        const int own = side == 0 ? a : b;
        const int other = side == 0 ? b : a;
        for (int x = 0; x < static_cast<int>(lists.size()); ++x) {
          for (size_t n = 0; n + 1 < lists[x].size(); ++n) {
            if (lists[x][n].partner == lists[x][n + 1].partner) {
              violations.push_back(
                  PathName(x, own) + " meets " +
                  PathName(lists[x][n].partner, other) +
                  " in consecutive segments " + std::to_string(n + 1) +
                  " and " + std::to_string(n + 2));
            }
          }
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> CheckSingleSegmentPairs(const PathSystem& system) {
  std::vector<std::string> violations;
  const int k = system.k();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      SinkPairSegments pair = AnalyzeSinkPair(system, a, b);
      const std::string where =
          "sinks " + std::to_string(a + 1) + "," + std::to_string(b + 1);
      bool found = false;
      for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
          if (x != y && pair.RedEll(x) == 1 && pair.GreenEll(y) == 1) {
            found = true;
          }
        }
      }
      if (!found) {
        violations.push_back(where +
                             ": no distinct single-segment red/green pair");
      }
      for (int x = 0; x < k; ++x) {
        bool red_partner = false;
        bool green_partner = false;
        for (int y = 0; y < k; ++y) {
          if (y == x) continue;
          red_partner = red_partner || pair.GreenEll(y) == 1;
          green_partner = green_partner || pair.RedEll(y) == 1;
        }
        if (pair.RedEll(x) == 1 && !red_partner) {
          violations.push_back(where + ": red path " + std::to_string(x + 1) +
                               " has one segment but no other green path does");
        }
        if (pair.GreenEll(x) == 1 && !green_partner) {
          violations.push_back(where + ": green path " +
                               std::to_string(x + 1) +
                               " has one segment but no other red path does");
        }
      }
    }
  }
  return violations;
}

std::vector<std::string> CheckNonDegenerateAttachment(
    const PathSystem& system) {
  std::vector<std::string> violations;
  for (int a = 0; a < system.k(); ++a) {
    for (int b = a + 1; b < system.k(); ++b) {
      SinkPairSegments pair = AnalyzeSinkPair(system, a, b);
      std::vector<int> red;
      std::vector<int> green;
      for (int x = 0; x < system.k(); ++x) {
        if (pair.RedEll(x) == 1) red.push_back(x);
        if (pair.GreenEll(x) == 1) green.push_back(x);
      }
      if (red.size() != 1 || green.size() != 1 || red[0] == green[0]) continue;
      const int i = red[0];
      const int l = green[0];
      if (pair.GreenEll(i) >= 2 && pair.RedEll(l) >= 2 &&
          pair.green[i][1].segment == pair.red[l][1].segment) {
        violations.push_back("sinks " + std::to_string(a + 1) + "," +
                             std::to_string(b + 1) + ": green path " +
                             std::to_string(i + 1) + " and red path " +
                             std::to_string(l + 1) +
                             " share their second segment");
      }
    }
  }
  return violations;
}

std::vector<std::string> CheckSharedSourceExclusion(const PathSystem& system,
                                                    const SNCatalog& catalog) {
  std::vector<std::string> violations;
  if (system.k() != 3) return violations;
  const MSets m = ComputeMSetsUnchecked(system);
  for (int h = 0; h < 3; ++h) {
    bool hypothesis = true;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        hypothesis = hypothesis &&
                     (Contains(m.get(a, b), h) || Contains(m.get(b, a), h));
      }
    }
    if (!hypothesis) continue;
    int present = 0;
    std::string listed;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        IndexPairSet s = MakePairSet({{h, a}, {h, b}});
        if (catalog.Contains(s)) {
          ++present;
          listed += " " + FormatPairSet(s);
        }
      }
    }
    if (present > 1) {
      violations.push_back("source " + std::to_string(h + 1) +
                           ": S_N contains" + listed);
    }
  }
  return violations;
}

std::vector<std::string> CheckEntriesNeedCommonSegments(
    const PathSystem& system, const SNCatalog& catalog) {
  std::vector<std::string> violations;
  for (const SNEntry& entry : catalog.entries) {
    for (size_t x = 0; x < entry.pairs.size(); ++x) {
      for (size_t y = x + 1; y < entry.pairs.size(); ++y) {
        const auto [i1, j1] = entry.pairs[x];
        const auto [i2, j2] = entry.pairs[y];
        const std::array<Path, 2> paths{system.path(i1, j1),
                                        system.path(i2, j2)};
        if (CommonSegments(paths).empty()) {
          violations.push_back("entry " + FormatPairSet(entry.pairs) +
                               " pairs " + PathName(i1, j1) + " and " +
                               PathName(i2, j2) +
                               " without a common segment");
        }
      }
    }
  }
  return violations;
}

}  // namespace kpair
