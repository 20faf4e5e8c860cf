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


#ifndef KPAIR_TOOLS_CLI_H_
#define KPAIR_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace kpair::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // Unstable, infeasible, ...
inline constexpr int kExitUsage = 2;     // Usage, parse and input errors.
inline constexpr int kExitInternal = 3;  // Internal or theorem violations.

// Runs one command. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kpair::cli

#endif  // KPAIR_TOOLS_CLI_H_
