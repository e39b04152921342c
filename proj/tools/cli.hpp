// Copyright 2026 The coprimality Authors
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

#ifndef COPRIMALITY_TOOLS_CLI_HPP_
#define COPRIMALITY_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coprimality/graph.hpp"

namespace coprimality::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotBracketed = 3;

// Overrides the built-in default prime limit.
inline constexpr const char* kPrimeLimitEnv = "COPRIMALITY_PRIME_LIMIT";

// A readable file in the text graph format, or one of the built-in names
// c<n> (cycle), path<n>, k<n> (complete), empty<n>, example2.
CoprimalityGraph load_graph(const std::string& spec);

// Runs one command line (without the program name).  Results go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coprimality::cli

#endif  // COPRIMALITY_TOOLS_CLI_HPP_
