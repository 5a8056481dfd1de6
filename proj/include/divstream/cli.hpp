// Copyright 2026 The divstream Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divstream::cli {

// Exit codes, kept stable so the tool scripts as a filter.
inline constexpr int kExitDivisible = 0;  // also: success for non-test commands
inline constexpr int kExitNotDivisible = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupportedDivisor = 3;

// Dispatches one invocation. `args` excludes the program name. Reads numeral
// input from `in` when --stdin is given; writes results to `out` and
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace divstream::cli
