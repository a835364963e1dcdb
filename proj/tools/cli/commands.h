// Copyright 2026 The Authors.
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

#ifndef WEYLRET_TOOLS_CLI_COMMANDS_H_
#define WEYLRET_TOOLS_CLI_COMMANDS_H_

#include <ostream>

namespace weylret::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNotAMatroid = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitPrecondition = 4;

// Entry point of the weylret tool. JSON goes to `out`, diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace weylret::cli

#endif  // WEYLRET_TOOLS_CLI_COMMANDS_H_
