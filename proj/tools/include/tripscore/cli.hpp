// Copyright 2026 The tripscore Authors
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


#ifndef TRIPSCORE__CLI_HPP_
#define TRIPSCORE__CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tripscore
{

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // runtime failure, e.g. judge down
inline constexpr int kExitInput = 2;    // bad flags or unreadable / invalid input

/// Runs the tool with `args` (program name excluded). Machine output goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace tripscore

#endif  // TRIPSCORE__CLI_HPP_
