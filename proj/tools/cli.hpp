// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULRICH_TOOLS_CLI_HPP
#define ULRICH_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ulrich::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 bad usage or an input
/// outside the theorem's range.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ulrich::cli

#endif  // ULRICH_TOOLS_CLI_HPP
