// Copyright 2026 The leorelay Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LEORELAY_TOOLS_CLI_HPP_
#define LEORELAY_TOOLS_CLI_HPP_

#include <ostream>

namespace leorelay_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // bad flags, bad config, infeasible geometry
inline constexpr int kExitInvariant = 3;  // an emitted artifact failed its own checks

// Entry point shared by the executable and the tests. Artifacts go to `out`
// unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leorelay_cli

#endif  // LEORELAY_TOOLS_CLI_HPP_
