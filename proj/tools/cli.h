// Copyright 2026 The Graphspace Authors
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

// The graphspace command line: sample, expect, transfer, measure, wht and
// pd-check. Reports are JSON on stdout, bulk data goes to files, and every
// report carries a run manifest.
//
// Exit codes: 0 success, 1 a statistical or positivity check failed,
// 2 usage or domain error.

#ifndef GRAPHSPACE_TOOLS_CLI_H_
#define GRAPHSPACE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace graphspace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kVersion = "0.1.0";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace graphspace::cli

#endif  // GRAPHSPACE_TOOLS_CLI_H_
