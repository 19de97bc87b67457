// Copyright 2026 The qtele Authors
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


// Subcommands of the qtele tool. Exit codes: 0 success, 2 invalid input,
// 3 a requested or implied check failed.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtele::cli {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCheck = 3;

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtele::cli
