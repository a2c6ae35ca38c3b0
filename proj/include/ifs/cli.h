// Copyright 2026 The ifsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IFS_CLI_H
#define IFS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace ifs {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_THRESHOLD_FAILURE = 1;
constexpr int EXIT_USAGE = 2;

/// Entry point for the ifsim tool. Subcommands: compile, simulate, verify,
/// trotter-sweep. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string &path, const std::string &contents);

}  // namespace ifs

#endif
