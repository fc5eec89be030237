// Copyright 2026 The lexboot Authors.
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

#ifndef LEXBOOT_TOOLS_CLI_H_
#define LEXBOOT_TOOLS_CLI_H_

#include <string>
#include <vector>

namespace lexboot {

enum class CommandStatus { kOk = 0, kDataError = 1, kUsageError = 2 };

struct CommandOutcome {
  CommandStatus status = CommandStatus::kOk;
  std::string rendered;  // standard output
  std::string reason;    // one line, set when status != kOk

  int exit_code() const { return static_cast<int>(status); }
};

// Runs one lexboot command line. `args` excludes the program name.
// Subcommands: run, query, explain, dump, stats.
CommandOutcome RunCommand(const std::vector<std::string> &args);

}  // namespace lexboot

#endif  // LEXBOOT_TOOLS_CLI_H_
