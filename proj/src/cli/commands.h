// Copyright 2026 The dpcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPCOVER_CLI_COMMANDS_H_
#define DPCOVER_CLI_COMMANDS_H_

#include <string>
#include <vector>

#include "cli/config.h"
#include "cli/output.h"

namespace dpcover::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitData = 3,
  kExitNumerical = 4,
  kExitValidation = 5,
};

struct CommandResult {
  Artifacts artifacts;
  int exit_code = kExitSuccess;
  std::vector<std::string> notes;  // human-readable lines for stderr
};

// Whether the command consumes random numbers (and so needs a seed).
bool is_randomized(const RunConfig& config);

// Fills a missing seed for randomized commands and resolves per-command
// defaults in place, so that the echoed config pins the run completely.
void resolve_defaults(RunConfig& config, std::vector<std::string>& notes);

// Runs config.command and collects its artifacts, including config.json.
// Throws dpcover::Error on failure; nothing has been written at that point.
CommandResult run_command(RunConfig config);

CommandResult cmd_train(const RunConfig& config);
CommandResult cmd_neighbors(const RunConfig& config);
CommandResult cmd_validate(const RunConfig& config);
CommandResult cmd_sample(const RunConfig& config);
CommandResult cmd_scatter(const RunConfig& config);
CommandResult cmd_profile(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);

}  // namespace dpcover::cli

#endif  // DPCOVER_CLI_COMMANDS_H_
