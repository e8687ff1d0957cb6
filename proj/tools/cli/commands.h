/*
 * Copyright 2026 The sumlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUMLAB_TOOLS_CLI_COMMANDS_H_
#define SUMLAB_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "cli/experiment.h"

namespace sumlab::cli {

// Executes the protocol once, prints the announced sum and counters, and
// writes the trace (config.out) and run report (config.report) if asked.
int CmdRun(const ExperimentConfig& config, std::ostream& out,
           std::ostream& err);

// Measured counters for every n in [n_min, n_max]; CSV goes to config.out.
int CmdComplexity(const ExperimentConfig& config, int n_min, int n_max,
                  std::ostream& out, std::ostream& err);

// Privacy matrix over coalition sizes 2..n-1; JSON goes to config.out.
// Returns kExitInvariant if the analyzer and the enumeration oracle disagree.
int CmdPrivacy(const ExperimentConfig& config, bool cross_check,
               std::ostream& out, std::ostream& err);

// Reloads a run report and trace and replays them.
int CmdReplay(const std::string& report_path, const std::string& trace_path,
              std::ostream& out, std::ostream& err);

// Full command line: subcommands run, complexity, privacy, replay; global
// flags --modulus, --seed, --out, --config.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace sumlab::cli

#endif  // SUMLAB_TOOLS_CLI_COMMANDS_H_
