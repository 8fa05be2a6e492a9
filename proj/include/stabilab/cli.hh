/*
 * Copyright (c) 2026, the stabilab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef STABILAB_CLI_HH_
#define STABILAB_CLI_HH_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabilab/montecarlo.hh"
#include "stabilab/scheduler.hh"
#include "stabilab/textio.hh"

namespace stabilab {

enum class Command { kCheck, kLasso, kSimulate, kEstimate };

const char* to_string(Command c);

/// Everything one invocation does, decoded from the command line.
struct RunSpec {
  Command command = Command::kCheck;
  ProtocolFamily family = ProtocolFamily::kToken;
  bool gated = false;

  // Topology: at most one source; two-flag defaults to its two processes.
  std::optional<std::uint32_t> ring_n;
  std::optional<std::string> tree_edges;
  std::optional<std::string> topology_file;

  // Scheduling (simulate, estimate).
  std::optional<PolicyKind> policy;
  std::optional<std::string> script_text;
  std::optional<std::string> script_file;

  // Lasso search.
  bool two_token_init = false;

  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  std::uint64_t step_cap = kDefaultStepCap;
  std::uint64_t edge_cap = 10'000'000;
  std::optional<std::string> init_literal;
  unsigned threads = 0;

  std::optional<std::string> out_path;
  std::optional<std::string> csv_path;
};

/// Thrown by parse_args when the user asked for usage text.
struct HelpRequested {
  std::string text;
};

/// Decodes command-line words (without argv[0]). Raises InvalidInputError on
/// usage errors and HelpRequested for -h/--help.
RunSpec parse_args(const std::vector<std::string>& args);

/// Exit codes: 0 all verdicts as expected, 1 a checked property failed,
/// 2 usage or resource errors (raised, not returned).
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs one decoded invocation; writes the report to `out` (and to
/// spec.out_path if set). Returns kExitOk or kExitViolation; errors raise.
int execute(const RunSpec& spec, std::ostream& out);

/// Full entry point: parse, execute, map errors to exit codes and stderr.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace stabilab

#endif  // STABILAB_CLI_HH_
