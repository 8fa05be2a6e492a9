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

#ifndef STABILAB_SCHEDULER_HH_
#define STABILAB_SCHEDULER_HH_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabilab/random.hh"
#include "stabilab/topology.hh"

namespace stabilab {

enum class PolicyKind {
  kCentralRoundRobin,      // one process, cycling through ids
  kDistributedFull,        // every enabled process
  kSynchronous,            // every enabled process
  kRandomizedCentral,      // one enabled process, uniform
  kRandomizedDistributed,  // nonempty subset of enabled, uniform
  kScripted,               // fixed schedule, repeated cyclically
};

const char* to_string(PolicyKind k);

/// Which processes fire each step. Value type; pair with a Scheduler to run.
struct SchedulerPolicy {
  PolicyKind kind = PolicyKind::kSynchronous;

  /// For kScripted: one entry per step, cycled. Entries are nonempty,
  /// sorted, duplicate-free process sets.
  std::vector<std::vector<ProcessId>> script;

  static SchedulerPolicy central_round_robin();
  static SchedulerPolicy distributed_full();
  static SchedulerPolicy synchronous();
  static SchedulerPolicy randomized_central();
  static SchedulerPolicy randomized_distributed();
  static SchedulerPolicy scripted(std::vector<std::vector<ProcessId>> script);
};

/// One run's daemon: the policy plus the mutable selection state (the
/// round-robin cursor). Fresh instance per run keeps runs reproducible.
class Scheduler {
 public:
  explicit Scheduler(SchedulerPolicy policy);

  const SchedulerPolicy& policy() const { return policy_; }

  /// Picks the processes to fire this step. `enabled` must be nonempty and
  /// ascending; the result is a nonempty ascending subset of it. Only the
  /// randomized kinds consume rnd. step_index addresses the script entry for
  /// kScripted; a scripted entry disjoint from `enabled` raises
  /// ScriptStallError.
  std::vector<ProcessId> select(const std::vector<ProcessId>& enabled,
                                RandomSource& rnd, std::uint64_t step_index);

 private:
  SchedulerPolicy policy_;
  std::optional<ProcessId> last_chosen_;  // central round robin cursor
};

/// Parses a schedule: entries separated by ';', process ids within an entry
/// separated by ','. Whitespace is ignored.
std::vector<std::vector<ProcessId>> parse_script(const std::string& text);

/// Reads a schedule file: one entry per line, ids separated by ','.
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<ProcessId>> parse_script_stream(std::istream& in);

/// Raises InvalidInputError when an entry names a process outside the
/// topology.
void validate_script(const std::vector<std::vector<ProcessId>>& script,
                     const Topology& topo);

}  // namespace stabilab

#endif  // STABILAB_SCHEDULER_HH_
