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

#ifndef STABILAB_PROTOCOL_HH_
#define STABILAB_PROTOCOL_HH_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stabilab/configuration.hh"
#include "stabilab/random.hh"
#include "stabilab/topology.hh"

namespace stabilab {

using ActionId = std::uint32_t;

/// A guarded-action protocol bound to one topology.
///
/// Guards may read the process's own state and its neighbours' states;
/// statements write the process's own state only. Both see neighbours through
/// local indexes, never through identities. A deterministic protocol must not
/// touch the random source passed to its statement evaluator (callers may
/// pass a poisoned source to enforce this).
struct ProtocolDef {
  std::string name;
  std::vector<std::string> action_labels;
  bool is_probabilistic = false;

  /// Per-process domain sizes; local states range over 0..domains[p]-1.
  std::vector<std::uint32_t> domains;

  /// guard(topo, cfg, p, a): is action a enabled at p?
  std::function<bool(const Topology&, const Configuration&, ProcessId, ActionId)>
      guard;

  /// statement(topo, cfg, p, a, rnd): the new local state of p.
  std::function<LocalState(const Topology&, const Configuration&, ProcessId,
                           ActionId, RandomSource&)>
      statement;

  /// outcomes(topo, cfg, p, a): all (state, probability) results of the
  /// statement, probabilities summing to 1. Singleton for deterministic
  /// protocols.
  std::function<std::vector<std::pair<LocalState, double>>(
      const Topology&, const Configuration&, ProcessId, ActionId)>
      outcomes;

  /// Human-readable text for one local state of process p.
  std::function<std::string(const Topology&, ProcessId, LocalState)> format_state;
};

/// Builds a singleton outcomes evaluator from a deterministic statement.
std::function<std::vector<std::pair<LocalState, double>>(
    const Topology&, const Configuration&, ProcessId, ActionId)>
deterministic_outcomes(const ProtocolDef& proto);

/// One atomic step: a set of processes that fire simultaneously, each with
/// its enabled action. Pairs are kept sorted by process id and duplicate-free.
struct Activation {
  std::vector<std::pair<ProcessId, ActionId>> moves;

  std::vector<ProcessId> processes() const;

  friend bool operator==(const Activation&, const Activation&) = default;
};

/// Raises InvalidInputError unless cfg matches the protocol's domains.
void validate_configuration(const ProtocolDef& proto, const Configuration& cfg);

/// All actions of p whose guards hold in cfg, ascending.
std::vector<ActionId> enabled_actions(const ProtocolDef& proto,
                                      const Topology& topo,
                                      const Configuration& cfg, ProcessId p);

/// All processes with at least one enabled action, ascending.
std::vector<ProcessId> enabled_processes(const ProtocolDef& proto,
                                         const Topology& topo,
                                         const Configuration& cfg);

/// The single enabled action of p. Raises AmbiguityError when two or more
/// actions are enabled, InvalidInputError when none is.
ActionId sole_enabled_action(const ProtocolDef& proto, const Topology& topo,
                             const Configuration& cfg, ProcessId p);

/// Builds the activation firing exactly the given processes, each with its
/// sole enabled action.
Activation activation_for(const ProtocolDef& proto, const Topology& topo,
                          const Configuration& cfg,
                          const std::vector<ProcessId>& processes);

/// Executes an activation atomically: every statement reads the pre-step
/// configuration, then all writes land at once. Raises InvalidInputError when
/// the activation names a disabled action or repeats a process. Statements
/// consume rnd in ascending process order.
Configuration apply(const ProtocolDef& proto, const Topology& topo,
                    const Configuration& cfg, const Activation& activation,
                    RandomSource& rnd);

/// apply for deterministic protocols; any randomness consumption raises.
Configuration apply(const ProtocolDef& proto, const Topology& topo,
                    const Configuration& cfg, const Activation& activation);

/// The three step granularities a daemon can use.
enum class SchedulerClass {
  kCentral,      // exactly one enabled process fires
  kDistributed,  // any nonempty subset of enabled processes fires
  kSynchronous,  // every enabled process fires
};

const char* to_string(SchedulerClass c);

/// All successor configurations of cfg under the given step granularity,
/// sorted and duplicate-free. Deterministic protocols only. The distributed
/// class enumerates every nonempty subset of the enabled set, so the enabled
/// set is capped (default 20, raises ResourceLimitError beyond it).
std::vector<Configuration> successors(const ProtocolDef& proto,
                                      const Topology& topo,
                                      const Configuration& cfg,
                                      SchedulerClass cls,
                                      std::uint32_t enabled_cap = 20);

/// Like successors, but each activated process takes each of its statement
/// outcomes: the union over subset choices and outcome combinations. Works
/// for probabilistic protocols; deterministic ones give the same result as
/// successors.
std::vector<Configuration> outcome_successors(const ProtocolDef& proto,
                                              const Topology& topo,
                                              const Configuration& cfg,
                                              SchedulerClass cls,
                                              std::uint32_t enabled_cap = 20);

}  // namespace stabilab

#endif  // STABILAB_PROTOCOL_HH_
