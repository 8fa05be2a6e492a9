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

#ifndef STABILAB_ANALYSIS_HH_
#define STABILAB_ANALYSIS_HH_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "stabilab/configuration.hh"
#include "stabilab/fairness.hh"
#include "stabilab/protocol.hh"

namespace stabilab {

using Predicate = std::function<bool(const Topology&, const Configuration&)>;
using Observable = std::function<bool(const Topology&, const Configuration&,
                                      const Configuration&)>;

/// Caps for exhaustive enumeration. edge_cap bounds both the configuration
/// count and the total number of stored transitions.
struct EnumerationLimits {
  std::uint64_t edge_cap = 10'000'000;
  std::uint32_t enabled_cap = 20;
};

/// The full transition graph of a deterministic protocol under one step
/// granularity. Configuration indexes follow ConfigurationSpace.
struct TransitionSystem {
  SchedulerClass scheduler_class;
  ConfigurationSpace space;
  /// edges[i]: successor indexes of configuration i, ascending, unique.
  std::vector<std::vector<std::uint64_t>> edges;
  std::uint64_t edge_count = 0;
};

/// Enumerates every configuration and its successors. Raises
/// ResourceLimitError when the space or the edge total exceeds the caps,
/// InvalidInputError for probabilistic protocols.
TransitionSystem enumerate_system(const ProtocolDef& proto, const Topology& topo,
                                  SchedulerClass cls,
                                  const EnumerationLimits& limits = {});

/// How many configurations of the system satisfy pred.
std::uint64_t count_satisfying(const TransitionSystem& ts, const Topology& topo,
                               const Predicate& pred);

/// Configurations with no successor, ascending.
std::vector<std::uint64_t> terminal_configurations(const TransitionSystem& ts);

/// Verdict of the possible-convergence check.
struct ConvergenceVerdict {
  bool holds = false;
  std::uint64_t legitimate_count = 0;
  /// Configurations from which no path reaches the legitimate set; at most
  /// kStuckListCap indexes are kept, ascending.
  std::vector<std::uint64_t> stuck;
  std::uint64_t stuck_total = 0;
};

inline constexpr std::uint32_t kStuckListCap = 32;

/// Does every configuration have SOME path into the legitimate set?
/// Computed by backward reachability from the legitimate configurations.
/// Raises InvalidInputError when no configuration is legitimate.
ConvergenceVerdict check_possible_convergence(const TransitionSystem& ts,
                                              const Topology& topo,
                                              const Predicate& legitimate);

/// Verdict of the closure check.
struct ClosureVerdict {
  bool holds = false;
  /// First violating transition (source, target) in index order, if any.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;
};

/// Is the legitimate set closed under every transition, and does every
/// transition out of a legitimate configuration satisfy the observable?
/// Pass a null observable to check set membership only.
ClosureVerdict check_closure(const TransitionSystem& ts, const Topology& topo,
                             const Predicate& legitimate,
                             const Observable& observable);

/// Searches synchronous orbits for a cycle that never enters the legitimate
/// set. Start configurations are tried in index order and each orbit is
/// followed to a legitimate configuration, a terminal configuration, an
/// already-resolved configuration, or a repeat; the first repeat found yields
/// the lasso. Returns nullopt when every orbit settles.
std::optional<Lasso> find_synchronous_lasso(const ProtocolDef& proto,
                                            const Topology& topo,
                                            const Predicate& legitimate,
                                            const EnumerationLimits& limits = {});

/// Verdict of lasso verification (structure is validated by exception).
struct LassoVerdict {
  bool avoids_legitimate = false;  // no cycle configuration is legitimate
  bool fair = false;               // the checked fairness notion holds
  FairnessKind fairness = FairnessKind::kStrong;
};

/// Replays a lasso step by step: every activation must be enabled where it
/// fires and produce the next configuration, and the cycle must close.
/// Structural failures raise InvalidLassoError with the offending step index
/// (prefix first, then cycle). On success, reports whether the cycle avoids
/// the legitimate set and whether it satisfies the fairness notion.
LassoVerdict verify_lasso(const Lasso& lasso, const ProtocolDef& proto,
                          const Topology& topo, const Predicate& legitimate,
                          FairnessKind fairness);

/// Builds the endless two-token chase on an oriented ring: starting from the
/// smallest counter assignment whose tokens sit exactly at first and second,
/// the schedule alternates between the two tokens, always firing the current
/// holder of the token whose turn it is. Returns the resulting lasso, or
/// nullopt when no two-token configuration exists at those positions or the
/// tokens collide during the walk.
std::optional<Lasso> alternating_token_lasso(const Topology& topo,
                                             ProcessId first, ProcessId second);

/// Verdict of the mirrored-chain symmetry check.
struct SymmetryVerdict {
  bool closed = false;   // the symmetric class maps into itself
  bool lc_free = false;  // no configuration in the class is legitimate
  /// First violating step (member, non-member successor) if not closed,
  /// stated over the mirrored topology below.
  std::optional<std::pair<Configuration, Configuration>> witness;
  /// The re-indexed chain the check ran on: inner processes list their outer
  /// neighbour first, so mirrored processes see identical local views.
  Topology mirrored;
};

/// Symmetry argument on a 4-process chain: processes are paired with their
/// mirror images (ends together, middles together) and the class X of
/// configurations where paired processes hold identical local states is
/// checked to be closed under synchronous steps, using the protocol built by
/// `factory` on the mirrored re-indexing. Since mirrored processes see
/// identical neighbourhoods, any local-index protocol keeps X closed; an
/// execution trapped in X can then never reach a single-leader configuration
/// because X is leader-symmetric. Raises TopologyError unless topo is a
/// 4-process chain.
SymmetryVerdict check_symmetry_closure(
    const Topology& topo,
    const std::function<ProtocolDef(const Topology&)>& factory);

/// Same, with the leader election protocol.
SymmetryVerdict check_symmetry_closure(const Topology& topo);

}  // namespace stabilab

#endif  // STABILAB_ANALYSIS_HH_
