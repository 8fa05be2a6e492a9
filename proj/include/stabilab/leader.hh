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

#ifndef STABILAB_LEADER_HH_
#define STABILAB_LEADER_HH_

#include <optional>
#include <vector>

#include "stabilab/protocol.hh"

namespace stabilab {

/// Leader election on an anonymous tree.
///
/// Each process keeps a parent pointer: either one of its neighbours (stored
/// as a local index) or none. State code 0 means no parent; code 1+i means
/// the neighbour at local index i. A process whose neighbours all point at it
/// drops its own pointer and considers itself the leader; a process whose
/// pointer ignores some non-child neighbour rotates the pointer; a leader
/// that sees a non-child neighbour adopts the first one in local order as its
/// parent. The only terminal configurations are those with exactly one
/// leader and every other parent path leading to it.
ProtocolDef leader_protocol(const Topology& topo);

/// Local state codes for the parent pointer.
constexpr LocalState kNoParent = 0;
inline LocalState parent_code(std::uint32_t local_index) {
  return local_index + 1;
}

/// The neighbour p points at, or nullopt for no parent.
std::optional<ProcessId> parent_of(const Topology& topo,
                                   const Configuration& cfg, ProcessId p);

/// Neighbours of p whose parent pointer names p, ascending.
std::vector<ProcessId> children_of(const Topology& topo,
                                   const Configuration& cfg, ProcessId p);

/// Processes with no parent, ascending.
std::vector<ProcessId> leaders(const Topology& topo, const Configuration& cfg);

/// Follows parent pointers from p until reaching a process with no parent or
/// a mutual pair (two processes pointing at each other); returns that final
/// process.
ProcessId parent_path_root(const Topology& topo, const Configuration& cfg,
                           ProcessId p);

/// Exactly one process has no parent and every parent path ends at it.
bool is_lc(const Topology& topo, const Configuration& cfg);

/// Step observable for closure checks: the leader set must not change.
bool leader_set_stable(const Topology& topo, const Configuration& before,
                       const Configuration& after);

}  // namespace stabilab

#endif  // STABILAB_LEADER_HH_
