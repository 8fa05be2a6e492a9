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

#ifndef STABILAB_TOPOLOGY_HH_
#define STABILAB_TOPOLOGY_HH_

#include <cstdint>
#include <utility>
#include <vector>

namespace stabilab {

using ProcessId = std::uint32_t;

/// Undirected communication graph over processes 0..n-1.
///
/// Each process sees its neighbours through local indexes 0..deg-1 only; the
/// order of a neighbour list IS the local indexing. Protocols must never
/// branch on global identities, so two topologies that differ only in the
/// identity labels (with matching list orders) behave identically.
///
/// Rings additionally carry an orientation: pred(p) is the ring predecessor
/// whose state p reads.
class Topology {
 public:
  /// Oriented ring over 0..n-1 with pred(p) = p-1 mod n. Requires n >= 3.
  static Topology ring(std::uint32_t n);

  /// Tree from an undirected edge list over 0..n-1 where n = max id + 1.
  /// Neighbour lists are sorted by identity. Rejects anything that is not a
  /// connected acyclic graph covering all of 0..n-1.
  static Topology tree(const std::vector<std::pair<ProcessId, ProcessId>>& edges);

  /// General constructor from explicit neighbour lists. List order is kept
  /// verbatim, which pins the local indexing. An optional pred vector (one
  /// entry per process, each a neighbour) marks an oriented ring.
  static Topology from_adjacency(std::vector<std::vector<ProcessId>> neighbors,
                                 std::vector<ProcessId> pred = {});

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(adj_.size()); }

  const std::vector<ProcessId>& neighbors(ProcessId p) const;

  std::uint32_t degree(ProcessId p) const;

  /// Position of q in p's neighbour list. Raises TopologyError if absent.
  std::uint32_t local_index(ProcessId p, ProcessId q) const;

  bool has_pred() const { return !pred_.empty(); }

  /// Ring predecessor of p. Requires has_pred().
  ProcessId pred(ProcessId p) const;

  /// Ring successor of p (the q with pred(q) = p). Requires has_pred().
  ProcessId succ(ProcessId p) const;

  /// Connected and acyclic.
  bool is_tree() const;

  bool connected() const;

  std::uint64_t edge_count() const;

 private:
  Topology() = default;

  std::vector<std::vector<ProcessId>> adj_;
  std::vector<ProcessId> pred_;
  std::vector<ProcessId> succ_;
};

/// The centre processes of a tree: nodes of minimum eccentricity, in
/// ascending id order. Every tree has one centre or two adjacent centres.
/// Raises TopologyError when the graph is not a tree.
std::vector<ProcessId> centers(const Topology& topo);

}  // namespace stabilab

#endif  // STABILAB_TOPOLOGY_HH_
