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

#include "stabilab/topology.hh"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "stabilab/errors.hh"

namespace stabilab {

namespace {

void check_process(const std::vector<std::vector<ProcessId>>& adj, ProcessId p) {
  if (p >= adj.size()) {
    throw TopologyError("process id " + std::to_string(p) + " out of range");
  }
}

}  // namespace

Topology Topology::ring(std::uint32_t n) {
  if (n < 3) {
    throw TopologyError("ring requires at least 3 processes");
  }
  std::vector<std::vector<ProcessId>> adj(n);
  std::vector<ProcessId> pred(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    const ProcessId prev = (p + n - 1) % n;
    const ProcessId next = (p + 1) % n;
    adj[p] = {prev, next};
    pred[p] = prev;
  }
  return from_adjacency(std::move(adj), std::move(pred));
}

Topology Topology::tree(const std::vector<std::pair<ProcessId, ProcessId>>& edges) {
  if (edges.empty()) {
    throw TopologyError("tree requires at least one edge");
  }
  ProcessId max_id = 0;
  for (const auto& [a, b] : edges) {
    max_id = std::max({max_id, a, b});
  }
  const std::uint32_t n = max_id + 1;
  if (edges.size() != n - 1) {
    throw TopologyError("tree over " + std::to_string(n) + " processes needs " +
                        std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
  }
  std::vector<std::set<ProcessId>> nb(n);
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw TopologyError("self loop at process " + std::to_string(a));
    }
    if (!nb[a].insert(b).second) {
      throw TopologyError("duplicate edge " + std::to_string(a) + "-" +
                          std::to_string(b));
    }
    nb[b].insert(a);
  }
  std::vector<std::vector<ProcessId>> adj(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    adj[p].assign(nb[p].begin(), nb[p].end());
  }
  Topology t = from_adjacency(std::move(adj));
  if (!t.connected()) {
    throw TopologyError("edge list does not form a connected tree");
  }
  return t;
}

Topology Topology::from_adjacency(std::vector<std::vector<ProcessId>> neighbors,
                                  std::vector<ProcessId> pred) {
  const std::size_t n = neighbors.size();
  if (n == 0) {
    throw TopologyError("empty topology");
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::set<ProcessId> seen;
    for (ProcessId q : neighbors[p]) {
      check_process(neighbors, q);
      if (q == static_cast<ProcessId>(p)) {
        throw TopologyError("self loop at process " + std::to_string(p));
      }
      if (!seen.insert(q).second) {
        throw TopologyError("duplicate neighbour " + std::to_string(q) +
                            " at process " + std::to_string(p));
      }
      const auto& back = neighbors[q];
      if (std::find(back.begin(), back.end(), static_cast<ProcessId>(p)) ==
          back.end()) {
        throw TopologyError("edge " + std::to_string(p) + "-" +
                            std::to_string(q) + " is not symmetric");
      }
    }
  }
  Topology t;
  t.adj_ = std::move(neighbors);
  if (!pred.empty()) {
    if (pred.size() != n) {
      throw TopologyError("pred vector size does not match process count");
    }
    t.succ_.assign(n, 0);
    std::vector<bool> hit(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      const ProcessId q = pred[p];
      check_process(t.adj_, q);
      const auto& nb = t.adj_[p];
      if (std::find(nb.begin(), nb.end(), q) == nb.end()) {
        throw TopologyError("pred of " + std::to_string(p) +
                            " is not a neighbour");
      }
      if (hit[q]) {
        throw TopologyError("pred map is not a bijection");
      }
      hit[q] = true;
      t.succ_[q] = static_cast<ProcessId>(p);
    }
    t.pred_ = std::move(pred);
  }
  return t;
}

const std::vector<ProcessId>& Topology::neighbors(ProcessId p) const {
  check_process(adj_, p);
  return adj_[p];
}

std::uint32_t Topology::degree(ProcessId p) const {
  return static_cast<std::uint32_t>(neighbors(p).size());
}

std::uint32_t Topology::local_index(ProcessId p, ProcessId q) const {
  const auto& nb = neighbors(p);
  const auto it = std::find(nb.begin(), nb.end(), q);
  if (it == nb.end()) {
    throw TopologyError(std::to_string(q) + " is not a neighbour of " +
                        std::to_string(p));
  }
  return static_cast<std::uint32_t>(it - nb.begin());
}

ProcessId Topology::pred(ProcessId p) const {
  check_process(adj_, p);
  if (pred_.empty()) {
    throw TopologyError("topology carries no ring orientation");
  }
  return pred_[p];
}

ProcessId Topology::succ(ProcessId p) const {
  check_process(adj_, p);
  if (succ_.empty()) {
    throw TopologyError("topology carries no ring orientation");
  }
  return succ_[p];
}

bool Topology::connected() const {
  std::vector<bool> seen(adj_.size(), false);
  std::queue<ProcessId> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 0;
  while (!q.empty()) {
    const ProcessId p = q.front();
    q.pop();
    ++count;
    for (ProcessId r : adj_[p]) {
      if (!seen[r]) {
        seen[r] = true;
        q.push(r);
      }
    }
  }
  return count == adj_.size();
}

std::uint64_t Topology::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& nb : adj_) {
    twice += nb.size();
  }
  return twice / 2;
}

bool Topology::is_tree() const {
  return connected() && edge_count() == adj_.size() - 1;
}

std::vector<ProcessId> centers(const Topology& topo) {
  if (!topo.is_tree()) {
    throw TopologyError("centres are defined for trees only");
  }
  const std::uint32_t n = topo.node_count();
  std::vector<std::uint32_t> ecc(n, 0);
  for (ProcessId s = 0; s < n; ++s) {
    std::vector<std::uint32_t> dist(n, UINT32_MAX);
    std::queue<ProcessId> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      const ProcessId p = q.front();
      q.pop();
      ecc[s] = std::max(ecc[s], dist[p]);
      for (ProcessId r : topo.neighbors(p)) {
        if (dist[r] == UINT32_MAX) {
          dist[r] = dist[p] + 1;
          q.push(r);
        }
      }
    }
  }
  const std::uint32_t radius = *std::min_element(ecc.begin(), ecc.end());
  std::vector<ProcessId> out;
  for (ProcessId p = 0; p < n; ++p) {
    if (ecc[p] == radius) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace stabilab
