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

#include "stabilab/leader.hh"

#include <string>

#include "stabilab/errors.hh"

namespace stabilab {

namespace {

enum Action : ActionId { kClaim = 0, kRotate = 1, kAdopt = 2 };

void require_tree(const Topology& topo) {
  if (!topo.is_tree()) {
    throw TopologyError("leader election requires a tree");
  }
}

// True when neighbour q points at p. Local-index arithmetic only.
bool points_at(const Topology& topo, const Configuration& cfg, ProcessId q,
               ProcessId p) {
  const LocalState s = cfg[q];
  return s != kNoParent && topo.neighbors(q)[s - 1] == p;
}

std::uint32_t child_count(const Topology& topo, const Configuration& cfg,
                          ProcessId p) {
  std::uint32_t c = 0;
  for (ProcessId q : topo.neighbors(p)) {
    if (points_at(topo, cfg, q, p)) {
      ++c;
    }
  }
  return c;
}

// A non-child neighbour other than the current parent exists.
bool has_outsider(const Topology& topo, const Configuration& cfg, ProcessId p) {
  const auto& nb = topo.neighbors(p);
  const std::uint32_t parent_idx = cfg[p] - 1;
  for (std::uint32_t i = 0; i < nb.size(); ++i) {
    if (i != parent_idx && !points_at(topo, cfg, nb[i], p)) {
      return true;
    }
  }
  return false;
}

}  // namespace

ProtocolDef leader_protocol(const Topology& topo) {
  require_tree(topo);
  const std::uint32_t n = topo.node_count();

  ProtocolDef proto;
  proto.name = "leader";
  proto.action_labels = {"claim", "rotate", "adopt"};
  proto.domains.resize(n);
  for (ProcessId p = 0; p < n; ++p) {
    proto.domains[p] = topo.degree(p) + 1;
  }
  proto.guard = [](const Topology& t, const Configuration& cfg, ProcessId p,
                   ActionId a) {
    const bool rooted = cfg[p] == kNoParent;
    switch (a) {
      case kClaim:
        return !rooted && child_count(t, cfg, p) == t.degree(p);
      case kRotate:
        return !rooted && has_outsider(t, cfg, p);
      case kAdopt:
        return rooted && child_count(t, cfg, p) < t.degree(p);
      default:
        return false;
    }
  };
  proto.statement = [](const Topology& t, const Configuration& cfg, ProcessId p,
                       ActionId a, RandomSource&) -> LocalState {
    switch (a) {
      case kClaim:
        return kNoParent;
      case kRotate:
        return parent_code((cfg[p] - 1 + 1) % t.degree(p));
      case kAdopt: {
        // First non-child in local order becomes the parent.
        const auto& nb = t.neighbors(p);
        for (std::uint32_t i = 0; i < nb.size(); ++i) {
          if (!points_at(t, cfg, nb[i], p)) {
            return parent_code(i);
          }
        }
        throw InvalidInputError("adopt fired with all neighbours children");
      }
      default:
        throw InvalidInputError("unknown action");
    }
  };
  proto.outcomes = deterministic_outcomes(proto);
  proto.format_state = [](const Topology& t, ProcessId p, LocalState s) {
    if (s == kNoParent) {
      return std::string("-1");
    }
    return std::to_string(t.neighbors(p)[s - 1]);
  };
  return proto;
}

std::optional<ProcessId> parent_of(const Topology& topo,
                                   const Configuration& cfg, ProcessId p) {
  const LocalState s = cfg[p];
  if (s == kNoParent) {
    return std::nullopt;
  }
  if (s - 1 >= topo.degree(p)) {
    throw InvalidInputError("parent index out of range at process " +
                            std::to_string(p));
  }
  return topo.neighbors(p)[s - 1];
}

std::vector<ProcessId> children_of(const Topology& topo,
                                   const Configuration& cfg, ProcessId p) {
  std::vector<ProcessId> out;
  for (ProcessId q : topo.neighbors(p)) {
    if (points_at(topo, cfg, q, p)) {
      out.push_back(q);
    }
  }
  return out;
}

std::vector<ProcessId> leaders(const Topology& topo, const Configuration& cfg) {
  std::vector<ProcessId> out;
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    if (cfg[p] == kNoParent) {
      out.push_back(p);
    }
  }
  return out;
}

ProcessId parent_path_root(const Topology& topo, const Configuration& cfg,
                           ProcessId p) {
  // On a tree the walk either hits a parentless process or oscillates between
  // a mutual pair; the visit bound guards against malformed input.
  ProcessId cur = p;
  for (std::uint32_t hops = 0; hops <= topo.node_count(); ++hops) {
    const std::optional<ProcessId> up = parent_of(topo, cfg, cur);
    if (!up.has_value()) {
      return cur;
    }
    if (points_at(topo, cfg, *up, cur)) {
      return cur;  // mutual pair: the path ends here
    }
    cur = *up;
  }
  throw InvalidInputError("parent pointers form a cycle");
}

bool is_lc(const Topology& topo, const Configuration& cfg) {
  const std::vector<ProcessId> roots = leaders(topo, cfg);
  if (roots.size() != 1) {
    return false;
  }
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    if (parent_path_root(topo, cfg, p) != roots[0]) {
      return false;
    }
  }
  return true;
}

bool leader_set_stable(const Topology& topo, const Configuration& before,
                       const Configuration& after) {
  return leaders(topo, before) == leaders(topo, after);
}

}  // namespace stabilab
