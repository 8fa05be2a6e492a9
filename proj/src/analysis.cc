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

#include "stabilab/analysis.hh"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "stabilab/errors.hh"
#include "stabilab/leader.hh"
#include "stabilab/token.hh"

namespace stabilab {

TransitionSystem enumerate_system(const ProtocolDef& proto, const Topology& topo,
                                  SchedulerClass cls,
                                  const EnumerationLimits& limits) {
  if (proto.is_probabilistic) {
    throw InvalidInputError("enumeration requires a deterministic protocol");
  }
  ConfigurationSpace space(proto.domains);
  if (space.size() > limits.edge_cap) {
    throw ResourceLimitError("configuration count " +
                             std::to_string(space.size()) + " exceeds cap " +
                             std::to_string(limits.edge_cap));
  }
  TransitionSystem ts{cls, space, {}, 0};
  ts.edges.resize(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Configuration cfg = space.configuration(i);
    const std::vector<Configuration> succs =
        successors(proto, topo, cfg, cls, limits.enabled_cap);
    auto& row = ts.edges[i];
    row.reserve(succs.size());
    for (const Configuration& s : succs) {
      row.push_back(space.index_of(s));
    }
    std::sort(row.begin(), row.end());
    ts.edge_count += row.size();
    if (ts.edge_count > limits.edge_cap) {
      throw ResourceLimitError("transition count exceeds cap " +
                               std::to_string(limits.edge_cap));
    }
  }
  return ts;
}

std::uint64_t count_satisfying(const TransitionSystem& ts, const Topology& topo,
                               const Predicate& pred) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < ts.space.size(); ++i) {
    if (pred(topo, ts.space.configuration(i))) {
      ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> terminal_configurations(const TransitionSystem& ts) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < ts.edges.size(); ++i) {
    if (ts.edges[i].empty()) {
      out.push_back(i);
    }
  }
  return out;
}

ConvergenceVerdict check_possible_convergence(const TransitionSystem& ts,
                                              const Topology& topo,
                                              const Predicate& legitimate) {
  const std::uint64_t n = ts.space.size();
  std::vector<bool> reached(n, false);
  std::vector<std::uint64_t> frontier;
  ConvergenceVerdict verdict;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (legitimate(topo, ts.space.configuration(i))) {
      reached[i] = true;
      frontier.push_back(i);
      ++verdict.legitimate_count;
    }
  }
  if (verdict.legitimate_count == 0) {
    throw InvalidInputError("the legitimate set is empty");
  }

  // Backward reachability over reversed edges.
  std::vector<std::vector<std::uint64_t>> reverse(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j : ts.edges[i]) {
      reverse[j].push_back(i);
    }
  }
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t v : frontier) {
      for (std::uint64_t u : reverse[v]) {
        if (!reached[u]) {
          reached[u] = true;
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }

  for (std::uint64_t i = 0; i < n; ++i) {
    if (!reached[i]) {
      ++verdict.stuck_total;
      if (verdict.stuck.size() < kStuckListCap) {
        verdict.stuck.push_back(i);
      }
    }
  }
  verdict.holds = verdict.stuck_total == 0;
  return verdict;
}

ClosureVerdict check_closure(const TransitionSystem& ts, const Topology& topo,
                             const Predicate& legitimate,
                             const Observable& observable) {
  ClosureVerdict verdict;
  for (std::uint64_t i = 0; i < ts.space.size(); ++i) {
    const Configuration cfg = ts.space.configuration(i);
    if (!legitimate(topo, cfg)) {
      continue;
    }
    for (std::uint64_t j : ts.edges[i]) {
      const Configuration next = ts.space.configuration(j);
      if (!legitimate(topo, next) ||
          (observable && !observable(topo, cfg, next))) {
        verdict.violation = {i, j};
        return verdict;
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

namespace {

Activation synchronous_activation(const ProtocolDef& proto, const Topology& topo,
                                  const Configuration& cfg) {
  return activation_for(proto, topo, cfg,
                        enabled_processes(proto, topo, cfg));
}

}  // namespace

std::optional<Lasso> find_synchronous_lasso(const ProtocolDef& proto,
                                            const Topology& topo,
                                            const Predicate& legitimate,
                                            const EnumerationLimits& limits) {
  if (proto.is_probabilistic) {
    throw InvalidInputError("lasso search requires a deterministic protocol");
  }
  ConfigurationSpace space(proto.domains);
  if (space.size() > limits.edge_cap) {
    throw ResourceLimitError("configuration count " +
                             std::to_string(space.size()) + " exceeds cap " +
                             std::to_string(limits.edge_cap));
  }
  // 0 unvisited, 1 on current path, 2 resolved (orbit settles).
  std::vector<std::uint8_t> mark(space.size(), 0);
  std::vector<std::uint64_t> path;

  for (std::uint64_t start = 0; start < space.size(); ++start) {
    if (mark[start] != 0) {
      continue;
    }
    path.clear();
    std::map<std::uint64_t, std::size_t> position;
    std::uint64_t cur = start;
    std::optional<std::size_t> loop_start;
    for (;;) {
      if (mark[cur] == 2) {
        break;  // joins an orbit known to settle
      }
      const Configuration cfg = space.configuration(cur);
      if (legitimate(topo, cfg)) {
        break;  // orbit enters the legitimate set
      }
      const auto hit = position.find(cur);
      if (hit != position.end()) {
        loop_start = hit->second;  // repeat: the tail is a cycle
        break;
      }
      const std::vector<ProcessId> enabled =
          enabled_processes(proto, topo, cfg);
      if (enabled.empty()) {
        break;  // terminal, no infinite orbit
      }
      position.emplace(cur, path.size());
      path.push_back(cur);
      mark[cur] = 1;
      const Configuration next =
          apply(proto, topo, cfg, activation_for(proto, topo, cfg, enabled));
      cur = space.index_of(next);
    }
    if (loop_start.has_value()) {
      Lasso lasso;
      for (std::size_t i = 0; i < path.size(); ++i) {
        const Configuration cfg = space.configuration(path[i]);
        LassoStep step{cfg, synchronous_activation(proto, topo, cfg)};
        if (i < *loop_start) {
          lasso.prefix.push_back(std::move(step));
        } else {
          lasso.cycle.push_back(std::move(step));
        }
      }
      return lasso;
    }
    for (std::uint64_t v : path) {
      mark[v] = 2;
    }
  }
  return std::nullopt;
}

namespace {

void check_lasso_step(const ProtocolDef& proto, const Topology& topo,
                      const LassoStep& step, const Configuration& expected_next,
                      std::uint64_t index) {
  if (step.activation.moves.empty()) {
    throw InvalidLassoError(index, "step " + std::to_string(index) +
                                       " has an empty activation");
  }
  Configuration next;
  try {
    next = apply(proto, topo, step.config, step.activation);
  } catch (const InvalidInputError& e) {
    throw InvalidLassoError(index, "step " + std::to_string(index) + ": " +
                                       e.what());
  }
  if (next != expected_next) {
    throw InvalidLassoError(index,
                            "step " + std::to_string(index) +
                                " does not produce the next configuration");
  }
}

}  // namespace

LassoVerdict verify_lasso(const Lasso& lasso, const ProtocolDef& proto,
                          const Topology& topo, const Predicate& legitimate,
                          FairnessKind fairness) {
  if (lasso.cycle.empty()) {
    throw InvalidLassoError(0, "lasso has an empty cycle");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < lasso.prefix.size(); ++i, ++index) {
    const Configuration& expected = i + 1 < lasso.prefix.size()
                                        ? lasso.prefix[i + 1].config
                                        : lasso.cycle.front().config;
    check_lasso_step(proto, topo, lasso.prefix[i], expected, index);
  }
  for (std::size_t i = 0; i < lasso.cycle.size(); ++i, ++index) {
    const Configuration& expected = i + 1 < lasso.cycle.size()
                                        ? lasso.cycle[i + 1].config
                                        : lasso.cycle.front().config;
    check_lasso_step(proto, topo, lasso.cycle[i], expected, index);
  }

  LassoVerdict verdict;
  verdict.fairness = fairness;
  verdict.avoids_legitimate = true;
  for (const LassoStep& step : lasso.cycle) {
    if (legitimate(topo, step.config)) {
      verdict.avoids_legitimate = false;
      break;
    }
  }
  verdict.fair = check_fairness(lasso, fairness, proto, topo);
  return verdict;
}

std::optional<Lasso> alternating_token_lasso(const Topology& topo,
                                             ProcessId first, ProcessId second) {
  if (!topo.has_pred()) {
    throw TopologyError("the two-token chase runs on an oriented ring");
  }
  const std::uint32_t n = topo.node_count();
  if (first >= n || second >= n || first == second) {
    throw InvalidInputError("the chase needs two distinct ring processes");
  }
  const std::uint32_t m = smallest_non_divisor(n);
  const ProtocolDef proto = token_protocol(topo);

  // Smallest counter assignment with tokens exactly at {first, second}:
  // counters climb by one along each token-free stretch.
  Configuration init;
  const auto segment = [&](ProcessId from, ProcessId to, LocalState start,
                           Configuration* cfg) {
    LocalState v = start;
    for (ProcessId p = from; p != to; p = topo.succ(p)) {
      (*cfg)[p] = v;
      v = (v + 1) % m;
    }
  };
  bool found = false;
  for (LocalState a = 0; a < m && !found; ++a) {
    for (LocalState b = 0; b < m && !found; ++b) {
      Configuration cfg;
      cfg.states.assign(n, 0);
      segment(first, second, a, &cfg);
      segment(second, first, b, &cfg);
      const std::vector<ProcessId> holders = token_holders(topo, cfg);
      if (holders.size() == 2 &&
          ((holders[0] == first && holders[1] == second) ||
           (holders[0] == second && holders[1] == first))) {
        init = cfg;
        found = true;
      }
    }
  }
  if (!found) {
    return std::nullopt;
  }

  // Alternate the two tokens; each step fires the current holder of the token
  // whose turn it is. A repeat of (configuration, turn) closes the cycle.
  ProcessId holder[2] = {std::min(first, second), std::max(first, second)};
  Configuration cfg = init;
  int turn = 0;
  std::map<std::pair<Configuration, int>, std::size_t> seen;
  std::vector<LassoStep> steps;
  for (;;) {
    const auto key = std::make_pair(cfg, turn);
    const auto hit = seen.find(key);
    if (hit != seen.end()) {
      Lasso lasso;
      lasso.prefix.assign(steps.begin(), steps.begin() + hit->second);
      lasso.cycle.assign(steps.begin() + hit->second, steps.end());
      return lasso;
    }
    if (token_holders(topo, cfg).size() != 2) {
      return std::nullopt;  // tokens collided; no endless chase from here
    }
    seen.emplace(key, steps.size());
    const ProcessId p = holder[turn];
    const Activation act = activation_for(proto, topo, cfg, {p});
    steps.push_back(LassoStep{cfg, act});
    cfg = apply(proto, topo, cfg, act);
    holder[turn] = topo.succ(p);
    turn ^= 1;
  }
}

namespace {

// The chain re-indexed so that mirrored processes see identical local views:
// each inner process lists its outer neighbour first.
Topology mirror_chain(const Topology& topo, ProcessId order[4]) {
  if (topo.node_count() != 4 || !topo.is_tree()) {
    throw TopologyError("the symmetry check runs on a 4-process chain");
  }
  std::vector<ProcessId> ends;
  for (ProcessId p = 0; p < 4; ++p) {
    if (topo.degree(p) == 1) {
      ends.push_back(p);
    }
  }
  if (ends.size() != 2) {
    throw TopologyError("the symmetry check runs on a 4-process chain");
  }
  order[0] = ends[0];
  order[1] = topo.neighbors(ends[0])[0];
  order[3] = ends[1];
  order[2] = topo.neighbors(ends[1])[0];

  std::vector<std::vector<ProcessId>> adj(4);
  adj[order[0]] = {order[1]};
  adj[order[1]] = {order[0], order[2]};
  adj[order[2]] = {order[3], order[1]};
  adj[order[3]] = {order[2]};
  return Topology::from_adjacency(std::move(adj));
}

}  // namespace

SymmetryVerdict check_symmetry_closure(
    const Topology& topo,
    const std::function<ProtocolDef(const Topology&)>& factory) {
  ProcessId order[4];
  SymmetryVerdict verdict{false, false, std::nullopt, mirror_chain(topo, order)};
  const ProtocolDef proto = factory(verdict.mirrored);
  if (proto.domains.size() != 4 || proto.domains[order[0]] != proto.domains[order[3]] ||
      proto.domains[order[1]] != proto.domains[order[2]]) {
    throw InvalidInputError("protocol domains are not mirror symmetric");
  }

  verdict.closed = true;
  verdict.lc_free = true;
  for (LocalState end_state = 0; end_state < proto.domains[order[0]];
       ++end_state) {
    for (LocalState mid_state = 0; mid_state < proto.domains[order[1]];
         ++mid_state) {
      Configuration cfg;
      cfg.states.assign(4, 0);
      cfg[order[0]] = end_state;
      cfg[order[3]] = end_state;
      cfg[order[1]] = mid_state;
      cfg[order[2]] = mid_state;
      if (is_lc(verdict.mirrored, cfg)) {
        verdict.lc_free = false;
      }
      const std::vector<Configuration> succs = successors(
          proto, verdict.mirrored, cfg, SchedulerClass::kSynchronous);
      for (const Configuration& next : succs) {
        const bool symmetric = next[order[0]] == next[order[3]] &&
                               next[order[1]] == next[order[2]];
        if (!symmetric && verdict.closed) {
          verdict.closed = false;
          verdict.witness = {cfg, next};
        }
      }
    }
  }
  return verdict;
}

SymmetryVerdict check_symmetry_closure(const Topology& topo) {
  return check_symmetry_closure(
      topo, [](const Topology& t) { return leader_protocol(t); });
}

}  // namespace stabilab
