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

#include "stabilab/protocol.hh"

#include <algorithm>

#include "stabilab/errors.hh"

namespace stabilab {

std::function<std::vector<std::pair<LocalState, double>>(
    const Topology&, const Configuration&, ProcessId, ActionId)>
deterministic_outcomes(const ProtocolDef& proto) {
  const auto statement = proto.statement;
  return [statement](const Topology& topo, const Configuration& cfg,
                     ProcessId p, ActionId a) {
    RandomSource none = RandomSource::forbidden();
    return std::vector<std::pair<LocalState, double>>{
        {statement(topo, cfg, p, a, none), 1.0}};
  };
}

std::vector<ProcessId> Activation::processes() const {
  std::vector<ProcessId> out;
  out.reserve(moves.size());
  for (const auto& [p, a] : moves) {
    out.push_back(p);
  }
  return out;
}

void validate_configuration(const ProtocolDef& proto, const Configuration& cfg) {
  if (cfg.size() != proto.domains.size()) {
    throw InvalidInputError(
        "configuration has " + std::to_string(cfg.size()) +
        " states, protocol expects " + std::to_string(proto.domains.size()));
  }
  for (std::size_t p = 0; p < cfg.size(); ++p) {
    if (cfg[p] >= proto.domains[p]) {
      throw InvalidInputError("state " + std::to_string(cfg[p]) +
                              " at process " + std::to_string(p) +
                              " is outside domain of size " +
                              std::to_string(proto.domains[p]));
    }
  }
}

std::vector<ActionId> enabled_actions(const ProtocolDef& proto,
                                      const Topology& topo,
                                      const Configuration& cfg, ProcessId p) {
  std::vector<ActionId> out;
  for (ActionId a = 0; a < proto.action_labels.size(); ++a) {
    if (proto.guard(topo, cfg, p, a)) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<ProcessId> enabled_processes(const ProtocolDef& proto,
                                         const Topology& topo,
                                         const Configuration& cfg) {
  std::vector<ProcessId> out;
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    for (ActionId a = 0; a < proto.action_labels.size(); ++a) {
      if (proto.guard(topo, cfg, p, a)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

ActionId sole_enabled_action(const ProtocolDef& proto, const Topology& topo,
                             const Configuration& cfg, ProcessId p) {
  const std::vector<ActionId> actions = enabled_actions(proto, topo, cfg, p);
  if (actions.empty()) {
    throw InvalidInputError("process " + std::to_string(p) +
                            " has no enabled action");
  }
  if (actions.size() > 1) {
    throw AmbiguityError(
        p, "process " + std::to_string(p) + " has " +
               std::to_string(actions.size()) + " enabled actions (" +
               proto.action_labels[actions[0]] + ", " +
               proto.action_labels[actions[1]] + ", ...); steps need one");
  }
  return actions[0];
}

Activation activation_for(const ProtocolDef& proto, const Topology& topo,
                          const Configuration& cfg,
                          const std::vector<ProcessId>& processes) {
  std::vector<ProcessId> ps = processes;
  std::sort(ps.begin(), ps.end());
  Activation act;
  act.moves.reserve(ps.size());
  for (ProcessId p : ps) {
    act.moves.emplace_back(p, sole_enabled_action(proto, topo, cfg, p));
  }
  return act;
}

Configuration apply(const ProtocolDef& proto, const Topology& topo,
                    const Configuration& cfg, const Activation& activation,
                    RandomSource& rnd) {
  if (activation.moves.empty()) {
    throw InvalidInputError("a step fires at least one process");
  }
  Configuration next = cfg;
  ProcessId last = 0;
  bool first = true;
  for (const auto& [p, a] : activation.moves) {
    if (!first && p <= last) {
      throw InvalidInputError("activation is not sorted or repeats process " +
                              std::to_string(p));
    }
    first = false;
    last = p;
    if (p >= topo.node_count() || a >= proto.action_labels.size()) {
      throw InvalidInputError("activation names an unknown process or action");
    }
    if (!proto.guard(topo, cfg, p, a)) {
      throw InvalidInputError("activation fires " + proto.action_labels[a] +
                              " at process " + std::to_string(p) +
                              " whose guard is false");
    }
    // Statements read the pre-step configuration: simultaneous semantics.
    next[p] = proto.statement(topo, cfg, p, a, rnd);
  }
  return next;
}

Configuration apply(const ProtocolDef& proto, const Topology& topo,
                    const Configuration& cfg, const Activation& activation) {
  RandomSource none = RandomSource::forbidden();
  return apply(proto, topo, cfg, activation, none);
}

const char* to_string(SchedulerClass c) {
  switch (c) {
    case SchedulerClass::kCentral:
      return "central";
    case SchedulerClass::kDistributed:
      return "distributed";
    case SchedulerClass::kSynchronous:
      return "synchronous";
  }
  return "?";
}

namespace {

void check_enabled_cap(std::size_t enabled, std::uint32_t cap) {
  if (enabled > cap) {
    throw ResourceLimitError("enabled set of size " + std::to_string(enabled) +
                             " exceeds the subset enumeration cap of " +
                             std::to_string(cap));
  }
}

std::vector<Configuration> sorted_unique(std::vector<Configuration> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Extends each partial configuration with every outcome of (p, a).
void expand_outcomes(const ProtocolDef& proto, const Topology& topo,
                     const Configuration& cfg, ProcessId p, ActionId a,
                     std::vector<Configuration>* partials) {
  const auto outs = proto.outcomes(topo, cfg, p, a);
  std::vector<Configuration> grown;
  grown.reserve(partials->size() * outs.size());
  for (const Configuration& base : *partials) {
    for (const auto& [state, prob] : outs) {
      if (prob <= 0.0) {
        continue;
      }
      Configuration c = base;
      c[p] = state;
      grown.push_back(std::move(c));
    }
  }
  *partials = std::move(grown);
}

template <typename StepFn>
std::vector<Configuration> successors_impl(const ProtocolDef& proto,
                                           const Topology& topo,
                                           const Configuration& cfg,
                                           SchedulerClass cls,
                                           std::uint32_t enabled_cap,
                                           StepFn&& step_subset) {
  validate_configuration(proto, cfg);
  const std::vector<ProcessId> enabled = enabled_processes(proto, topo, cfg);
  std::vector<Configuration> out;
  if (enabled.empty()) {
    return out;
  }
  switch (cls) {
    case SchedulerClass::kCentral:
      for (ProcessId p : enabled) {
        step_subset(std::vector<ProcessId>{p}, &out);
      }
      break;
    case SchedulerClass::kSynchronous:
      step_subset(enabled, &out);
      break;
    case SchedulerClass::kDistributed: {
      check_enabled_cap(enabled.size(), enabled_cap);
      const std::uint32_t k = static_cast<std::uint32_t>(enabled.size());
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<ProcessId> subset;
        for (std::uint32_t i = 0; i < k; ++i) {
          if (mask & (1u << i)) {
            subset.push_back(enabled[i]);
          }
        }
        step_subset(subset, &out);
      }
      break;
    }
  }
  return sorted_unique(std::move(out));
}

}  // namespace

std::vector<Configuration> successors(const ProtocolDef& proto,
                                      const Topology& topo,
                                      const Configuration& cfg,
                                      SchedulerClass cls,
                                      std::uint32_t enabled_cap) {
  if (proto.is_probabilistic) {
    throw InvalidInputError(
        "successors requires a deterministic protocol; "
        "use outcome_successors for probabilistic ones");
  }
  return successors_impl(
      proto, topo, cfg, cls, enabled_cap,
      [&](const std::vector<ProcessId>& subset, std::vector<Configuration>* out) {
        out->push_back(
            apply(proto, topo, cfg, activation_for(proto, topo, cfg, subset)));
      });
}

std::vector<Configuration> outcome_successors(const ProtocolDef& proto,
                                              const Topology& topo,
                                              const Configuration& cfg,
                                              SchedulerClass cls,
                                              std::uint32_t enabled_cap) {
  return successors_impl(
      proto, topo, cfg, cls, enabled_cap,
      [&](const std::vector<ProcessId>& subset, std::vector<Configuration>* out) {
        const Activation act = activation_for(proto, topo, cfg, subset);
        std::vector<Configuration> partials{cfg};
        for (const auto& [p, a] : act.moves) {
          expand_outcomes(proto, topo, cfg, p, a, &partials);
        }
        for (Configuration& c : partials) {
          out->push_back(std::move(c));
        }
      });
}

}  // namespace stabilab
