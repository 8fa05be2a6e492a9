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

#include "stabilab/transform.hh"

#include <memory>
#include <string>
#include <utility>

#include "stabilab/errors.hh"

namespace stabilab {

Configuration gated_projection(const Configuration& cfg) {
  Configuration base;
  base.states.reserve(cfg.size());
  for (LocalState s : cfg.states) {
    base.states.push_back(gated_payload(s));
  }
  return base;
}

ProtocolDef coin_gated(const ProtocolDef& base, double win_bias) {
  if (base.is_probabilistic) {
    throw InvalidInputError("coin gating expects a deterministic protocol");
  }
  if (win_bias <= 0.0 || win_bias > 1.0) {
    throw InvalidInputError("coin bias must lie in (0, 1]");
  }
  const auto inner = std::make_shared<ProtocolDef>(base);

  ProtocolDef proto;
  proto.name = "coin-" + base.name;
  proto.action_labels = base.action_labels;
  proto.is_probabilistic = true;
  proto.domains.reserve(base.domains.size());
  for (std::uint32_t d : base.domains) {
    proto.domains.push_back(d * 2);
  }
  proto.guard = [inner](const Topology& topo, const Configuration& cfg,
                        ProcessId p, ActionId a) {
    return inner->guard(topo, gated_projection(cfg), p, a);
  };
  proto.statement = [inner, win_bias](const Topology& topo,
                                      const Configuration& cfg, ProcessId p,
                                      ActionId a,
                                      RandomSource& rnd) -> LocalState {
    const Configuration base_cfg = gated_projection(cfg);
    const bool won = rnd.coin(win_bias);
    if (!won) {
      return gated_state(base_cfg[p], false);
    }
    RandomSource none = RandomSource::forbidden();
    return gated_state(inner->statement(topo, base_cfg, p, a, none), true);
  };
  proto.outcomes = [inner, win_bias](const Topology& topo,
                                     const Configuration& cfg, ProcessId p,
                                     ActionId a) {
    const Configuration base_cfg = gated_projection(cfg);
    RandomSource none = RandomSource::forbidden();
    const LocalState winner =
        gated_state(inner->statement(topo, base_cfg, p, a, none), true);
    const LocalState loser = gated_state(base_cfg[p], false);
    std::vector<std::pair<LocalState, double>> out;
    out.emplace_back(winner, win_bias);
    if (win_bias < 1.0) {
      out.emplace_back(loser, 1.0 - win_bias);
    }
    return out;
  };
  proto.format_state = [inner](const Topology& topo, ProcessId p,
                               LocalState s) {
    return inner->format_state(topo, p, gated_payload(s)) +
           (gated_coin(s) ? ":1" : ":0");
  };
  return proto;
}

std::function<bool(const Topology&, const Configuration&)> lift_predicate(
    std::function<bool(const Topology&, const Configuration&)> base) {
  return [base = std::move(base)](const Topology& topo,
                                  const Configuration& cfg) {
    return base(topo, gated_projection(cfg));
  };
}

std::function<bool(const Topology&, const Configuration&, const Configuration&)>
lift_observable(
    std::function<bool(const Topology&, const Configuration&, const Configuration&)>
        base) {
  return [base = std::move(base)](const Topology& topo,
                                  const Configuration& before,
                                  const Configuration& after) {
    return base(topo, gated_projection(before), gated_projection(after));
  };
}

}  // namespace stabilab
