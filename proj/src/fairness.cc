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

#include "stabilab/fairness.hh"

#include <algorithm>
#include <map>
#include <set>

#include "stabilab/errors.hh"

namespace stabilab {

const char* to_string(FairnessKind k) {
  switch (k) {
    case FairnessKind::kWeak:
      return "weak";
    case FairnessKind::kStrong:
      return "strong";
    case FairnessKind::kGouda:
      return "gouda";
  }
  return "?";
}

namespace {

std::set<ProcessId> activated_on_cycle(const Lasso& lasso) {
  std::set<ProcessId> out;
  for (const LassoStep& step : lasso.cycle) {
    for (const auto& [p, a] : step.activation.moves) {
      out.insert(p);
    }
  }
  return out;
}

bool check_process_fairness(const Lasso& lasso, const ProtocolDef& proto,
                            const Topology& topo, bool continuously) {
  const std::set<ProcessId> fired = activated_on_cycle(lasso);
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    std::uint64_t enabled_at = 0;
    for (const LassoStep& step : lasso.cycle) {
      if (!enabled_actions(proto, topo, step.config, p).empty()) {
        ++enabled_at;
      }
    }
    const bool demanded = continuously ? enabled_at == lasso.cycle.size()
                                       : enabled_at > 0;
    if (demanded && fired.count(p) == 0) {
      return false;
    }
  }
  return true;
}

bool check_gouda(const Lasso& lasso, const ProtocolDef& proto,
                 const Topology& topo) {
  // Transitions taken from each recurring configuration, keyed by source.
  std::map<Configuration, std::set<Configuration>> taken;
  const std::size_t len = lasso.cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Configuration& src = lasso.cycle[i].config;
    const Configuration& dst = lasso.cycle[(i + 1) % len].config;
    taken[src].insert(dst);
  }
  for (const auto& [src, targets] : taken) {
    for (const Configuration& s :
         successors(proto, topo, src, SchedulerClass::kDistributed)) {
      if (targets.count(s) == 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_fairness(const Lasso& lasso, FairnessKind kind,
                    const ProtocolDef& proto, const Topology& topo) {
  if (lasso.cycle.empty()) {
    throw InvalidInputError("fairness check on a lasso with an empty cycle");
  }
  switch (kind) {
    case FairnessKind::kWeak:
      return check_process_fairness(lasso, proto, topo, true);
    case FairnessKind::kStrong:
      return check_process_fairness(lasso, proto, topo, false);
    case FairnessKind::kGouda:
      return check_gouda(lasso, proto, topo);
  }
  throw InvalidInputError("unknown fairness kind");
}

}  // namespace stabilab
