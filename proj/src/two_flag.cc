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

#include "stabilab/two_flag.hh"

#include <string>

#include "stabilab/errors.hh"

namespace stabilab {

namespace {

enum Action : ActionId { kRaise = 0, kLower = 1 };

void require_line(const Topology& topo) {
  if (topo.node_count() != 2 || topo.degree(0) != 1 || topo.degree(1) != 1) {
    throw TopologyError("the flag protocol runs on exactly two processes");
  }
}

bool up(const Configuration& cfg, ProcessId p) { return cfg[p] != 0; }

ProcessId other(const Topology& topo, ProcessId p) {
  return topo.neighbors(p)[0];
}

}  // namespace

Topology two_process_line() { return Topology::tree({{0, 1}}); }

ProtocolDef two_flag_protocol(const Topology& topo) {
  require_line(topo);

  ProtocolDef proto;
  proto.name = "two-flag";
  proto.action_labels = {"raise", "lower"};
  proto.domains = {2, 2};
  proto.guard = [](const Topology& t, const Configuration& cfg, ProcessId p,
                   ActionId a) {
    const bool mine = up(cfg, p);
    const bool theirs = up(cfg, other(t, p));
    switch (a) {
      case kRaise:
        return !mine && !theirs;
      case kLower:
        return mine && !theirs;
      default:
        return false;
    }
  };
  proto.statement = [](const Topology&, const Configuration&, ProcessId,
                       ActionId a, RandomSource&) -> LocalState {
    return a == kRaise ? 1 : 0;
  };
  proto.outcomes = deterministic_outcomes(proto);
  proto.format_state = [](const Topology&, ProcessId, LocalState s) {
    return std::string(s ? "true" : "false");
  };
  return proto;
}

bool two_flag_legitimate(const Topology& topo, const Configuration& cfg) {
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    if (!up(cfg, p)) {
      return false;
    }
  }
  return true;
}

}  // namespace stabilab
