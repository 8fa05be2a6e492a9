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

#include "stabilab/token.hh"

#include <string>

#include "stabilab/errors.hh"

namespace stabilab {

std::uint32_t smallest_non_divisor(std::uint64_t n) {
  if (n < 2) {
    throw InvalidInputError("smallest_non_divisor requires n >= 2");
  }
  std::uint32_t m = 2;
  while (n % m == 0) {
    ++m;
  }
  return m;
}

namespace {

bool holds_token(const Topology& topo, const Configuration& cfg, ProcessId p,
                 std::uint32_t m) {
  return cfg[p] != (cfg[topo.pred(p)] + 1) % m;
}

void require_ring(const Topology& topo) {
  if (!topo.has_pred()) {
    throw TopologyError("token circulation requires an oriented ring");
  }
}

}  // namespace

ProtocolDef token_protocol(const Topology& topo) {
  require_ring(topo);
  const std::uint32_t n = topo.node_count();
  const std::uint32_t m = smallest_non_divisor(n);

  ProtocolDef proto;
  proto.name = "token";
  proto.action_labels = {"pass"};
  proto.domains.assign(n, m);
  proto.guard = [m](const Topology& t, const Configuration& cfg, ProcessId p,
                    ActionId) { return holds_token(t, cfg, p, m); };
  proto.statement = [m](const Topology& t, const Configuration& cfg,
                        ProcessId p, ActionId, RandomSource&) -> LocalState {
    return (cfg[t.pred(p)] + 1) % m;
  };
  proto.outcomes = deterministic_outcomes(proto);
  proto.format_state = [](const Topology&, ProcessId, LocalState s) {
    return std::to_string(s);
  };
  return proto;
}

std::vector<ProcessId> token_holders(const Topology& topo,
                                     const Configuration& cfg) {
  require_ring(topo);
  const std::uint32_t m = smallest_non_divisor(topo.node_count());
  std::vector<ProcessId> out;
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    if (holds_token(topo, cfg, p, m)) {
      out.push_back(p);
    }
  }
  return out;
}

bool token_legitimate(const Topology& topo, const Configuration& cfg) {
  return token_holders(topo, cfg).size() == 1;
}

std::uint32_t min_token_distance(const Topology& topo,
                                 const Configuration& cfg) {
  const std::vector<ProcessId> holders = token_holders(topo, cfg);
  if (holders.size() < 2) {
    throw InvalidInputError("token distance needs at least two tokens, got " +
                            std::to_string(holders.size()));
  }
  // Walk successor pointers rather than assume ids sit in ring order.
  std::uint32_t best = topo.node_count();
  for (ProcessId p : holders) {
    for (ProcessId q : holders) {
      if (p == q) {
        continue;
      }
      std::uint32_t d = 0;
      for (ProcessId cur = p; cur != q; cur = topo.succ(cur)) {
        ++d;
      }
      best = std::min(best, d);
    }
  }
  return best;
}

bool token_holder_advances(const Topology& topo, const Configuration& before,
                           const Configuration& after) {
  const std::vector<ProcessId> pre = token_holders(topo, before);
  if (pre.size() != 1) {
    return true;
  }
  const std::vector<ProcessId> post = token_holders(topo, after);
  return post.size() == 1 && post[0] == topo.succ(pre[0]);
}

}  // namespace stabilab
