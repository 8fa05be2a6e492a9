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

#include "stabilab/scheduler.hh"

#include <algorithm>
#include <istream>
#include <sstream>

#include "stabilab/errors.hh"

namespace stabilab {

const char* to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::kCentralRoundRobin:
      return "central-rr";
    case PolicyKind::kDistributedFull:
      return "distributed-full";
    case PolicyKind::kSynchronous:
      return "synchronous";
    case PolicyKind::kRandomizedCentral:
      return "randomized-central";
    case PolicyKind::kRandomizedDistributed:
      return "randomized-distributed";
    case PolicyKind::kScripted:
      return "scripted";
  }
  return "?";
}

SchedulerPolicy SchedulerPolicy::central_round_robin() {
  return {PolicyKind::kCentralRoundRobin, {}};
}
SchedulerPolicy SchedulerPolicy::distributed_full() {
  return {PolicyKind::kDistributedFull, {}};
}
SchedulerPolicy SchedulerPolicy::synchronous() {
  return {PolicyKind::kSynchronous, {}};
}
SchedulerPolicy SchedulerPolicy::randomized_central() {
  return {PolicyKind::kRandomizedCentral, {}};
}
SchedulerPolicy SchedulerPolicy::randomized_distributed() {
  return {PolicyKind::kRandomizedDistributed, {}};
}

SchedulerPolicy SchedulerPolicy::scripted(
    std::vector<std::vector<ProcessId>> script) {
  if (script.empty()) {
    throw InvalidInputError("scripted schedule needs at least one entry");
  }
  for (auto& entry : script) {
    if (entry.empty()) {
      throw InvalidInputError("scripted schedule entry is empty");
    }
    std::sort(entry.begin(), entry.end());
    if (std::adjacent_find(entry.begin(), entry.end()) != entry.end()) {
      throw InvalidInputError("scripted schedule entry repeats a process");
    }
  }
  return {PolicyKind::kScripted, std::move(script)};
}

Scheduler::Scheduler(SchedulerPolicy policy) : policy_(std::move(policy)) {
  if (policy_.kind == PolicyKind::kScripted && policy_.script.empty()) {
    throw InvalidInputError("scripted policy without a schedule");
  }
}

std::vector<ProcessId> Scheduler::select(const std::vector<ProcessId>& enabled,
                                         RandomSource& rnd,
                                         std::uint64_t step_index) {
  if (enabled.empty()) {
    throw InvalidInputError("select on an empty enabled set");
  }
  switch (policy_.kind) {
    case PolicyKind::kCentralRoundRobin: {
      // Smallest enabled id above the cursor, wrapping to the smallest.
      ProcessId pick = enabled.front();
      if (last_chosen_.has_value()) {
        for (ProcessId p : enabled) {
          if (p > *last_chosen_) {
            pick = p;
            break;
          }
        }
      }
      last_chosen_ = pick;
      return {pick};
    }
    case PolicyKind::kDistributedFull:
    case PolicyKind::kSynchronous:
      return enabled;
    case PolicyKind::kRandomizedCentral:
      return {enabled[rnd.below(enabled.size())]};
    case PolicyKind::kRandomizedDistributed: {
      const std::size_t k = enabled.size();
      if (k > 62) {
        throw ResourceLimitError(
            "uniform subset draw over more than 62 enabled processes");
      }
      const std::uint64_t mask = 1 + rnd.below((1ull << k) - 1);
      std::vector<ProcessId> subset;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1ull << i)) {
          subset.push_back(enabled[i]);
        }
      }
      return subset;
    }
    case PolicyKind::kScripted: {
      const auto& entry = policy_.script[step_index % policy_.script.size()];
      std::vector<ProcessId> subset;
      for (ProcessId p : entry) {
        if (std::binary_search(enabled.begin(), enabled.end(), p)) {
          subset.push_back(p);
        }
      }
      if (subset.empty()) {
        throw ScriptStallError(
            step_index, "scripted entry at step " + std::to_string(step_index) +
                            " shares no process with the enabled set");
      }
      return subset;
    }
  }
  throw InvalidInputError("unknown scheduler policy");
}

namespace {

std::vector<ProcessId> parse_entry(const std::string& text,
                                   const std::string& where) {
  std::vector<ProcessId> entry;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto begin = item.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      throw InvalidInputError("empty process id in schedule " + where);
    }
    const auto end = item.find_last_not_of(" \t\r");
    const std::string token = item.substr(begin, end - begin + 1);
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(token, &used);
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
      entry.push_back(static_cast<ProcessId>(v));
    } catch (const std::exception&) {
      throw InvalidInputError("bad process id '" + token + "' in schedule " +
                              where);
    }
  }
  return entry;
}

}  // namespace

std::vector<std::vector<ProcessId>> parse_script(const std::string& text) {
  std::vector<std::vector<ProcessId>> script;
  std::stringstream ss(text);
  std::string part;
  std::uint32_t n = 0;
  while (std::getline(ss, part, ';')) {
    ++n;
    script.push_back(parse_entry(part, "entry " + std::to_string(n)));
  }
  return SchedulerPolicy::scripted(std::move(script)).script;
}

std::vector<std::vector<ProcessId>> parse_script_stream(std::istream& in) {
  std::vector<std::vector<ProcessId>> script;
  std::string line;
  std::uint32_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') {
      continue;
    }
    script.push_back(parse_entry(line, "line " + std::to_string(lineno)));
  }
  return SchedulerPolicy::scripted(std::move(script)).script;
}

void validate_script(const std::vector<std::vector<ProcessId>>& script,
                     const Topology& topo) {
  for (const auto& entry : script) {
    for (ProcessId p : entry) {
      if (p >= topo.node_count()) {
        throw InvalidInputError("schedule names process " + std::to_string(p) +
                                " outside the topology");
      }
    }
  }
}

}  // namespace stabilab
