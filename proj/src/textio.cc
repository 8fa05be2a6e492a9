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

#include "stabilab/textio.hh"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "stabilab/errors.hh"
#include "stabilab/token.hh"
#include "stabilab/transform.hh"

namespace stabilab {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    out.push_back(item);
  }
  return out;
}

long long parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(t, &used);
    if (used != t.size() || t.empty()) {
      throw std::invalid_argument(t);
    }
    return v;
  } catch (const std::exception&) {
    throw InvalidInputError("bad " + what + ": '" + t + "'");
  }
}

bool parse_flag_word(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t == "true" || t == "1") {
    return true;
  }
  if (t == "false" || t == "0") {
    return false;
  }
  throw InvalidInputError("bad " + what + ": '" + t + "' (want true or false)");
}

}  // namespace

const char* to_string(ProtocolFamily f) {
  switch (f) {
    case ProtocolFamily::kToken:
      return "token";
    case ProtocolFamily::kLeader:
      return "leader";
    case ProtocolFamily::kTwoFlag:
      return "two-flag";
  }
  return "?";
}

ProtocolFamily parse_family(const std::string& name) {
  if (name == "token") {
    return ProtocolFamily::kToken;
  }
  if (name == "leader") {
    return ProtocolFamily::kLeader;
  }
  if (name == "two-flag") {
    return ProtocolFamily::kTwoFlag;
  }
  throw InvalidInputError("unknown protocol '" + name +
                          "' (want token, leader or two-flag)");
}

std::vector<std::pair<ProcessId, ProcessId>> parse_edge_list(
    const std::string& text) {
  std::vector<std::pair<ProcessId, ProcessId>> edges;
  for (const std::string& part : split(text, ',')) {
    const std::vector<std::string> ends = split(part, '-');
    if (ends.size() != 2) {
      throw InvalidInputError("bad edge '" + trim(part) + "' (want a-b)");
    }
    const long long a = parse_int(ends[0], "edge endpoint");
    const long long b = parse_int(ends[1], "edge endpoint");
    if (a < 0 || b < 0) {
      throw InvalidInputError("negative process id in edge '" + trim(part) +
                              "'");
    }
    edges.emplace_back(static_cast<ProcessId>(a), static_cast<ProcessId>(b));
  }
  if (edges.empty()) {
    throw InvalidInputError("empty edge list");
  }
  return edges;
}

std::string format_edge_list(const Topology& topo) {
  std::string out;
  for (ProcessId p = 0; p < topo.node_count(); ++p) {
    for (ProcessId q : topo.neighbors(p)) {
      if (p < q) {
        if (!out.empty()) {
          out += ',';
        }
        out += std::to_string(p) + "-" + std::to_string(q);
      }
    }
  }
  return out;
}

Topology parse_topology_text(std::istream& in, const std::string& source) {
  std::map<std::string, std::pair<std::string, std::uint32_t>> fields;
  std::string line;
  std::uint32_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') {
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw InvalidInputError(source + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
    }
    const std::string key = trim(t.substr(0, eq));
    if (fields.count(key)) {
      throw InvalidInputError(source + ":" + std::to_string(lineno) +
                              ": duplicate field '" + key + "'");
    }
    fields[key] = {trim(t.substr(eq + 1)), lineno};
  }
  const auto take = [&](const std::string& key) -> std::string {
    const auto it = fields.find(key);
    if (it == fields.end()) {
      throw InvalidInputError(source + ": missing field '" + key + "'");
    }
    const std::string value = it->second.first;
    fields.erase(it);
    return value;
  };

  const std::string type = take("type");
  Topology topo = [&] {
    if (type == "ring") {
      const long long n = parse_int(take("n"), "process count");
      if (n < 3) {
        throw InvalidInputError(source + ": a ring needs n >= 3");
      }
      return Topology::ring(static_cast<std::uint32_t>(n));
    }
    if (type == "tree") {
      const std::string edges = take("edges");
      Topology t = Topology::tree(parse_edge_list(edges));
      if (fields.count("n")) {
        const long long n = parse_int(take("n"), "process count");
        if (n != t.node_count()) {
          throw InvalidInputError(source + ": n = " + std::to_string(n) +
                                  " but the edges span " +
                                  std::to_string(t.node_count()) +
                                  " processes");
        }
      }
      return t;
    }
    throw InvalidInputError(source + ": unknown type '" + type +
                            "' (want ring or tree)");
  }();
  if (!fields.empty()) {
    const auto& [key, where] = *fields.begin();
    throw InvalidInputError(source + ":" + std::to_string(where.second) +
                            ": unknown field '" + key + "'");
  }
  return topo;
}

Topology read_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open topology file '" + path + "'");
  }
  return parse_topology_text(in, path);
}

namespace {

std::vector<std::string> bracket_items(const std::string& text,
                                       const std::string& prefix,
                                       std::string* rest) {
  const std::string t = trim(text);
  if (t.rfind(prefix, 0) != 0) {
    throw InvalidInputError("expected literal starting with '" + prefix +
                            "', got '" + t + "'");
  }
  const auto close = t.find(']', prefix.size());
  if (close == std::string::npos) {
    throw InvalidInputError("missing ']' in '" + t + "'");
  }
  *rest = trim(t.substr(close + 1));
  const std::string body = t.substr(prefix.size(), close - prefix.size());
  if (trim(body).empty()) {
    throw InvalidInputError("empty list in '" + t + "'");
  }
  return split(body, ',');
}

Configuration parse_payload(const std::string& text, ProtocolFamily family,
                            const Topology& topo, std::string* rest) {
  const std::uint32_t n = topo.node_count();
  Configuration cfg;
  cfg.states.reserve(n);
  std::vector<std::string> items;
  switch (family) {
    case ProtocolFamily::kToken: {
      items = bracket_items(text, "dt=[", rest);
      const std::uint32_t m = smallest_non_divisor(n);
      for (const std::string& item : items) {
        const long long v = parse_int(item, "counter value");
        if (v < 0 || v >= m) {
          throw InvalidInputError("counter value " + std::to_string(v) +
                                  " outside [0, " + std::to_string(m) + ")");
        }
        cfg.states.push_back(static_cast<LocalState>(v));
      }
      break;
    }
    case ProtocolFamily::kLeader: {
      items = bracket_items(text, "par=[", rest);
      for (std::size_t p = 0; p < items.size(); ++p) {
        const long long v = parse_int(items[p], "parent id");
        if (v == -1) {
          cfg.states.push_back(0);
        } else if (v < 0) {
          throw InvalidInputError("bad parent id " + std::to_string(v));
        } else if (p < n) {
          // Identity in the file, local index inside.
          cfg.states.push_back(
              topo.local_index(static_cast<ProcessId>(p),
                               static_cast<ProcessId>(v)) + 1);
        }
      }
      break;
    }
    case ProtocolFamily::kTwoFlag: {
      items = bracket_items(text, "b=[", rest);
      for (const std::string& item : items) {
        cfg.states.push_back(parse_flag_word(item, "flag value") ? 1 : 0);
      }
      break;
    }
  }
  if (items.size() != n) {
    throw InvalidInputError("literal lists " + std::to_string(items.size()) +
                            " states, topology has " + std::to_string(n) +
                            " processes");
  }
  return cfg;
}

}  // namespace

Configuration parse_state_literal(const std::string& text, ProtocolFamily family,
                                  const Topology& topo, bool gated) {
  std::string rest;
  Configuration payload = parse_payload(text, family, topo, &rest);
  if (!gated) {
    if (!rest.empty()) {
      throw InvalidInputError("trailing text after literal: '" + rest + "'");
    }
    return payload;
  }
  std::vector<bool> coins(topo.node_count(), false);
  if (!rest.empty()) {
    std::string tail;
    const std::vector<std::string> items = bracket_items(rest, "coins=[", &tail);
    if (!tail.empty()) {
      throw InvalidInputError("trailing text after coins: '" + tail + "'");
    }
    if (items.size() != coins.size()) {
      throw InvalidInputError("coins list has " + std::to_string(items.size()) +
                              " entries, topology has " +
                              std::to_string(coins.size()) + " processes");
    }
    for (std::size_t p = 0; p < items.size(); ++p) {
      coins[p] = parse_flag_word(items[p], "coin value");
    }
  }
  Configuration cfg;
  cfg.states.reserve(payload.size());
  for (std::size_t p = 0; p < payload.size(); ++p) {
    cfg.states.push_back(gated_state(payload[p], coins[p]));
  }
  return cfg;
}

std::string format_state_literal(const Configuration& cfg,
                                 ProtocolFamily family, const Topology& topo,
                                 bool gated) {
  Configuration payload = cfg;
  if (gated) {
    payload = gated_projection(cfg);
  }
  std::string out;
  switch (family) {
    case ProtocolFamily::kToken:
      out = "dt=[";
      break;
    case ProtocolFamily::kLeader:
      out = "par=[";
      break;
    case ProtocolFamily::kTwoFlag:
      out = "b=[";
      break;
  }
  for (std::size_t p = 0; p < payload.size(); ++p) {
    if (p > 0) {
      out += ',';
    }
    switch (family) {
      case ProtocolFamily::kToken:
        out += std::to_string(payload[p]);
        break;
      case ProtocolFamily::kLeader:
        if (payload[p] == 0) {
          out += "-1";
        } else {
          out += std::to_string(
              topo.neighbors(static_cast<ProcessId>(p))[payload[p] - 1]);
        }
        break;
      case ProtocolFamily::kTwoFlag:
        out += payload[p] ? "true" : "false";
        break;
    }
  }
  out += ']';
  if (gated) {
    out += " coins=[";
    for (std::size_t p = 0; p < cfg.size(); ++p) {
      if (p > 0) {
        out += ',';
      }
      out += gated_coin(cfg[p]) ? "true" : "false";
    }
    out += ']';
  }
  return out;
}

void write_trial_csv(std::ostream& out,
                     const std::vector<TrialOutcome>& rows) {
  out << "seed,initial_id,converged,steps\n";
  for (const TrialOutcome& r : rows) {
    out << r.seed << ',' << r.initial_index << ','
        << (r.converged ? "true" : "false") << ',' << r.steps << '\n';
  }
}

}  // namespace stabilab
