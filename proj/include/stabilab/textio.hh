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

#ifndef STABILAB_TEXTIO_HH_
#define STABILAB_TEXTIO_HH_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stabilab/configuration.hh"
#include "stabilab/montecarlo.hh"
#include "stabilab/topology.hh"

namespace stabilab {

/// The built-in protocol families the text formats know about.
enum class ProtocolFamily { kToken, kLeader, kTwoFlag };

const char* to_string(ProtocolFamily f);

/// Parses a family name: token, leader, two-flag.
ProtocolFamily parse_family(const std::string& name);

/// Parses an undirected edge list like "0-1,1-2,2-3".
std::vector<std::pair<ProcessId, ProcessId>> parse_edge_list(
    const std::string& text);

std::string format_edge_list(const Topology& topo);

/// Reads a topology description:
///
///   type = ring | tree
///   n = <count>            (required for ring, optional check for tree)
///   edges = 0-1,1-2,...    (tree only)
///
/// '#' starts a comment; blank lines are skipped. Errors name the offending
/// line.
Topology parse_topology_text(std::istream& in, const std::string& source);

Topology read_topology_file(const std::string& path);

/// Parses a configuration literal:
///
///   token     dt=[0,1,2,3,0,1]        counter values
///   leader    par=[-1,0,1]            parent identities, -1 for none
///   two-flag  b=[false,true]          flag values
///
/// Parent identities are converted to local indexes internally. When `gated`
/// is set, an optional second field `coins=[false,true,...]` follows the
/// payload (missing coins default to false) and the result uses the gated
/// encoding.
Configuration parse_state_literal(const std::string& text, ProtocolFamily family,
                                  const Topology& topo, bool gated);

/// Renders a configuration in the literal syntax above. Gated configurations
/// always include the coins field.
std::string format_state_literal(const Configuration& cfg,
                                 ProtocolFamily family, const Topology& topo,
                                 bool gated);

/// Writes per-trial rows: seed, initial configuration index, converged flag,
/// step count.
void write_trial_csv(std::ostream& out, const std::vector<TrialOutcome>& rows);

}  // namespace stabilab

#endif  // STABILAB_TEXTIO_HH_
