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

#ifndef STABILAB_TWO_FLAG_HH_
#define STABILAB_TWO_FLAG_HH_

#include "stabilab/protocol.hh"

namespace stabilab {

/// The two-process graph (a single edge) the flag protocol runs on.
Topology two_process_line();

/// Flag raising between two processes.
///
/// Each process holds one boolean. A process raises its flag when both flags
/// are down, and lowers it again when only its own is up. The goal state,
/// both flags up, is reachable only by a simultaneous raise: under any
/// one-at-a-time daemon the processes chase each other forever, while a
/// synchronous step from both-down converges immediately. This makes the
/// protocol the minimal separator between step granularities.
ProtocolDef two_flag_protocol(const Topology& topo);

/// Both flags up.
bool two_flag_legitimate(const Topology& topo, const Configuration& cfg);

}  // namespace stabilab

#endif  // STABILAB_TWO_FLAG_HH_
