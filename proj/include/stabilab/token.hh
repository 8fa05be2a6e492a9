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

#ifndef STABILAB_TOKEN_HH_
#define STABILAB_TOKEN_HH_

#include <cstdint>
#include <vector>

#include "stabilab/protocol.hh"

namespace stabilab {

/// Smallest integer >= 2 that does not divide n. Requires n >= 2.
std::uint32_t smallest_non_divisor(std::uint64_t n);

/// Token circulation on an oriented ring of n processes.
///
/// Each process keeps a counter in [0, m) with m = smallest_non_divisor(n).
/// A process holds a token when its counter differs from its predecessor's
/// counter plus one (mod m); its one action copies predecessor+1, which
/// passes the token to the ring successor. Because m never divides n, at
/// least one token exists in every configuration.
ProtocolDef token_protocol(const Topology& topo);

/// Processes currently holding a token, ascending.
std::vector<ProcessId> token_holders(const Topology& topo,
                                     const Configuration& cfg);

/// Exactly one token present.
bool token_legitimate(const Topology& topo, const Configuration& cfg);

/// Minimum over ordered holder pairs (p, q), p != q, of the distance from p
/// to q walking in successor direction. Raises InvalidInputError when fewer
/// than two tokens are present.
std::uint32_t min_token_distance(const Topology& topo, const Configuration& cfg);

/// Step observable for closure checks: when the pre-step configuration has a
/// single holder, the post-step holder must be its ring successor.
bool token_holder_advances(const Topology& topo, const Configuration& before,
                           const Configuration& after);

}  // namespace stabilab

#endif  // STABILAB_TOKEN_HH_
