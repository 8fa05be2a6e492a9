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

#ifndef STABILAB_TRANSFORM_HH_
#define STABILAB_TRANSFORM_HH_

#include <functional>

#include "stabilab/protocol.hh"

namespace stabilab {

/// Coin-gating construction: turns a deterministic protocol into a
/// probabilistic one with identical enabledness.
///
/// Every process gains a private coin bit. Guards evaluate the original
/// guards on the coin-free projection, so a process is enabled in the gated
/// protocol exactly when it is enabled in the original. When an enabled
/// process fires, it tosses its coin; on heads (probability win_bias) it also
/// executes the original statement, on tails it only records the toss and
/// leaves its payload state unchanged. Payload steps therefore simulate
/// original steps under a sparser daemon, and any invariant of the original
/// protocol's payload carries over.
///
/// Local state encoding: code = payload * 2 + coin.
ProtocolDef coin_gated(const ProtocolDef& base, double win_bias = 0.5);

/// The coin-free projection of one gated local state.
inline LocalState gated_payload(LocalState s) { return s >> 1; }

/// The coin bit of one gated local state.
inline bool gated_coin(LocalState s) { return (s & 1) != 0; }

/// Builds a gated local state from payload and coin.
inline LocalState gated_state(LocalState payload, bool coin) {
  return payload * 2 + (coin ? 1 : 0);
}

/// The coin-free projection of a gated configuration.
Configuration gated_projection(const Configuration& cfg);

/// Lifts a predicate on base configurations to gated ones: the predicate is
/// evaluated on the coin-free projection, so coins never affect membership.
std::function<bool(const Topology&, const Configuration&)> lift_predicate(
    std::function<bool(const Topology&, const Configuration&)> base);

/// Lifts a step observable the same way.
std::function<bool(const Topology&, const Configuration&, const Configuration&)>
lift_observable(
    std::function<bool(const Topology&, const Configuration&, const Configuration&)>
        base);

}  // namespace stabilab

#endif  // STABILAB_TRANSFORM_HH_
