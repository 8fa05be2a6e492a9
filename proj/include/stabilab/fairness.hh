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

#ifndef STABILAB_FAIRNESS_HH_
#define STABILAB_FAIRNESS_HH_

#include <vector>

#include "stabilab/protocol.hh"

namespace stabilab {

/// One step of a lasso: the configuration the step leaves from and the
/// activation taken there.
struct LassoStep {
  Configuration config;
  Activation activation;
};

/// A finite description of an infinite execution: a prefix followed by a
/// cycle repeated forever. The target of each step is the next step's
/// configuration; the last cycle step closes back to the first cycle
/// configuration.
struct Lasso {
  std::vector<LassoStep> prefix;
  std::vector<LassoStep> cycle;
};

enum class FairnessKind {
  kWeak,    // continuously enabled processes fire infinitely often
  kStrong,  // infinitely-often enabled processes fire infinitely often
  kGouda,   // every step possible at a recurring configuration recurs
};

const char* to_string(FairnessKind k);

/// Whether the infinite execution described by the lasso satisfies the given
/// fairness notion. Only the cycle matters: its configurations are exactly
/// the ones recurring forever.
///
///  - weak: a process enabled at every cycle configuration must be activated
///    by some cycle step.
///  - strong: a process enabled at some cycle configuration must be activated
///    by some cycle step.
///  - gouda: for every configuration on the cycle, every distributed-daemon
///    successor of it must appear as the target of some cycle step leaving
///    it. Strictly stronger than strong fairness.
///
/// The lasso must be structurally valid (see verify_lasso); the protocol must
/// be deterministic for kGouda, which enumerates successors.
bool check_fairness(const Lasso& lasso, FairnessKind kind,
                    const ProtocolDef& proto, const Topology& topo);

}  // namespace stabilab

#endif  // STABILAB_FAIRNESS_HH_
