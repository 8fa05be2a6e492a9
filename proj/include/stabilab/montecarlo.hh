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

#ifndef STABILAB_MONTECARLO_HH_
#define STABILAB_MONTECARLO_HH_

#include <cstdint>
#include <optional>
#include <vector>

#include "stabilab/analysis.hh"
#include "stabilab/scheduler.hh"

namespace stabilab {

/// Result of one simulated run.
struct TrialOutcome {
  std::uint64_t seed = 0;           // stream seed of this run
  std::uint64_t initial_index = 0;  // start configuration, space index
  bool converged = false;           // reached the legitimate set
  /// Steps taken to the first legitimate configuration, or steps executed
  /// before giving up at the cap.
  std::uint64_t steps = 0;
  /// The run died in a non-legitimate configuration with nothing enabled.
  /// Impossible for deadlock-free protocols; reported, never raised.
  bool stuck_terminal = false;
};

/// Default bound on steps per run.
inline constexpr std::uint64_t kDefaultStepCap = 100'000;

/// Runs one execution from `init` until the legitimate set is reached, a
/// terminal configuration is hit, or step_cap steps have been executed.
/// The scheduler state and the random stream are created here from `seed`,
/// so equal arguments reproduce the run exactly. Accepts the randomized,
/// synchronous and scripted policies; the deterministic sequential policies
/// are for exhaustive analysis, not sampling, and are rejected.
TrialOutcome run_trial(const ProtocolDef& proto, const Topology& topo,
                       const SchedulerPolicy& policy, const Configuration& init,
                       const Predicate& legitimate, std::uint64_t seed,
                       std::uint64_t step_cap = kDefaultStepCap);

/// Aggregate statistics over a batch of runs. Step statistics cover the
/// converged runs only.
struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t converged = 0;
  std::uint64_t stuck_terminal = 0;
  double convergence_rate = 0.0;

  bool steps_available = false;  // at least one converged run
  double mean_steps = 0.0;
  double median_steps = 0.0;
  double p95_steps = 0.0;
  std::uint64_t min_steps = 0;
  std::uint64_t max_steps = 0;
  /// Half-width of the normal-theory 95% confidence interval of the mean.
  double mean_ci95 = 0.0;

  std::vector<TrialOutcome> outcomes;  // per run, in trial order
};

/// Runs `trials` independent executions and aggregates them. Trial i derives
/// its seeds from (master_seed, i), so results do not depend on scheduling:
/// trials may run on several threads (STABILAB_THREADS or `threads`; 0 means
/// automatic) and the aggregate is byte-stable either way. When `init` is
/// empty, every trial draws its start configuration uniformly from the full
/// space; otherwise all trials start at *init.
TrialStats estimate(const ProtocolDef& proto, const Topology& topo,
                    const SchedulerPolicy& policy,
                    const std::optional<Configuration>& init,
                    const Predicate& legitimate, std::uint64_t trials,
                    std::uint64_t master_seed,
                    std::uint64_t step_cap = kDefaultStepCap,
                    unsigned threads = 0);

/// Thread count resolution: explicit argument, else STABILAB_THREADS, else
/// the hardware concurrency, clamped to [1, 64].
unsigned resolve_thread_count(unsigned requested);

}  // namespace stabilab

#endif  // STABILAB_MONTECARLO_HH_
