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

#include "stabilab/montecarlo.hh"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "stabilab/errors.hh"

namespace stabilab {

namespace {

// Seed stream tags: index 0 derives the initial-configuration stream,
// index 1 the run stream.
constexpr std::uint64_t kInitPhase = 0;
constexpr std::uint64_t kRunPhase = 1;

void require_sampling_policy(const SchedulerPolicy& policy) {
  switch (policy.kind) {
    case PolicyKind::kSynchronous:
    case PolicyKind::kRandomizedCentral:
    case PolicyKind::kRandomizedDistributed:
    case PolicyKind::kScripted:
      return;
    case PolicyKind::kCentralRoundRobin:
    case PolicyKind::kDistributedFull:
      throw InvalidInputError(
          std::string("policy ") + to_string(policy.kind) +
          " is for exhaustive analysis; sampling accepts synchronous, "
          "randomized and scripted policies");
  }
}

}  // namespace

TrialOutcome run_trial(const ProtocolDef& proto, const Topology& topo,
                       const SchedulerPolicy& policy, const Configuration& init,
                       const Predicate& legitimate, std::uint64_t seed,
                       std::uint64_t step_cap) {
  require_sampling_policy(policy);
  validate_configuration(proto, init);

  TrialOutcome outcome;
  outcome.seed = seed;
  outcome.initial_index = ConfigurationSpace(proto.domains).index_of(init);

  RandomSource rnd(seed);
  Scheduler scheduler(policy);
  Configuration cfg = init;
  for (;;) {
    if (legitimate(topo, cfg)) {
      outcome.converged = true;
      return outcome;
    }
    if (outcome.steps >= step_cap) {
      return outcome;
    }
    const std::vector<ProcessId> enabled = enabled_processes(proto, topo, cfg);
    if (enabled.empty()) {
      outcome.stuck_terminal = true;
      return outcome;
    }
    const std::vector<ProcessId> chosen =
        scheduler.select(enabled, rnd, outcome.steps);
    cfg = apply(proto, topo, cfg, activation_for(proto, topo, cfg, chosen), rnd);
    ++outcome.steps;
  }
}

unsigned resolve_thread_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("STABILAB_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) {
        n = static_cast<unsigned>(v);
      }
    }
  }
  if (n == 0) {
    n = std::thread::hardware_concurrency();
  }
  return std::clamp(n, 1u, 64u);
}

TrialStats estimate(const ProtocolDef& proto, const Topology& topo,
                    const SchedulerPolicy& policy,
                    const std::optional<Configuration>& init,
                    const Predicate& legitimate, std::uint64_t trials,
                    std::uint64_t master_seed, std::uint64_t step_cap,
                    unsigned threads) {
  require_sampling_policy(policy);
  if (trials == 0) {
    throw InvalidInputError("estimate needs at least one trial");
  }
  if (init.has_value()) {
    validate_configuration(proto, *init);
  }
  const ConfigurationSpace space(proto.domains);

  TrialStats stats;
  stats.trials = trials;
  stats.outcomes.resize(trials);

  const auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t trial_seed = derive_seed(master_seed, i);
      Configuration start;
      if (init.has_value()) {
        start = *init;
      } else {
        RandomSource init_rnd(derive_seed(trial_seed, kInitPhase));
        start.states.reserve(space.process_count());
        for (std::uint32_t d : space.domains()) {
          start.states.push_back(static_cast<LocalState>(init_rnd.below(d)));
        }
      }
      stats.outcomes[i] = run_trial(proto, topo, policy, start, legitimate,
                                    derive_seed(trial_seed, kRunPhase),
                                    step_cap);
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(
      resolve_thread_count(threads), trials));
  if (workers <= 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = trials * w / workers;
      const std::uint64_t end = trials * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
    // Trials are deterministic, so which one fails does not depend on the
    // interleaving; surface the failure from the lowest block.
    for (const std::exception_ptr& e : failures) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }

  // Aggregation is sequential and in trial order, so the statistics do not
  // depend on the thread count.
  std::vector<std::uint64_t> steps;
  steps.reserve(trials);
  for (const TrialOutcome& o : stats.outcomes) {
    if (o.converged) {
      ++stats.converged;
      steps.push_back(o.steps);
    }
    if (o.stuck_terminal) {
      ++stats.stuck_terminal;
    }
  }
  stats.convergence_rate =
      static_cast<double>(stats.converged) / static_cast<double>(trials);
  if (!steps.empty()) {
    stats.steps_available = true;
    std::sort(steps.begin(), steps.end());
    stats.min_steps = steps.front();
    stats.max_steps = steps.back();

    std::uint64_t sum = 0;
    for (std::uint64_t s : steps) {
      sum += s;
    }
    const double n = static_cast<double>(steps.size());
    stats.mean_steps = static_cast<double>(sum) / n;

    const std::size_t mid = steps.size() / 2;
    stats.median_steps =
        steps.size() % 2 == 1
            ? static_cast<double>(steps[mid])
            : (static_cast<double>(steps[mid - 1]) +
               static_cast<double>(steps[mid])) / 2.0;

    // Nearest-rank 95th percentile.
    const std::size_t rank = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(steps.size())));
    stats.p95_steps = static_cast<double>(steps[rank == 0 ? 0 : rank - 1]);

    if (steps.size() > 1) {
      double ss = 0.0;
      for (std::uint64_t s : steps) {
        const double d = static_cast<double>(s) - stats.mean_steps;
        ss += d * d;
      }
      const double stddev = std::sqrt(ss / (n - 1.0));
      stats.mean_ci95 = 1.96 * stddev / std::sqrt(n);
    }
  }
  return stats;
}

}  // namespace stabilab
