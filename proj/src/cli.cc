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

#include "stabilab/cli.hh"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stabilab/analysis.hh"
#include "stabilab/errors.hh"
#include "stabilab/leader.hh"
#include "stabilab/report.hh"
#include "stabilab/token.hh"
#include "stabilab/transform.hh"
#include "stabilab/two_flag.hh"

namespace stabilab {

const char* to_string(Command c) {
  switch (c) {
    case Command::kCheck:
      return "check";
    case Command::kLasso:
      return "lasso";
    case Command::kSimulate:
      return "simulate";
    case Command::kEstimate:
      return "estimate";
  }
  return "?";
}

namespace {

PolicyKind parse_policy_kind(const std::string& name) {
  if (name == "central-rr") {
    return PolicyKind::kCentralRoundRobin;
  }
  if (name == "distributed-full") {
    return PolicyKind::kDistributedFull;
  }
  if (name == "synchronous") {
    return PolicyKind::kSynchronous;
  }
  if (name == "randomized-central") {
    return PolicyKind::kRandomizedCentral;
  }
  if (name == "randomized-distributed") {
    return PolicyKind::kRandomizedDistributed;
  }
  if (name == "scripted") {
    return PolicyKind::kScripted;
  }
  throw InvalidInputError(
      "unknown scheduler '" + name +
      "' (want central-rr, distributed-full, synchronous, "
      "randomized-central, randomized-distributed or scripted)");
}

// The protocol instance one invocation runs on.
struct Instance {
  Topology topo;
  ProtocolDef base;          // the deterministic protocol
  ProtocolDef proto;         // base, or its coin-gated version
  Predicate base_legitimate;
  Predicate legitimate;      // lifted when gated
  Observable observable;     // step observable of the base protocol, may be null
};

Topology build_topology(const RunSpec& spec) {
  int sources = 0;
  sources += spec.ring_n.has_value();
  sources += spec.tree_edges.has_value();
  sources += spec.topology_file.has_value();
  if (sources > 1) {
    throw InvalidInputError("give at most one of --ring, --tree, --topology");
  }
  if (spec.ring_n.has_value()) {
    return Topology::ring(*spec.ring_n);
  }
  if (spec.tree_edges.has_value()) {
    return Topology::tree(parse_edge_list(*spec.tree_edges));
  }
  if (spec.topology_file.has_value()) {
    return read_topology_file(*spec.topology_file);
  }
  if (spec.family == ProtocolFamily::kTwoFlag) {
    return two_process_line();
  }
  throw InvalidInputError("a topology is required: --ring, --tree or --topology");
}

Instance build_instance(const RunSpec& spec) {
  Topology topo = build_topology(spec);
  ProtocolDef base;
  Predicate legit;
  Observable observable;
  switch (spec.family) {
    case ProtocolFamily::kToken:
      base = token_protocol(topo);
      legit = [](const Topology& t, const Configuration& c) {
        return token_legitimate(t, c);
      };
      observable = [](const Topology& t, const Configuration& a,
                      const Configuration& b) {
        return token_holder_advances(t, a, b);
      };
      break;
    case ProtocolFamily::kLeader:
      base = leader_protocol(topo);
      legit = [](const Topology& t, const Configuration& c) {
        return is_lc(t, c);
      };
      observable = [](const Topology& t, const Configuration& a,
                      const Configuration& b) {
        return leader_set_stable(t, a, b);
      };
      break;
    case ProtocolFamily::kTwoFlag:
      base = two_flag_protocol(topo);
      legit = [](const Topology& t, const Configuration& c) {
        return two_flag_legitimate(t, c);
      };
      break;
  }
  ProtocolDef active = spec.gated ? coin_gated(base) : base;
  Predicate active_legit = spec.gated ? lift_predicate(legit) : legit;
  return Instance{std::move(topo), std::move(base), std::move(active),
                  std::move(legit), std::move(active_legit),
                  std::move(observable)};
}

std::string describe_topology(const Topology& topo) {
  if (topo.has_pred()) {
    return "ring n=" + std::to_string(topo.node_count());
  }
  return "tree " + format_edge_list(topo);
}

std::string format_script(const std::vector<std::vector<ProcessId>>& script) {
  std::string out;
  for (std::size_t i = 0; i < script.size(); ++i) {
    if (i > 0) {
      out += ';';
    }
    for (std::size_t j = 0; j < script[i].size(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += std::to_string(script[i][j]);
    }
  }
  return out;
}

std::vector<std::vector<ProcessId>> load_script(const RunSpec& spec,
                                                const Topology& topo) {
  if (spec.script_text.has_value() == spec.script_file.has_value()) {
    throw InvalidInputError(
        "a scripted schedule needs exactly one of --script, --script-file");
  }
  std::vector<std::vector<ProcessId>> script;
  if (spec.script_text.has_value()) {
    script = parse_script(*spec.script_text);
  } else {
    std::ifstream in(*spec.script_file);
    if (!in) {
      throw InvalidInputError("cannot open schedule file '" +
                              *spec.script_file + "'");
    }
    script = parse_script_stream(in);
  }
  validate_script(script, topo);
  return script;
}

SchedulerPolicy build_policy(const RunSpec& spec, const Topology& topo) {
  if (!spec.policy.has_value()) {
    throw InvalidInputError("--scheduler is required");
  }
  switch (*spec.policy) {
    case PolicyKind::kCentralRoundRobin:
      return SchedulerPolicy::central_round_robin();
    case PolicyKind::kDistributedFull:
      return SchedulerPolicy::distributed_full();
    case PolicyKind::kSynchronous:
      return SchedulerPolicy::synchronous();
    case PolicyKind::kRandomizedCentral:
      return SchedulerPolicy::randomized_central();
    case PolicyKind::kRandomizedDistributed:
      return SchedulerPolicy::randomized_distributed();
    case PolicyKind::kScripted:
      return SchedulerPolicy::scripted(load_script(spec, topo));
  }
  throw InvalidInputError("unknown scheduler policy");
}

void echo_spec(const RunSpec& spec, const Instance& inst, ReportDoc* doc) {
  doc->begin_section("spec");
  doc->kv("command", to_string(spec.command));
  doc->kv("protocol", to_string(spec.family));
  doc->kv("gated", spec.gated);
  doc->kv("topology", describe_topology(inst.topo));
  if (spec.topology_file.has_value()) {
    doc->kv("topology_file", *spec.topology_file);
  }
}

std::string state_literal(const RunSpec& spec, const Instance& inst,
                          const Configuration& cfg) {
  return format_state_literal(cfg, spec.family, inst.topo, spec.gated);
}

// ---- check ----------------------------------------------------------------

int run_check_deterministic(const RunSpec& spec, const Instance& inst,
                            ReportDoc* doc) {
  const EnumerationLimits limits{spec.edge_cap, 20};
  const TransitionSystem ts =
      enumerate_system(inst.proto, inst.topo, SchedulerClass::kDistributed,
                       limits);
  const ConvergenceVerdict conv =
      check_possible_convergence(ts, inst.topo, inst.legitimate);
  const ClosureVerdict clos =
      check_closure(ts, inst.topo, inst.legitimate, inst.observable);
  const std::vector<std::uint64_t> terminals = terminal_configurations(ts);
  const std::optional<Lasso> lasso =
      find_synchronous_lasso(inst.proto, inst.topo, inst.legitimate, limits);
  const bool weakly = conv.holds && clos.holds;

  doc->begin_section("verdicts");
  doc->kv("configuration_count", ts.space.size());
  doc->kv("transition_count", ts.edge_count);
  doc->kv("legitimate_count", conv.legitimate_count);
  doc->kv("terminal_count", static_cast<std::uint64_t>(terminals.size()));
  doc->kv("possible_convergence", conv.holds);
  doc->kv("strong_closure", clos.holds);
  doc->kv("weakly_stabilizing", weakly);
  doc->kv("synchronous_lasso", lasso.has_value() ? "found" : "none");

  if (!conv.holds || !clos.holds || lasso.has_value()) {
    doc->begin_section("witnesses");
  }
  if (!conv.holds) {
    doc->kv("stuck_count", conv.stuck_total);
    for (std::size_t i = 0; i < conv.stuck.size(); ++i) {
      doc->kv("stuck_" + std::to_string(i),
              state_literal(spec, inst, ts.space.configuration(conv.stuck[i])));
    }
  }
  if (!clos.holds && clos.violation.has_value()) {
    doc->kv("closure_violation_from",
            state_literal(spec, inst,
                          ts.space.configuration(clos.violation->first)));
    doc->kv("closure_violation_to",
            state_literal(spec, inst,
                          ts.space.configuration(clos.violation->second)));
  }
  if (lasso.has_value()) {
    doc->kv("lasso_prefix_length",
            static_cast<std::uint64_t>(lasso->prefix.size()));
    doc->kv("lasso_cycle_length",
            static_cast<std::uint64_t>(lasso->cycle.size()));
    const std::size_t shown = std::min<std::size_t>(lasso->cycle.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
      doc->kv("lasso_cycle_" + std::to_string(i),
              state_literal(spec, inst, lasso->cycle[i].config));
    }
  }
  return weakly ? kExitOk : kExitViolation;
}

int run_check_gated(const RunSpec& spec, const Instance& inst, ReportDoc* doc) {
  const ConfigurationSpace space(inst.proto.domains);
  if (space.size() > spec.edge_cap) {
    throw ResourceLimitError("configuration count " +
                             std::to_string(space.size()) + " exceeds cap " +
                             std::to_string(spec.edge_cap));
  }

  bool guards_match = true;
  std::optional<std::uint64_t> guard_witness;
  std::uint64_t legit_count = 0;
  bool closed = true;
  std::optional<std::pair<Configuration, Configuration>> closure_witness;
  std::uint64_t outcome_edges = 0;

  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Configuration cfg = space.configuration(i);
    const Configuration payload = gated_projection(cfg);
    for (ProcessId p = 0; p < inst.topo.node_count() && guards_match; ++p) {
      if (enabled_actions(inst.proto, inst.topo, cfg, p) !=
          enabled_actions(inst.base, inst.topo, payload, p)) {
        guards_match = false;
        guard_witness = i;
      }
    }
    if (!inst.legitimate(inst.topo, cfg)) {
      continue;
    }
    ++legit_count;
    for (const Configuration& next : outcome_successors(
             inst.proto, inst.topo, cfg, SchedulerClass::kDistributed)) {
      ++outcome_edges;
      if (closed && !inst.legitimate(inst.topo, next)) {
        closed = false;
        closure_witness = {cfg, next};
      }
    }
  }

  doc->begin_section("verdicts");
  doc->kv("configuration_count", space.size());
  doc->kv("legitimate_count", legit_count);
  doc->kv("guard_preservation", guards_match);
  doc->kv("outcome_edges_checked", outcome_edges);
  doc->kv("legitimate_closure", closed);
  if (guard_witness.has_value() || closure_witness.has_value()) {
    doc->begin_section("witnesses");
    if (guard_witness.has_value()) {
      doc->kv("guard_mismatch_at",
              state_literal(spec, inst, space.configuration(*guard_witness)));
    }
    if (closure_witness.has_value()) {
      doc->kv("closure_violation_from",
              state_literal(spec, inst, closure_witness->first));
      doc->kv("closure_violation_to",
              state_literal(spec, inst, closure_witness->second));
    }
  }
  return guards_match && closed ? kExitOk : kExitViolation;
}

int run_check(const RunSpec& spec, const Instance& inst, ReportDoc* doc) {
  echo_spec(spec, inst, doc);
  doc->kv("edge_cap", spec.edge_cap);
  if (spec.gated) {
    return run_check_gated(spec, inst, doc);
  }
  return run_check_deterministic(spec, inst, doc);
}

// ---- lasso ----------------------------------------------------------------

void report_lasso_shape(const RunSpec& spec, const Instance& inst,
                        const Lasso& lasso, ReportDoc* doc) {
  doc->begin_section("witnesses");
  doc->kv("lasso_prefix_length",
          static_cast<std::uint64_t>(lasso.prefix.size()));
  doc->kv("lasso_cycle_length", static_cast<std::uint64_t>(lasso.cycle.size()));
  std::vector<Configuration> distinct;
  for (const LassoStep& step : lasso.cycle) {
    distinct.push_back(step.config);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  doc->kv("lasso_distinct_configurations",
          static_cast<std::uint64_t>(distinct.size()));
  doc->kv("lasso_start", state_literal(spec, inst, lasso.cycle.front().config));

  // Single-process steps render as the sequence of fired ids.
  bool all_single = true;
  for (const LassoStep& step : lasso.cycle) {
    all_single &= step.activation.moves.size() == 1;
  }
  if (all_single) {
    std::string seq;
    for (const LassoStep& step : lasso.cycle) {
      if (!seq.empty()) {
        seq += ',';
      }
      seq += std::to_string(step.activation.moves[0].first);
    }
    doc->kv("lasso_cycle_activations", seq);
  } else {
    const std::size_t shown = std::min<std::size_t>(lasso.cycle.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
      doc->kv("lasso_cycle_" + std::to_string(i),
              state_literal(spec, inst, lasso.cycle[i].config));
    }
  }
}

int run_lasso(const RunSpec& spec, const Instance& inst, ReportDoc* doc) {
  echo_spec(spec, inst, doc);
  if (spec.gated) {
    throw InvalidInputError("lasso search runs on deterministic protocols");
  }

  std::optional<Lasso> lasso;
  if (spec.two_token_init) {
    if (spec.family != ProtocolFamily::kToken) {
      throw InvalidInputError("--two-token-init applies to the token protocol");
    }
    if (!spec.script_text.has_value()) {
      throw InvalidInputError(
          "--two-token-init needs --script naming the two start positions, "
          "e.g. --script \"0;3\"");
    }
    const auto script = parse_script(*spec.script_text);
    validate_script(script, inst.topo);
    if (script.size() != 2 || script[0].size() != 1 || script[1].size() != 1) {
      throw InvalidInputError(
          "--two-token-init wants a schedule of two single processes");
    }
    doc->kv("token_positions", format_script(script));
    doc->kv("search", "two-token chase");
    lasso = alternating_token_lasso(inst.topo, script[0][0], script[1][0]);
  } else {
    doc->kv("search", "synchronous orbits");
    lasso = find_synchronous_lasso(inst.proto, inst.topo, inst.legitimate,
                                   {spec.edge_cap, 20});
  }

  doc->begin_section("verdicts");
  doc->kv("lasso_found", lasso.has_value());
  if (!lasso.has_value()) {
    // Nothing diverges: a legitimate outcome for the synchronous search, a
    // failed construction for the chase.
    return spec.two_token_init ? kExitViolation : kExitOk;
  }

  bool valid = true;
  LassoVerdict verdict;
  try {
    verdict = verify_lasso(*lasso, inst.proto, inst.topo, inst.legitimate,
                           FairnessKind::kStrong);
  } catch (const InvalidLassoError&) {
    valid = false;
  }
  doc->kv("lasso_valid", valid);
  if (valid) {
    doc->kv("avoids_legitimate", verdict.avoids_legitimate);
    doc->kv("weak_fair",
            check_fairness(*lasso, FairnessKind::kWeak, inst.proto, inst.topo));
    doc->kv("strong_fair", verdict.fair);
    doc->kv("gouda_fair",
            check_fairness(*lasso, FairnessKind::kGouda, inst.proto, inst.topo));
    report_lasso_shape(spec, inst, *lasso, doc);
  }

  const bool expected =
      valid && verdict.avoids_legitimate &&
      (!spec.two_token_init || verdict.fair);
  return expected ? kExitOk : kExitViolation;
}

// ---- simulate / estimate ---------------------------------------------------

constexpr std::uint64_t kInitPhase = 0;
constexpr std::uint64_t kRunPhase = 1;

Configuration draw_uniform(const ConfigurationSpace& space, std::uint64_t seed) {
  RandomSource rnd(seed);
  Configuration cfg;
  cfg.states.reserve(space.process_count());
  for (std::uint32_t d : space.domains()) {
    cfg.states.push_back(static_cast<LocalState>(rnd.below(d)));
  }
  return cfg;
}

void echo_run_options(const RunSpec& spec, const SchedulerPolicy& policy,
                      ReportDoc* doc) {
  doc->kv("scheduler", to_string(policy.kind));
  if (policy.kind == PolicyKind::kScripted) {
    doc->kv("script", format_script(policy.script));
  }
  doc->kv("seed", spec.seed);
  doc->kv("step_cap", spec.step_cap);
  doc->kv("init", spec.init_literal.has_value() ? *spec.init_literal
                                                : std::string("uniform"));
}

int run_simulate(const RunSpec& spec, const Instance& inst, ReportDoc* doc) {
  const SchedulerPolicy policy = build_policy(spec, inst.topo);
  echo_spec(spec, inst, doc);
  echo_run_options(spec, policy, doc);

  Configuration init;
  std::uint64_t run_seed;
  if (spec.init_literal.has_value()) {
    init = parse_state_literal(*spec.init_literal, spec.family, inst.topo,
                               spec.gated);
    run_seed = spec.seed;  // replays a logged trial exactly
  } else {
    const ConfigurationSpace space(inst.proto.domains);
    init = draw_uniform(space, derive_seed(spec.seed, kInitPhase));
    run_seed = derive_seed(spec.seed, kRunPhase);
  }
  const TrialOutcome outcome =
      run_trial(inst.proto, inst.topo, policy, init, inst.legitimate, run_seed,
                spec.step_cap);

  doc->begin_section("stats");
  doc->kv("initial", state_literal(spec, inst, init));
  doc->kv("initial_id", outcome.initial_index);
  doc->kv("run_seed", run_seed);
  doc->kv("converged", outcome.converged);
  doc->kv("steps", outcome.steps);
  doc->kv("stuck_terminal", outcome.stuck_terminal);
  return outcome.stuck_terminal ? kExitViolation : kExitOk;
}

int run_estimate(const RunSpec& spec, const Instance& inst, ReportDoc* doc) {
  const SchedulerPolicy policy = build_policy(spec, inst.topo);
  echo_spec(spec, inst, doc);
  echo_run_options(spec, policy, doc);
  doc->kv("trials", spec.trials);

  std::optional<Configuration> init;
  if (spec.init_literal.has_value()) {
    init = parse_state_literal(*spec.init_literal, spec.family, inst.topo,
                               spec.gated);
  }
  const TrialStats stats =
      estimate(inst.proto, inst.topo, policy, init, inst.legitimate,
               spec.trials, spec.seed, spec.step_cap, spec.threads);

  doc->begin_section("stats");
  doc->kv("trials", stats.trials);
  doc->kv("converged", stats.converged);
  doc->kv("convergence_rate", stats.convergence_rate);
  doc->kv("stuck_terminal", stats.stuck_terminal);
  if (stats.steps_available) {
    doc->kv("mean_steps", stats.mean_steps);
    doc->kv("median_steps", stats.median_steps);
    doc->kv("p95_steps", stats.p95_steps);
    doc->kv("min_steps", stats.min_steps);
    doc->kv("max_steps", stats.max_steps);
    doc->kv("mean_ci95", stats.mean_ci95);
  }

  if (spec.csv_path.has_value()) {
    std::ofstream csv(*spec.csv_path);
    if (!csv) {
      throw InvalidInputError("cannot write CSV file '" + *spec.csv_path + "'");
    }
    write_trial_csv(csv, stats.outcomes);
  }
  return stats.stuck_terminal == 0 ? kExitOk : kExitViolation;
}

}  // namespace

RunSpec parse_args(const std::vector<std::string>& args) {
  RunSpec spec;
  std::string protocol_name;
  std::string scheduler_name;

  CLI::App app{"workbench for self-stabilizing protocols", "stabilab"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand(
      "check", "exhaustive convergence and closure analysis");
  CLI::App* lasso = app.add_subcommand(
      "lasso", "search for executions that never stabilize");
  CLI::App* simulate =
      app.add_subcommand("simulate", "run one scheduled execution");
  CLI::App* estimate = app.add_subcommand(
      "estimate", "sample executions and report hitting statistics");

  for (CLI::App* cmd : {check, lasso, simulate, estimate}) {
    cmd->add_option("--protocol", protocol_name,
                    "protocol family: token, leader, two-flag")
        ->required();
    cmd->add_option("--ring", spec.ring_n, "ring topology with N processes");
    cmd->add_option("--tree", spec.tree_edges,
                    "tree topology from an edge list, e.g. 0-1,1-2");
    cmd->add_option("--topology", spec.topology_file,
                    "topology description file");
    cmd->add_option("--out", spec.out_path, "also write the report here");
  }
  for (CLI::App* cmd : {check, simulate, estimate}) {
    cmd->add_flag("--gated", spec.gated,
                  "wrap every action in a fair coin toss");
  }
  for (CLI::App* cmd : {check, lasso}) {
    cmd->add_option("--edge-cap", spec.edge_cap,
                    "abort beyond this many configurations or transitions");
  }
  lasso->add_flag("--two-token-init", spec.two_token_init,
                  "chase two tokens from the positions named by --script");
  lasso->add_option("--script", spec.script_text,
                    "two start positions for the chase, e.g. \"0;3\"");
  for (CLI::App* cmd : {simulate, estimate}) {
    cmd->add_option("--scheduler", scheduler_name,
                    "central-rr, distributed-full, synchronous, "
                    "randomized-central, randomized-distributed, scripted")
        ->required();
    cmd->add_option("--seed", spec.seed, "master random seed");
    cmd->add_option("--cap", spec.step_cap, "step bound per run");
    cmd->add_option("--init", spec.init_literal,
                    "start configuration literal (default: uniform draw)");
    cmd->add_option("--script", spec.script_text,
                    "schedule entries 'ids;ids;...' for --scheduler scripted");
    cmd->add_option("--script-file", spec.script_file,
                    "schedule file, one comma-separated entry per line");
  }
  estimate->add_option("--trials", spec.trials, "number of runs");
  estimate->add_option("--csv", spec.csv_path, "write per-run rows here");
  estimate->add_option("--threads", spec.threads,
                       "worker threads (default: STABILAB_THREADS or auto)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("stabilab");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub =
        app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    throw HelpRequested{sub->help()};
  } catch (const CLI::ParseError& e) {
    throw InvalidInputError(e.what());
  }

  if (check->parsed()) {
    spec.command = Command::kCheck;
  } else if (lasso->parsed()) {
    spec.command = Command::kLasso;
  } else if (simulate->parsed()) {
    spec.command = Command::kSimulate;
  } else {
    spec.command = Command::kEstimate;
  }
  spec.family = parse_family(protocol_name);
  if (!scheduler_name.empty()) {
    spec.policy = parse_policy_kind(scheduler_name);
  }
  return spec;
}

int execute(const RunSpec& spec, std::ostream& out) {
  const Instance inst = build_instance(spec);
  ReportDoc doc;
  int code = kExitError;
  switch (spec.command) {
    case Command::kCheck:
      code = run_check(spec, inst, &doc);
      break;
    case Command::kLasso:
      code = run_lasso(spec, inst, &doc);
      break;
    case Command::kSimulate:
      code = run_simulate(spec, inst, &doc);
      break;
    case Command::kEstimate:
      code = run_estimate(spec, inst, &doc);
      break;
  }
  doc.begin_section("exit");
  doc.kv("code", static_cast<std::uint64_t>(code));
  out << doc.str();
  if (spec.out_path.has_value()) {
    std::ofstream f(*spec.out_path);
    if (!f) {
      throw InvalidInputError("cannot write report file '" + *spec.out_path +
                              "'");
    }
    f << doc.str();
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return execute(parse_args(args), out);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace stabilab
