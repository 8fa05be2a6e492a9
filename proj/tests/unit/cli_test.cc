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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "stabilab/cli.hh"
#include "stabilab/configuration.hh"
#include "stabilab/textio.hh"
#include "stabilab/token.hh"

using namespace stabilab;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun run;
  run.code = run_cli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current)) {
    if (current == line) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("help is printed on request") {
  const CliRun top = cli({"--help"});
  CHECK(top.code == kExitOk);
  CHECK(top.out.find("Usage: stabilab") != std::string::npos);
  CHECK(top.err.empty());

  const CliRun sub = cli({"check", "--help"});
  CHECK(sub.code == kExitOk);
  CHECK(sub.out.find("exhaustive convergence") != std::string::npos);
}

TEST_CASE("usage errors land on stderr with exit 2") {
  const CliRun missing = cli({});
  CHECK(missing.code == kExitError);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  CHECK(missing.out.empty());

  const CliRun unknown = cli({"check", "--protocol", "token", "--ring", "3",
                              "--frobnicate"});
  CHECK(unknown.code == kExitError);
  CHECK(unknown.err.rfind("error: ", 0) == 0);

  const CliRun conflict = cli({"check", "--protocol", "token", "--ring", "3",
                               "--tree", "0-1"});
  CHECK(conflict.code == kExitError);
  CHECK(conflict.err ==
        "error: give at most one of --ring, --tree, --topology\n");

  const CliRun topo_missing = cli({"check", "--protocol", "token"});
  CHECK(topo_missing.code == kExitError);

  const CliRun wrong_shape = cli({"check", "--protocol", "two-flag", "--ring",
                                  "3"});
  CHECK(wrong_shape.code == kExitError);

  const CliRun bad_policy = cli({"simulate", "--protocol", "token", "--ring",
                                 "3", "--scheduler", "central-rr"});
  CHECK(bad_policy.code == kExitError);
  CHECK(bad_policy.err.find("exhaustive analysis") != std::string::npos);
}

TEST_CASE("the two-flag check report is byte-stable") {
  const CliRun run = cli({"check", "--protocol", "two-flag"});
  CHECK(run.code == kExitOk);
  CHECK(run.err.empty());
  CHECK(run.out ==
        "stabilab report\n"
        "\n"
        "[spec]\n"
        "command = check\n"
        "protocol = two-flag\n"
        "gated = false\n"
        "topology = tree 0-1\n"
        "edge_cap = 10000000\n"
        "\n"
        "[verdicts]\n"
        "configuration_count = 4\n"
        "transition_count = 5\n"
        "legitimate_count = 1\n"
        "terminal_count = 1\n"
        "possible_convergence = true\n"
        "strong_closure = true\n"
        "weakly_stabilizing = true\n"
        "synchronous_lasso = none\n"
        "\n"
        "[exit]\n"
        "code = 0\n");
}

TEST_CASE("the token check finds the synchronous oscillation") {
  const CliRun run = cli({"check", "--protocol", "token", "--ring", "3"});
  CHECK(run.code == kExitOk);
  CHECK(has_line(run.out, "configuration_count = 8"));
  CHECK(has_line(run.out, "transition_count = 20"));
  CHECK(has_line(run.out, "legitimate_count = 6"));
  CHECK(has_line(run.out, "weakly_stabilizing = true"));
  CHECK(has_line(run.out, "synchronous_lasso = found"));
  CHECK(has_line(run.out, "lasso_cycle_length = 2"));
  CHECK(has_line(run.out, "lasso_cycle_0 = dt=[0,0,0]"));
  CHECK(has_line(run.out, "lasso_cycle_1 = dt=[1,1,1]"));
}

TEST_CASE("the leader check matches the documented verdicts") {
  const CliRun run =
      cli({"check", "--protocol", "leader", "--tree", "0-1,1-2,2-3"});
  CHECK(run.code == kExitOk);
  CHECK(has_line(run.out, "configuration_count = 36"));
  CHECK(has_line(run.out, "transition_count = 244"));
  CHECK(has_line(run.out, "weakly_stabilizing = true"));
  CHECK(has_line(run.out, "synchronous_lasso = found"));
}

TEST_CASE("the gated check reports guard preservation and closure") {
  const CliRun run = cli({"check", "--protocol", "two-flag", "--gated"});
  CHECK(run.code == kExitOk);
  CHECK(has_line(run.out, "gated = true"));
  CHECK(has_line(run.out, "configuration_count = 16"));
  CHECK(has_line(run.out, "legitimate_count = 4"));
  CHECK(has_line(run.out, "guard_preservation = true"));
  CHECK(has_line(run.out, "legitimate_closure = true"));

  const CliRun token = cli({"check", "--protocol", "token", "--ring", "3",
                            "--gated"});
  CHECK(token.code == kExitOk);
  CHECK(has_line(token.out, "configuration_count = 64"));
  CHECK(has_line(token.out, "guard_preservation = true"));
  CHECK(has_line(token.out, "legitimate_closure = true"));
}

TEST_CASE("the two-token chase is reported with its schedule") {
  const CliRun run = cli({"lasso", "--protocol", "token", "--ring", "6",
                          "--two-token-init", "--script", "0;3"});
  CHECK(run.code == kExitOk);
  CHECK(has_line(run.out, "lasso_found = true"));
  CHECK(has_line(run.out, "lasso_valid = true"));
  CHECK(has_line(run.out, "avoids_legitimate = true"));
  CHECK(has_line(run.out, "weak_fair = true"));
  CHECK(has_line(run.out, "strong_fair = true"));
  CHECK(has_line(run.out, "gouda_fair = false"));
  CHECK(has_line(run.out, "lasso_cycle_length = 24"));
  CHECK(has_line(run.out,
                 "lasso_cycle_activations = "
                 "0,3,1,4,2,5,3,0,4,1,5,2,0,3,1,4,2,5,3,0,4,1,5,2"));

  const CliRun bare = cli({"lasso", "--protocol", "token", "--ring", "6",
                           "--two-token-init"});
  CHECK(bare.code == kExitError);
  CHECK(bare.err.find("--script") != std::string::npos);

  // Adjacent tokens collide, so no witness exists: an unexpected outcome.
  const CliRun collide = cli({"lasso", "--protocol", "token", "--ring", "6",
                              "--two-token-init", "--script", "0;1"});
  CHECK(collide.code == kExitViolation);
  CHECK(has_line(collide.out, "lasso_found = false"));
}

TEST_CASE("the synchronous lasso search settles for the two-flag protocol") {
  const CliRun run = cli({"lasso", "--protocol", "two-flag"});
  CHECK(run.code == kExitOk);
  CHECK(has_line(run.out, "search = synchronous orbits"));
  CHECK(has_line(run.out, "lasso_found = false"));
}

TEST_CASE("simulate reports are byte-stable") {
  const std::vector<std::string> args = {
      "simulate", "--protocol", "token",  "--ring", "5",
      "--scheduler", "randomized-central", "--seed", "9"};
  const CliRun first = cli(args);
  const CliRun again = cli(args);
  CHECK(first.code == kExitOk);
  CHECK(first.out == again.out);
  CHECK(has_line(first.out, "scheduler = randomized-central"));
  CHECK(has_line(first.out, "init = uniform"));
  CHECK(has_line(first.out, "converged = true"));
}

TEST_CASE("a literal start replays a logged run exactly") {
  const CliRun run = cli({"simulate", "--protocol", "token", "--ring", "5",
                          "--scheduler", "randomized-central", "--seed", "9",
                          "--init", "dt=[0,0,0,0,0]"});
  CHECK(run.code == kExitOk);
  CHECK(has_line(run.out, "initial = dt=[0,0,0,0,0]"));
  CHECK(has_line(run.out, "initial_id = 0"));
  // A literal start uses the given seed as the run seed directly.
  CHECK(has_line(run.out, "run_seed = 9"));
}

TEST_CASE("a stalled script is a usage error") {
  // Both middle processes point at each other: only they are enabled, and the
  // schedule keeps offering process 0.
  const CliRun run = cli({"simulate", "--protocol", "leader", "--tree",
                          "0-1,1-2,2-3", "--scheduler", "scripted", "--script",
                          "0", "--init", "par=[1,2,1,2]"});
  CHECK(run.code == kExitError);
  CHECK(run.err.rfind("error: ", 0) == 0);
}

TEST_CASE("estimate reports do not depend on the thread count") {
  const std::vector<std::string> base = {
      "estimate", "--protocol", "token", "--ring", "4",
      "--scheduler", "randomized-distributed", "--seed", "11",
      "--trials", "40"};
  std::vector<std::string> one = base;
  one.insert(one.end(), {"--threads", "1"});
  std::vector<std::string> three = base;
  three.insert(three.end(), {"--threads", "3"});
  const CliRun a = cli(one);
  const CliRun b = cli(three);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("threads") == std::string::npos);
  CHECK(has_line(a.out, "trials = 40"));
  CHECK(has_line(a.out, "convergence_rate = 1.000000"));
}

TEST_CASE("the report file mirrors stdout") {
  const std::string path = "/tmp/stabilab_cli_test_report.txt";
  const CliRun run = cli({"check", "--protocol", "two-flag", "--out", path});
  CHECK(run.code == kExitOk);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == run.out);
  std::remove(path.c_str());
}

TEST_CASE("CSV rows replay through simulate") {
  const std::string path = "/tmp/stabilab_cli_test_trials.csv";
  const CliRun est = cli({"estimate", "--protocol", "token", "--ring", "4",
                          "--scheduler", "randomized-distributed", "--seed",
                          "11", "--trials", "5", "--csv", path});
  CHECK(est.code == kExitOk);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "seed,initial_id,converged,steps");
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    rows.push_back(line);
  }
  REQUIRE(rows.size() == 5);

  // Decode the first row and replay it with the logged run seed.
  std::istringstream fields(rows[0]);
  std::string seed_text;
  std::string index_text;
  std::string converged_text;
  std::string steps_text;
  REQUIRE(std::getline(fields, seed_text, ','));
  REQUIRE(std::getline(fields, index_text, ','));
  REQUIRE(std::getline(fields, converged_text, ','));
  REQUIRE(std::getline(fields, steps_text, ','));

  const Topology ring = Topology::ring(4);
  const ConfigurationSpace space(token_protocol(ring).domains);
  const std::string literal = format_state_literal(
      space.configuration(std::stoull(index_text)), ProtocolFamily::kToken,
      ring, false);
  const CliRun replay = cli({"simulate", "--protocol", "token", "--ring", "4",
                             "--scheduler", "randomized-distributed",
                             "--seed", seed_text, "--init", literal});
  CHECK(replay.code == kExitOk);
  CHECK(has_line(replay.out, "initial_id = " + index_text));
  CHECK(has_line(replay.out, "run_seed = " + seed_text));
  CHECK(has_line(replay.out, "converged = " + converged_text));
  CHECK(has_line(replay.out, "steps = " + steps_text));
  std::remove(path.c_str());
}
