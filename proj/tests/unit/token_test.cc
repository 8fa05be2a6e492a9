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

#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "stabilab/configuration.hh"
#include "stabilab/errors.hh"
#include "stabilab/random.hh"
#include "stabilab/token.hh"

using namespace stabilab;

TEST_CASE("smallest non-divisor, fixed values") {
  const std::map<std::uint64_t, std::uint32_t> expect{
      {2, 3}, {3, 2}, {4, 3}, {5, 2}, {6, 4}, {7, 2}, {8, 3}, {9, 2}};
  for (const auto& [n, m] : expect) {
    CHECK(smallest_non_divisor(n) == m);
  }
}

TEST_CASE("smallest non-divisor, defining property") {
  for (std::uint64_t n = 2; n <= 50; ++n) {
    const std::uint32_t m = smallest_non_divisor(n);
    CHECK(m >= 2);
    CHECK(n % m != 0);
    for (std::uint32_t k = 2; k < m; ++k) {
      CHECK(n % k == 0);
    }
  }
}

TEST_CASE("token holders on fixed configurations") {
  const Topology ring = Topology::ring(3);  // m = 2
  CHECK(token_holders(ring, Configuration({0, 0, 0})) ==
        std::vector<ProcessId>{0, 1, 2});
  CHECK(token_holders(ring, Configuration({0, 0, 1})) ==
        std::vector<ProcessId>{1});
  CHECK(token_holders(ring, Configuration({0, 1, 1})) ==
        std::vector<ProcessId>{2});
  CHECK(token_holders(ring, Configuration({1, 0, 1})) ==
        std::vector<ProcessId>{0});
  CHECK(token_legitimate(ring, Configuration({0, 0, 1})));
  CHECK_FALSE(token_legitimate(ring, Configuration({0, 0, 0})));
}

TEST_CASE("every configuration holds at least one token") {
  for (std::uint32_t n = 3; n <= 7; ++n) {
    const Topology ring = Topology::ring(n);
    const ProtocolDef proto = token_protocol(ring);
    const ConfigurationSpace space(proto.domains);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      CHECK_FALSE(token_holders(ring, space.configuration(i)).empty());
    }
  }
}

TEST_CASE("configuration and legitimate counts on small rings") {
  const std::map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>>
      expect{{3, {8, 6}},
             {4, {81, 12}},
             {5, {32, 10}},
             {6, {4096, 24}},
             {7, {128, 14}}};
  for (const auto& [n, counts] : expect) {
    const Topology ring = Topology::ring(n);
    const ProtocolDef proto = token_protocol(ring);
    const ConfigurationSpace space(proto.domains);
    CHECK(space.size() == counts.first);
    std::uint64_t legit = 0;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      if (token_legitimate(ring, space.configuration(i))) {
        ++legit;
      }
    }
    CHECK(legit == counts.second);
  }
}

TEST_CASE("enabled means holding a token") {
  const Topology ring = Topology::ring(4);
  const ProtocolDef proto = token_protocol(ring);
  const ConfigurationSpace space(proto.domains);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Configuration cfg = space.configuration(i);
    CHECK(enabled_processes(proto, ring, cfg) == token_holders(ring, cfg));
  }
}

TEST_CASE("passing the token moves it to the successor") {
  const Topology ring = Topology::ring(3);
  const ProtocolDef proto = token_protocol(ring);
  Configuration cfg({0, 0, 1});  // holder 1
  cfg = apply(proto, ring, cfg, activation_for(proto, ring, cfg, {1}));
  CHECK(token_holders(ring, cfg) == std::vector<ProcessId>{2});
  CHECK(token_holder_advances(ring, Configuration({0, 0, 1}), cfg));
  CHECK_FALSE(token_holder_advances(ring, Configuration({0, 0, 1}),
                                    Configuration({1, 0, 1})));
  // With several tokens the observable says nothing.
  CHECK(token_holder_advances(ring, Configuration({0, 0, 0}),
                              Configuration({0, 0, 1})));
}

TEST_CASE("minimum token distance walks successor pointers") {
  const Topology ring = Topology::ring(6);  // m = 4
  // Tokens at 0 and 3.
  const Configuration two({0, 1, 2, 0, 1, 2});
  CHECK(token_holders(ring, two) == std::vector<ProcessId>{0, 3});
  CHECK(min_token_distance(ring, two) == 3);
  CHECK_THROWS_AS(min_token_distance(ring, Configuration({0, 1, 2, 3, 0, 1})),
                  InvalidInputError);
}

TEST_CASE("minimum token distance on a relabeled ring") {
  // Successor order 0 -> 3 -> 1 -> 4 -> 2 -> 5 -> 0: identities do not follow
  // the orientation, so identity arithmetic would get distances wrong.
  std::vector<std::vector<ProcessId>> adj{{3, 5}, {3, 4}, {4, 5},
                                          {0, 1}, {1, 2}, {0, 2}};
  const Topology ring = Topology::from_adjacency(adj, {5, 3, 4, 0, 1, 2});
  const Configuration cfg({0, 3, 1, 1, 0, 2});
  CHECK(token_holders(ring, cfg) == std::vector<ProcessId>{0, 1});
  CHECK(min_token_distance(ring, cfg) == 2);  // 0 -> 3 -> 1
}

TEST_CASE("the pass action commutes with ring rotation") {
  const Topology ring = Topology::ring(6);
  const ProtocolDef proto = token_protocol(ring);
  const ConfigurationSpace space(proto.domains);
  RandomSource rnd(17);
  for (int round = 0; round < 50; ++round) {
    const Configuration cfg = space.configuration(rnd.below(space.size()));
    const std::vector<ProcessId> enabled = enabled_processes(proto, ring, cfg);
    REQUIRE_FALSE(enabled.empty());
    // Fire a random nonempty subset of the enabled set.
    std::vector<ProcessId> chosen;
    while (chosen.empty()) {
      chosen.clear();
      for (ProcessId p : enabled) {
        if (rnd.coin()) {
          chosen.push_back(p);
        }
      }
    }
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rnd.below(5));
    const auto rotate = [&](const Configuration& c) {
      Configuration out = c;
      for (ProcessId p = 0; p < 6; ++p) {
        out[(p + k) % 6] = c[p];
      }
      return out;
    };
    std::vector<ProcessId> rotated_set;
    for (ProcessId p : chosen) {
      rotated_set.push_back((p + k) % 6);
    }
    const Configuration lhs =
        rotate(apply(proto, ring, cfg, activation_for(proto, ring, cfg, chosen)));
    const Configuration rot = rotate(cfg);
    const Configuration rhs =
        apply(proto, ring, rot, activation_for(proto, ring, rot, rotated_set));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("token circulation needs an orientation") {
  CHECK_THROWS_AS(token_protocol(Topology::tree({{0, 1}})), TopologyError);
}
