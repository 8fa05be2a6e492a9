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

#ifndef STABILAB_CONFIGURATION_HH_
#define STABILAB_CONFIGURATION_HH_

#include <compare>
#include <cstdint>
#include <vector>

namespace stabilab {

/// One process's local state, encoded as a small integer. The protocol
/// defines the per-process domain and the meaning of each code.
using LocalState = std::uint32_t;

/// A global configuration: the vector of local states, indexed by process id.
struct Configuration {
  std::vector<LocalState> states;

  Configuration() = default;
  explicit Configuration(std::vector<LocalState> s) : states(std::move(s)) {}

  std::size_t size() const { return states.size(); }
  LocalState operator[](std::size_t p) const { return states[p]; }
  LocalState& operator[](std::size_t p) { return states[p]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Mixed-radix indexing of the full configuration space given per-process
/// domain sizes. Process 0 is the least significant digit, so index 0 is the
/// all-zeros configuration.
class ConfigurationSpace {
 public:
  /// Raises InvalidInputError on an empty or zero domain, ResourceLimitError
  /// when the product of domain sizes does not fit in 64 bits.
  explicit ConfigurationSpace(std::vector<std::uint32_t> domain_sizes);

  std::uint64_t size() const { return size_; }

  std::uint32_t process_count() const {
    return static_cast<std::uint32_t>(domains_.size());
  }

  const std::vector<std::uint32_t>& domains() const { return domains_; }

  /// Raises InvalidInputError if the configuration is out of domain.
  std::uint64_t index_of(const Configuration& cfg) const;

  Configuration configuration(std::uint64_t index) const;

 private:
  std::vector<std::uint32_t> domains_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 0;
};

}  // namespace stabilab

#endif  // STABILAB_CONFIGURATION_HH_
