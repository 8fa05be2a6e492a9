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

#include "stabilab/configuration.hh"

#include <string>

#include "stabilab/errors.hh"

namespace stabilab {

ConfigurationSpace::ConfigurationSpace(std::vector<std::uint32_t> domain_sizes)
    : domains_(std::move(domain_sizes)) {
  if (domains_.empty()) {
    throw InvalidInputError("configuration space over zero processes");
  }
  strides_.reserve(domains_.size());
  std::uint64_t acc = 1;
  for (std::size_t p = 0; p < domains_.size(); ++p) {
    if (domains_[p] == 0) {
      throw InvalidInputError("process " + std::to_string(p) +
                              " has an empty state domain");
    }
    strides_.push_back(acc);
    if (acc > UINT64_MAX / domains_[p]) {
      throw ResourceLimitError("configuration count exceeds 2^64");
    }
    acc *= domains_[p];
  }
  size_ = acc;
}

std::uint64_t ConfigurationSpace::index_of(const Configuration& cfg) const {
  if (cfg.size() != domains_.size()) {
    throw InvalidInputError("configuration has " + std::to_string(cfg.size()) +
                            " states, topology has " +
                            std::to_string(domains_.size()) + " processes");
  }
  std::uint64_t index = 0;
  for (std::size_t p = 0; p < domains_.size(); ++p) {
    if (cfg[p] >= domains_[p]) {
      throw InvalidInputError("state " + std::to_string(cfg[p]) +
                              " at process " + std::to_string(p) +
                              " is outside domain of size " +
                              std::to_string(domains_[p]));
    }
    index += strides_[p] * cfg[p];
  }
  return index;
}

Configuration ConfigurationSpace::configuration(std::uint64_t index) const {
  if (index >= size_) {
    throw InvalidInputError("configuration index out of range");
  }
  Configuration cfg;
  cfg.states.resize(domains_.size());
  for (std::size_t p = 0; p < domains_.size(); ++p) {
    cfg[p] = static_cast<LocalState>(index % domains_[p]);
    index /= domains_[p];
  }
  return cfg;
}

}  // namespace stabilab
