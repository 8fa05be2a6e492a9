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

#ifndef STABILAB_ERRORS_HH_
#define STABILAB_ERRORS_HH_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stabilab {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad argument values, unparsable text, contract misuse.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Graph-shape violations: not a ring, not a tree, bad adjacency.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// A process has two or more enabled actions in one configuration.
/// Single-step semantics require a unique action per activated process.
class AmbiguityError : public Error {
 public:
  AmbiguityError(std::uint32_t process, const std::string& what)
      : Error(what), process_(process) {}

  std::uint32_t process() const { return process_; }

 private:
  std::uint32_t process_;
};

/// An enumeration or search exceeded a configured size cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A scripted schedule entry shares no process with the enabled set.
class ScriptStallError : public Error {
 public:
  ScriptStallError(std::uint64_t step, const std::string& what)
      : Error(what), step_(step) {}

  std::uint64_t step() const { return step_; }

 private:
  std::uint64_t step_;
};

/// A lasso failed structural validation (illegal step or open cycle).
class InvalidLassoError : public Error {
 public:
  InvalidLassoError(std::uint64_t step, const std::string& what)
      : Error(what), step_(step) {}

  /// Index of the offending step, prefix steps first, then cycle steps.
  std::uint64_t step() const { return step_; }

 private:
  std::uint64_t step_;
};

}  // namespace stabilab

#endif  // STABILAB_ERRORS_HH_
