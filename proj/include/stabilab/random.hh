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

#ifndef STABILAB_RANDOM_HH_
#define STABILAB_RANDOM_HH_

#include <cstdint>
#include <random>

namespace stabilab {

/// Deterministic random stream. All derived draws are computed from the raw
/// mt19937_64 output with fixed arithmetic, so a seed reproduces the same
/// sequence on every platform (standard distributions do not guarantee that).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  /// A source that raises on any draw. Used to assert that deterministic
  /// evaluators never consume randomness.
  static RandomSource forbidden();

  /// Raw 64 random bits.
  std::uint64_t bits();

  /// Uniform draw from [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  /// Bernoulli draw, true with probability p_true.
  bool coin(double p_true = 0.5);

 private:
  RandomSource() : gen_(0), forbidden_(true) {}

  std::mt19937_64 gen_;
  bool forbidden_ = false;
};

/// Derives an independent child seed from a master seed and an index.
/// Distinct indexes give statistically unrelated streams, so per-trial
/// streams can be created in any order (or in parallel).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace stabilab

#endif  // STABILAB_RANDOM_HH_
