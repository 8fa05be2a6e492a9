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

#include "stabilab/random.hh"

#include "stabilab/errors.hh"

namespace stabilab {

RandomSource RandomSource::forbidden() { return RandomSource(); }

std::uint64_t RandomSource::bits() {
  if (forbidden_) {
    throw InvalidInputError(
        "deterministic evaluator attempted to consume randomness");
  }
  return gen_();
}

std::uint64_t RandomSource::below(std::uint64_t n) {
  if (n == 0) {
    throw InvalidInputError("uniform draw from an empty range");
  }
  // Reject draws from the tail that does not divide evenly into n buckets.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t r = bits();
    if (r < limit) {
      return r % n;
    }
  }
}

bool RandomSource::coin(double p_true) {
  if (p_true < 0.0 || p_true > 1.0) {
    throw InvalidInputError("coin bias outside [0, 1]");
  }
  // 53 uniform bits in [0, 1); exact comparison keeps the draw reproducible.
  const double u = static_cast<double>(bits() >> 11) * 0x1.0p-53;
  return u < p_true;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 step over master advanced by the index. The constants are the
  // standard splitmix64 increments; the mixing is bijective per index.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace stabilab
