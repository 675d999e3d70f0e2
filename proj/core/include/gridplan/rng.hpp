// Copyright 2026 The gridplan Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRIDPLAN_RNG_HPP
#define GRIDPLAN_RNG_HPP

#include <cstdint>
#include <random>

namespace gridplan {

// All randomness uses the 64-bit Mersenne Twister (std::mt19937_64), whose
// output sequence is fixed by the standard. Mapping to ranges is done here
// rather than with <random> distributions, whose algorithms are
// implementation-defined, so traces match across platforms.
using Rng = std::mt19937_64;

// Uniform integer in [0, n) by rejection sampling; n must be > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace gridplan

#endif  // GRIDPLAN_RNG_HPP
