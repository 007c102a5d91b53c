// Copyright 2026 The fsgraph developers
//
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

#pragma once

#include <cstdint>

namespace fsg {

/**
 * splitmix64 generator (Steele, Lea & Flood's SplittableRandom finaliser).
 * Chosen for bit-exact reproducibility across platforms; all randomized
 * operations in the library draw from this generator only.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /** Uniform double in [0, 1) with 53 significant bits. */
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /** Uniform integer in [0, bound) by rejection; bound > 0. */
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/**
 * Derives an independent stream from a base seed and two indices
 * (e.g. grid cell and trial number). Streams for distinct index pairs
 * are decorrelated by two rounds of the splitmix64 finaliser.
 */
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b) {
  std::uint64_t s = detail::mix64(seed + 0x9E3779B97F4A7C15ULL * (a + 1));
  s = detail::mix64(s + 0x9E3779B97F4A7C15ULL * (b + 1));
  return SplitMix64(s);
}

}  // namespace fsg
