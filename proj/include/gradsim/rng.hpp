/* Copyright 2026 gradsim developers
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

#ifndef GRADSIM_RNG_HPP
#define GRADSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace gradsim {

// Substream tags. Every random decision in the library draws from an engine
// derived from (seed, tag, index), so results do not depend on evaluation
// order and parallel sweeps stay deterministic.
enum : std::uint64_t {
  kStreamDataset = 1,
  kStreamClasses = 2,
  kStreamStraggle = 3,
  kStreamShuffle = 4,
  kStreamMonteCarlo = 5,
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Engine seeded from a hash chain over (seed, tag, index). mt19937_64 output
// is pinned by the standard, so substreams are reproducible across platforms.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t index = 0) {
  std::uint64_t state = seed;
  (void)splitmix64(state);
  state ^= tag * 0x9e3779b97f4a7c15ULL;
  (void)splitmix64(state);
  state ^= index;
  return std::mt19937_64(splitmix64(state));
}

// Canonical double in [0, 1) from the top 53 bits. Hand-rolled because the
// standard distributions are implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
  return uniform01(rng) < p;
}

// Unbiased integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// Box-Muller, cosine branch only; consumes two draws per variate.
inline double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  double u2 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace gradsim

#endif  // GRADSIM_RNG_HPP
