// core/include/gpr/rng.hpp

// Copyright 2026  The gabor-phase-retrieval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef GPR_RNG_HPP_
#define GPR_RNG_HPP_

#include <complex>
#include <cstdint>

namespace gpr {

// Counter-based generator: draw k of the stream with a given seed is a pure
// function of (seed, k), so streams are reproducible across platforms and
// languages and can be consumed out of order.  The mixer is SplitMix64.

/// 64-bit output for counter `k` of the stream `seed`.
inline std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1), 53 mantissa bits of the mixed counter.
inline double uniform01(std::uint64_t seed, std::uint64_t k) {
  return static_cast<double>(splitmix64(seed, k) >> 11) * 0x1.0p-53;
}

/// Uniform double in [-nu, nu].
inline double uniform_symmetric(std::uint64_t seed, std::uint64_t k, double nu) {
  return nu * (2.0 * uniform01(seed, k) - 1.0);
}

/// Uniform point of the closed complex unit disk, by rejection from the
/// square.  Draw `index` consumes counters [64*index, 64*index + 63]; the
/// acceptance probability is pi/4 per attempt, so 32 attempts never run out
/// in practice (and the final attempt is accepted unconditionally toward the
/// disk boundary by scaling, to keep the function total).
std::complex<double> uniform_unit_disk(std::uint64_t seed, std::uint64_t index);

}  // namespace gpr

#endif  // GPR_RNG_HPP_
