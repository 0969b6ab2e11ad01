// core/src/rng.cpp

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

#include "gpr/rng.hpp"

#include <cmath>

namespace gpr {

std::complex<double> uniform_unit_disk(std::uint64_t seed,
                                       std::uint64_t index) {
  const std::uint64_t base = 64 * index;
  double x = 0.0, y = 0.0;
  for (int attempt = 0; attempt < 32; ++attempt) {
    x = 2.0 * uniform01(seed, base + 2 * attempt) - 1.0;
    y = 2.0 * uniform01(seed, base + 2 * attempt + 1) - 1.0;
    if (x * x + y * y <= 1.0) return {x, y};
  }
  const double n = std::sqrt(x * x + y * y);
  return {x / n, y / n};
}

}  // namespace gpr
