// core/src/lattice.cpp

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

#include "gpr/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpr {

namespace {

// Largest k with k*step <= bound, tolerating one ulp of rounding so that
// boundary points stay included.
int steps_within(double bound, double step) {
  return static_cast<int>(std::floor(bound / step * (1.0 + 1e-12)));
}

std::vector<LatticePoint> box_points(double half_x, double half_y,
                                     double step) {
  const int nx = steps_within(half_x, step);
  const int ny = steps_within(half_y, step);
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(2 * nx + 1) * (2 * ny + 1));
  for (int i = -nx; i <= nx; ++i)
    for (int j = -ny; j <= ny; ++j) out.push_back({i, j});
  return out;
}

}  // namespace

LatticeWindows make_windows(double T, double S, double R, double s) {
  if (T <= 0 || S <= 0 || R <= 0 || s <= 0)
    throw std::invalid_argument("make_windows: T, S, R, s must be positive");
  LatticeWindows w;
  w.T = T;
  w.S = S;
  w.R = R;
  w.s = s;
  w.lambda = box_points(T, S, kLatticeStep);
  w.gamma = box_points(T + 2 * R, S + 2 * R, kLatticeStep);
  for (LatticePoint p : box_points(T + R, S + R, s))
    w.omega.push_back({s * p.i, s * p.j});
  return w;
}

int find_lattice_index(const std::vector<LatticePoint>& points,
                       LatticePoint p) {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return -1;
  return static_cast<int>(it - points.begin());
}

std::vector<double> candidate_radii(double cap) {
  const int kmax = static_cast<int>(std::ceil(cap / kLatticeStep)) + 1;
  std::vector<double> dists;
  for (int i = 0; i <= kmax; ++i)
    for (int j = 0; j <= kmax; ++j) {
      if (i == 0 && j == 0) continue;
      const double d = kLatticeStep * std::sqrt(double(i * i + j * j));
      if (d <= cap + 1e-12) dists.push_back(d);
    }
  std::sort(dists.begin(), dists.end());
  std::vector<double> out;
  for (double d : dists)
    if (out.empty() || d > out.back() + 1e-9) out.push_back(d);
  for (double& d : out) d += 0.01;
  return out;
}

}  // namespace gpr
