// core/include/gpr/lattice.hpp

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

#ifndef GPR_LATTICE_HPP_
#define GPR_LATTICE_HPP_

#include <cmath>
#include <compare>
#include <vector>

namespace gpr {

/// Step of the square time-frequency lattice used for synthesis windows,
/// 1/sqrt(2).  Points of the lattice are kLatticeStep * (i, j) with integer
/// (i, j).
inline constexpr double kLatticeStep = 0.70710678118654752440;

/// A point of a square lattice, stored by its integer coordinates so that
/// set membership and ordering are exact.  The physical location is
/// step * (i, j) for the step of the lattice the point belongs to.
struct LatticePoint {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// A point of the time-frequency plane, (time shift, frequency shift).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline double norm_sq(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }

/// Physical location of a point of the synthesis lattice.
inline Vec2 lattice_location(LatticePoint p) {
  return {kLatticeStep * p.i, kLatticeStep * p.j};
}

/// The three finite windows a reconstruction run works on.
///
///   lambda: synthesis lattice cut to [-T,T] x [-S,S]       (coefficients)
///   omega:  sampling grid, step s, cut to the box padded by R  (measurements)
///   gamma:  synthesis lattice cut to the box padded by 2R      (extension)
///
/// Point lists are in lexicographic (i, j) order; every matrix or vector
/// indexed by one of these windows uses that order.
struct LatticeWindows {
  double T = 0.0;
  double S = 0.0;
  double R = 0.0;
  double s = 0.0;
  std::vector<LatticePoint> lambda;
  std::vector<Vec2> omega;
  std::vector<LatticePoint> gamma;
};

/// Builds the three windows.  Requires T, S, R, s > 0.
LatticeWindows make_windows(double T, double S, double R, double s);

/// Index of `p` in a lexicographically ordered point list, or -1.
int find_lattice_index(const std::vector<LatticePoint>& points, LatticePoint p);

/// Distances realized between synthesis-lattice points, each nudged up by
/// 0.01 so a radius taken from the list includes the distance it names.
/// Sorted ascending, capped at `cap` (before the nudge).
std::vector<double> candidate_radii(double cap = std::sqrt(5.0 / 2.0));

}  // namespace gpr

#endif  // GPR_LATTICE_HPP_
