// core/include/gpr/graph.hpp

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

#ifndef GPR_GRAPH_HPP_
#define GPR_GRAPH_HPP_

#include <utility>
#include <vector>

#include "gpr/gabor.hpp"
#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"

namespace gpr {

/// Spectral gaps at or below this are treated as zero (disconnected graph).
inline constexpr double kSpectralGapTol = 1e-10;

/// Vertex-weighted graph over lattice points.  Vertices u, v are adjacent
/// iff 0 < |u - v| < r, strictly; note the predictor pair set uses <= r
/// instead, and the two are kept distinct on purpose.
struct VertexWeightedGraph {
  std::vector<LatticePoint> vertices;
  std::vector<std::pair<int, int>> edges;  // first < second
  std::vector<double> weights;             // nonnegative, one per vertex

  int degree(int v) const;
};

/// Builds the graph.  Requires r > 0, weights >= 0, one weight per point.
VertexWeightedGraph build_graph(const std::vector<LatticePoint>& lambda,
                                const std::vector<double>& weights, double r);

/// Weighted Laplacian,
///   L(u, u) = sum_{z ~ u} alpha_z,   L(u, v) = -sqrt(alpha_u alpha_v)
/// for u ~ v and 0 otherwise.  Real symmetric, positive semi-definite,
/// annihilates sqrt(alpha).
HermitianMatrix laplacian(const VertexWeightedGraph& g);

/// Second-smallest Laplacian eigenvalue; positive exactly when the graph is
/// connected through positive-weight vertices.  Requires >= 2 vertices.
double spectral_gap(const VertexWeightedGraph& g);

/// Stability functional
///   e^{0.84 r^2} (1 + 20 r sqrt(gf_norm_sq / lambda2)),
/// +infinity when lambda2 is zero (below kSpectralGapTol).
double c_stab(double gf_norm_sq, double lambda2, double r);

/// Radius selection result.  When every candidate leaves the graph
/// disconnected, `all_disconnected` is set and `value` is +infinity.
struct RadiusChoice {
  double r = 0.0;
  double value = 0.0;
  double lambda2 = 0.0;
  bool all_disconnected = false;
};

/// Minimizes c_stab over the candidate radii; ties break toward smaller r.
/// Weights are the spectrogram samples on lambda; the overload taking a
/// signal evaluates them exactly.
RadiusChoice r_star(const std::vector<LatticePoint>& lambda,
                    const std::vector<double>& weights,
                    const std::vector<double>& candidates = candidate_radii());
RadiusChoice r_star(const Signal& f, const std::vector<LatticePoint>& lambda,
                    const std::vector<double>& candidates = candidate_radii());

}  // namespace gpr

#endif  // GPR_GRAPH_HPP_
