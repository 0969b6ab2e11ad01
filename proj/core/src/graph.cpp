// core/src/graph.cpp

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

#include "gpr/graph.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gpr {

int VertexWeightedGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

VertexWeightedGraph build_graph(const std::vector<LatticePoint>& lambda,
                                const std::vector<double>& weights,
                                double r) {
  if (r <= 0) throw std::invalid_argument("build_graph: r <= 0");
  if (weights.size() != lambda.size())
    throw std::invalid_argument("build_graph: one weight per vertex");
  for (double w : weights)
    if (w < 0) throw std::invalid_argument("build_graph: negative weight");

  VertexWeightedGraph g;
  g.vertices = lambda;
  g.weights = weights;
  const int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = norm(lattice_location(lambda[i]) -
                            lattice_location(lambda[j]));
      if (d < r) g.edges.emplace_back(i, j);
    }
  return g;
}

HermitianMatrix laplacian(const VertexWeightedGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [a, b] : g.edges) {
    m(a, a) += g.weights[b];
    m(b, b) += g.weights[a];
    const double coupling = -std::sqrt(g.weights[a] * g.weights[b]);
    m(a, b) = coupling;
    m(b, a) = coupling;
  }
  return HermitianMatrix::FromDense(m);
}

double spectral_gap(const VertexWeightedGraph& g) {
  if (g.vertices.size() < 2)
    throw std::invalid_argument("spectral_gap: need at least 2 vertices");
  return hermitian_eig(laplacian(g)).values(1);
}

double c_stab(double gf_norm_sq, double lambda2, double r) {
  if (gf_norm_sq < 0) throw std::invalid_argument("c_stab: negative norm");
  if (r < 0) throw std::invalid_argument("c_stab: negative radius");
  if (lambda2 < -kSpectralGapTol)
    throw std::invalid_argument("c_stab: negative spectral gap");
  if (lambda2 <= kSpectralGapTol)
    return std::numeric_limits<double>::infinity();
  return std::exp(0.84 * r * r) *
         (1.0 + 20.0 * r * std::sqrt(gf_norm_sq / lambda2));
}

RadiusChoice r_star(const std::vector<LatticePoint>& lambda,
                    const std::vector<double>& weights,
                    const std::vector<double>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("r_star: no candidate radii");
  double gf2 = 0.0;
  for (double w : weights) gf2 += w;

  RadiusChoice best;
  best.value = std::numeric_limits<double>::infinity();
  best.all_disconnected = true;
  best.r = candidates.front();
  for (double r : candidates) {
    const auto g = build_graph(lambda, weights, r);
    const double gap = spectral_gap(g);
    const double value = c_stab(gf2, gap, r);
    if (value < best.value) {
      best.r = r;
      best.value = value;
      best.lambda2 = gap;
      best.all_disconnected = false;
    }
  }
  return best;
}

RadiusChoice r_star(const Signal& f, const std::vector<LatticePoint>& lambda,
                    const std::vector<double>& candidates) {
  std::vector<double> weights(lambda.size());
  for (std::size_t k = 0; k < lambda.size(); ++k)
    weights[k] = spectrogram(f, lattice_location(lambda[k]));
  return r_star(lambda, weights, candidates);
}

}  // namespace gpr
