// core/src/ansatz.cpp

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

#include "gpr/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gpr/gabor.hpp"

namespace gpr {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

cplx holo_sq(ComplexPoint2 z) { return z.x * z.x + z.y * z.y; }

// The kernel factors as e^{-pi z^2} a(lambda, z) b(mu, z); both factors are
// exponentials linear in z, which turns the double sum over a rank-one
// coefficient matrix into a product of two single sums.
cplx left_factor(Vec2 l, ComplexPoint2 z) {
  const cplx e = kPi * (z.x * cplx(l.x, l.y) + z.y * cplx(l.y, -l.x)) +
                 cplx(-0.5 * kPi * norm_sq(l), kPi * l.x * l.y);
  return std::exp(e);
}

cplx right_factor(Vec2 m, ComplexPoint2 z) {
  const cplx e = kPi * (z.x * cplx(m.x, -m.y) + z.y * cplx(m.y, m.x)) +
                 cplx(-0.5 * kPi * norm_sq(m), -kPi * m.x * m.y);
  return std::exp(e);
}

}  // namespace

std::complex<double> ansatz_phi(Vec2 lambda, Vec2 mu, ComplexPoint2 z) {
  const Vec2 d = lambda - mu;
  const Vec2 s{0.5 * (lambda.x + mu.x), 0.5 * (lambda.y + mu.y)};
  const cplx c =
      std::exp(cplx(-0.25 * kPi * norm_sq(d),
                    kPi * (lambda.x * lambda.y - mu.x * mu.y)));
  // z^T J (lambda - mu) with J rotating (x, y) to (y, -x).
  const cplx rot = cplx(0.0, kPi) * (z.x * d.y - z.y * d.x);
  const ComplexPoint2 shifted{z.x - s.x, z.y - s.y};
  return c * std::exp(rot - kPi * holo_sq(shifted));
}

std::vector<std::complex<double>> weight_vector(
    std::span<const LatticePoint> gamma, Vec2 p) {
  std::vector<cplx> v(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k)
    v[k] = gabor_atom(lattice_location(gamma[k]), p);
  return v;
}

HermitianMatrix weight_matrix(std::span<const LatticePoint> gamma, Vec2 p) {
  const auto v = weight_vector(gamma, p);
  const int n = static_cast<int>(v.size());
  // Conjugate-linear in the first slot so that the sesquilinear Frobenius
  // pairing sum_{rc} A_rc conj(W_rc) evaluates the extension at p.
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = std::conj(v[r]) * v[c];
  return HermitianMatrix::FromDense(m);
}

std::complex<double> evaluate_FA(const HermitianMatrix& a,
                                 std::span<const LatticePoint> gamma,
                                 ComplexPoint2 z) {
  const int n = a.dim();
  if (n != static_cast<int>(gamma.size()))
    throw std::invalid_argument("evaluate_FA: dimension mismatch");
  Eigen::VectorXcd left(n), right(n);
  for (int k = 0; k < n; ++k) {
    const Vec2 loc = lattice_location(gamma[k]);
    left(k) = left_factor(loc, z);
    right(k) = right_factor(loc, z);
  }
  const cplx bilinear = left.transpose() * a.dense() * right;
  return std::exp(-kPi * holo_sq(z)) * bilinear;
}

ComplexPoint2 eval_L(Vec2 p, Vec2 u) {
  return {cplx(p.x, 0.0) + 0.5 * cplx(u.x, -u.y),
          cplx(p.y, 0.0) + 0.5 * cplx(u.y, u.x)};
}

std::complex<double> eval_Q(Vec2 p, Vec2 u) {
  return {-0.5 * kPi * norm_sq(u), -kPi * (2 * p.x + u.x) * u.y};
}

EntireExtension EntireExtension::FromMatrix(const HermitianMatrix& a,
                                            std::vector<LatticePoint> gamma) {
  if (a.dim() != static_cast<int>(gamma.size()))
    throw std::invalid_argument("EntireExtension: dimension mismatch");
  EntireExtension g;
  g.matrix_ = a.dense();
  g.locations_.reserve(gamma.size());
  for (const auto& p : gamma) g.locations_.push_back(lattice_location(p));
  return g;
}

EntireExtension EntireExtension::FromSignalCoefficients(
    std::vector<std::complex<double>> coeffs,
    std::vector<LatticePoint> gamma) {
  if (coeffs.size() != gamma.size())
    throw std::invalid_argument("EntireExtension: dimension mismatch");
  EntireExtension g;
  g.rank_one_ = true;
  g.coeffs_ = std::move(coeffs);
  g.locations_.reserve(gamma.size());
  for (const auto& p : gamma) g.locations_.push_back(lattice_location(p));
  return g;
}

std::complex<double> EntireExtension::operator()(ComplexPoint2 z) const {
  const int n = static_cast<int>(locations_.size());
  if (rank_one_) {
    cplx left = 0.0, right = 0.0;
    for (int k = 0; k < n; ++k) {
      left += coeffs_[k] * left_factor(locations_[k], z);
      right += std::conj(coeffs_[k]) * right_factor(locations_[k], z);
    }
    return std::exp(-kPi * holo_sq(z)) * left * right;
  }
  Eigen::VectorXcd left(n), right(n);
  for (int k = 0; k < n; ++k) {
    left(k) = left_factor(locations_[k], z);
    right(k) = right_factor(locations_[k], z);
  }
  const cplx bilinear = left.transpose() * matrix_ * right;
  return std::exp(-kPi * holo_sq(z)) * bilinear;
}

std::complex<double> eval_operator(const EntireExtension& g, Vec2 p, Vec2 u) {
  return g(eval_L(p, u)) * std::exp(eval_Q(p, u));
}

bool PredictorTable::has(int row, int col) const {
  const int lo = std::min(row, col), hi = std::max(row, col);
  return std::any_of(entries.begin(), entries.end(), [&](const auto& e) {
    return e.row == lo && e.col == hi;
  });
}

std::complex<double> PredictorTable::at(int row, int col) const {
  const int lo = std::min(row, col), hi = std::max(row, col);
  for (const auto& e : entries)
    if (e.row == lo && e.col == hi)
      return (row <= col) ? e.value : std::conj(e.value);
  throw std::out_of_range("PredictorTable::at: pair not in table");
}

std::size_t PredictorTable::pair_count() const { return entries.size(); }

PredictorTable build_predictor(const EntireExtension& g,
                               const std::vector<LatticePoint>& lambda,
                               double r) {
  if (r <= 0) throw std::invalid_argument("build_predictor: r <= 0");
  PredictorTable t;
  t.lambda = lambda;
  t.r = r;
  const int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i) {
    const Vec2 li = lattice_location(lambda[i]);
    for (int j = i; j < n; ++j) {
      const Vec2 lj = lattice_location(lambda[j]);
      if (norm(li - lj) > r) continue;
      // Entry (i, j) targets Gf(lambda_i) conj(Gf(lambda_j)): shift the
      // evaluation from lambda_j by u = lambda_i - lambda_j.
      t.entries.push_back({i, j, eval_operator(g, lj, li - lj)});
    }
  }
  return t;
}

PredictorTable build_predictor(const HermitianMatrix& a,
                               const std::vector<LatticePoint>& gamma,
                               const std::vector<LatticePoint>& lambda,
                               double r) {
  return build_predictor(EntireExtension::FromMatrix(a, gamma), lambda, r);
}

}  // namespace gpr
