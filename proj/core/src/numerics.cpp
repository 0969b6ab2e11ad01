// core/src/numerics.cpp

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

#include "gpr/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace gpr {

HermitianMatrix HermitianMatrix::FromDense(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 2 * kHermitianTol * scale)
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian");
  HermitianMatrix out;
  out.m_ = 0.5 * (m + m.adjoint().eval());
  out.m_.diagonal() = out.m_.diagonal().real().cast<std::complex<double>>();
  return out;
}

void HermitianMatrix::set(int r, int c, std::complex<double> v) {
  if (r == c) {
    m_(r, c) = v.real();
  } else {
    m_(r, c) = v;
    m_(c, r) = std::conj(v);
  }
}

EigenDecomposition hermitian_eig(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.dense());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  EigenDecomposition d;
  d.values = es.eigenvalues();
  d.vectors = es.eigenvectors();
  for (int k = 0; k < d.vectors.cols(); ++k) {
    auto col = d.vectors.col(k);
    const double largest = col.cwiseAbs().maxCoeff();
    for (int r = 0; r < col.size(); ++r) {
      const double a = std::abs(col(r));
      if (a > 1e-12 * largest) {
        col *= std::conj(col(r)) / a;
        break;
      }
    }
  }
  return d;
}

Eigen::MatrixXd real_embed(const HermitianMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXd e(2 * n, 2 * n);
  const Eigen::MatrixXd re = m.dense().real();
  const Eigen::MatrixXd im = m.dense().imag();
  e.topLeftCorner(n, n) = re;
  e.topRightCorner(n, n) = -im;
  e.bottomLeftCorner(n, n) = im;
  e.bottomRightCorner(n, n) = re;
  return e;
}

double theta3(double z, double q) {
  if (!(q > 0.0) || !(q < 1.0))
    throw std::domain_error("theta3: q must lie in (0, 1)");
  double sum = 1.0;
  for (int k = 1;; ++k) {
    const double qk = std::pow(q, double(k) * k);
    if (qk < 1e-16) break;
    sum += 2.0 * qk * std::cos(2.0 * k * z);
  }
  return sum;
}

namespace {

template <typename Scalar>
std::pair<Scalar, bool> composite(std::span<const Scalar> f, double h) {
  const std::size_t n = f.size();
  if (n < 2)
    throw std::invalid_argument("integrate_composite: need at least 2 samples");
  if (n % 2 == 0) {
    Scalar acc = 0.5 * (f[0] + f[n - 1]);
    for (std::size_t k = 1; k + 1 < n; ++k) acc += f[k];
    return {acc * h, false};
  }
  Scalar acc = f[0] + f[n - 1];
  for (std::size_t k = 1; k + 1 < n; ++k)
    acc += f[k] * ((k % 2 == 1) ? 4.0 : 2.0);
  return {acc * (h / 3.0), true};
}

}  // namespace

QuadratureResult integrate_composite(std::span<const double> samples,
                                     double step) {
  auto [v, simpson] = composite(samples, step);
  return {v, simpson};
}

ComplexQuadratureResult integrate_composite(
    std::span<const std::complex<double>> samples, double step) {
  auto [v, simpson] = composite(samples, step);
  return {v, simpson};
}

}  // namespace gpr
