// core/include/gpr/numerics.hpp

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

#ifndef GPR_NUMERICS_HPP_
#define GPR_NUMERICS_HPP_

#include <Eigen/Dense>
#include <complex>
#include <span>

namespace gpr {

/// Hermitian tolerance accepted at construction.
inline constexpr double kHermitianTol = 1e-12;

/// Square complex matrix kept exactly Hermitian: construction validates the
/// input against kHermitianTol, then stores (M + M*)/2 with real diagonal.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Zero matrix of dimension n.
  explicit HermitianMatrix(int n) : m_(Eigen::MatrixXcd::Zero(n, n)) {}

  /// Validates and symmetrizes.  Throws std::invalid_argument if any entry
  /// differs from the conjugate of its mirror by more than kHermitianTol
  /// (relative to the largest entry magnitude).
  static HermitianMatrix FromDense(const Eigen::MatrixXcd& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  std::complex<double> operator()(int r, int c) const { return m_(r, c); }

  /// Sets entry (r, c) and its mirror; a diagonal entry keeps only the real
  /// part.
  void set(int r, int c, std::complex<double> v);

  const Eigen::MatrixXcd& dense() const { return m_; }
  double trace_real() const { return m_.trace().real(); }

 private:
  Eigen::MatrixXcd m_;
};

/// Eigendecomposition of a Hermitian matrix.  `values` ascending;
/// `vectors.col(k)` is the unit eigenvector of values[k], with the phase
/// convention that its first component of magnitude above 1e-12 times the
/// largest component is real and positive.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Full eigendecomposition, deterministic for identical input.
EigenDecomposition hermitian_eig(const HermitianMatrix& m);

/// Real symmetric embedding [[Re M, -Im M], [Im M, Re M]] of dimension 2n.
/// Its spectrum is the spectrum of M with every multiplicity doubled.
Eigen::MatrixXd real_embed(const HermitianMatrix& m);

/// Jacobi theta function of the third kind, sum over k of q^(k^2) e^(2ikz)
/// for real z, which is 1 + 2 sum_{k>=1} q^(k^2) cos(2kz).  Terms are added
/// until q^(k^2) < 1e-16.  Requires q in (0, 1); throws std::domain_error
/// otherwise.
double theta3(double z, double q);

/// Result of a composite quadrature over uniformly spaced samples.
/// `simpson` is false when an even sample count forced the trapezoid
/// fallback.
struct QuadratureResult {
  double value = 0.0;
  bool simpson = true;
};
struct ComplexQuadratureResult {
  std::complex<double> value;
  bool simpson = true;
};

/// Composite Simpson rule over samples spaced by `step`; even sample counts
/// fall back to the trapezoid rule and report it.  Requires at least two
/// samples.
QuadratureResult integrate_composite(std::span<const double> samples,
                                     double step);
ComplexQuadratureResult integrate_composite(
    std::span<const std::complex<double>> samples, double step);

}  // namespace gpr

#endif  // GPR_NUMERICS_HPP_
