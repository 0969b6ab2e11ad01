// core/include/gpr/ansatz.hpp

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

// Entire extensions of spectrograms.  A coefficient matrix A over a lattice
// box defines an entire function F_A on C^2 that restricts to a nonnegative
// combination of spectrograms on R^2; shifting its argument into complex
// space with the evaluation operator E recovers relative phases between
// nearby lattice points.  The predictor table collects those relative-phase
// products for all pairs within a radius.

#ifndef GPR_ANSATZ_HPP_
#define GPR_ANSATZ_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"

namespace gpr {

// Point of C^2.  Squares are holomorphic: z*z = x*x + y*y, no conjugation.
struct ComplexPoint2 {
  std::complex<double> x;
  std::complex<double> y;
};

// Kernel of the extension family.  Restricted to real arguments it is the
// product of a transform kernel at lambda and a conjugated one at mu.
std::complex<double> ansatz_phi(Vec2 lambda, Vec2 mu, ComplexPoint2 z);

// Rank-one sampling vector at a real point: v_gamma = gabor_atom(gamma, p).
std::vector<std::complex<double>> weight_vector(
    std::span<const LatticePoint> gamma, Vec2 p);

// W_p = v (x) conj(v); satisfies <A, W_p>_F = F_A(p).
HermitianMatrix weight_matrix(std::span<const LatticePoint> gamma, Vec2 p);

// Double sum of A against the kernel family.
std::complex<double> evaluate_FA(const HermitianMatrix& a,
                                 std::span<const LatticePoint> gamma,
                                 ComplexPoint2 z);

// Argument shift and exponent of the evaluation operator.
ComplexPoint2 eval_L(Vec2 p, Vec2 u);
std::complex<double> eval_Q(Vec2 p, Vec2 u);

// Entire function handle with exactly two backends: a coefficient matrix
// over a lattice box, or the rank-one extension built from the coefficients
// of a known signal (the test oracle).
class EntireExtension {
 public:
  static EntireExtension FromMatrix(const HermitianMatrix& a,
                                    std::vector<LatticePoint> gamma);
  static EntireExtension FromSignalCoefficients(
      std::vector<std::complex<double>> coeffs,
      std::vector<LatticePoint> gamma);

  std::complex<double> operator()(ComplexPoint2 z) const;

 private:
  EntireExtension() = default;

  bool rank_one_ = false;
  Eigen::MatrixXcd matrix_;                   // dense backend
  std::vector<std::complex<double>> coeffs_;  // rank-one backend
  std::vector<Vec2> locations_;
};

// E[G](p, u) = G(L(p, u)) e^{Q(p, u)}.
std::complex<double> eval_operator(const EntireExtension& g, Vec2 p, Vec2 u);

// Relative-phase products for all lattice pairs within radius r.  Only the
// canonical half with row <= col is stored; the mirror is the conjugate.
struct PredictorEntry {
  int row;
  int col;
  std::complex<double> value;
};

struct PredictorTable {
  std::vector<LatticePoint> lambda;
  double r = 0.0;
  std::vector<PredictorEntry> entries;  // canonical pairs, row <= col

  bool has(int row, int col) const;
  // Entry (row, col) approximates Gf(lambda[row]) conj(Gf(lambda[col])).
  std::complex<double> at(int row, int col) const;
  std::size_t pair_count() const;  // unordered pairs including diagonal
};

PredictorTable build_predictor(const EntireExtension& g,
                               const std::vector<LatticePoint>& lambda,
                               double r);
PredictorTable build_predictor(const HermitianMatrix& a,
                               const std::vector<LatticePoint>& gamma,
                               const std::vector<LatticePoint>& lambda,
                               double r);

}  // namespace gpr

#endif  // GPR_ANSATZ_HPP_
