// core/include/gpr/sdp.hpp

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

// Conic feasibility and min-max-diagonal problems over the PSD cone, built
// from spectrogram measurements or a relative-phase predictor, and an ADMM
// solver for them.  All constraints pair a Hermitian functional with the
// variable through the sesquilinear Frobenius product, so every constraint
// value is real.

#ifndef GPR_SDP_HPP_
#define GPR_SDP_HPP_

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "gpr/ansatz.hpp"
#include "gpr/gabor.hpp"
#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"

namespace gpr {

// Returned matrices are declared solved only when every interval is met to
// this absolute slack.
inline constexpr double kFeasTol = 1e-9;

// Hermitian constraint functional.  Rank-one stores u with F = u (x) u^H;
// sparse stores the upper triangle, mirror implied.
struct SparseEntry {
  int row;
  int col;  // row <= col
  std::complex<double> value;
};

class Functional {
 public:
  static Functional RankOne(Eigen::VectorXcd u);
  static Functional Sparse(int dim, std::vector<SparseEntry> entries);

  int dim() const { return dim_; }
  bool is_rank_one() const { return rank_one_; }
  // Valid only for rank-one functionals F = u u^H.
  const Eigen::VectorXcd& vector() const;
  // <X, F>_F = sum X_rc conj(F_rc); real for Hermitian X.
  double apply(const Eigen::MatrixXcd& x) const;
  void add_scaled(Eigen::MatrixXcd& m, double w) const;
  double inner(const Functional& other) const;  // <F, G>_F

 private:
  Functional() = default;
  bool rank_one_ = false;
  int dim_ = 0;
  Eigen::VectorXcd u_;
  std::vector<SparseEntry> entries_;
};

enum class Objective { kFeasibility, kMinMaxDiagonal };
enum class ConstraintKind { kInterval, kUpperBound };

struct Constraint {
  Functional functional;
  double target = 0.0;
  double tol = 0.0;  // interval half width; unused for upper bounds
  ConstraintKind kind = ConstraintKind::kInterval;
};

/// Constraints are expressed on the lifted variable: min-max-diagonal folds
// one slack scalar into an (n+1)-dimensional PSD block, and the dominance
// rows tying each diagonal entry below the slack are part of the list.
struct SdpProblem {
  int n = 0;  // dimension of the matrix of interest
  Objective objective = Objective::kFeasibility;
  std::vector<Constraint> constraints;

  int lifted_dim() const {
    return objective == Objective::kMinMaxDiagonal ? n + 1 : n;
  }
  std::size_t total_constraints() const { return constraints.size(); }
};

enum class SolveStatus { kSolved, kMaxIterations, kInfeasibleDetected };

struct SolverConfig {
  int max_iter = 20000;
  double primal_tol = 1e-7;
  double dual_tol = 1e-7;
  double rho = 1.0;
  // Over-relaxation weight in (0, 2); 1 disables.
  double relax = 1.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kMaxIterations;
  int iterations = 0;
  double max_violation = 0.0;    // interval slack overrun of the returned X
  double min_eigenvalue = 0.0;   // of the returned X
  double objective_value = 0.0;  // max diagonal entry when minimized, else 0
  std::vector<double> residual_history;  // combined scaled residual per iter
};

// Spectrogram fit: minimize the largest diagonal entry of a PSD matrix over
// the padded box subject to matching every measurement within eps.
SdpProblem build_step1(const std::vector<LatticePoint>& gamma,
                       const SpectrogramSamples& samples, double eps);

// Band completion: find a PSD matrix over the coefficient box matching the
// predictor on every pair within eps_prime.
SdpProblem build_step2(const PredictorTable& table, double eps_prime);

// Nearest PSD matrix in Frobenius norm (eigenvalue clipping).
HermitianMatrix psd_project(const HermitianMatrix& m);

// ADMM solve.  Deterministic for fixed inputs.  A warm start, when given,
// seeds both splitting copies; a feasible warm start exits immediately.
std::pair<HermitianMatrix, SolveReport> solve(
    const SdpProblem& problem, const SolverConfig& config = {},
    const HermitianMatrix* warm_start = nullptr);

}  // namespace gpr

#endif  // GPR_SDP_HPP_
