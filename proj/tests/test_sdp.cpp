// tests/test_sdp.cpp

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

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "gpr/ansatz.hpp"
#include "gpr/gabor.hpp"
#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"
#include "gpr/rng.hpp"
#include "gpr/sdp.hpp"

using namespace gpr;
using std::complex;

namespace {

constexpr double kPi = std::numbers::pi;

Signal two_atom_fixture() {
  Signal f;
  f.a = kLatticeStep;
  f.points = {LatticePoint{-2, 0}, LatticePoint{1, -1}};
  f.coeffs = {complex<double>(0.2, -0.5), complex<double>(0.7, 0.0)};
  return f;
}

std::vector<LatticePoint> box(int half) {
  std::vector<LatticePoint> out;
  for (int i = -half; i <= half; ++i)
    for (int j = -half; j <= half; ++j) out.push_back({i, j});
  return out;
}

Eigen::MatrixXcd densify(const Functional& f) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.dim(), f.dim());
  f.add_scaled(m, 1.0);
  return m;
}

double frobenius_pair(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& f) {
  return (x.cwiseProduct(f.conjugate())).sum().real();
}

HermitianMatrix random_hermitian(int n, std::uint64_t seed) {
  Eigen::MatrixXcd m(n, n);
  std::uint64_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = complex<double>(uniform01(seed, k++) - 0.5,
                                uniform01(seed, k++) - 0.5);
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  return HermitianMatrix::FromDense(sym);
}

// Worst constraint violation of a candidate for the n x n block, with the
// min-max slack set to the largest diagonal entry.
double violation_at(const SdpProblem& p, const HermitianMatrix& cand) {
  Eigen::MatrixXcd lifted =
      Eigen::MatrixXcd::Zero(p.lifted_dim(), p.lifted_dim());
  lifted.topLeftCorner(p.n, p.n) = cand.dense();
  if (p.objective == Objective::kMinMaxDiagonal)
    lifted(p.n, p.n) = cand.dense().diagonal().real().maxCoeff();
  double worst = 0.0;
  for (const auto& c : p.constraints) {
    const double v = c.functional.apply(lifted);
    const double miss = (c.kind == ConstraintKind::kUpperBound)
                            ? std::max(v - c.target, 0.0)
                            : std::max(std::abs(v - c.target) - c.tol, 0.0);
    worst = std::max(worst, miss);
  }
  return worst;
}

void check_monotone_decade(const std::vector<double>& hist) {
  for (std::size_t k = 1; 10 * k <= hist.size(); ++k)
    CHECK(hist[10 * k - 1] <= hist[k - 1] + 1e-12);
}

}  // namespace

TEST_CASE("psd projection clips and only clips") {
  const auto psd = [] {
    Eigen::MatrixXcd m(2, 2);
    m << 2.0, complex<double>(0.3, 0.4), complex<double>(0.3, -0.4), 1.0;
    return HermitianMatrix::FromDense(m);
  }();
  CHECK((psd_project(psd).dense() - psd.dense()).norm() < 1e-12);

  const auto neg =
      HermitianMatrix::FromDense(-Eigen::MatrixXcd::Identity(3, 3));
  CHECK(psd_project(neg).dense().norm() < 1e-13);

  const auto m = random_hermitian(6, 17);
  const auto x = psd_project(m);
  CHECK(hermitian_eig(x).values(0) >= -1e-12);
  // Projection optimality: the residual is orthogonal to the result, and
  // projecting twice changes nothing.
  const double cross =
      frobenius_pair(m.dense() - x.dense(), x.dense());
  CHECK(std::abs(cross) < 1e-10);
  CHECK((psd_project(x).dense() - x.dense()).norm() < 1e-11);
}

TEST_CASE("functionals match their dense Frobenius pairings") {
  const auto x = random_hermitian(5, 3).dense();

  Eigen::VectorXcd u(5);
  for (int k = 0; k < 5; ++k)
    u(k) = complex<double>(uniform01(11, 2 * k), uniform01(11, 2 * k + 1));
  const auto rank_one = Functional::RankOne(u);
  CHECK(std::abs(rank_one.apply(x) - frobenius_pair(x, densify(rank_one))) <
        1e-12);

  const auto re_row = Functional::Sparse(5, {{1, 3, 0.5}});
  const auto im_row = Functional::Sparse(5, {{1, 3, complex<double>(0, 0.5)}});
  const auto diag_row = Functional::Sparse(5, {{2, 2, 1.0}});
  CHECK(std::abs(re_row.apply(x) - x(1, 3).real()) < 1e-14);
  CHECK(std::abs(im_row.apply(x) - x(1, 3).imag()) < 1e-14);
  CHECK(std::abs(diag_row.apply(x) - x(2, 2).real()) < 1e-14);

  for (const auto* a : {&rank_one, &re_row, &im_row, &diag_row})
    for (const auto* b : {&rank_one, &re_row, &im_row, &diag_row})
      CHECK(std::abs(a->inner(*b) -
                     frobenius_pair(densify(*a), densify(*b))) < 1e-12);

  CHECK_THROWS_AS(Functional::Sparse(5, {{3, 1, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Functional::Sparse(5, {{2, 2, complex<double>(0, 1)}}),
                  std::invalid_argument);
}

TEST_CASE("one-dimensional feasibility pins the entry") {
  SdpProblem p;
  p.n = 1;
  p.objective = Objective::kFeasibility;
  p.constraints.push_back({Functional::Sparse(1, {{0, 0, 1.0}}), 1.0, 1e-9,
                           ConstraintKind::kInterval});
  const auto [x, report] = solve(p);
  CHECK(report.status == SolveStatus::kSolved);
  CHECK(std::abs(x.dense()(0, 0).real() - 1.0) < 3e-9);
  CHECK(report.max_violation <= 1e-9);
  CHECK(report.min_eigenvalue >= -1e-7);
}

TEST_CASE("min-max diagonal splits a pinned trace evenly") {
  SdpProblem p;
  p.n = 2;
  p.objective = Objective::kMinMaxDiagonal;
  p.constraints.push_back(
      {Functional::Sparse(3, {{0, 0, 1.0}, {1, 1, 1.0}}), 1.0, 1e-9,
       ConstraintKind::kInterval});
  p.constraints.push_back(
      {Functional::Sparse(3, {{0, 0, 1.0}, {2, 2, -1.0}}), 0.0, 0.0,
       ConstraintKind::kUpperBound});
  p.constraints.push_back(
      {Functional::Sparse(3, {{1, 1, 1.0}, {2, 2, -1.0}}), 0.0, 0.0,
       ConstraintKind::kUpperBound});

  SolverConfig cfg;
  cfg.primal_tol = 1e-9;
  cfg.dual_tol = 1e-9;
  const auto [x, report] = solve(p, cfg);
  CHECK(report.status == SolveStatus::kSolved);
  CHECK(std::abs(report.objective_value - 0.5) < 1e-6);
  CHECK(std::abs(x.trace_real() - 1.0) < 1e-6);
  CHECK(report.min_eigenvalue >= -1e-7);
  check_monotone_decade(report.residual_history);
}

TEST_CASE("step-1 problems have one row per sample plus dominance rows") {
  const auto w = make_windows(0.1, 0.1, 0.66, 0.5);
  REQUIRE(w.gamma.size() == 25);
  const auto samples = sample_spectrogram(two_atom_fixture(), w, 0.0, 0);
  const auto p = build_step1(w.gamma, samples, 1e-6);

  CHECK(p.n == 25);
  CHECK(p.objective == Objective::kMinMaxDiagonal);
  CHECK(p.lifted_dim() == 26);
  REQUIRE(p.constraints.size() == samples.omega.size() + w.gamma.size());
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    const bool measurement = k < samples.omega.size();
    CHECK(p.constraints[k].kind == (measurement
                                        ? ConstraintKind::kInterval
                                        : ConstraintKind::kUpperBound));
    CHECK(p.constraints[k].functional.is_rank_one() == measurement);
  }

  // Measurement functionals are the evaluation weights: rank one, trace
  // sum_gamma e^{-pi |omega - gamma|^2}, and equal to the weight matrix
  // padded with a zero slack row.
  for (std::size_t k = 0; k < samples.omega.size(); ++k) {
    const auto& f = p.constraints[k].functional;
    const Eigen::MatrixXcd dense = densify(f);
    double trace = 0.0;
    for (const auto& g : w.gamma)
      trace += std::exp(-kPi * norm_sq(samples.omega[k] -
                                       lattice_location(g)));
    CHECK(std::abs(dense.trace().real() - trace) < 1e-12);
    const auto wm = weight_matrix(w.gamma, samples.omega[k]);
    CHECK((dense.topLeftCorner(25, 25) - wm.dense()).norm() < 1e-12);
    CHECK(dense.row(25).norm() < 1e-15);
  }

  SpectrogramSamples empty;
  CHECK_THROWS_AS(build_step1(w.gamma, empty, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(build_step1(w.gamma, samples, 0.0), std::invalid_argument);
}

TEST_CASE("spectrogram samples of an in-box signal admit the coefficients") {
  const Signal f = two_atom_fixture();
  const auto w = make_windows(0.1, 0.1, 0.66, 0.5);
  const auto samples = sample_spectrogram(f, w, 0.0, 0);
  const auto p = build_step1(w.gamma, samples, 1e-6);

  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(25);
  for (std::size_t k = 0; k < f.points.size(); ++k)
    a(find_lattice_index(w.gamma, f.points[k])) = f.coeffs[k];
  const auto outer =
      HermitianMatrix::FromDense(Eigen::MatrixXcd(a * a.adjoint()));
  CHECK(violation_at(p, outer) < 1e-10);

  // The solver keeps feasibility and cannot do worse than the known point.
  const auto [x, report] = solve(p, {}, &outer);
  CHECK(report.status == SolveStatus::kSolved);
  CHECK(report.max_violation <= 1e-9);
  CHECK(report.objective_value <=
        outer.dense().diagonal().real().maxCoeff() + 1e-5);
  CHECK(report.min_eigenvalue >= -1e-7);
}

TEST_CASE("step-2 constraint count follows the pair set") {
  const Signal f = two_atom_fixture();
  const auto lambda = box(1);
  const auto ext = EntireExtension::FromSignalCoefficients(
      f.coeffs, std::vector<LatticePoint>(f.points.begin(), f.points.end()));
  const auto table = build_predictor(ext, lambda, 1.01);

  // 3x3 grid: 6 horizontal + 6 vertical + 8 diagonal neighbor pairs.
  REQUIRE(table.pair_count() == 9 + 20);
  const auto p = build_step2(table, 1e-6);
  CHECK(p.n == 9);
  CHECK(p.objective == Objective::kFeasibility);
  CHECK(p.constraints.size() == 9 + 2 * 20);
  for (const auto& c : p.constraints) {
    CHECK(c.kind == ConstraintKind::kInterval);
    CHECK(c.tol > 0);
  }
  CHECK_THROWS_AS(build_step2(table, 0.0), std::invalid_argument);
}

TEST_CASE("step-2 recovers an exact rank-one table") {
  const Signal f = two_atom_fixture();
  const auto lambda = box(1);
  const auto ext = EntireExtension::FromSignalCoefficients(
      f.coeffs, std::vector<LatticePoint>(f.points.begin(), f.points.end()));
  const auto table = build_predictor(ext, lambda, 1.01);
  const auto p = build_step2(table, 1e-6);

  const auto [y, report] = solve(p);
  CHECK(report.status == SolveStatus::kSolved);
  CHECK(report.max_violation <= 1e-9);
  CHECK(report.min_eigenvalue >= -1e-7);
  for (const auto& e : table.entries)
    CHECK(std::abs(y.dense()(e.row, e.col) - e.value) < 2e-6);
  CHECK(violation_at(p, y) <= 1e-9);
  check_monotone_decade(report.residual_history);
}

TEST_CASE("a feasible warm start terminates within five iterations") {
  const Signal f = two_atom_fixture();
  const auto lambda = box(1);
  const auto ext = EntireExtension::FromSignalCoefficients(
      f.coeffs, std::vector<LatticePoint>(f.points.begin(), f.points.end()));
  const auto table = build_predictor(ext, lambda, 1.01);
  const auto p = build_step2(table, 1e-6);

  Eigen::VectorXcd g(9);
  for (int k = 0; k < 9; ++k)
    g(k) = gabor_transform(f, lattice_location(lambda[k]));
  const auto warm =
      HermitianMatrix::FromDense(Eigen::MatrixXcd(g * g.adjoint()));
  REQUIRE(violation_at(p, warm) < 1e-12);

  const auto [y, report] = solve(p, {}, &warm);
  CHECK(report.status == SolveStatus::kSolved);
  CHECK(report.iterations <= 5);
  CHECK((y.dense() - warm.dense()).norm() < 1e-8);
}

TEST_CASE("solver reports honest failure on an infeasible problem") {
  // X_00 pinned near two different values at once.
  SdpProblem p;
  p.n = 2;
  p.objective = Objective::kFeasibility;
  p.constraints.push_back({Functional::Sparse(2, {{0, 0, 1.0}}), 1.0, 1e-6,
                           ConstraintKind::kInterval});
  p.constraints.push_back({Functional::Sparse(2, {{0, 0, 1.0}}), 2.0, 1e-6,
                           ConstraintKind::kInterval});
  const auto [x, report] = solve(p);
  CHECK(report.status != SolveStatus::kSolved);
  CHECK(report.max_violation > 1e-3);
}

TEST_CASE("solver configuration dimensions are validated") {
  SdpProblem p;
  p.n = 2;
  p.objective = Objective::kFeasibility;
  p.constraints.push_back({Functional::Sparse(3, {{0, 0, 1.0}}), 1.0, 1e-6,
                           ConstraintKind::kInterval});
  CHECK_THROWS_AS(solve(p), std::invalid_argument);

  SdpProblem q;
  q.n = 1;
  q.objective = Objective::kFeasibility;
  q.constraints.push_back({Functional::Sparse(1, {{0, 0, 1.0}}), 1.0, 0.0,
                           ConstraintKind::kInterval});
  CHECK_THROWS_AS(solve(q), std::invalid_argument);
}
