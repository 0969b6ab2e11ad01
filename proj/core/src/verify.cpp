// core/src/verify.cpp

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

#include "gpr/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>

#include "gpr/gabor.hpp"
#include "gpr/graph.hpp"
#include "gpr/numerics.hpp"
#include "gpr/pipeline.hpp"
#include "gpr/rng.hpp"
#include "gpr/sdp.hpp"

namespace gpr {
namespace {

using std::complex;

constexpr double kPi = 3.14159265358979323846;

/// Outcome of one check body: pass flag and the worst deviation seen.
struct Outcome {
  bool passed = true;
  double worst = 0.0;

  /// Requires |measured| <= bound; tracks the worst margin overrun.
  void require(double measured, double bound) {
    const double dev = std::abs(measured);
    if (dev > worst) worst = dev;
    if (dev > bound) passed = false;
  }
};

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "worst %.3e", v);
  return buf;
}

template <typename Body>
void run_check(VerifyReport& report, const char* name, const Body& body) {
  VerifyCheck check;
  check.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    body(o);
    check.passed = o.passed;
    check.detail = brief(o.worst);
  } catch (const std::exception& e) {
    check.passed = false;
    check.detail = e.what();
  }
  check.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report.checks.push_back(std::move(check));
}

Vec2 random_point(std::uint64_t seed, std::uint64_t k, double scale) {
  return {scale * (2.0 * uniform01(seed, 2 * k) - 1.0),
          scale * (2.0 * uniform01(seed, 2 * k + 1) - 1.0)};
}

std::vector<LatticePoint> int_box(int half) {
  std::vector<LatticePoint> points;
  for (int i = -half; i <= half; ++i)
    for (int j = -half; j <= half; ++j) points.push_back({i, j});
  return points;
}

Signal two_atom_signal() {
  Signal f;
  f.a = kLatticeStep;
  f.points = {{0, 0}, {1, -1}};
  f.coeffs = {complex<double>(0.8, 0.0), complex<double>(-0.3, 0.45)};
  return f;
}

/// Transform by quadrature: int f(t) e^{-2 pi i w t} phi(t - x) dt.
complex<double> transform_by_quadrature(const Signal& f, Vec2 z) {
  const double step = 1e-3;
  std::vector<complex<double>> samples;
  for (double t = -8.0; t <= 8.0 + step / 2; t += step) {
    const complex<double> phase(0.0, -2.0 * kPi * z.y * t);
    samples.push_back(signal_value(f, t) * std::exp(phase) *
                      gauss_window(t - z.x));
  }
  return integrate_composite(samples, step).value;
}

void check_window_normalization(Outcome& o) {
  const double step = 1e-3;
  std::vector<double> samples;
  for (double t = -6.0; t <= 6.0 + step / 2; t += step) {
    const double w = gauss_window(t);
    samples.push_back(w * w);
  }
  o.require(integrate_composite(samples, step).value - 1.0, 1e-10);
}

void check_transform_quadrature(Outcome& o) {
  const Signal f = two_atom_signal();
  for (std::uint64_t k = 0; k < 3; ++k) {
    const Vec2 z = random_point(101u, k, 1.5);
    o.require(std::abs(gabor_transform(f, z) - transform_by_quadrature(f, z)),
              1e-8);
  }
}

void check_phase_blindness(Outcome& o) {
  const Signal f = two_atom_signal();
  Signal g = f;
  const complex<double> rot = std::exp(complex<double>(0.0, 0.37));
  for (auto& c : g.coeffs) c *= rot;
  for (std::uint64_t k = 0; k < 8; ++k) {
    const Vec2 z = random_point(102u, k, 2.0);
    o.require(spectrogram(f, z) - spectrogram(g, z), 1e-12);
  }
}

void check_dual_window_bounds(Outcome& o) {
  const double step = 0.01;
  std::vector<double> samples;
  for (double t = -6.0; t <= 6.0 + step / 2; t += step) {
    const double v = dual_window(t);
    samples.push_back(v * v);
    // Pointwise decay envelope.
    if (std::abs(v) > std::exp(-kPi * std::abs(t) / std::sqrt(2.0)))
      o.require(1.0, 0.5);
  }
  const double norm = std::sqrt(integrate_composite(samples, step).value);
  o.require(norm, 0.6);
}

void check_frame_expansion(Outcome& o) {
  Signal f;
  f.a = kLatticeStep;
  f.points = {{0, 0}};
  f.coeffs = {complex<double>(1.0, 0.0)};
  const auto box = int_box(4);
  std::vector<complex<double>> c;
  for (const auto& p : box)
    c.push_back(gabor_transform(f, lattice_location(p)));
  for (double t : {-1.5, -0.7, 0.0, 0.4, 1.1}) {
    o.require(std::abs(synthesize(c, box, t) - signal_value(f, t)), 1e-6);
  }
}

void check_theta_symmetry(Outcome& o) {
  const double q = std::exp(-kPi);
  o.require(theta3(0.0, q) - 1.08643481121330801, 1e-13);
  o.require(theta3(kPi / 2, q) - 0.913579138156116821, 1e-13);
  for (std::uint64_t k = 0; k < 6; ++k) {
    const double z = 3.0 * (2.0 * uniform01(103u, k) - 1.0);
    o.require(theta3(-z, q) - theta3(z, q), 1e-14);
    o.require(theta3(z + kPi, q) - theta3(z, q), 1e-13);
  }
}

void check_evaluation_identity(Outcome& o, const VerifyHooks& hooks) {
  const auto gamma = int_box(1);
  Signal g;
  g.a = kLatticeStep;
  g.points = gamma;
  for (std::size_t k = 0; k < gamma.size(); ++k)
    g.coeffs.push_back(uniform_unit_disk(104u, k));
  const auto ext = EntireExtension::FromSignalCoefficients(g.coeffs, gamma);
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Vec2 p = random_point(105u, 2 * k, 1.5);
    const Vec2 u = random_point(105u, 2 * k + 1, 1.4);
    const auto expected =
        gabor_transform(g, p + u) * std::conj(gabor_transform(g, p));
    const auto got = hooks.eval_operator ? hooks.eval_operator(ext, p, u)
                                         : eval_operator(ext, p, u);
    o.require(std::abs(got - expected), 1e-8);
  }
}

void check_weight_pairing(Outcome& o) {
  const auto gamma = int_box(1);
  const int n = static_cast<int>(gamma.size());
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = complex<double>(uniform01(106u, 2 * (r * n + c)) - 0.5,
                                uniform01(106u, 2 * (r * n + c) + 1) - 0.5);
  const auto a = HermitianMatrix::FromDense(0.5 * (m + m.adjoint().eval()));
  for (std::uint64_t k = 0; k < 5; ++k) {
    const Vec2 p = random_point(107u, k, 1.5);
    const auto w = weight_matrix(gamma, p);
    const complex<double> paired =
        (a.dense().array() * w.dense().array().conjugate()).sum();
    const auto direct = evaluate_FA(a, gamma, {p.x, p.y});
    o.require(std::abs(paired - direct), 1e-10);
  }
}

void check_window_counts(Outcome& o) {
  const auto w = make_windows(1.0, 1.0, 1.0, 0.5);
  o.require(static_cast<double>(w.omega.size()) - 81.0, 0.5);
  o.require(static_cast<double>(w.lambda.size()) - 9.0, 0.5);
  o.require(static_cast<double>(w.gamma.size()) - 81.0, 0.5);
}

void check_graph_neighbors(Outcome& o) {
  const auto box = int_box(2);
  const std::vector<double> weights(box.size(), 1.0);
  const int center = find_lattice_index(box, {0, 0});
  const double expected[] = {4.0, 8.0, 12.0};
  const double radii[] = {kLatticeStep + 0.01, 1.01, std::sqrt(2.0) + 0.01};
  for (int k = 0; k < 3; ++k) {
    const auto g = build_graph(box, weights, radii[k]);
    o.require(static_cast<double>(g.degree(center)) - expected[k], 0.5);
  }
}

void check_two_component_gap(Outcome& o) {
  std::vector<LatticePoint> points{{0, 0}, {0, 1}, {4, 0}, {4, 1}};
  const std::vector<double> weights(points.size(), 1.0);
  const auto split = build_graph(points, weights, 1.0);
  o.require(spectral_gap(split), kSpectralGapTol);
  const auto joined = build_graph(points, weights, 3.0);
  if (spectral_gap(joined) <= 1e-6) o.require(1.0, 0.5);
}

void check_psd_projection(Outcome& o) {
  const int n = 6;
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = complex<double>(2.0 * uniform01(108u, 2 * (r * n + c)) - 1.0,
                                2.0 * uniform01(108u, 2 * (r * n + c) + 1) -
                                    1.0);
  const auto h = HermitianMatrix::FromDense(0.5 * (m + m.adjoint().eval()));
  const auto p = psd_project(h);
  o.require(std::min(0.0, hermitian_eig(p).values.minCoeff()), 1e-12);
  const double dist = (h.dense() - p.dense()).norm();
  for (std::uint64_t k = 0; k < 20; ++k) {
    Eigen::MatrixXcd b(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        b(r, c) = complex<double>(
            2.0 * uniform01(109u + k, 2 * (r * n + c)) - 1.0,
            2.0 * uniform01(109u + k, 2 * (r * n + c) + 1) - 1.0);
    const Eigen::MatrixXcd q = b * b.adjoint();
    o.require(std::max(0.0, dist - (h.dense() - q).norm()), 1e-12);
  }
}

void check_solver_feasibility(Outcome& o) {
  SdpProblem problem;
  problem.n = 1;
  Eigen::VectorXcd u(1);
  u << 1.0;
  problem.constraints.push_back(
      {Functional::RankOne(u), 1.0, 1e-6, ConstraintKind::kInterval});
  const auto [x, report] = solve(problem);
  if (report.status != SolveStatus::kSolved) o.require(1.0, 0.5);
  o.require(x(0, 0).real() - 1.0, 2e-6);
}

void check_phase_alignment(Outcome& o) {
  std::vector<complex<double>> b;
  for (std::uint64_t k = 0; k < 7; ++k) b.push_back(uniform_unit_disk(110u, k));
  std::vector<complex<double>> a = b;
  const complex<double> rot = std::exp(complex<double>(0.0, 0.7));
  for (auto& v : a) v *= rot;
  const auto alignment = align_phase(a, b);
  o.require(alignment.theta - 0.7, 1e-12);
  o.require(alignment.error, 1e-12);
}

void check_calibration_shapes(Outcome& o) {
  const double eps = 1e-4;
  const double r = 1.0;
  CalibrationParams params{.T = 1.0, .S = 1.0, .R = 4.0, .r = r, .s = 0.1,
                           .eps = eps};
  SignalFigures figures{.gf_norm_sq = 10.0, .lambda2 = 0.5,
                        .lambda_count = 25};
  const auto report = check_calibration(params, figures);
  const double ratio = 3.1e4 * std::exp(17.0 * kPi / 32.0 * r * r);
  o.require(report.completion_tol / std::sqrt(eps) / ratio - 1.0, 1e-12);
  const double step = 0.3 / std::sqrt(std::log(2.0 / (3.0 * eps)));
  o.require(report.step_bound / step - 1.0, 1e-12);
}

void check_disk_sampler(Outcome& o) {
  double sum_sq = 0.0;
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const auto c = uniform_unit_disk(111u, static_cast<std::uint64_t>(k));
    o.require(std::min(0.0, 1.0 - std::abs(c)), 1e-15);
    sum_sq += std::norm(c);
  }
  o.require(sum_sq / n - 0.5, 0.02);
}

}  // namespace

VerifyReport run_verification(const VerifyHooks& hooks) {
  VerifyReport report;
  run_check(report, "window-normalization", check_window_normalization);
  run_check(report, "transform-quadrature", check_transform_quadrature);
  run_check(report, "phase-blindness", check_phase_blindness);
  run_check(report, "dual-window-bounds", check_dual_window_bounds);
  run_check(report, "frame-expansion", check_frame_expansion);
  run_check(report, "theta-symmetry", check_theta_symmetry);
  run_check(report, "evaluation-identity",
            [&](Outcome& o) { check_evaluation_identity(o, hooks); });
  run_check(report, "weight-pairing", check_weight_pairing);
  run_check(report, "window-counts", check_window_counts);
  run_check(report, "graph-neighbors", check_graph_neighbors);
  run_check(report, "two-component-gap", check_two_component_gap);
  run_check(report, "psd-projection", check_psd_projection);
  run_check(report, "solver-feasibility", check_solver_feasibility);
  run_check(report, "phase-alignment", check_phase_alignment);
  run_check(report, "calibration-shapes", check_calibration_shapes);
  run_check(report, "disk-sampler", check_disk_sampler);
  return report;
}

}  // namespace gpr
