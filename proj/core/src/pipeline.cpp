// core/src/pipeline.cpp

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

#include "gpr/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpr {

namespace {

// Exponent shared by the completion tolerance and the noise bound.
constexpr double kTolExponent = 17.0 * std::numbers::pi / 32.0;

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string("pipeline: ") + name +
                                " must be positive");
  }
}

// Composite Simpson weights on an odd uniform grid.
std::vector<double> simpson_weights(std::size_t n, double step) {
  std::vector<double> w(n, step / 3.0);
  for (std::size_t k = 1; k + 1 < n; ++k) w[k] *= (k % 2 == 1) ? 4.0 : 2.0;
  return w;
}

std::string calibration_message(const CalibrationReport& r) {
  std::string msg = "calibration failed:";
  if (!r.noise_ok) msg += " noise level above the stable bound;";
  if (!r.step_ok) msg += " sampling step too coarse;";
  if (!r.pad_ok) msg += " sampling pad too small;";
  return msg;
}

}  // namespace

double completion_tolerance(double eps, double r) {
  require_positive(eps, "eps");
  require_positive(r, "r");
  return 3.1e4 * std::sqrt(eps) * std::exp(kTolExponent * r * r);
}

double completion_run_tolerance(double eps, double r) {
  require_positive(eps, "eps");
  require_positive(r, "r");
  // The guaranteed tolerance scales as sqrt(eps) against adversarial noise;
  // predictor entries built from an eps-accurate fit track eps linearly, so
  // the run keeps a 10x margin on that instead; the guaranteed curve is
  // reported separately by completion_tolerance.
  return std::max(10.0 * eps * std::exp(kTolExponent * r * r),
                  kCompletionTolFloor);
}

CalibrationReport check_calibration(const CalibrationParams& params,
                                    const SignalFigures& figures) {
  require_positive(params.T, "T");
  require_positive(params.S, "S");
  require_positive(params.R, "R");
  require_positive(params.r, "r");
  require_positive(params.s, "s");
  require_positive(params.eps, "eps");
  if (figures.lambda_count == 0) {
    throw std::invalid_argument("check_calibration: empty target lattice");
  }
  if (figures.gf_norm_sq < 0.0 || figures.lambda2 < -kSpectralGapTol) {
    throw std::invalid_argument("check_calibration: negative signal figures");
  }

  CalibrationReport rep;
  rep.params = params;
  rep.figures = figures;

  const double lam2 = std::max(figures.lambda2, 0.0);
  const double count = static_cast<double>(figures.lambda_count);
  const double inner =
      std::exp(-kTolExponent * params.r * params.r) / 1.33e5 *
      std::min(figures.gf_norm_sq / (count * count),
               lam2 / (192.0 * params.r * params.r));
  rep.noise_bound = inner * inner;
  rep.noise_unsatisfiable =
      lam2 <= kSpectralGapTol || !(rep.noise_bound > 0.0);
  if (rep.noise_unsatisfiable) rep.noise_bound = 0.0;
  rep.noise_ok = params.eps <= rep.noise_bound;

  rep.completion_tol = completion_tolerance(params.eps, params.r);

  const double logarg = std::log(2.0 / (3.0 * params.eps));
  rep.step_bound = logarg > 0.0 ? 0.3 / std::sqrt(logarg) : 0.0;
  rep.step_ok = rep.step_bound > 0.0 && params.s <= rep.step_bound;

  rep.pad_bound =
      std::max(2.1 + 0.9 * std::sqrt(std::max(std::log(1.0 / params.eps), 0.0)),
               0.5 * (params.r + 1.0 / params.s));
  rep.pad_ok = params.R >= rep.pad_bound;

  rep.sample_count =
      make_windows(params.T, params.S, params.R, params.s).omega.size();
  return rep;
}

PhaseAlignment align_phase(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("align_phase: length mismatch");
  }
  std::complex<double> ip = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ip += a[k] * std::conj(b[k]);
    na += std::norm(a[k]);
    nb += std::norm(b[k]);
  }
  PhaseAlignment out;
  const double mag = std::abs(ip);
  out.theta = mag > 0.0 ? std::arg(ip) : 0.0;
  out.error = std::sqrt(std::max(na + nb - 2.0 * mag, 0.0));
  return out;
}

double default_tau(double T) {
  require_positive(T, "T");
  return T > 1.75 ? T - 1.5 : 0.5 * T;
}

CalibrationError::CalibrationError(CalibrationReport r)
    : std::runtime_error(calibration_message(r)), report(std::move(r)) {}

std::complex<double> ReconstructionResult::value(double t) const {
  if (coefficients.empty()) return 0.0;
  return synthesize(coefficients, lambda, t);
}

ReconstructionResult reconstruct(const SpectrogramSamples& samples,
                                 const LatticeWindows& w, double eps,
                                 const RunConfig& cfg) {
  require_positive(eps, "eps");
  if (samples.sigma.size() != samples.omega.size()) {
    throw std::invalid_argument("reconstruct: sample vectors disagree");
  }
  if (samples.omega.size() != w.omega.size()) {
    throw std::invalid_argument("reconstruct: samples do not match the grid");
  }
  for (std::size_t k = 0; k < w.omega.size(); ++k) {
    if (std::abs(samples.omega[k].x - w.omega[k].x) > 1e-12 ||
        std::abs(samples.omega[k].y - w.omega[k].y) > 1e-12) {
      throw std::invalid_argument("reconstruct: samples do not match the grid");
    }
  }

  ReconstructionResult res;
  res.eps = eps;
  const double peak =
      *std::max_element(samples.sigma.begin(), samples.sigma.end());
  res.scale = peak > 0.0 ? peak : 1.0;
  const double scale = res.scale;
  const double eps_hat = eps / scale;

  SpectrogramSamples normalized = samples;
  for (double& v : normalized.sigma) v /= scale;

  // Spectrogram fit over the padded box, in normalized units.
  SdpProblem stage1 = build_step1(w.gamma, normalized, eps_hat);
  auto [a_hat, extension_report] = solve(stage1, cfg.solver);
  res.extension_report = extension_report;
  res.a_star = HermitianMatrix::FromDense(scale * a_hat.dense());
  if (extension_report.status != SolveStatus::kSolved) {
    res.failed_stage = PipelineStage::kExtension;
    return res;
  }

  // Lattice weights from the fitted spectrogram; they drive the radius
  // selection, the stability graph, and the calibration figures.
  const EntireExtension ext = EntireExtension::FromMatrix(a_hat, w.gamma);
  const std::vector<LatticePoint>& lambda = w.lambda;
  std::vector<double> weights(lambda.size());
  double gf_norm_sq = 0.0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const double v =
        eval_operator(ext, lattice_location(lambda[k]), Vec2{0.0, 0.0}).real();
    weights[k] = std::max(v, 0.0);
    gf_norm_sq += weights[k];
  }

  double radius = cfg.radius;
  if (radius <= 0.0) {
    if (lambda.size() >= 2) {
      res.radius_choice = r_star(lambda, weights);
    } else {
      // A one-vertex lattice has no gap to compare; any radius works and
      // the calibration block below reports the vanished gap.
      res.radius_choice.r = candidate_radii().front();
      res.radius_choice.value = std::numeric_limits<double>::infinity();
    }
    radius = res.radius_choice.r;
  }
  res.radius = radius;

  double lambda2 = 0.0;
  if (lambda.size() >= 2) {
    lambda2 = spectral_gap(build_graph(lambda, weights, radius));
  }

  res.calibration =
      check_calibration({w.T, w.S, w.R, radius, w.s, eps_hat},
                        {gf_norm_sq, lambda2, lambda.size()});
  res.outside_guaranteed_regime = !res.calibration.all_ok();
  if (cfg.strict_calibration && res.outside_guaranteed_regime) {
    throw CalibrationError(res.calibration);
  }

  // Band completion over the target lattice, warmed from the clipped fill
  // of the predicted band.
  PredictorTable table = build_predictor(a_hat, w.gamma, lambda, radius);
  const double tol_hat = cfg.completion_tol > 0.0
                             ? cfg.completion_tol / scale
                             : completion_run_tolerance(eps_hat, radius);
  res.completion_tol = tol_hat * scale;
  res.lambda = lambda;
  res.predictor = table;
  for (PredictorEntry& e : res.predictor.entries) e.value *= scale;

  SdpProblem stage2 = build_step2(table, tol_hat);
  const int n = static_cast<int>(lambda.size());
  HermitianMatrix warm(n);
  for (const PredictorEntry& e : table.entries) warm.set(e.row, e.col, e.value);
  warm = psd_project(warm);
  auto [y_hat, completion_report] = solve(stage2, cfg.solver, &warm);
  res.completion_report = completion_report;
  if (completion_report.status != SolveStatus::kSolved) {
    res.failed_stage = PipelineStage::kCompletion;
  }
  res.y = HermitianMatrix::FromDense(scale * y_hat.dense());

  // De-lift through the top eigenpair; the trace carries the total mass.
  const EigenDecomposition eig = hermitian_eig(res.y);
  res.top_eigenvalue = eig.values(n - 1);
  res.top_eigenvector = eig.vectors.col(n - 1);
  if (n >= 2) {
    const double second = eig.values(n - 2);
    const double span = std::abs(res.top_eigenvalue);
    res.eigen_gap =
        span > 0.0 ? (res.top_eigenvalue - second) / span : 0.0;
  } else {
    res.eigen_gap = 1.0;
  }
  res.eigenvector_ambiguous = res.eigen_gap < 1e-6;

  const double mass = std::sqrt(std::max(res.y.trace_real(), 0.0));
  res.coefficients.resize(lambda.size());
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    res.coefficients[k] = mass * res.top_eigenvector(static_cast<int>(k));
  }
  return res;
}

CertificateReport certificates(const ReconstructionResult& result,
                               const Signal& f, const LatticeWindows& w,
                               double tau) {
  if (result.coefficients.empty()) {
    throw std::invalid_argument("certificates: run has no coefficients");
  }
  if (tau <= 0.0) tau = default_tau(w.T);
  if (!(tau < w.T)) {
    throw std::invalid_argument("certificates: tau must stay below T");
  }

  CertificateReport rep;
  rep.tau = tau;
  const double scale = result.scale;
  const double root = std::sqrt(scale);
  const double eps_hat = result.eps / scale;
  const double r = result.radius;
  const std::vector<LatticePoint>& lambda = result.lambda;

  // Ground-truth transform on the target lattice and its stability figures.
  std::vector<std::complex<double>> truth(lambda.size());
  std::vector<double> weights(lambda.size());
  double gf_norm_sq = 0.0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    truth[k] = gabor_transform(f, lattice_location(lambda[k]));
    weights[k] = std::norm(truth[k]);
    gf_norm_sq += weights[k];
  }
  rep.gf_norm_sq = gf_norm_sq / scale;
  double lambda2 = 0.0;
  if (lambda.size() >= 2) {
    lambda2 = spectral_gap(build_graph(lambda, weights, r));
  }
  rep.lambda2 = lambda2 / scale;

  // Coefficient certificate, in normalized units.
  std::vector<std::complex<double>> c_hat(result.coefficients);
  for (auto& v : c_hat) v /= root;
  std::vector<std::complex<double>> truth_hat(truth);
  for (auto& v : truth_hat) v /= root;
  const PhaseAlignment coeff = align_phase(c_hat, truth_hat);
  rep.theta = coeff.theta;
  rep.coefficients.measured = coeff.error;
  const double stability =
      177.0 * c_stab(rep.gf_norm_sq, rep.lambda2, r) * std::pow(eps_hat, 0.25);
  rep.coefficients.bound = stability;

  // Envelope quantities of the normalized signal; both scale linearly.
  rep.kappa = frequency_tail_envelope(f, w.S) / root;
  rep.eta = time_localization_envelope(f) / root;

  // L2 distance on (-tau, tau) after its own phase alignment, measured by
  // folding Simpson weights into the sampled values.
  std::size_t half = static_cast<std::size_t>(std::ceil(tau / 0.005));
  half = std::max<std::size_t>(half, 8);
  const std::size_t grid = 2 * half + 1;
  const double step = 2.0 * tau / static_cast<double>(grid - 1);
  const std::vector<double> wts = simpson_weights(grid, step);
  std::vector<std::complex<double>> rec(grid);
  std::vector<std::complex<double>> ref(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = -tau + static_cast<double>(k) * step;
    const double rw = std::sqrt(wts[k]);
    rec[k] = rw * result.value(t) / root;
    ref[k] = rw * signal_value(f, t) / root;
  }
  const PhaseAlignment l2 = align_phase(rec, ref);
  rep.synthesis.measured = l2.error;
  rep.end_to_end.measured = l2.error;

  const double T = w.T;
  const double S = w.S;
  rep.synthesis.bound =
      6.82 * (rep.coefficients.measured + std::sqrt(T + 1.0) * rep.kappa +
              std::sqrt(tau + 1.0) *
                  std::exp(-std::numbers::pi / std::numbers::sqrt2 * (T - tau)) *
                  rep.eta);
  rep.end_to_end.bound =
      18.0 * (stability + (2.0 * T + 2.0) * rep.kappa +
              2.0 * std::sqrt(S) * (tau + 1.0) *
                  std::exp(-0.5 * std::numbers::pi * (T - tau)));
  return rep;
}

}  // namespace gpr
