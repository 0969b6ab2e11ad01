// core/include/gpr/pipeline.hpp

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

// End-to-end reconstruction from phase-less Gabor measurements.  The driver
// chains the two convex stages (spectrogram fit over the padded box, then
// band completion over the target lattice), de-lifts the completed matrix to
// transform coefficients through its top eigenpair, and synthesizes a signal
// with the dual window.  Calibration rules decide whether the measurement
// geometry puts a run inside the regime where the stability certificates
// mean anything; runs outside that regime still execute but are flagged.

#ifndef GPR_PIPELINE_HPP_
#define GPR_PIPELINE_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gpr/ansatz.hpp"
#include "gpr/gabor.hpp"
#include "gpr/graph.hpp"
#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"
#include "gpr/sdp.hpp"

namespace gpr {

/// Floor for the working completion tolerance; keeps the entry boxes from
/// collapsing below what the solver itself certifies.
inline constexpr double kCompletionTolFloor = 1e-7;

/// Measurement geometry and noise level.  Calibration treats these in
/// peak-normalized units (largest sampled spectrogram value equal to 1).
struct CalibrationParams {
  double T = 0.0;    // target half-width in time
  double S = 0.0;    // target half-width in frequency
  double R = 0.0;    // sampling pad around the target box
  double r = 0.0;    // completion pair radius
  double s = 0.0;    // sampling grid step
  double eps = 0.0;  // noise bound on the sampled spectrogram
};

/// Signal figures the calibration conditions compare against, in the same
/// normalized units as CalibrationParams.
struct SignalFigures {
  double gf_norm_sq = 0.0;       // transform mass on the target lattice
  double lambda2 = 0.0;          // spectral gap of the stability graph
  std::size_t lambda_count = 0;  // target lattice size
};

/// Outcome of the calibration rules.  Each condition records the bound its
/// parameter is compared against, so margins can be read off directly.
struct CalibrationReport {
  CalibrationParams params;
  SignalFigures figures;

  // Noise condition: eps must not exceed noise_bound, which shrinks with the
  // pair radius and with poor lattice connectivity.
  double noise_bound = 0.0;
  bool noise_ok = false;
  // A zero spectral gap drives noise_bound to zero; no eps > 0 can pass.
  bool noise_unsatisfiable = false;

  // Completion tolerance implied by eps and r.  Always derived here, never
  // taken from the caller.
  double completion_tol = 0.0;

  // Grid condition: the sampling step s must not exceed step_bound.
  double step_bound = 0.0;
  bool step_ok = false;

  // Pad condition: the sampling pad R must be at least pad_bound.
  double pad_bound = 0.0;
  bool pad_ok = false;

  // Size of the sampling grid implied by (T, S, R, s); grows like the square
  // of log(1/eps) once the pad condition is tight.
  std::size_t sample_count = 0;

  bool all_ok() const { return noise_ok && step_ok && pad_ok; }
};

/// Theoretical completion tolerance for noise level eps at pair radius r.
/// Worst-case constant included; at practical noise levels this is loose.
double completion_tolerance(double eps, double r);

/// Working completion tolerance used by reconstruct: same shape in eps and
/// r as completion_tolerance but without the worst-case constant, floored
/// by kCompletionTolFloor.
double completion_run_tolerance(double eps, double r);

/// Evaluates every calibration rule.  Throws std::invalid_argument unless
/// all of T, S, R, r, s, eps are positive and lambda_count is nonzero;
/// lambda2 may be zero, which marks the noise condition unsatisfiable.
CalibrationReport check_calibration(const CalibrationParams& params,
                                    const SignalFigures& figures);

/// Best global-phase alignment of b onto a: theta minimizes the l2 distance
/// between a and e^{i theta} b, and error is that minimal distance.  When
/// the inner product of a and b vanishes every phase ties; theta is then 0
/// and the error is the Pythagorean combination of both norms.
struct PhaseAlignment {
  double theta = 0.0;  // in (-pi, pi]
  double error = 0.0;
};
PhaseAlignment align_phase(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b);

/// Certificate evaluation window: reconstruction quality is measured on the
/// time interval (-tau, tau).  Large target boxes keep a fixed margin; small
/// ones fall back to half the box so that tau stays inside (0, T).
double default_tau(double T);

struct RunConfig {
  // Over-relaxation is on by default here: both pipeline programs tolerate it
  // and it roughly halves the iteration count on spectrogram fits.
  SolverConfig solver{.relax = 1.8};
  // Completion pair radius.  Nonpositive selects the radius automatically by
  // minimizing the stability functional over the candidate radii.
  double radius = 0.0;
  // Completion tolerance override in sample units; nonpositive derives it
  // from eps and the radius via completion_run_tolerance.
  double completion_tol = 0.0;
  // When set, a failed calibration rule aborts the run with CalibrationError
  // instead of flagging the result.
  bool strict_calibration = false;
};

/// Thrown by reconstruct under strict calibration when a rule fails.
struct CalibrationError : std::runtime_error {
  explicit CalibrationError(CalibrationReport r);
  CalibrationReport report;
};

/// Stage whose solver did not reach a certified solution, if any.
enum class PipelineStage {
  kNone,        // both stages solved
  kExtension,   // spectrogram fit over the padded box
  kCompletion,  // band completion over the target lattice
};

/// Everything a reconstruction run produces.  Matrices, predictor values,
/// eigenvalues, and coefficients are in the units of the input samples; the
/// solver reports and the calibration report describe the peak-normalized
/// problem that was actually solved (scale converts between the two).
struct ReconstructionResult {
  // Peak sample value the run normalized by.
  double scale = 1.0;
  // Noise bound as supplied by the caller, in sample units.
  double eps = 0.0;

  // Pair radius in effect, and the selection trace when it was automatic.
  double radius = 0.0;
  RadiusChoice radius_choice;

  CalibrationReport calibration;
  bool outside_guaranteed_regime = false;

  // Spectrogram-fit stage: coefficient matrix over the padded box.
  HermitianMatrix a_star;
  SolveReport extension_report;

  // Relative-phase products predicted from a_star on the target lattice.
  PredictorTable predictor;

  // Band-completion stage, with the entry tolerance actually enforced.
  double completion_tol = 0.0;
  HermitianMatrix y;
  SolveReport completion_report;

  // De-lift: top eigenpair of y and the recovered transform coefficients
  // sqrt(trace y) v.  The eigenvector has unit norm; eigen_gap is the
  // relative separation of the top two eigenvalues, and a near-zero gap
  // marks the eigenvector (hence the coefficients) as ambiguous.
  double top_eigenvalue = 0.0;
  Eigen::VectorXcd top_eigenvector;
  double eigen_gap = 0.0;
  bool eigenvector_ambiguous = false;
  std::vector<std::complex<double>> coefficients;
  std::vector<LatticePoint> lambda;

  PipelineStage failed_stage = PipelineStage::kNone;
  bool ok() const { return failed_stage == PipelineStage::kNone; }

  /// Reconstructed signal value: dual-window synthesis of the recovered
  /// coefficients.  Zero when the run failed before de-lifting.
  std::complex<double> value(double t) const;
};

/// Runs the full pipeline on sampled spectrogram values.  The samples must
/// lie on the grid of w.  Samples are rescaled so the peak value is 1, the
/// two convex stages run in those units, and every output is scaled back.
/// A stage whose solver fails leaves the later fields empty (extension
/// failure) or best-effort (completion failure) and tags failed_stage; a
/// failed calibration rule only flags outside_guaranteed_regime unless
/// cfg.strict_calibration is set.  Deterministic: identical inputs produce
/// identical results, and the samples are invariant under a global phase
/// change of the underlying signal, so the result is too.
ReconstructionResult reconstruct(const SpectrogramSamples& samples,
                                 const LatticeWindows& w, double eps,
                                 const RunConfig& cfg = {});

/// One certified quantity: the measured value next to its proven bound.
struct CertificatePair {
  double measured = 0.0;
  double bound = 0.0;
};

/// Stability certificates of a finished run against a known ground truth.
/// All values are in peak-normalized units, the units the bounds hold in.
struct CertificateReport {
  double tau = 0.0;    // evaluation half-window
  double theta = 0.0;  // aligning phase of the recovered coefficients

  // Ground-truth figures behind the bounds: transform mass and stability
  // graph gap on the target lattice (their ratio is scale-invariant), and
  // the two envelope quantities of the normalized signal.
  double gf_norm_sq = 0.0;
  double lambda2 = 0.0;
  double kappa = 0.0;  // frequency-tail envelope at S
  double eta = 0.0;    // time-localization envelope

  // l2 distance of the recovered coefficients from the true transform on
  // the target lattice, after phase alignment, against the a-priori
  // stability bound.
  CertificatePair coefficients;

  // L2(-tau, tau) distance of the synthesized signal from the truth, after
  // phase alignment, against the synthesis bound seeded with the measured
  // coefficient error.
  CertificatePair synthesis;

  // Same measured distance against the a-priori end-to-end bound.
  CertificatePair end_to_end;
};

/// Evaluates the certificates.  tau defaults (nonpositive argument) to
/// default_tau(w.T) and must stay inside (0, T).  Throws
/// std::invalid_argument when the run produced no coefficients.
CertificateReport certificates(const ReconstructionResult& result,
                               const Signal& f, const LatticeWindows& w,
                               double tau = 0.0);

}  // namespace gpr

#endif  // GPR_PIPELINE_HPP_
