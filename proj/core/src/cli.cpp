// core/src/cli.cpp

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

#include "gpr/cli.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "gpr/gabor.hpp"
#include "gpr/graph.hpp"
#include "gpr/io.hpp"
#include "gpr/lattice.hpp"
#include "gpr/pipeline.hpp"
#include "gpr/rng.hpp"
#include "gpr/verify.hpp"

namespace gpr {
namespace {

using nlohmann::ordered_json;
using std::complex;

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kMaxIterations:
      return "max-iterations";
    case SolveStatus::kInfeasibleDetected:
      return "infeasible-detected";
  }
  return "unknown";
}

const char* stage_name(PipelineStage s) {
  switch (s) {
    case PipelineStage::kNone:
      return "none";
    case PipelineStage::kExtension:
      return "extension";
    case PipelineStage::kCompletion:
      return "completion";
  }
  return "unknown";
}

ordered_json solve_report_json(const SolveReport& r) {
  return {{"status", status_name(r.status)},
          {"iterations", r.iterations},
          {"max_violation", r.max_violation},
          {"min_eigenvalue", r.min_eigenvalue},
          {"objective_value", r.objective_value}};
}

ordered_json calibration_json(const CalibrationReport& c) {
  return {{"noise_bound", c.noise_bound},
          {"noise_ok", c.noise_ok},
          {"noise_unsatisfiable", c.noise_unsatisfiable},
          {"completion_tol", c.completion_tol},
          {"step_bound", c.step_bound},
          {"step_ok", c.step_ok},
          {"pad_bound", c.pad_bound},
          {"pad_ok", c.pad_ok},
          {"sample_count", c.sample_count},
          {"all_ok", c.all_ok()}};
}

ordered_json pair_json(const CertificatePair& p) {
  return {{"measured", p.measured}, {"bound", p.bound}};
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

/// Error report for reconstruct: same top-level schema, "error" instead of
/// "result".
void write_error_report(const std::string& path, const ordered_json& config,
                        const std::string& kind, const std::string& message) {
  if (path.empty()) return;
  ordered_json j;
  j["version"] = kToolVersion;
  j["config"] = config;
  j["error"] = {{"kind", kind}, {"message", message}};
  write_json(path, j);
}

}  // namespace

void apply_thread_cap() {
  const char* cap = std::getenv("GPR_THREADS");
  if (cap == nullptr) return;
  const int n = std::atoi(cap);
  if (n > 0) Eigen::setNbThreads(n);
}

int cmd_gen(const GenOptions& opt, std::ostream& log, std::ostream& err) {
  try {
    if (opt.out.empty()) throw std::runtime_error("gen: --out is required");
    if (opt.box_x < 0 || opt.box_y < 0)
      throw std::runtime_error("gen: box half-widths must be non-negative");
    Signal f;
    f.a = opt.a > 0.0 ? opt.a : kLatticeStep;
    f.seed = opt.seed;
    std::uint64_t index = 0;
    for (int i = -opt.box_x; i <= opt.box_x; ++i) {
      for (int j = -opt.box_y; j <= opt.box_y; ++j) {
        f.points.push_back({i, j});
        f.coeffs.push_back(uniform_unit_disk(opt.seed, index++));
      }
    }
    write_signal(opt.out, f);
    log << "wrote " << opt.out << " (" << f.points.size() << " coefficients)\n";
    return kExitSuccess;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_sample(const SampleOptions& opt, std::ostream& log,
               std::ostream& err) {
  try {
    if (opt.signal.empty())
      throw std::runtime_error("sample: --signal is required");
    if (opt.out.empty()) throw std::runtime_error("sample: --out is required");
    if (opt.nu < 0.0) throw std::runtime_error("sample: --nu must be >= 0");
    const Signal f = read_signal(opt.signal);
    const LatticeWindows w = make_windows(opt.T, opt.S, opt.R, opt.s);
    const SpectrogramSamples samples =
        sample_spectrogram(f, w, opt.nu, opt.seed);
    write_samples(opt.out, samples, w);
    log << "wrote " << opt.out << " (" << samples.omega.size() << " rows)\n";
    return kExitSuccess;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_reconstruct(const ReconstructOptions& opt, std::ostream& log,
                    std::ostream& err) {
  ordered_json config;
  try {
    if (opt.samples.empty())
      throw std::runtime_error("reconstruct: --samples is required");
    if (opt.out.empty())
      throw std::runtime_error("reconstruct: --out is required");
    if (!(opt.eps > 0.0))
      throw std::runtime_error("reconstruct: --eps must be positive");
    if (!opt.trace.empty() && opt.signal.empty())
      throw std::runtime_error("reconstruct: --trace needs --signal");

    const SamplesFile file = read_samples(opt.samples);
    RunConfig cfg;
    if (!opt.solver_config.empty())
      cfg.solver = read_solver_config(opt.solver_config);
    cfg.radius = opt.r;
    cfg.strict_calibration = opt.strict_calibration;

    config = {{"samples", opt.samples},
              {"signal", opt.signal.empty() ? ordered_json(nullptr)
                                            : ordered_json(opt.signal)},
              {"eps", opt.eps},
              {"r", opt.r},
              {"tau", opt.tau},
              {"strict_calibration", opt.strict_calibration},
              {"solver",
               {{"max_iter", cfg.solver.max_iter},
                {"primal_tol", cfg.solver.primal_tol},
                {"dual_tol", cfg.solver.dual_tol},
                {"rho", cfg.solver.rho},
                {"relax", cfg.solver.relax}}},
              {"windows",
               {{"T", file.T}, {"S", file.S}, {"R", file.R}, {"s", file.s}}},
              {"nu", file.samples.nu},
              {"seed", file.samples.seed}};

    const LatticeWindows w = make_windows(file.T, file.S, file.R, file.s);

    ReconstructionResult result;
    try {
      result = reconstruct(file.samples, w, opt.eps, cfg);
    } catch (const CalibrationError& e) {
      ordered_json j;
      j["version"] = kToolVersion;
      j["config"] = config;
      j["error"] = {{"kind", "calibration"},
                    {"message", e.what()},
                    {"calibration", calibration_json(e.report)}};
      write_json(opt.out, j);
      err << "error: " << e.what() << "\n";
      return kExitCalibration;
    }

    ordered_json j;
    j["version"] = kToolVersion;
    j["config"] = config;
    ordered_json& res = j["result"] = ordered_json::object();
    res["scale"] = result.scale;
    res["radius"] = result.radius;
    res["radius_auto"] = opt.r <= 0.0;
    res["all_disconnected"] = result.radius_choice.all_disconnected;
    res["outside_guaranteed_regime"] = result.outside_guaranteed_regime;
    res["failed_stage"] = stage_name(result.failed_stage);
    res["calibration"] = calibration_json(result.calibration);
    res["extension"] = solve_report_json(result.extension_report);
    if (result.failed_stage != PipelineStage::kExtension) {
      res["completion"] = solve_report_json(result.completion_report);
      res["completion_tol"] = result.completion_tol;
      res["trace_y"] = result.y.trace_real();
    }
    if (result.ok()) {
      res["top_eigenvalue"] = result.top_eigenvalue;
      res["eigen_gap"] = result.eigen_gap;
      res["eigenvector_ambiguous"] = result.eigenvector_ambiguous;
      auto& lambda = res["lambda"] = ordered_json::array();
      for (const auto& p : result.lambda) lambda.push_back({p.i, p.j});
      auto& coeffs = res["coefficients"] = ordered_json::array();
      for (const auto& c : result.coefficients)
        coeffs.push_back({c.real(), c.imag()});
    }

    if (!opt.signal.empty() && result.ok()) {
      const Signal truth = read_signal(opt.signal);
      const CertificateReport cert = certificates(result, truth, w, opt.tau);
      j["truth"] = {{"tau", cert.tau},
                    {"theta", cert.theta},
                    {"gf_norm_sq", cert.gf_norm_sq},
                    {"lambda2", cert.lambda2},
                    {"kappa", cert.kappa},
                    {"eta", cert.eta},
                    {"coefficients", pair_json(cert.coefficients)},
                    {"synthesis", pair_json(cert.synthesis)},
                    {"end_to_end", pair_json(cert.end_to_end)}};
      if (!opt.trace.empty()) {
        const int half = 200;
        const double step = cert.tau / half;
        const complex<double> rot = std::exp(complex<double>(0.0, cert.theta));
        std::vector<double> ts;
        std::vector<complex<double>> ref;
        std::vector<complex<double>> rec;
        for (int k = -half; k <= half; ++k) {
          const double t = static_cast<double>(k) * step;
          ts.push_back(t);
          ref.push_back(rot * signal_value(truth, t));
          rec.push_back(result.value(t));
        }
        write_trace(opt.trace, ts, ref, rec,
                    "tau=" + format_double(cert.tau) +
                        " theta=" + format_double(cert.theta) +
                        " seed=" + std::to_string(file.samples.seed));
      }
    }

    write_json(opt.out, j);
    if (result.ok()) {
      log << "wrote " << opt.out << "\n";
    } else {
      log << "wrote " << opt.out << " (" << stage_name(result.failed_stage)
          << " stage failed)\n";
    }
    if (result.failed_stage == PipelineStage::kNone) return kExitSuccess;
    const SolveReport& failed =
        result.failed_stage == PipelineStage::kExtension
            ? result.extension_report
            : result.completion_report;
    return failed.status == SolveStatus::kInfeasibleDetected ? kExitInfeasible
                                                             : kExitFailure;
  } catch (const ParseError& e) {
    write_error_report(opt.out, config, "parse", e.what());
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    write_error_report(opt.out, config, "runtime", e.what());
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_analyze_graph(const AnalyzeGraphOptions& opt, std::ostream& log,
                      std::ostream& err) {
  try {
    if (opt.signal.empty())
      throw std::runtime_error("analyze-graph: --signal is required");
    if (opt.out.empty())
      throw std::runtime_error("analyze-graph: --out is required");
    const Signal f = read_signal(opt.signal);
    // Only the target lattice matters here; pad and step are placeholders.
    const LatticeWindows w = make_windows(opt.T, opt.S, 1.0, 1.0);
    std::vector<double> radii =
        opt.radii.empty() ? candidate_radii() : opt.radii;
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (double r : radii)
      if (!(r > 0.0))
        throw std::runtime_error("analyze-graph: radii must be positive");

    std::vector<double> weights;
    double gf_norm_sq = 0.0;
    for (const auto& p : w.lambda) {
      weights.push_back(spectrogram(f, lattice_location(p)));
      gf_norm_sq += weights.back();
    }

    std::vector<GraphRow> rows;
    for (double r : radii) {
      GraphRow row;
      row.r = r;
      row.lambda2 = w.lambda.size() >= 2
                        ? spectral_gap(build_graph(w.lambda, weights, r))
                        : 0.0;
      row.c_stab = c_stab(gf_norm_sq, row.lambda2, r);
      rows.push_back(row);
    }
    const RadiusChoice choice = r_star(w.lambda, weights, radii);
    write_graph_table(opt.out, rows, choice.r,
                      "T=" + format_double(opt.T) +
                          " S=" + format_double(opt.S) +
                          " seed=" + std::to_string(f.seed));
    log << "wrote " << opt.out << " (" << rows.size() << " radii, r*="
        << format_double(choice.r) << ")\n";
    return kExitSuccess;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_verify(std::ostream& log, std::ostream& err) {
  const VerifyReport report = run_verification();
  for (const auto& c : report.checks) {
    log << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name << " (" << c.detail
        << ")\n";
  }
  if (!report.all_passed()) {
    err << "error: verification failed\n";
    return kExitFailure;
  }
  log << "all checks passed\n";
  return kExitSuccess;
}

}  // namespace gpr
