// core/include/gpr/cli.hpp

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

// Subcommand entry points.  The binary in tools/ only parses argv into these
// option structs; everything observable (files written, exit codes, error
// text) lives here so the test suite can drive it in-process.
//
// Exit codes: 0 success, 1 failure (bad input, solver gave up), 2 the solver
// detected an infeasible program, 3 a calibration rule failed under
// --strict-calibration.

#ifndef GPR_CLI_HPP_
#define GPR_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gpr {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitCalibration = 3;

/// Applies the GPR_THREADS cap to the linear-algebra backend; no-op when the
/// variable is unset or malformed.
void apply_thread_cap();

/// gen: draw a random lattice signal.  Coefficients are iid uniform on the
/// unit disk, one per lattice point of [-box_x, box_x] x [-box_y, box_y]
/// (integer coordinates), drawn from the counter-based stream of `seed`.
struct GenOptions {
  std::string out;
  double a = 0.0;  // lattice step; <= 0 uses the synthesis lattice step
  int box_x = 1;
  int box_y = 1;
  std::uint64_t seed = 1;
};
int cmd_gen(const GenOptions& opt, std::ostream& log, std::ostream& err);

/// sample: measure the spectrogram of a signal file on the sampling grid.
struct SampleOptions {
  std::string signal;
  std::string out;
  double T = 0.0;
  double S = 0.0;
  double R = 0.0;
  double s = 0.0;
  double nu = 0.0;
  std::uint64_t seed = 1;
};
int cmd_sample(const SampleOptions& opt, std::ostream& log, std::ostream& err);

/// reconstruct: run the pipeline on a samples file.  The window geometry is
/// taken from the samples header.  `signal`, when given, unlocks the
/// certificate section of the report and the trace CSV.
struct ReconstructOptions {
  std::string samples;
  std::string out;            // report JSON
  std::string signal;         // optional ground truth
  std::string trace;          // optional trace CSV, needs `signal`
  std::string solver_config;  // optional solver JSON
  double eps = 0.0;           // required, > 0
  double r = 0.0;             // completion radius; <= 0 selects automatically
  double tau = 0.0;           // certificate window; <= 0 uses the default
  bool strict_calibration = false;
};
int cmd_reconstruct(const ReconstructOptions& opt, std::ostream& log,
                    std::ostream& err);

/// analyze-graph: stability diagnostics of a signal over the target lattice,
/// one row per candidate radius.  An empty radius list uses the built-in
/// candidates.
struct AnalyzeGraphOptions {
  std::string signal;
  std::string out;
  double T = 0.0;
  double S = 0.0;
  std::vector<double> radii;
};
int cmd_analyze_graph(const AnalyzeGraphOptions& opt, std::ostream& log,
                      std::ostream& err);

/// verify: run the property checks, one status line each.
int cmd_verify(std::ostream& log, std::ostream& err);

}  // namespace gpr

#endif  // GPR_CLI_HPP_
