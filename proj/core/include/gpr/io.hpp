// core/include/gpr/io.hpp

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

// File formats behind the command-line surface: signals and solver configs as
// JSON, sample/trace/graph tables as CSV.  Every output embeds the tool
// version, the generating config, and the seed; floats print with 17
// significant digits, so re-running an echoed config reproduces the numeric
// columns byte for byte.

#ifndef GPR_IO_HPP_
#define GPR_IO_HPP_

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpr/gabor.hpp"
#include "gpr/lattice.hpp"
#include "gpr/sdp.hpp"

namespace gpr {

inline constexpr const char* kToolVersion = "gpr 0.1.0";

/// Malformed input file; the message names the file and the line or field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that reparses to exactly the same double (%.17g).
std::string format_double(double v);

/// Signal JSON: {"version", "a", "seed", "points": [[i,j]...],
/// "coeffs": [[re,im]...]}.  The file is its own generating config.
void write_signal(const std::string& path, const Signal& f);
Signal read_signal(const std::string& path);

/// Samples CSV plus the window config that produced it.
struct SamplesFile {
  SpectrogramSamples samples;
  double T = 0.0;
  double S = 0.0;
  double R = 0.0;
  double s = 0.0;
};

/// Header comments echo version and T/S/R/s/nu/seed; rows are x,y,sigma in
/// the make_windows enumeration order.
void write_samples(const std::string& path, const SpectrogramSamples& samples,
                   const LatticeWindows& w);
SamplesFile read_samples(const std::string& path);

/// Solver config JSON with exactly the keys max_iter, primal_tol, dual_tol,
/// rho (each optional, defaulted); unknown keys are rejected.
SolverConfig read_solver_config(const std::string& path);

/// One radius diagnostic row; c_stab prints as "inf" when disconnected.
struct GraphRow {
  double r = 0.0;
  double lambda2 = 0.0;
  double c_stab = 0.0;
};

/// CSV with columns kind,r,lambda2,c_stab: one "candidate" row per radius in
/// ascending order, then one "star" row repeating the selected radius.
void write_graph_table(const std::string& path,
                       const std::vector<GraphRow>& rows, double star_r,
                       const std::string& config_echo);

/// Reconstruction trace CSV: columns t, Re f, Im f, Re f*, Im f*, with the
/// ground truth f already rotated onto the reconstruction's phase.
void write_trace(const std::string& path, const std::vector<double>& t,
                 const std::vector<std::complex<double>>& f,
                 const std::vector<std::complex<double>>& f_star,
                 const std::string& config_echo);

}  // namespace gpr

#endif  // GPR_IO_HPP_
