// core/include/gpr/gabor.hpp

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

#ifndef GPR_GABOR_HPP_
#define GPR_GABOR_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include "gpr/lattice.hpp"

namespace gpr {

// Conventions.  The analysis window is the L2-normalized Gaussian
// phi(t) = 2^(1/4) exp(-pi t^2).  The time-frequency shift of (x, w) is
// pi(x, w) = M_w T_x (modulate after translating), so
//   (pi(x, w) f)(t) = exp(2 pi i w t) f(t - x).
// The transform of f at z = (x, w) is <f, pi(z) phi>, and the spectrogram is
// its squared magnitude.

/// Analysis window phi.
double gauss_window(double t);

/// Finite superposition of time-frequency shifted Gaussian windows on the
/// lattice a * Z^2:  f = sum_k coeffs[k] * pi(a * points[k]) phi.
struct Signal {
  double a = 1.0;
  std::vector<LatticePoint> points;
  std::vector<std::complex<double>> coeffs;
  std::uint64_t seed = 0;

  Vec2 location(std::size_t k) const {
    return {a * points[k].i, a * points[k].j};
  }
};

/// Transform of a single shifted window:  <pi(lambda) phi, pi(z) phi> as a
/// function of z = (x, w), in closed form
///   exp(-pi i (x + a)(w - b)) exp(-(pi/2) |z - lambda|^2),  lambda = (a, b).
std::complex<double> gabor_atom(Vec2 lambda, Vec2 z);

/// Transform of a lattice signal at z, by superposition of gabor_atom.
std::complex<double> gabor_transform(const Signal& f, Vec2 z);

/// Squared magnitude of the transform.
double spectrogram(const Signal& f, Vec2 z);

/// Time-domain value of the signal.
std::complex<double> signal_value(const Signal& f, double t);

/// L2 norm of the signal, via the Gram closed form
/// ||f||^2 = sum_k conj(c_k) <f, pi(mu_k) phi>.
double signal_norm_l2(const Signal& f);

/// Noisy phase-less measurements on the sampling grid: sigma[k] is the
/// spectrogram at omega[k] plus uniform noise in [-nu, nu] drawn from the
/// counter-based stream (counter = k).
struct SpectrogramSamples {
  std::vector<Vec2> omega;
  std::vector<double> sigma;
  double nu = 0.0;
  std::uint64_t seed = 0;
};

/// Samples the spectrogram of f on w.omega.  Deterministic in (f, w, nu,
/// seed).
SpectrogramSamples sample_spectrogram(const Signal& f,
                                      const LatticeWindows& w, double nu,
                                      std::uint64_t seed);

// Dual window.  psi is the canonical dual of phi on the lattice
// kLatticeStep * Z^2, given by the series
//   psi(t) = (2 theta3(sqrt(2) pi t, e^-pi))^-1
//            * sum_k dual_window_coefficient(k) phi(t - sqrt(2) k).
// Series tails below 1e-14 are dropped.

/// Coefficient c_k of the dual-window series (even in k, alternating sign,
/// |c_k| <= e^(-pi(|k| + 1/4)) / dual_window_normalizer()).
double dual_window_coefficient(int k);

/// Positive normalizer of the series coefficients,
/// sum_n (-1)^n (n + 1/2) e^(-pi (n + 1/2)^2) over all integers n  (> 0.45).
double dual_window_normalizer();

/// Dual window psi at t.
double dual_window(double t);

/// Synthesis with the dual window:
///   sum_k c[k] exp(2 pi i b_k t) psi(t - a_k),  (a_k, b_k) the physical
/// location of lambda[k].  Used both to de-lift recovered coefficients and to
/// expand known transform values.
std::complex<double> synthesize(const std::vector<std::complex<double>>& c,
                                const std::vector<LatticePoint>& lambda,
                                double t);

/// Quadrature grids for the two envelope quantities below.
struct EnvelopeGrid {
  double x_step = 0.05;    // grid of window centers
  double inner_step = 0.01;  // quadrature step inside each localized integral
  double x_pad = 4.0;      // centers cover the signal support padded by this
  double tail = 6.0;       // frequency tail integrated over [S, S + tail]
};

/// Frequency-tail energy envelope: sup over x of the L2 mass of the
/// transform outside [-S, S] in frequency, at fixed time x.
double frequency_tail_envelope(const Signal& f, double S,
                               const EnvelopeGrid& grid = {});

/// Time-localization envelope: 2^(1/8) sup over x of the square root of
/// int |f(t)|^2 exp(-pi (t - x)^2) dt.
double time_localization_envelope(const Signal& f,
                                  const EnvelopeGrid& grid = {});

}  // namespace gpr

#endif  // GPR_GABOR_HPP_
