// core/src/gabor.cpp

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

#include "gpr/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gpr/numerics.hpp"
#include "gpr/rng.hpp"

namespace gpr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
const double kQuarterRoot2 = std::pow(2.0, 0.25);

}  // namespace

double gauss_window(double t) { return kQuarterRoot2 * std::exp(-kPi * t * t); }

std::complex<double> gabor_atom(Vec2 lambda, Vec2 z) {
  const double phase = -kPi * (z.x + lambda.x) * (z.y - lambda.y);
  const double decay = -0.5 * kPi * norm_sq(z - lambda);
  return std::exp(decay) *
         std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> gabor_transform(const Signal& f, Vec2 z) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < f.points.size(); ++k)
    acc += f.coeffs[k] * gabor_atom(f.location(k), z);
  return acc;
}

double spectrogram(const Signal& f, Vec2 z) {
  return std::norm(gabor_transform(f, z));
}

std::complex<double> signal_value(const Signal& f, double t) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < f.points.size(); ++k) {
    const Vec2 loc = f.location(k);
    const double ph = 2 * kPi * loc.y * t;
    acc += f.coeffs[k] * gauss_window(t - loc.x) *
           std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc;
}

double signal_norm_l2(const Signal& f) {
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < f.points.size(); ++k)
    acc += std::conj(f.coeffs[k]) * gabor_transform(f, f.location(k));
  return std::sqrt(std::max(0.0, acc.real()));
}

SpectrogramSamples sample_spectrogram(const Signal& f,
                                      const LatticeWindows& w, double nu,
                                      std::uint64_t seed) {
  if (nu < 0) throw std::invalid_argument("sample_spectrogram: nu < 0");
  SpectrogramSamples out;
  out.omega = w.omega;
  out.nu = nu;
  out.seed = seed;
  out.sigma.resize(out.omega.size());
  for (std::size_t k = 0; k < out.omega.size(); ++k) {
    double noise = (nu > 0) ? uniform_symmetric(seed, k, nu) : 0.0;
    out.sigma[k] = spectrogram(f, out.omega[k]) + noise;
  }
  return out;
}

namespace {

constexpr double kSeriesTol = 1e-14;

// Normalizer and numerators of the dual-window series.  The numerator of
// coefficient k is (-1)^k sum_{m>=0} (-1)^m e^(-pi (m+1/2)(2|k| + m + 1/2));
// terms decay doubly fast, so a handful suffice.
double series_numerator(int k) {
  const double ak = std::abs(k);
  double acc = 0.0;
  for (int m = 0;; ++m) {
    const double term =
        std::exp(-kPi * (m + 0.5) * (2 * ak + m + 0.5));
    if (term < kSeriesTol) break;
    acc += (m % 2 == 0) ? term : -term;
  }
  return (k % 2 == 0) ? acc : -acc;
}

const std::vector<double>& coefficient_table() {
  static const std::vector<double> table = [] {
    const double norm = dual_window_normalizer();
    std::vector<double> t;
    for (int k = 0;; ++k) {
      const double c = series_numerator(k) / norm;
      t.push_back(c);
      if (std::abs(c) < kSeriesTol) break;
    }
    return t;
  }();
  return table;
}

const double kDualSeriesQ = std::exp(-kPi);

}  // namespace

double dual_window_normalizer() {
  double acc = 0.0;
  for (int n = 0;; ++n) {
    const double term = (n + 0.5) * std::exp(-kPi * (n + 0.5) * (n + 0.5));
    if (term < kSeriesTol) break;
    acc += (n % 2 == 0) ? term : -term;
  }
  return 2.0 * acc;
}

double dual_window_coefficient(int k) {
  const auto& table = coefficient_table();
  const int a = std::abs(k);
  if (a >= static_cast<int>(table.size())) return 0.0;
  return table[a];
}

double dual_window(double t) {
  const auto& table = coefficient_table();
  double acc = 0.0;
  for (int k = -(int(table.size()) - 1); k < int(table.size()); ++k)
    acc += dual_window_coefficient(k) * gauss_window(t - kSqrt2 * k);
  return acc / (2.0 * theta3(kSqrt2 * kPi * t, kDualSeriesQ));
}

std::complex<double> synthesize(const std::vector<std::complex<double>>& c,
                                const std::vector<LatticePoint>& lambda,
                                double t) {
  if (c.size() != lambda.size())
    throw std::invalid_argument("synthesize: size mismatch");
  std::complex<double> acc = 0.0;
  // Consecutive points sharing a time index reuse the window value; inputs in
  // lexicographic order get this for free.
  int last_i = 0;
  double psi = 0.0;
  bool have = false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!have || lambda[k].i != last_i) {
      last_i = lambda[k].i;
      psi = dual_window(t - kLatticeStep * last_i);
      have = true;
    }
    const double ph = 2 * kPi * (kLatticeStep * lambda[k].j) * t;
    acc += c[k] * psi * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc;
}

namespace {

struct SupportRange {
  double lo = 0.0, hi = 0.0;
};

SupportRange time_support(const Signal& f) {
  if (f.points.empty()) return {};
  double lo = f.a * f.points.front().i, hi = lo;
  for (const auto& p : f.points) {
    lo = std::min(lo, f.a * p.i);
    hi = std::max(hi, f.a * p.i);
  }
  return {lo, hi};
}

// Odd sample count for a band [lo, hi] at roughly the requested step.
int band_samples(double lo, double hi, double step) {
  int n = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
  if (n % 2 == 0) ++n;
  return std::max(n, 3);
}

}  // namespace

double frequency_tail_envelope(const Signal& f, double S,
                               const EnvelopeGrid& grid) {
  if (S <= 0) throw std::invalid_argument("frequency_tail_envelope: S <= 0");
  if (f.points.empty()) return 0.0;
  const SupportRange sup = time_support(f);
  const int nx = static_cast<int>(
      std::ceil((sup.hi - sup.lo + 2 * grid.x_pad) / grid.x_step));
  const int nw = band_samples(S, S + grid.tail, grid.inner_step);
  const double hw = grid.tail / (nw - 1);
  std::vector<double> band(nw);
  double best = 0.0;
  for (int ix = 0; ix <= nx; ++ix) {
    const double x = sup.lo - grid.x_pad + ix * grid.x_step;
    double mass = 0.0;
    for (double sgn : {1.0, -1.0}) {
      for (int k = 0; k < nw; ++k)
        band[k] = spectrogram(f, {x, sgn * (S + k * hw)});
      mass += integrate_composite(std::span<const double>(band), hw).value;
    }
    best = std::max(best, mass);
  }
  return std::sqrt(best);
}

double time_localization_envelope(const Signal& f, const EnvelopeGrid& grid) {
  if (f.points.empty()) return 0.0;
  const SupportRange sup = time_support(f);
  const int nx = static_cast<int>(
      std::ceil((sup.hi - sup.lo + 2 * grid.x_pad) / grid.x_step));
  const double half = 6.0;  // Gaussian window mass beyond this is < 1e-49
  const int nt = band_samples(-half, half, grid.inner_step);
  const double ht = 2 * half / (nt - 1);
  std::vector<double> vals(nt);
  double best = 0.0;
  for (int ix = 0; ix <= nx; ++ix) {
    const double x = sup.lo - grid.x_pad + ix * grid.x_step;
    for (int k = 0; k < nt; ++k) {
      const double t = x - half + k * ht;
      vals[k] = std::norm(signal_value(f, t)) *
                std::exp(-kPi * (t - x) * (t - x));
    }
    best = std::max(
        best, integrate_composite(std::span<const double>(vals), ht).value);
  }
  return std::pow(2.0, 0.125) * std::sqrt(std::max(0.0, best));
}

}  // namespace gpr
