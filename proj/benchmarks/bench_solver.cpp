// benchmarks/bench_solver.cpp

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

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "gpr/ansatz.hpp"
#include "gpr/gabor.hpp"
#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"
#include "gpr/rng.hpp"
#include "gpr/sdp.hpp"

namespace {

std::vector<gpr::LatticePoint> box(int half) {
  std::vector<gpr::LatticePoint> out;
  for (int i = -half; i <= half; ++i)
    for (int j = -half; j <= half; ++j) out.push_back({i, j});
  return out;
}

void BM_PsdProject(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::uint64_t c = 0;
  for (int r = 0; r < n; ++r) {
    m(r, r) = gpr::uniform01(9u, c++) - 0.5;
    for (int col = r + 1; col < n; ++col) {
      const std::complex<double> v(gpr::uniform01(9u, c++) - 0.5,
                                   gpr::uniform01(9u, c++) - 0.5);
      m(r, col) = v;
      m(col, r) = std::conj(v);
    }
  }
  const auto h = gpr::HermitianMatrix::FromDense(m);
  for (auto _ : state) {
    auto p = gpr::psd_project(h);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PsdProject)->Arg(25)->Arg(81);

// Relative-phase completion on an exact rank-one table; measures the cost
// of a clean Step-2 solve as the patch grows.
void BM_Step2Solve(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const auto lambda = box(half);
  std::vector<std::complex<double>> coeffs = {{0.2, -0.5}, {0.7, 0.0}};
  std::vector<gpr::LatticePoint> points = {{-1, 0}, {1, -1}};
  const auto ext = gpr::EntireExtension::FromSignalCoefficients(coeffs,
                                                                points);
  const auto table = gpr::build_predictor(ext, lambda, 1.01);
  const auto p = gpr::build_step2(table, 1e-6);
  for (auto _ : state) {
    auto [y, rep] = gpr::solve(p);
    benchmark::DoNotOptimize(y);
    if (rep.status != gpr::SolveStatus::kSolved) state.SkipWithError("stall");
  }
}
BENCHMARK(BM_Step2Solve)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BuildPredictor(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const auto gamma = box(half + 2);
  const auto lambda = box(half);
  const int n = static_cast<int>(gamma.size());
  Eigen::VectorXcd a(n);
  for (int k = 0; k < n; ++k)
    a(k) = gpr::uniform_unit_disk(13u, static_cast<std::uint64_t>(k));
  const auto ext = gpr::EntireExtension::FromMatrix(
      gpr::HermitianMatrix::FromDense(Eigen::MatrixXcd(a * a.adjoint())),
      gamma);
  for (auto _ : state) {
    auto table = gpr::build_predictor(ext, lambda, 1.01);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BuildPredictor)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
