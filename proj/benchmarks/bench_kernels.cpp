// benchmarks/bench_kernels.cpp

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

#include "gpr/gabor.hpp"
#include "gpr/lattice.hpp"
#include "gpr/numerics.hpp"
#include "gpr/rng.hpp"

namespace {

gpr::Signal make_signal(int atoms) {
  gpr::Signal f;
  f.a = gpr::kLatticeStep;
  int half = atoms / 2;
  for (int k = 0; k < atoms; ++k) {
    f.points.push_back({k - half, (k * 7 % atoms) - half});
    f.coeffs.push_back(gpr::uniform_unit_disk(11u, k));
  }
  return f;
}

void BM_GaborTransform(benchmark::State& state) {
  const auto f = make_signal(static_cast<int>(state.range(0)));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpr::gabor_transform(f, {x, -0.3}));
    x += 1e-6;
  }
}
BENCHMARK(BM_GaborTransform)->Arg(4)->Arg(16)->Arg(64);

void BM_DualWindow(benchmark::State& state) {
  double t = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpr::dual_window(t));
    t += 1e-6;
  }
}
BENCHMARK(BM_DualWindow);

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXcd m(n, n);
  std::uint64_t c = 0;
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col)
      m(r, col) = std::complex<double>(
          gpr::uniform01(5u, c++) - 0.5,
          gpr::uniform01(5u, c++) - 0.5);
  const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  const auto h = gpr::HermitianMatrix::FromDense(sym);
  for (auto _ : state) {
    auto eig = gpr::hermitian_eig(h);
    benchmark::DoNotOptimize(eig.values);
  }
}
BENCHMARK(BM_HermitianEig)->Arg(32)->Arg(96)->Arg(192);

}  // namespace

BENCHMARK_MAIN();
