// tests/test_io.cpp

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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include <doctest.h>

#include "gpr/gabor.hpp"
#include "gpr/io.hpp"
#include "gpr/lattice.hpp"

using namespace gpr;

namespace {

// Fresh scratch directory per test case, removed on destruction.
struct TempDir {
  std::filesystem::path dir;

  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("gpr_io_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter()++));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }

  std::string path(const std::string& name) const {
    return (dir / name).string();
  }

  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in),
          std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("format_double round trips doubles exactly") {
  for (double v : {0.0, 1.0, -1.0, 0.1, 1.0 / 3.0, 6.02e23,
                   -std::numeric_limits<double>::min(),
                   3.14159265358979312, 1e-17}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("signal files round trip") {
  TempDir tmp;
  Signal f;
  f.a = kLatticeStep;
  f.seed = 99;
  f.points = {{0, 0}, {1, -2}, {-3, 1}};
  f.coeffs = {{0.25, -0.5}, {1.0 / 3.0, 0.0}, {-0.125, 0.75}};

  const std::string path = tmp.path("sig.json");
  write_signal(path, f);
  const Signal g = read_signal(path);

  CHECK(g.a == f.a);
  CHECK(g.seed == f.seed);
  REQUIRE(g.points.size() == f.points.size());
  for (std::size_t k = 0; k < f.points.size(); ++k) {
    CHECK(g.points[k] == f.points[k]);
    CHECK(g.coeffs[k] == f.coeffs[k]);
  }

  // Same content, same bytes.
  write_signal(tmp.path("sig2.json"), g);
  CHECK(slurp(tmp.path("sig2.json")) == slurp(path));
}

TEST_CASE("signal parse errors name the file and the field") {
  TempDir tmp;
  const std::string path = tmp.path("bad.json");

  spit(path, "{\"version\": \"gpr 0.1.0\", \"a\": \"wide\"}");
  CHECK_THROWS_AS(read_signal(path), ParseError);
  try {
    read_signal(path);
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("bad.json") != std::string::npos);
    CHECK(what.find("a") != std::string::npos);
  }

  spit(path, "{\"version\"");
  CHECK_THROWS_AS(read_signal(path), ParseError);

  CHECK_THROWS_AS(read_signal(tmp.path("missing.json")), ParseError);
}

TEST_CASE("samples files round trip with their window config") {
  TempDir tmp;
  Signal f;
  f.a = kLatticeStep;
  f.points = {{0, 0}};
  f.coeffs = {{0.8, -0.35}};
  const LatticeWindows w = make_windows(1.0, 1.0, 1.0, 0.5);
  const SpectrogramSamples samples = sample_spectrogram(f, w, 1e-6, 7);

  const std::string path = tmp.path("samples.csv");
  write_samples(path, samples, w);
  const SamplesFile file = read_samples(path);

  CHECK(file.T == w.T);
  CHECK(file.S == w.S);
  CHECK(file.R == w.R);
  CHECK(file.s == w.s);
  CHECK(file.samples.nu == samples.nu);
  CHECK(file.samples.seed == samples.seed);
  REQUIRE(file.samples.omega.size() == samples.omega.size());
  for (std::size_t k = 0; k < samples.omega.size(); ++k) {
    CHECK(file.samples.omega[k].x == samples.omega[k].x);
    CHECK(file.samples.omega[k].y == samples.omega[k].y);
    CHECK(file.samples.sigma[k] == samples.sigma[k]);
  }
}

TEST_CASE("samples parse errors carry the line number") {
  TempDir tmp;
  const std::string path = tmp.path("samples.csv");
  write_samples(path, sample_spectrogram({kLatticeStep, {{0, 0}}, {{1.0, 0.0}}},
                                         make_windows(1.0, 1.0, 1.0, 0.5), 0.0,
                                         1),
                make_windows(1.0, 1.0, 1.0, 0.5));

  std::string text = slurp(path);
  const auto pos = text.rfind("\n", text.size() - 2);
  text = text.substr(0, pos + 1) + "0.5,0.5,not_a_number\n";
  spit(path, text);

  CHECK_THROWS_AS(read_samples(path), ParseError);
  try {
    read_samples(path);
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("samples.csv") != std::string::npos);
    CHECK(what.find("sigma") != std::string::npos);
  }
}

TEST_CASE("solver config accepts exactly the documented keys") {
  TempDir tmp;
  const std::string path = tmp.path("solver.json");

  spit(path, "{\"max_iter\": 500, \"primal_tol\": 1e-6}");
  const SolverConfig cfg = read_solver_config(path);
  CHECK(cfg.max_iter == 500);
  CHECK(cfg.primal_tol == 1e-6);
  CHECK(cfg.dual_tol == SolverConfig{}.dual_tol);
  CHECK(cfg.rho == SolverConfig{}.rho);

  spit(path, "{\"max_iterations\": 500}");
  CHECK_THROWS_AS(read_solver_config(path), ParseError);

  spit(path, "{\"rho\": \"big\"}");
  CHECK_THROWS_AS(read_solver_config(path), ParseError);
}

TEST_CASE("graph tables list candidates ascending and mark the star row") {
  TempDir tmp;
  const std::string path = tmp.path("graph.csv");
  const double inf = std::numeric_limits<double>::infinity();
  write_graph_table(path, {{0.5, 0.0, inf}, {1.01, 0.25, 12.5}}, 1.01,
                    "# config\n");

  const std::string text = slurp(path);
  CHECK(text.find("kind,r,lambda2,c_stab") != std::string::npos);
  CHECK(text.find("candidate,0.5,0,inf") != std::string::npos);
  CHECK(text.find("candidate,1.01") != std::string::npos);
  CHECK(text.find("star,1.01") != std::string::npos);
  CHECK(text.find(kToolVersion) != std::string::npos);
}

TEST_CASE("trace files interleave reconstruction and rotated truth") {
  TempDir tmp;
  const std::string path = tmp.path("trace.csv");
  write_trace(path, {-0.5, 0.0, 0.5},
              {{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}},
              {{1.0, 0.1}, {0.5, 0.4}, {0.1, 1.0}}, "# config\n");

  const std::string text = slurp(path);
  CHECK(text.find("t,re_f,im_f,re_fstar,im_fstar") != std::string::npos);
  CHECK(text.find("-0.5,1,0,1,0.1") != std::string::npos);
  CHECK(text.find(kToolVersion) != std::string::npos);
}
