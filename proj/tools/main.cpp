// tools/main.cpp

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

// Argument parsing only; all behavior lives in the library so the test
// suite can drive the same entry points in-process.

#include <iostream>

#include <CLI11.hpp>

#include "gpr/cli.hpp"
#include "gpr/io.hpp"

int main(int argc, char** argv) {
  gpr::apply_thread_cap();

  CLI::App app{"Phase retrieval from noisy phase-less Gabor measurements"};
  app.set_version_flag("--version", gpr::kToolVersion);
  app.require_subcommand(1);

  gpr::GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand(
      "gen", "Draw a random lattice signal (unit-disk coefficients)");
  cmd_gen->add_option("--out", gen.out, "Signal JSON to write")->required();
  cmd_gen->add_option("--a", gen.a,
                      "Lattice step (default: the synthesis lattice step)");
  cmd_gen->add_option("--box-x", gen.box_x, "Half-width of the box in i");
  cmd_gen->add_option("--box-y", gen.box_y, "Half-width of the box in j");
  cmd_gen->add_option("--seed", gen.seed, "Seed of the coefficient stream");

  gpr::SampleOptions sample;
  CLI::App* cmd_sample = app.add_subcommand(
      "sample", "Sample the spectrogram of a signal on the measurement grid");
  cmd_sample->add_option("--signal", sample.signal, "Signal JSON to measure")
      ->required();
  cmd_sample->add_option("--out", sample.out, "Samples CSV to write")
      ->required();
  cmd_sample->add_option("--T", sample.T, "Target half-width in time")
      ->required();
  cmd_sample->add_option("--S", sample.S, "Target half-width in frequency")
      ->required();
  cmd_sample->add_option("--R", sample.R, "Sampling pad around the box")
      ->required();
  cmd_sample->add_option("--s", sample.s, "Sampling grid step")->required();
  cmd_sample->add_option("--nu", sample.nu, "Noise bound (uniform, additive)");
  cmd_sample->add_option("--seed", sample.seed, "Seed of the noise stream");

  gpr::ReconstructOptions rec;
  CLI::App* cmd_rec = app.add_subcommand(
      "reconstruct", "Recover a signal from a samples file");
  cmd_rec->add_option("--samples", rec.samples, "Samples CSV")->required();
  cmd_rec->add_option("--out", rec.out, "Report JSON to write")->required();
  cmd_rec->add_option("--eps", rec.eps, "Noise bound on the samples")
      ->required();
  cmd_rec->add_option("--signal", rec.signal,
                      "Ground-truth signal JSON (enables certificates)");
  cmd_rec->add_option("--trace", rec.trace,
                      "Trace CSV to write (needs --signal)");
  cmd_rec->add_option("--solver-config", rec.solver_config,
                      "Solver config JSON");
  cmd_rec->add_option("--r", rec.r,
                      "Completion pair radius (default: automatic)");
  cmd_rec->add_option("--tau", rec.tau,
                      "Certificate half-window (default: from T)");
  cmd_rec->add_flag("--strict-calibration", rec.strict_calibration,
                    "Abort when a calibration rule fails");

  gpr::AnalyzeGraphOptions graph;
  CLI::App* cmd_graph = app.add_subcommand(
      "analyze-graph", "Stability diagnostics over candidate pair radii");
  cmd_graph->add_option("--signal", graph.signal, "Signal JSON")->required();
  cmd_graph->add_option("--out", graph.out, "Diagnostics CSV to write")
      ->required();
  cmd_graph->add_option("--T", graph.T, "Target half-width in time")
      ->required();
  cmd_graph->add_option("--S", graph.S, "Target half-width in frequency")
      ->required();
  cmd_graph->add_option("--r", graph.radii,
                        "Candidate radii (default: built-in list)");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run the property-check suite");

  CLI11_PARSE(app, argc, argv);

  if (cmd_gen->parsed()) return gpr::cmd_gen(gen, std::cout, std::cerr);
  if (cmd_sample->parsed())
    return gpr::cmd_sample(sample, std::cout, std::cerr);
  if (cmd_rec->parsed()) return gpr::cmd_reconstruct(rec, std::cout, std::cerr);
  if (cmd_graph->parsed())
    return gpr::cmd_analyze_graph(graph, std::cout, std::cerr);
  if (cmd_verify->parsed()) return gpr::cmd_verify(std::cout, std::cerr);
  return gpr::kExitFailure;
}
