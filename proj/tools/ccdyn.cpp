// Copyright 2026 The ccdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ccdyn/dataset.hpp"
#include "ccdyn/experiment.hpp"

namespace {

struct RunOptions {
  std::string dataset;
  std::string format = "snap";
  std::string algo = "sparse";
  double epsilon = 0.1;
  double est_eps = 0.1;
  double l_coeff = 5.0;
  int sample_size = 0;  // 0 = automatic
  double insert_prob = 0.8;
  int measure_every = 50;
  std::uint64_t seed = 0;
  std::string recompute_mode = "deletions";
  std::string heuristic_break = "on";
  std::string exact_mode = "off";
  std::string out;
  bool true_graph = false;
  double drift_divisor = 10.0;
  int drift_skip_cols = 0;
  bool drift_sampled_mean = false;
};

int do_run(const RunOptions& opt) {
  ccdyn::StaticGraph graph;
  if (opt.format == "snap") {
    graph = ccdyn::load_snap_edgelist(opt.dataset);
  } else {
    ccdyn::DriftConfig drift;
    drift.points = ccdyn::load_point_rows(opt.dataset, opt.drift_skip_cols);
    drift.divisor = opt.drift_divisor;
    drift.sampled_mean = opt.drift_sampled_mean;
    graph = ccdyn::build_drift_graph(drift);
    std::cerr << "drift graph: n=" << graph.n()
              << " density=" << graph.density() << "\n";
  }

  ccdyn::ExperimentConfig cfg;
  if (opt.algo == "sparse") {
    cfg.algo = ccdyn::Algo::kSparse;
  } else if (opt.algo == "reference") {
    cfg.algo = ccdyn::Algo::kReference;
  } else {
    cfg.algo = ccdyn::Algo::kSingletons;
  }
  cfg.epsilon = opt.epsilon;
  cfg.sparse.eps = opt.epsilon;
  cfg.sparse.est_eps = opt.est_eps;
  cfg.sparse.L_coeff = opt.l_coeff;
  if (opt.sample_size > 0) cfg.sparse.sample_size = opt.sample_size;
  if (opt.exact_mode == "on") {
    cfg.sparse.break_mode = ccdyn::BreakMode::kExact;
  } else if (opt.heuristic_break == "on") {
    cfg.sparse.break_mode = ccdyn::BreakMode::kHeuristic;
  } else {
    cfg.sparse.break_mode = ccdyn::BreakMode::kEstimate;
  }
  cfg.trigger = opt.recompute_mode == "updates"
                    ? ccdyn::TriggerMode::kAllUpdates
                    : ccdyn::TriggerMode::kDeletionsOnly;
  cfg.insert_probability = opt.insert_prob;
  cfg.measure_every = opt.measure_every;
  cfg.seed = opt.seed;
  cfg.true_graph_eval = opt.true_graph;

  ccdyn::ExperimentResult result = ccdyn::run_experiment(graph, cfg);
  if (opt.out.empty()) {
    ccdyn::write_csv(result, std::cout);
  } else {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "cannot open output file: " << opt.out << "\n";
      return 1;
    }
    ccdyn::write_csv(result, out);
  }
  if (!result.error.empty()) {
    std::cerr << "experiment aborted: " << result.error << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic correlation clustering benchmark"};
  app.require_subcommand(1);

  RunOptions opt;
  CLI::App* run = app.add_subcommand("run", "Run one streaming experiment");
  run->add_option("--dataset", opt.dataset, "Input dataset path")
      ->required()
      ->envname("CCDYN_DATASET");
  run->add_option("--format", opt.format, "Dataset format")
      ->check(CLI::IsMember({"snap", "drift"}))
      ->envname("CCDYN_FORMAT");
  run->add_option("--algo", opt.algo, "Algorithm")
      ->check(CLI::IsMember({"sparse", "reference", "singletons"}))
      ->envname("CCDYN_ALGO");
  run->add_option("--epsilon", opt.epsilon, "Recompute/threshold epsilon")
      ->envname("CCDYN_EPSILON");
  run->add_option("--est-epsilon", opt.est_eps, "Estimation epsilon")
      ->envname("CCDYN_EST_EPSILON");
  run->add_option("--L-coeff", opt.l_coeff, "Exploration budget coefficient")
      ->envname("CCDYN_L_COEFF");
  run->add_option("--sample-size", opt.sample_size,
                  "Neighbor sample count (0 = automatic)")
      ->envname("CCDYN_SAMPLE_SIZE");
  run->add_option("--insert-prob", opt.insert_prob, "Insertion probability")
      ->envname("CCDYN_INSERT_PROB");
  run->add_option("--measure-every", opt.measure_every, "Measurement cadence")
      ->envname("CCDYN_MEASURE_EVERY");
  run->add_option("--seed", opt.seed, "Random seed")->envname("CCDYN_SEED");
  run->add_option("--recompute-mode", opt.recompute_mode, "Recompute trigger")
      ->check(CLI::IsMember({"deletions", "updates"}))
      ->envname("CCDYN_RECOMPUTE_MODE");
  run->add_option("--heuristic-break", opt.heuristic_break,
                  "Use the sampling membership heuristic")
      ->check(CLI::IsMember({"on", "off"}))
      ->envname("CCDYN_HEURISTIC_BREAK");
  run->add_option("--exact-mode", opt.exact_mode,
                  "Brute-force costs instead of estimates")
      ->check(CLI::IsMember({"on", "off"}))
      ->envname("CCDYN_EXACT_MODE");
  run->add_option("--out", opt.out, "Output CSV path (default stdout)")
      ->envname("CCDYN_OUT");
  run->add_flag("--true-graph", opt.true_graph,
                "Score against the post-deletion graph")
      ->envname("CCDYN_TRUE_GRAPH");
  run->add_option("--drift-divisor", opt.drift_divisor,
                  "Distance threshold divisor for drift graphs")
      ->envname("CCDYN_DRIFT_DIVISOR");
  run->add_option("--drift-skip-cols", opt.drift_skip_cols,
                  "Leading columns to ignore in drift rows")
      ->envname("CCDYN_DRIFT_SKIP_COLS");
  run->add_flag("--drift-sampled-mean", opt.drift_sampled_mean,
                "Estimate the mean pairwise distance from sampled pairs")
      ->envname("CCDYN_DRIFT_SAMPLED_MEAN");

  std::string glob;
  CLI::App* summarize =
      app.add_subcommand("summarize", "Aggregate CSVs across seeds");
  summarize->add_option("--glob", glob, "File pattern, e.g. out/run_*.csv")
      ->required()
      ->envname("CCDYN_GLOB");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(opt);
    std::vector<std::string> files = ccdyn::expand_glob(glob);
    if (files.empty()) {
      std::cerr << "no files match: " << glob << "\n";
      return 1;
    }
    ccdyn::print_summary(ccdyn::summarize_files(files), std::cout);
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
