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

#ifndef CCDYN_EXPERIMENT_H_
#define CCDYN_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccdyn/dataset.hpp"
#include "ccdyn/maintenance.hpp"
#include "ccdyn/sparse_pivot.hpp"
#include "ccdyn/stream.hpp"

namespace ccdyn {

enum class Algo { kSparse, kReference, kSingletons };

struct ExperimentConfig {
  Algo algo = Algo::kSparse;
  SparsePivotParams sparse;      // used when algo == kSparse
  double epsilon = 0.1;          // recompute trigger parameter
  TriggerMode trigger = TriggerMode::kDeletionsOnly;
  double insert_probability = 0.8;
  int measure_every = 50;
  std::uint64_t seed = 0;
  bool true_graph_eval = false;  // score against the post-deletion graph
};

struct MetricsRecord {
  std::int64_t step = 0;
  int n = 0;  // active (non-deleted) nodes
  std::int64_t raw_cost = 0;
  std::optional<double> normalized;
  std::uint64_t ops = 0;
  double ms = 0.0;  // wall time since experiment start
};

struct ExperimentResult {
  std::vector<MetricsRecord> records;
  double mean_normalized = 0.0;  // over records where it is defined
  std::uint64_t total_ops = 0;
  std::int64_t recomputes = 0;
  std::string error;  // non-empty if the run aborted; records are partial
};

// Replays a generated 2n-event stream of the graph through the selected
// algorithm, firing recomputes from the maintenance trigger and measuring
// every measure_every steps (plus the final step).
ExperimentResult run_experiment(const StaticGraph& graph,
                                const ExperimentConfig& config);

// Header `step,n,raw_cost,normalized,ops,ms`; '#' lines carry the summary
// and any error marker.
void write_csv(const ExperimentResult& result, std::ostream& out);

struct FileSummary {
  std::string path;
  std::int64_t rows = 0;
  double mean_normalized = 0.0;
  std::uint64_t total_ops = 0;
};

struct AggregateSummary {
  std::vector<FileSummary> files;
  double mean_of_means = 0.0;
  double stddev_of_means = 0.0;
  double mean_total_ops = 0.0;
};

// '*' and '?' wildcards in the final path component.
std::vector<std::string> expand_glob(const std::string& pattern);

AggregateSummary summarize_files(const std::vector<std::string>& paths);
void print_summary(const AggregateSummary& summary, std::ostream& out);

}  // namespace ccdyn

#endif  // CCDYN_EXPERIMENT_H_
