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

#ifndef CCDYN_DATASET_H_
#define CCDYN_DATASET_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ccdyn/graph_store.hpp"

namespace ccdyn {

// An immutable simple graph on dense ids, the blueprint a stream replays.
struct StaticGraph {
  std::vector<std::vector<NodeId>> adj;
  std::vector<std::string> labels;  // original labels, when loaded from disk

  int n() const { return static_cast<int>(adj.size()); }
  std::int64_t edge_count() const;
  double density() const;  // |E| / |V|
};

// Whitespace-separated endpoint pairs, '#' comment lines. Duplicate edges
// and self-loops are dropped; labels get dense ids in first-seen order.
// Malformed lines raise an error naming the line number.
StaticGraph load_snap_edgelist(const std::string& path);

// Delimiter-separated numeric rows (comma, semicolon, tab or space).
// skip_columns leading fields per row are ignored (labels, ids).
std::vector<std::vector<double>> load_point_rows(const std::string& path,
                                                 int skip_columns = 0);

struct DriftConfig {
  std::vector<std::vector<double>> points;
  double divisor = 10.0;       // threshold = mean pairwise distance / divisor
  bool sampled_mean = false;   // estimate the mean from random pairs
  std::int64_t mean_sample_pairs = 1000000;
  std::uint64_t mean_seed = 1;
};

// Exact (or pair-sampled) mean Euclidean distance over all point pairs.
double mean_pairwise_distance(const std::vector<std::vector<double>>& points,
                              bool sampled = false,
                              std::int64_t sample_pairs = 1000000,
                              std::uint64_t seed = 1);

// Edge {i,j} iff the Euclidean distance is strictly below the threshold.
StaticGraph build_drift_graph(const DriftConfig& config);

}  // namespace ccdyn

#endif  // CCDYN_DATASET_H_
