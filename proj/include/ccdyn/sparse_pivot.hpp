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

#ifndef CCDYN_SPARSE_PIVOT_H_
#define CCDYN_SPARSE_PIVOT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ccdyn/cost_estimate.hpp"
#include "ccdyn/graph_store.hpp"
#include "ccdyn/pivot_state.hpp"

namespace ccdyn {

// How a pivot's cluster C_v is carved out of its member set B_v.
//   kEstimate:  threshold grid + sampled cost estimates, with stored
//               sketches updated dynamically.
//   kExact:     threshold grid + brute-force costs (debugging / oracle).
//   kHeuristic: adjacency-sampling membership test, rerun periodically.
//   kKeepAll:   C_v = B_v always (reduces to the full-scan baseline).
enum class BreakMode { kEstimate, kExact, kHeuristic, kKeepAll };

struct SparsePivotParams {
  double eps = 0.1;              // threshold-grid / rerun parameter
  double est_eps = 0.1;          // estimation parameter (sketch budgets)
  double L_coeff = 5.0;          // L = ceil(L_coeff * ln n)
  std::optional<int> sample_size;  // override for the sampled branch
  BreakMode break_mode = BreakMode::kHeuristic;
  double heuristic_coeff = 6.0;  // samples per member = ceil(coeff * ln n)
};

// Degree thresholds {1, (1+eps), (1+eps)^2, ...} up to the first power
// >= n, plus one extra power so the top candidate set is empty.
std::vector<double> threshold_grid(double eps, int n);

// Insertion-stream clustering that touches only a sparse part of each new
// node's neighborhood: low-rank nodes get a full scan and may become pivots
// (with their cluster carved by break-cluster); high-rank nodes pick a pivot
// from a logarithmic neighbor sample.
class SparsePivotClusterer {
 public:
  explicit SparsePivotClusterer(SparsePivotParams params = {});

  // Processes node u, which must already be in the store with its incident
  // edges. Draws a fresh rank unless one is supplied (recompute replay).
  void insert(NodeId u, AdjacencyStore& store, Rng& rng,
              std::optional<double> preassigned_rank = std::nullopt);

  Partition export_clustering(const AdjacencyStore& store) const {
    return state_.export_clustering(store);
  }

  const PivotState& state() const { return state_; }
  const RankAssignment& ranks() const { return ranks_; }
  RankAssignment& ranks() { return ranks_; }
  const SparsePivotParams& params() const { return params_; }

  // Exploration budget L and neighbor-sample count at node count n.
  double exploration_budget(int n) const;
  int sample_count(int n) const;

  // Times stored sketches had to be rebuilt from scratch (cluster churn or
  // a missing sketch).
  std::int64_t sketch_rebuilds() const { return sketch_rebuilds_; }

  void reset();

 private:
  // Per-threshold state for one pivot. Contiguous thresholds whose
  // candidate sets coincide share one group (candidate sets are nested and
  // shrink as t grows), so sketch work is paid once per distinct set.
  struct Group {
    int first;  // threshold index range [first, last] into grid
    int last;
    std::vector<NodeId> candidate;
    ClusterCostSketch sketch;
  };
  struct BreakState {
    std::vector<double> grid;  // leading 0 entry stands for C = B_v
    std::vector<Group> groups;
    int additions_since_break = 0;  // heuristic mode rerun counter
  };

  void run_break_cluster(NodeId v, AdjacencyStore& store, Rng& rng);
  void handle_join(NodeId v, NodeId z, AdjacencyStore& store, Rng& rng);
  void after_explore(NodeId owner,
                     const std::vector<PivotState::Capture>& captured,
                     AdjacencyStore& store, Rng& rng);

  void break_cluster_estimate(NodeId v, AdjacencyStore& store, Rng& rng);
  void update_estimate(NodeId v, NodeId z, AdjacencyStore& store, Rng& rng);
  void select_best_estimate(NodeId v, BreakState& bs);
  void break_cluster_exact(NodeId v, AdjacencyStore& store);
  void heuristic_break_cluster(NodeId v, AdjacencyStore& store, Rng& rng);

  SparsePivotParams params_;
  PivotState state_;
  RankAssignment ranks_;
  std::map<NodeId, BreakState> break_states_;
  std::int64_t sketch_rebuilds_ = 0;
};

}  // namespace ccdyn

#endif  // CCDYN_SPARSE_PIVOT_H_
