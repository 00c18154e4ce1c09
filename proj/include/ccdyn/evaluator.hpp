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

#ifndef CCDYN_EVALUATOR_H_
#define CCDYN_EVALUATOR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ccdyn/graph_store.hpp"
#include "ccdyn/pivot_state.hpp"

namespace ccdyn {

// Which nodes the objective is evaluated over. kAsSeen is the graph the
// algorithm works with (soft-deleted nodes included); kTrueGraph drops
// soft-deleted nodes from both the partition and the edge set.
enum class EvalMode { kAsSeen, kTrueGraph };

struct ObjectiveReport {
  std::int64_t raw_cost = 0;
  std::int64_t singleton_cost = 0;  // = |E| over the evaluated node set
  std::optional<double> normalized;  // absent when |E| = 0
};

// Number of disagreements: non-edges inside blocks plus edges across
// blocks. Exact; O(n + m) via per-block edge counting.
std::int64_t clustering_cost(const AdjacencyStore& store,
                             const Partition& partition,
                             EvalMode mode = EvalMode::kAsSeen);

// cost*(B|C): non-edges inside C plus edges in B with at least one endpoint
// in B-C. Brute force over pairs.
std::int64_t cost_star_oracle(const AdjacencyStore& store,
                              const std::vector<NodeId>& B,
                              const std::vector<NodeId>& C);

// cost(B|C) = cost*(B|C) + (edges leaving B)/2, in half-edge units so it
// stays integral: returns 2*cost(B|C).
std::int64_t cost_given_cluster_doubled(const AdjacencyStore& store,
                                        const std::vector<NodeId>& B,
                                        const std::vector<NodeId>& C);

// Exact argmin of cost(B_v|C_t) over the grid (ties to the smallest
// threshold). Returns the threshold and the doubled cost.
struct BestThreshold {
  double threshold = 0.0;
  std::int64_t cost_doubled = 0;
  std::vector<NodeId> cluster;
};
BestThreshold brute_force_best_threshold(const AdjacencyStore& store,
                                         const std::vector<NodeId>& B,
                                         const std::vector<double>& grid);

ObjectiveReport normalized_objective(const AdjacencyStore& store,
                                     const Partition& partition,
                                     EvalMode mode = EvalMode::kAsSeen);

}  // namespace ccdyn

#endif  // CCDYN_EVALUATOR_H_
