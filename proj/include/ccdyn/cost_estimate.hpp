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

#ifndef CCDYN_COST_ESTIMATE_H_
#define CCDYN_COST_ESTIMATE_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "ccdyn/graph_store.hpp"

namespace ccdyn {

// The multiplicative/additive correction in the final estimate,
// (tcost + 9e|C|)/(1 - 37e), only makes sense for e < 1/37; beyond the
// guarantee regime we clamp the correction epsilon so the output stays a
// monotone, non-negative inflation of tcost. Sampling budgets always use
// the caller's epsilon.
inline double correction_eps(double eps) {
  constexpr double kMax = 1.0 / 74.0;
  return eps < kMax ? eps : kMax;
}

// Sample budget for the in-cluster non-edge estimator.
std::int64_t pair_budget(std::int64_t cluster_size, double eps, int n);
// Per-boundary-node edge sample count.
std::int64_t edge_sample_budget(double eps, int n);

// Stored pair samples for one candidate cluster, kept for dynamic updates.
struct InClusterSketch {
  struct PairSample {
    NodeId a;
    NodeId b;
    bool nonedge;
  };

  std::vector<NodeId> members;
  std::vector<PairSample> pairs;
  std::int64_t nonedge_count = 0;  // S: non-edges among stored pairs
  double eps = 0.1;
  int n_at_build = 2;

  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
  // S * binom(|C|,2) / tau; exactly 0 when |C| <= 1.
  double estimate() const;
};

// Builds the sketch by sampling pair_budget() ordered draws of two distinct
// cluster members (stored unordered), counting non-edges against the store.
InClusterSketch build_in_cluster_sketch(const std::vector<NodeId>& cluster,
                                        AdjacencyStore& store, double eps,
                                        int n, Rng& rng);

// Convenience wrapper returning just the estimate.
double in_cluster_cost_estimate(const std::vector<NodeId>& cluster,
                                AdjacencyStore& store, double eps, int n,
                                Rng& rng);

// Indices (0-based) that a Bernoulli(1-q) sweep over `length` slots would
// mark, generated with geometric skips so the cost is proportional to the
// number of indices returned.
std::vector<std::size_t> resample_indices(std::size_t length, double q,
                                          Rng& rng);

// Dynamically maintained estimate of cost*(B|C): C is one cluster, B-C are
// singletons.
struct ClusterCostSketch {
  InClusterSketch in_cluster;
  double degree_sum = 0.0;    // sum of d(w), w in C, at build/insert time
  double boundary_sum = 0.0;  // Z_{B-C}/2 + Z_{V-B} terms plus d(z) updates
  std::set<NodeId> b_members;  // all of B, including C
  double eps = 0.1;
  int n_at_build = 2;

  std::int64_t cluster_size() const { return in_cluster.size(); }
  double tcost() const;
  // X = (tcost + 9e|C|) / (1 - 37e) with the clamped correction epsilon.
  double estimate() const;
};

// Algorithm: tcost = sum_{w in C} d(w) - 2*binom(|C|,2) + 3*in-cluster
// estimate, plus sampled boundary weights for every node of B-C.
ClusterCostSketch cost_estimate(const std::vector<NodeId>& B,
                                const std::vector<NodeId>& C,
                                AdjacencyStore& store, double eps, int n,
                                Rng& rng);

// New node z lands in B-C: the estimate grows by exactly d(z).
void update_singleton_insert(ClusterCostSketch& sketch, NodeId z,
                             AdjacencyStore& store);

// New node z joins C: deterministic components updated, stored pairs
// resampled with probability 1-q (q = binom(|C|,2)/binom(|C|+1,2)) and the
// pair budget topped up from the enlarged cluster. Returns the number of
// resampled pairs.
std::int64_t update_cluster_insert(ClusterCostSketch& sketch, NodeId z,
                                   AdjacencyStore& store, Rng& rng);

// Returns C when estimate(B|C) < estimate(B|C2), else C2 (ties go to C2).
// Estimates are drawn fresh.
const std::vector<NodeId>& cost_compare(const std::vector<NodeId>& B,
                                        const std::vector<NodeId>& C,
                                        const std::vector<NodeId>& C2,
                                        AdjacencyStore& store, double eps,
                                        int n, Rng& rng);

}  // namespace ccdyn

#endif  // CCDYN_COST_ESTIMATE_H_
