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

#include "ccdyn/evaluator.hpp"

#include <stdexcept>

namespace ccdyn {

namespace {

bool evaluated(const AdjacencyStore& store, NodeId u, EvalMode mode) {
  return mode == EvalMode::kAsSeen ? store.present(u) : store.active(u);
}

}  // namespace

std::int64_t clustering_cost(const AdjacencyStore& store,
                             const Partition& partition, EvalMode mode) {
  NodeId bound = store.id_bound();
  std::vector<int> block_of(bound, -1);
  std::vector<std::int64_t> block_size;
  int covered = 0;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    std::int64_t size = 0;
    for (NodeId u : partition[b]) {
      if (u < 0 || u >= bound || !evaluated(store, u, mode)) {
        if (mode == EvalMode::kTrueGraph && store.present(u)) continue;
        throw std::invalid_argument("clustering_cost: block contains a node "
                                    "outside the evaluated set");
      }
      if (block_of[u] != -1) {
        throw std::invalid_argument("clustering_cost: partition not disjoint");
      }
      block_of[u] = static_cast<int>(b);
      ++size;
      ++covered;
    }
    block_size.push_back(size);
  }
  int expected =
      mode == EvalMode::kAsSeen ? store.present_count() : store.active_count();
  if (covered != expected) {
    throw std::invalid_argument(
        "clustering_cost: partition does not cover the evaluated node set");
  }

  std::int64_t intra_endpoints = 0;  // 2 * intra edges
  std::int64_t total_endpoints = 0;  // 2 * evaluated edges
  for (NodeId u = 0; u < bound; ++u) {
    if (!evaluated(store, u, mode)) continue;
    for (NodeId y : store.neighbors(u)) {
      if (!evaluated(store, y, mode)) continue;
      ++total_endpoints;
      if (block_of[u] == block_of[y]) ++intra_endpoints;
    }
  }
  std::int64_t intra_edges = intra_endpoints / 2;
  std::int64_t edges = total_endpoints / 2;
  std::int64_t intra_pairs = 0;
  for (std::int64_t s : block_size) intra_pairs += s * (s - 1) / 2;
  return (intra_pairs - intra_edges) + (edges - intra_edges);
}

std::int64_t cost_star_oracle(const AdjacencyStore& store,
                              const std::vector<NodeId>& B,
                              const std::vector<NodeId>& C) {
  NodeId bound = store.id_bound();
  std::vector<char> in_B(bound, 0), in_C(bound, 0);
  for (NodeId u : B) in_B[u] = 1;
  for (NodeId u : C) {
    if (!in_B[u]) throw std::invalid_argument("cost_star: C not within B");
    in_C[u] = 1;
  }
  std::int64_t nonedges = 0;
  for (std::size_t i = 0; i < C.size(); ++i) {
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      if (!store.has_edge_raw(C[i], C[j])) ++nonedges;
    }
  }
  std::int64_t twice_boundary = 0;
  for (NodeId w : B) {
    if (in_C[w]) continue;
    for (NodeId y : store.neighbors(w)) {
      if (!in_B[y]) continue;
      twice_boundary += in_C[y] ? 2 : 1;
    }
  }
  return nonedges + twice_boundary / 2;
}

std::int64_t cost_given_cluster_doubled(const AdjacencyStore& store,
                                        const std::vector<NodeId>& B,
                                        const std::vector<NodeId>& C) {
  NodeId bound = store.id_bound();
  std::vector<char> in_B(bound, 0);
  for (NodeId u : B) in_B[u] = 1;
  std::int64_t leaving = 0;
  for (NodeId u : B) {
    for (NodeId y : store.neighbors(u)) {
      if (!in_B[y]) ++leaving;
    }
  }
  return 2 * cost_star_oracle(store, B, C) + leaving;
}

BestThreshold brute_force_best_threshold(const AdjacencyStore& store,
                                         const std::vector<NodeId>& B,
                                         const std::vector<double>& grid) {
  if (B.empty()) throw std::invalid_argument("best_threshold: empty B");
  if (grid.empty()) throw std::invalid_argument("best_threshold: empty grid");
  BestThreshold best;
  bool first = true;
  for (double t : grid) {
    std::vector<NodeId> Ct;
    for (NodeId u : B) {
      if (store.degree_raw(u) >= t) Ct.push_back(u);
    }
    std::int64_t cost = cost_given_cluster_doubled(store, B, Ct);
    if (first || cost < best.cost_doubled) {
      best = {t, cost, std::move(Ct)};
      first = false;
    }
  }
  return best;
}

ObjectiveReport normalized_objective(const AdjacencyStore& store,
                                     const Partition& partition,
                                     EvalMode mode) {
  ObjectiveReport report;
  report.raw_cost = clustering_cost(store, partition, mode);
  std::int64_t endpoints = 0;
  for (NodeId u = 0; u < store.id_bound(); ++u) {
    if (!evaluated(store, u, mode)) continue;
    for (NodeId y : store.neighbors(u)) {
      if (evaluated(store, y, mode)) ++endpoints;
    }
  }
  report.singleton_cost = endpoints / 2;
  if (report.singleton_cost > 0) {
    report.normalized = static_cast<double>(report.raw_cost) /
                        static_cast<double>(report.singleton_cost);
  }
  return report;
}

}  // namespace ccdyn
