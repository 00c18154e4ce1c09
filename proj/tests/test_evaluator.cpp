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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "ccdyn/evaluator.hpp"
#include "ccdyn/graph_store.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccdyn;

namespace {

AdjacencyStore store_from(const test::AdjList& adj) {
  AdjacencyStore store;
  for (NodeId u = 0; u < static_cast<NodeId>(adj.size()); ++u) {
    std::vector<NodeId> incident;
    for (NodeId w : adj[u]) {
      if (w < u) incident.push_back(w);
    }
    store.insert_node(u, incident);
  }
  return store;
}

Partition singletons(int n) {
  Partition part;
  for (NodeId u = 0; u < n; ++u) part.push_back({u});
  return part;
}

// Independent per-cluster implementation: non-edges inside each block plus
// half the edges leaving it, summed over blocks.
std::int64_t per_cluster_cost(const AdjacencyStore& store,
                              const Partition& partition) {
  std::vector<int> block_of(store.id_bound(), -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (NodeId u : partition[b]) block_of[u] = static_cast<int>(b);
  }
  // Per block: non-edges inside plus half the edges leaving it. A cross
  // edge contributes a half from each side, so tally everything doubled.
  std::int64_t doubled = 0;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    const auto& block = partition[b];
    doubled += 2 * test::brute_nonedges(store, block);
    for (NodeId u : block) {
      for (NodeId w : store.neighbors(u)) {
        if (block_of[w] != static_cast<int>(b)) ++doubled;
      }
    }
  }
  return doubled / 2;
}

}  // namespace

TEST_CASE("clustering cost on hand-checked partitions") {
  test::AdjList path{{1}, {0, 2}, {1}};
  AdjacencyStore store = store_from(path);
  CHECK(clustering_cost(store, {{0, 1, 2}}) == 1);
  CHECK(clustering_cost(store, singletons(3)) == store.edge_count());
  CHECK(clustering_cost(store, {{0, 1}, {2}}) == 1);

  test::AdjList tri{{1, 2}, {0, 2}, {0, 1}};
  AdjacencyStore t = store_from(tri);
  CHECK(clustering_cost(t, {{0, 1, 2}}) == 0);
}

TEST_CASE("invalid partitions are rejected") {
  AdjacencyStore store = store_from({{1}, {0}});
  CHECK_THROWS_AS(clustering_cost(store, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(clustering_cost(store, {{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(clustering_cost(store, {{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("cost equals the per-cluster sum on random instances") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 30)(rng);
    test::AdjList adj = test::gnp(n, 0.3, rng);
    AdjacencyStore store = store_from(adj);
    // Random partition: random block label per node.
    int k = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<std::vector<NodeId>> blocks(k);
    for (NodeId u = 0; u < n; ++u) {
      blocks[std::uniform_int_distribution<int>(0, k - 1)(rng)].push_back(u);
    }
    Partition part;
    for (auto& b : blocks) {
      if (!b.empty()) part.push_back(std::move(b));
    }
    CHECK(clustering_cost(store, part) == per_cluster_cost(store, part));
  }
}

TEST_CASE("cost is invariant under block reordering") {
  Rng rng(29);
  test::AdjList adj = test::gnp(15, 0.4, rng);
  AdjacencyStore store = store_from(adj);
  Partition part{{0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10, 11}, {12, 13, 14}};
  std::int64_t base = clustering_cost(store, part);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(part.begin(), part.end(), rng);
    for (auto& block : part) std::shuffle(block.begin(), block.end(), rng);
    CHECK(clustering_cost(store, part) == base);
  }
}

TEST_CASE("cost* oracle examples") {
  SUBCASE("B = C = clique costs 0") {
    test::AdjList k4{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    AdjacencyStore store = store_from(k4);
    CHECK(cost_star_oracle(store, {0, 1, 2, 3}, {0, 1, 2, 3}) == 0);
  }
  SUBCASE("edges {a,b},{a,c} with C = {a,b} costs 1") {
    test::AdjList adj{{1, 2}, {0}, {0}};
    AdjacencyStore store = store_from(adj);
    CHECK(cost_star_oracle(store, {0, 1, 2}, {0, 1}) == 1);
  }
}

TEST_CASE("cost(B|C) minus cost*(B|C) is half the edges leaving B") {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 24)(rng);
    test::AdjList adj = test::gnp(n, 0.35, rng);
    AdjacencyStore store = store_from(adj);
    std::vector<NodeId> B, C;
    for (NodeId u = 0; u < n; ++u) {
      int pick = std::uniform_int_distribution<int>(0, 2)(rng);
      if (pick >= 1) B.push_back(u);
      if (pick == 2) C.push_back(u);
    }
    if (B.empty()) B.push_back(0);
    std::int64_t leaving = 0;
    std::vector<char> in_b(n, 0);
    for (NodeId u : B) in_b[u] = 1;
    for (NodeId u : B) {
      for (NodeId w : store.neighbors(u)) {
        if (!in_b[w]) ++leaving;
      }
    }
    std::int64_t doubled = cost_given_cluster_doubled(store, B, C);
    std::int64_t star = cost_star_oracle(store, B, C);
    CHECK(doubled - 2 * star == leaving);
  }
}

TEST_CASE("brute-force best threshold examples") {
  // C_t keeps the members of B with degree >= t; ties go to the smallest t.
  SUBCASE("clique keeps everything, starting at t = 1") {
    test::AdjList k5(5);
    for (NodeId u = 0; u < 5; ++u) {
      for (NodeId v = 0; v < 5; ++v) {
        if (v != u) k5[u].push_back(v);
      }
    }
    AdjacencyStore store = store_from(k5);
    BestThreshold best =
        brute_force_best_threshold(store, {0, 1, 2, 3, 4}, {1, 2, 4, 8});
    CHECK(best.threshold == 1.0);
    CHECK(best.cluster.size() == 5);
    CHECK(best.cost_doubled == 0);
  }
  SUBCASE("clique plus pendants separates the pendants") {
    // K5 on 0..4, nodes 5 and 6 pendant on node 0.
    test::AdjList adj(7);
    for (NodeId u = 0; u < 5; ++u) {
      for (NodeId v = 0; v < 5; ++v) {
        if (v != u) adj[u].push_back(v);
      }
    }
    adj[0].push_back(5);
    adj[5].push_back(0);
    adj[0].push_back(6);
    adj[6].push_back(0);
    AdjacencyStore store = store_from(adj);
    std::vector<NodeId> B{0, 1, 2, 3, 4, 5, 6};
    BestThreshold best = brute_force_best_threshold(store, B, {1, 2, 8});
    CHECK(best.threshold == 2.0);
    CHECK(best.cluster == std::vector<NodeId>{0, 1, 2, 3, 4});
    // Keeping everyone pays the 9 pendant non-edges; dropping only the
    // pendants pays the two cut edges.
    CHECK(best.cost_doubled == 4);
  }
  SUBCASE("a one-threshold grid returns it") {
    AdjacencyStore store = store_from({{1}, {0}});
    BestThreshold best = brute_force_best_threshold(store, {0, 1}, {0.5});
    CHECK(best.threshold == 0.5);
  }
}

TEST_CASE("normalized objective") {
  test::AdjList adj{{1, 2}, {0, 2}, {0, 1}, {4}, {3}};  // triangle + edge
  AdjacencyStore store = store_from(adj);
  SUBCASE("singletons score exactly 1") {
    ObjectiveReport r = normalized_objective(store, singletons(5));
    CHECK(r.singleton_cost == 4);
    CHECK(r.normalized.has_value());
    CHECK(*r.normalized == 1.0);
  }
  SUBCASE("perfect clustering of disjoint cliques scores 0") {
    ObjectiveReport r = normalized_objective(store, {{0, 1, 2}, {3, 4}});
    CHECK(r.raw_cost == 0);
    CHECK(*r.normalized == 0.0);
  }
  SUBCASE("empty edge set reports no normalized value") {
    AdjacencyStore empty = store_from(test::AdjList(3));
    ObjectiveReport r = normalized_objective(empty, singletons(3));
    CHECK_FALSE(r.normalized.has_value());
  }
}

TEST_CASE("true-graph mode ignores soft-deleted nodes") {
  test::AdjList adj{{1, 2}, {0, 2}, {0, 1}};
  AdjacencyStore store = store_from(adj);
  store.soft_delete(2);
  // As seen: triangle in one block, cost 0. True graph: block {0,1}, cost 0,
  // singleton cost 1 (only edge 0-1 survives).
  Partition part{{0, 1, 2}};
  CHECK(clustering_cost(store, part, EvalMode::kAsSeen) == 0);
  CHECK(clustering_cost(store, part, EvalMode::kTrueGraph) == 0);
  ObjectiveReport r = normalized_objective(store, part, EvalMode::kTrueGraph);
  CHECK(r.singleton_cost == 1);
  // A partition separating 0 and 1 pays the surviving edge.
  CHECK(clustering_cost(store, {{0, 2}, {1}}, EvalMode::kTrueGraph) == 1);
}
