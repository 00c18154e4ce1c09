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
#include <numeric>

#include "ccdyn/graph_store.hpp"
#include "ccdyn/maintenance.hpp"
#include "ccdyn/reference_pivot.hpp"
#include "ccdyn/sparse_pivot.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ccdyn;

namespace {

// Inserts a random graph into store + clusterer with epoch bookkeeping.
template <typename Clusterer>
void grow(const test::AdjList& adj, AdjacencyStore& store,
          Clusterer& clusterer, EpochState& epoch, Rng& rng) {
  for (NodeId u = 0; u < static_cast<NodeId>(adj.size()); ++u) {
    std::vector<NodeId> incident;
    for (NodeId w : adj[u]) {
      if (w < u) incident.push_back(w);
    }
    store.insert_node(u, incident);
    note_insert(epoch);
    clusterer.insert(u, store, rng);
  }
}

}  // namespace

TEST_CASE("a deletion leaves the exported partition untouched") {
  Rng rng(3);
  test::AdjList adj = test::gnp(30, 0.2, rng);
  AdjacencyStore store;
  SparsePivotClusterer clusterer;
  EpochState epoch;
  grow(adj, store, clusterer, epoch, rng);
  auto before = test::canonical(clusterer.export_clustering(store));

  handle_delete(epoch, store, 7);
  handle_delete(epoch, store, 21);
  auto after = test::canonical(clusterer.export_clustering(store));
  CHECK(after == before);

  // The deleted nodes still sit in whatever block they occupied.
  bool found = false;
  for (const auto& block : after) {
    if (std::find(block.begin(), block.end(), 7) != block.end()) found = true;
  }
  CHECK(found);
}

TEST_CASE("epoch counters track updates and deletions separately") {
  AdjacencyStore store;
  EpochState epoch;
  store.insert_node(0, {});
  store.insert_node(1, {0});
  note_insert(epoch);
  note_insert(epoch);
  CHECK(epoch.updates_since == 2);
  CHECK(epoch.deletions_since == 0);
  handle_delete(epoch, store, 0);
  CHECK(epoch.updates_since == 3);
  CHECK(epoch.deletions_since == 1);
  CHECK(store.soft_deleted(0));
  CHECK_THROWS_AS(handle_delete(epoch, store, 0), std::invalid_argument);
  CHECK_THROWS_AS(handle_delete(epoch, store, 5), std::invalid_argument);
}

TEST_CASE("recompute trigger arithmetic") {
  SUBCASE("all-updates mode fires at eps * n0 / 6") {
    EpochState epoch;
    epoch.trigger_mode = TriggerMode::kAllUpdates;
    epoch.n0 = 600;
    for (int i = 0; i < 9; ++i) {
      note_insert(epoch);
      CHECK_FALSE(should_recompute(epoch, 0.1));
    }
    note_insert(epoch);  // the 10th update
    CHECK(should_recompute(epoch, 0.1));
  }
  SUBCASE("deletions-only mode fires at eps * n0 deletions") {
    EpochState epoch;
    epoch.n0 = 1000;
    epoch.deletions_since = 99;
    epoch.updates_since = 5000;  // irrelevant in this mode
    CHECK_FALSE(should_recompute(epoch, 0.1));
    epoch.deletions_since = 100;
    CHECK(should_recompute(epoch, 0.1));
  }
  SUBCASE("a fresh epoch never triggers") {
    EpochState epoch;
    epoch.n0 = 0;
    CHECK_FALSE(should_recompute(epoch, 0.1));
    epoch.trigger_mode = TriggerMode::kAllUpdates;
    CHECK_FALSE(should_recompute(epoch, 0.1));
  }
}

TEST_CASE("recompute purges, re-ranks and resets the epoch") {
  Rng rng(11);
  test::AdjList adj = test::gnp(40, 0.15, rng);
  AdjacencyStore store;
  SparsePivotClusterer clusterer;
  EpochState epoch;
  grow(adj, store, clusterer, epoch, rng);
  for (NodeId u = 0; u < 8; ++u) handle_delete(epoch, store, u);

  recompute(clusterer, store, epoch, rng);
  CHECK(store.present_count() == 32);
  CHECK(store.active_count() == 32);
  CHECK(epoch.n0 == 32);
  CHECK(epoch.updates_since == 0);
  CHECK(epoch.deletions_since == 0);
  for (NodeId u = 0; u < 8; ++u) CHECK_FALSE(store.present(u));

  // The partition covers exactly the survivors.
  Partition part = clusterer.export_clustering(store);
  int covered = 0;
  for (const auto& block : part) covered += static_cast<int>(block.size());
  CHECK(covered == 32);
}

TEST_CASE("recompute of a fully deleted graph leaves nothing") {
  Rng rng(13);
  AdjacencyStore store;
  ReferenceClusterer clusterer;
  EpochState epoch;
  grow(test::AdjList(5), store, clusterer, epoch, rng);
  for (NodeId u = 0; u < 5; ++u) handle_delete(epoch, store, u);
  recompute(clusterer, store, epoch, rng);
  CHECK(store.present_count() == 0);
  CHECK(clusterer.export_clustering(store).empty());
  CHECK(epoch.n0 == 0);
}

TEST_CASE("recompute is deterministic under a fixed seed") {
  Rng rng(17);
  test::AdjList adj = test::gnp(25, 0.25, rng);
  auto run = [&](int seed) {
    AdjacencyStore store;
    SparsePivotClusterer clusterer;
    EpochState epoch;
    Rng local(seed);
    grow(adj, store, clusterer, epoch, local);
    for (NodeId u : {3, 9, 12}) handle_delete(epoch, store, u);
    recompute(clusterer, store, epoch, local);
    return test::canonical(clusterer.export_clustering(store));
  };
  CHECK(run(100) == run(100));
}

TEST_CASE("recompute equals a rank-ordered replay on the purged graph") {
  Rng rng(19);
  test::AdjList adj = test::gnp(30, 0.2, rng);
  AdjacencyStore store;
  ReferenceClusterer clusterer;
  EpochState epoch;
  grow(adj, store, clusterer, epoch, rng);
  for (NodeId u : {1, 4, 22}) handle_delete(epoch, store, u);

  // Replay independently with the same generator state the recompute will
  // consume: fresh ranks for survivors in id order, then insertion rank-first.
  Rng replay_rng = rng;
  std::vector<NodeId> survivors;
  for (NodeId u = 0; u < 30; ++u) {
    if (!store.soft_deleted(u)) survivors.push_back(u);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> fresh(30, 0.0);
  for (NodeId u : survivors) fresh[u] = unit(replay_rng);
  std::sort(survivors.begin(), survivors.end(),
            [&](NodeId a, NodeId b) { return fresh[a] < fresh[b]; });
  AdjacencyStore replay_store;
  ReferenceClusterer replay_clusterer;
  for (NodeId u : survivors) {
    std::vector<NodeId> incident;
    for (NodeId w : adj[u]) {
      if (replay_store.present(w)) incident.push_back(w);
    }
    replay_store.insert_node(u, incident);
    replay_clusterer.insert(u, replay_store, replay_rng, fresh[u]);
  }

  recompute(clusterer, store, epoch, rng);
  CHECK(test::canonical(clusterer.export_clustering(store)) ==
        test::canonical(replay_clusterer.export_clustering(replay_store)));
}

TEST_CASE("operation counters carry across a recompute") {
  Rng rng(23);
  test::AdjList adj = test::gnp(20, 0.3, rng);
  AdjacencyStore store;
  SparsePivotClusterer clusterer;
  EpochState epoch;
  grow(adj, store, clusterer, epoch, rng);
  handle_delete(epoch, store, 0);
  std::uint64_t before = store.ops().total();
  CHECK(before > 0);
  recompute(clusterer, store, epoch, rng);
  CHECK(store.ops().total() > before);  // replay work is charged on top
}

TEST_CASE("the soft-deleted set only grows between recomputes") {
  Rng rng(29);
  test::AdjList adj = test::gnp(15, 0.3, rng);
  AdjacencyStore store;
  SparsePivotClusterer clusterer;
  EpochState epoch;
  grow(adj, store, clusterer, epoch, rng);
  std::set<NodeId> deleted;
  for (NodeId u : {2, 5, 11}) {
    handle_delete(epoch, store, u);
    deleted.insert(u);
    for (NodeId w : deleted) CHECK(store.soft_deleted(w));
  }
}
