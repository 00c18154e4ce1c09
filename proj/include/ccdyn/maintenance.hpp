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

#ifndef CCDYN_MAINTENANCE_H_
#define CCDYN_MAINTENANCE_H_

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ccdyn/graph_store.hpp"
#include "ccdyn/pivot_state.hpp"

namespace ccdyn {

// When to rebuild everything: kDeletionsOnly (the experimental default,
// trigger at eps * n0 deletions) or kAllUpdates (trigger at eps * n0 / 6
// updates of any kind).
enum class TriggerMode { kDeletionsOnly, kAllUpdates };

struct EpochState {
  int n0 = 0;  // node count right after the last recompute
  std::int64_t updates_since = 0;
  std::int64_t deletions_since = 0;
  TriggerMode trigger_mode = TriggerMode::kDeletionsOnly;
};

inline void note_insert(EpochState& epoch) { ++epoch.updates_since; }

// Deletions are ignored by the clustering: the node is soft-deleted in the
// store (it keeps answering queries and gaining edges) and only the epoch
// counters move.
inline void handle_delete(EpochState& epoch, AdjacencyStore& store, NodeId u) {
  store.soft_delete(u);
  ++epoch.updates_since;
  ++epoch.deletions_since;
}

inline bool should_recompute(const EpochState& epoch, double eps) {
  double n0 = static_cast<double>(epoch.n0);
  if (epoch.trigger_mode == TriggerMode::kAllUpdates) {
    return epoch.updates_since > 0 &&
           static_cast<double>(epoch.updates_since) >= eps * n0 / 6.0;
  }
  return epoch.deletions_since > 0 &&
         static_cast<double>(epoch.deletions_since) >= eps * n0;
}

// Purges soft-deleted nodes, draws a fresh rank for every survivor, and
// replays the survivors into a rebuilt store in increasing rank order,
// re-running the clusterer's insertion with the precomputed rank. Cumulative
// operation counters carry over and keep growing during the replay.
template <typename Clusterer>
void recompute(Clusterer& clusterer, AdjacencyStore& store, EpochState& epoch,
               Rng& rng) {
  store.purge_soft_deleted();
  std::vector<NodeId> survivors = store.present_nodes();

  NodeId bound = store.id_bound();
  std::vector<double> fresh_rank(bound, 0.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (NodeId u : survivors) fresh_rank[u] = unit(rng);
  std::sort(survivors.begin(), survivors.end(), [&](NodeId a, NodeId b) {
    return fresh_rank[a] != fresh_rank[b] ? fresh_rank[a] < fresh_rank[b]
                                          : a < b;
  });

  AdjacencyStore rebuilt;
  rebuilt.ops() = store.ops();
  std::vector<char> replayed(bound, 0);
  clusterer.reset();
  for (NodeId u : survivors) {
    std::vector<NodeId> incident;
    for (NodeId w : store.neighbors(u)) {
      if (replayed[w]) incident.push_back(w);
    }
    rebuilt.insert_node(u, incident);
    replayed[u] = 1;
    clusterer.insert(u, rebuilt, rng, fresh_rank[u]);
  }
  store = std::move(rebuilt);

  epoch.n0 = store.present_count();
  epoch.updates_since = 0;
  epoch.deletions_since = 0;
}

}  // namespace ccdyn

#endif  // CCDYN_MAINTENANCE_H_
