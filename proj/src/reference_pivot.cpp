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

#include "ccdyn/reference_pivot.hpp"

#include <stdexcept>

namespace ccdyn {

void ReferenceClusterer::insert(NodeId u, AdjacencyStore& store, Rng& rng,
                                std::optional<double> preassigned_rank) {
  if (state_.known(u)) {
    throw std::invalid_argument("reference insert: node already processed");
  }
  if (preassigned_rank) {
    if (!ranks_.has_rank(u)) ranks_.preassign(u, *preassigned_rank);
  } else {
    ranks_.assign(u, rng);
  }
  state_.add_node(u);

  // p(u) = argmin_{w in N[u]} pi(w), full neighborhood scan.
  const std::vector<NodeId>& scanned = store.scan_neighbors(u);
  NodeId best = u;
  for (NodeId w : scanned) {
    if (state_.known(w) && ranks_.less(w, best)) best = w;
  }
  if (best == u) {
    state_.make_pivot(u);
    state_.explore(u, store, ranks_);
    return;
  }
  if (state_.is_pivot(best)) {
    state_.set_pointer(u, best);
  } else {
    state_.set_dangling_pointer(u, best);
  }
  if (!maintain_argmin_) return;
  // A non-pivot arrival can still be the new argmin of a neighbor's closed
  // neighborhood; keep every pointer exact so the clustering matches the
  // static rule regardless of insertion order.
  for (NodeId w : scanned) {
    if (!state_.known(w)) continue;
    NodeId target = state_.has_pointer(w) ? state_.pivot_of(w) : w;
    if (!ranks_.less(u, target)) continue;
    if (state_.is_pivot(w)) state_.demote(w);
    state_.set_dangling_pointer(w, u);
  }
}

Partition static_pivot_oracle(const AdjacencyStore& store,
                              const RankAssignment& ranks) {
  const std::vector<NodeId> nodes = store.present_nodes();
  NodeId bound = store.id_bound();
  std::vector<NodeId> p(bound, PivotState::kNoPivot);
  for (NodeId u : nodes) {
    NodeId best = u;
    for (NodeId w : store.neighbors(u)) {
      if (ranks.less(w, best)) best = w;
    }
    p[u] = best;
  }
  std::vector<std::vector<NodeId>> blocks(bound);
  Partition out;
  for (NodeId u : nodes) {
    if (p[p[u]] == p[u]) blocks[p[u]].push_back(u);
  }
  for (NodeId v = 0; v < bound; ++v) {
    if (!blocks[v].empty()) out.push_back(std::move(blocks[v]));
  }
  for (NodeId u : nodes) {
    if (p[p[u]] != p[u]) out.push_back({u});
  }
  return out;
}

}  // namespace ccdyn
