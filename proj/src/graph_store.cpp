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

#include "ccdyn/graph_store.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccdyn {

void AdjacencyStore::require_present(NodeId u, const char* what) const {
  if (!present(u)) {
    throw std::invalid_argument(std::string(what) + ": node " +
                                std::to_string(u) + " is not present");
  }
}

void AdjacencyStore::add_directed(NodeId u, NodeId v) {
  neighbors_[u].push_back(v);
  auto& idx = sorted_index_[u];
  idx.insert(std::upper_bound(idx.begin(), idx.end(), v), v);
}

void AdjacencyStore::insert_node(NodeId u, const std::vector<NodeId>& incident) {
  if (u < 0) throw std::invalid_argument("insert_node: negative id");
  if (present(u)) {
    throw std::invalid_argument("insert_node: duplicate node id " +
                                std::to_string(u));
  }
  for (NodeId v : incident) {
    if (v != u && !present(v)) {
      throw std::invalid_argument("insert_node: incident node " +
                                  std::to_string(v) + " is absent");
    }
  }
  if (u >= static_cast<NodeId>(status_.size())) {
    status_.resize(u + 1, Status::kAbsent);
    neighbors_.resize(u + 1);
    sorted_index_.resize(u + 1);
  }
  status_[u] = Status::kActive;
  ++present_count_;
  ++active_count_;
  for (NodeId v : incident) {
    if (v == u || has_edge_raw(u, v)) continue;
    add_directed(u, v);
    add_directed(v, u);
    ++edge_count_;
  }
}

void AdjacencyStore::soft_delete(NodeId u) {
  require_present(u, "soft_delete");
  if (status_[u] == Status::kSoftDeleted) {
    throw std::invalid_argument("soft_delete: node " + std::to_string(u) +
                                " already soft-deleted");
  }
  status_[u] = Status::kSoftDeleted;
  --active_count_;
}

int AdjacencyStore::purge_soft_deleted() {
  int purged = 0;
  for (NodeId u = 0; u < id_bound(); ++u) {
    if (status_[u] != Status::kSoftDeleted) continue;
    status_[u] = Status::kAbsent;
    ++purged;
    --present_count_;
  }
  if (purged == 0) return 0;
  for (NodeId u = 0; u < id_bound(); ++u) {
    if (status_[u] == Status::kAbsent) {
      edge_count_ -= static_cast<std::int64_t>(neighbors_[u].size());
      neighbors_[u].clear();
      neighbors_[u].shrink_to_fit();
      sorted_index_[u].clear();
      sorted_index_[u].shrink_to_fit();
      continue;
    }
    auto dead = [this](NodeId v) { return status_[v] == Status::kAbsent; };
    auto& nb = neighbors_[u];
    nb.erase(std::remove_if(nb.begin(), nb.end(), dead), nb.end());
    auto& idx = sorted_index_[u];
    idx.erase(std::remove_if(idx.begin(), idx.end(), dead), idx.end());
  }
  // Every purged edge was subtracted once per endpoint; edges between two
  // purged nodes were subtracted twice via the purged side's list, so the
  // count above is off only if we double-subtract. Recount the invariant
  // cheaply instead.
  std::int64_t half = 0;
  for (NodeId u = 0; u < id_bound(); ++u) half += neighbors_[u].size();
  edge_count_ = half / 2;
  return purged;
}

int AdjacencyStore::degree(NodeId u) {
  require_present(u, "degree");
  ++ops_.degree_queries;
  return static_cast<int>(neighbors_[u].size());
}

NodeId AdjacencyStore::sample_neighbor(NodeId u, Rng& rng) {
  require_present(u, "sample_neighbor");
  const auto& nb = neighbors_[u];
  if (nb.empty()) {
    throw std::invalid_argument("sample_neighbor: node " + std::to_string(u) +
                                " has degree 0");
  }
  ++ops_.neighbor_samples;
  std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
  return nb[pick(rng)];
}

std::vector<NodeId> AdjacencyStore::sample_neighbors(NodeId u, int k, Rng& rng) {
  std::vector<NodeId> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(sample_neighbor(u, rng));
  return out;
}

bool AdjacencyStore::has_edge(NodeId u, NodeId v) {
  require_present(u, "has_edge");
  require_present(v, "has_edge");
  ++ops_.edge_checks;
  return has_edge_raw(u, v);
}

const std::vector<NodeId>& AdjacencyStore::scan_neighbors(NodeId u) {
  require_present(u, "scan_neighbors");
  ops_.neighbor_samples += neighbors_[u].size();
  return neighbors_[u];
}

const std::vector<NodeId>& AdjacencyStore::neighbors(NodeId u) const {
  require_present(u, "neighbors");
  return neighbors_[u];
}

bool AdjacencyStore::has_edge_raw(NodeId u, NodeId v) const {
  const auto& a = sorted_index_[u];
  const auto& b = sorted_index_[v];
  const auto& small = a.size() <= b.size() ? a : b;
  NodeId target = a.size() <= b.size() ? v : u;
  return std::binary_search(small.begin(), small.end(), target);
}

int AdjacencyStore::degree_raw(NodeId u) const {
  require_present(u, "degree_raw");
  return static_cast<int>(neighbors_[u].size());
}

std::vector<NodeId> AdjacencyStore::present_nodes() const {
  std::vector<NodeId> out;
  out.reserve(present_count_);
  for (NodeId u = 0; u < id_bound(); ++u) {
    if (status_[u] != Status::kAbsent) out.push_back(u);
  }
  return out;
}

std::vector<NodeId> AdjacencyStore::active_nodes() const {
  std::vector<NodeId> out;
  out.reserve(active_count_);
  for (NodeId u = 0; u < id_bound(); ++u) {
    if (status_[u] == Status::kActive) out.push_back(u);
  }
  return out;
}

}  // namespace ccdyn
