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

#include "ccdyn/pivot_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccdyn {

void RankAssignment::store(NodeId u, double rank) {
  if (u < 0) throw std::invalid_argument("rank: negative id");
  if (has_rank(u)) {
    throw std::invalid_argument("rank: node " + std::to_string(u) +
                                " already has a rank");
  }
  if (u >= static_cast<NodeId>(pi_.size())) {
    pi_.resize(u + 1, 0.0);
    assigned_.resize(u + 1, 0);
  }
  pi_[u] = rank;
  assigned_[u] = 1;
}

double RankAssignment::assign(NodeId u, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = unit(rng);
  store(u, r);
  return r;
}

void RankAssignment::preassign(NodeId u, double rank) { store(u, rank); }

namespace {
void ensure_size(std::vector<char>& v, NodeId u) {
  if (u >= static_cast<NodeId>(v.size())) v.resize(u + 1, 0);
}
}  // namespace

void PivotState::add_node(NodeId u) {
  if (u < 0) throw std::invalid_argument("add_node: negative id");
  if (known(u)) {
    throw std::invalid_argument("add_node: node " + std::to_string(u) +
                                " already tracked");
  }
  if (u >= static_cast<NodeId>(p_.size())) {
    p_.resize(u + 1, kNoPivot);
    B_.resize(u + 1);
    C_.resize(u + 1);
  }
  ensure_size(known_, u);
  ensure_size(is_pivot_, u);
  ensure_size(ever_demoted_, u);
  ensure_size(in_cluster_, u);
  known_[u] = 1;
  p_[u] = kNoPivot;
  in_cluster_[u] = 0;
}

void PivotState::make_pivot(NodeId u) {
  if (!known(u)) throw std::invalid_argument("make_pivot: unknown node");
  if (ever_demoted_[u]) {
    throw std::logic_error("make_pivot: node " + std::to_string(u) +
                           " was demoted earlier in this epoch");
  }
  if (is_pivot_[u]) throw std::invalid_argument("make_pivot: already a pivot");
  is_pivot_[u] = 1;
  p_[u] = u;
  B_[u].assign(1, u);
  C_[u].assign(1, u);
  in_cluster_[u] = 1;
  pivot_list_.push_back(u);
}

void PivotState::remove_from_B(NodeId pivot, NodeId u) {
  auto& b = B_[pivot];
  auto it = std::find(b.begin(), b.end(), u);
  if (it != b.end()) b.erase(it);
  if (in_cluster_[u]) {
    auto& c = C_[pivot];
    auto ct = std::find(c.begin(), c.end(), u);
    if (ct != c.end()) c.erase(ct);
    in_cluster_[u] = 0;
  }
}

void PivotState::set_pointer(NodeId u, NodeId v) {
  if (!known(u) || !is_pivot(v)) {
    throw std::invalid_argument("set_pointer: needs a known node and a pivot");
  }
  if (is_pivot(u)) {
    throw std::logic_error("set_pointer: demote pivot " + std::to_string(u) +
                           " before repointing it");
  }
  NodeId old = p_[u];
  if (old == v) return;
  if (old != kNoPivot && is_pivot(old)) remove_from_B(old, u);
  p_[u] = v;
  B_[v].push_back(u);
  if (auto_cluster_) {
    C_[v].push_back(u);
    in_cluster_[u] = 1;
  } else {
    in_cluster_[u] = 0;
  }
}

void PivotState::set_dangling_pointer(NodeId u, NodeId v) {
  if (!known(u) || !known(v)) {
    throw std::invalid_argument("set_dangling_pointer: unknown node");
  }
  if (is_pivot(v)) {
    throw std::invalid_argument("set_dangling_pointer: target is a pivot");
  }
  if (p_[u] != kNoPivot && is_pivot(p_[u])) remove_from_B(p_[u], u);
  p_[u] = v;
  in_cluster_[u] = 0;
}

void PivotState::demote(NodeId v) {
  if (!is_pivot(v)) throw std::invalid_argument("demote: not a pivot");
  for (NodeId z : B_[v]) in_cluster_[z] = 0;
  B_[v].clear();
  C_[v].clear();
  is_pivot_[v] = 0;
  ever_demoted_[v] = 1;
  pivot_list_.erase(std::find(pivot_list_.begin(), pivot_list_.end(), v));
}

void PivotState::set_cluster(NodeId pivot, std::vector<NodeId> cluster) {
  if (!is_pivot(pivot)) throw std::invalid_argument("set_cluster: not a pivot");
  if (auto_cluster_) return;
  for (NodeId z : C_[pivot]) in_cluster_[z] = 0;
  for (NodeId z : cluster) {
    if (p_[z] != pivot) {
      throw std::invalid_argument("set_cluster: member " + std::to_string(z) +
                                  " is not assigned to this pivot");
    }
    in_cluster_[z] = 1;
  }
  C_[pivot] = std::move(cluster);
}

void PivotState::add_to_cluster(NodeId pivot, NodeId u) {
  if (!is_pivot(pivot)) {
    throw std::invalid_argument("add_to_cluster: not a pivot");
  }
  if (auto_cluster_) return;
  if (p_[u] != pivot) {
    throw std::invalid_argument("add_to_cluster: node not assigned here");
  }
  if (!in_cluster_[u]) {
    C_[pivot].push_back(u);
    in_cluster_[u] = 1;
  }
}

void PivotState::explore(NodeId u, AdjacencyStore& store,
                         const RankAssignment& ranks,
                         std::vector<Capture>* captured) {
  if (!is_pivot(u)) throw std::invalid_argument("explore: not a pivot");
  const std::vector<NodeId> neighborhood = store.scan_neighbors(u);
  for (NodeId w : neighborhood) {
    if (!known(w)) continue;  // not yet processed by the clustering
    // Nodes without a pointer carry an implicit self-pointer (non-pivot).
    NodeId target = has_pointer(w) ? p_[w] : w;
    if (!ranks.less(u, target)) continue;
    if (is_pivot(w)) {
      const std::vector<NodeId> orphans = B_[w];
      demote(w);
      for (NodeId z : orphans) {
        if (z == w) continue;
        if (store.has_edge(z, u)) {
          set_pointer(z, u);
          if (captured) captured->push_back({z, w});
        }
        // Otherwise z keeps its stale pointer to w and is now a singleton.
      }
    }
    NodeId previous = has_pointer(w) ? p_[w] : kNoPivot;
    set_pointer(w, u);
    if (captured) captured->push_back({w, previous});
  }
}

Partition PivotState::export_clustering(const AdjacencyStore& store) const {
  Partition out;
  std::vector<char> placed(p_.size(), 0);
  for (NodeId v : pivot_list_) {
    if (!store.present(v)) continue;
    std::vector<NodeId> block;
    block.push_back(v);
    if (placed[v]) throw std::logic_error("export: pivot placed twice");
    placed[v] = 1;
    for (NodeId z : C_[v]) {
      if (z == v) continue;
      if (placed[z]) {
        throw std::logic_error("export: node " + std::to_string(z) +
                               " appears in two clusters");
      }
      placed[z] = 1;
      block.push_back(z);
    }
    out.push_back(std::move(block));
  }
  for (NodeId u : store.present_nodes()) {
    if (u < static_cast<NodeId>(placed.size()) && placed[u]) continue;
    out.push_back({u});
  }
  return out;
}

void PivotState::clear() {
  p_.clear();
  known_.clear();
  is_pivot_.clear();
  ever_demoted_.clear();
  in_cluster_.clear();
  B_.clear();
  C_.clear();
  pivot_list_.clear();
}

}  // namespace ccdyn
