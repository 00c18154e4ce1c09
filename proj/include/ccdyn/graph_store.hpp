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

#ifndef CCDYN_GRAPH_STORE_H_
#define CCDYN_GRAPH_STORE_H_

#include <cstdint>
#include <random>
#include <vector>

namespace ccdyn {

using NodeId = int;
using Rng = std::mt19937_64;

// Counts of the three database query primitives. Monotone; reset only at
// experiment boundaries.
struct OpCounter {
  std::uint64_t degree_queries = 0;
  std::uint64_t neighbor_samples = 0;
  std::uint64_t edge_checks = 0;

  std::uint64_t total() const {
    return degree_queries + neighbor_samples + edge_checks;
  }
  void reset() { *this = OpCounter{}; }
};

// The evolving graph behind the database query model: a node-insertion
// stream where every edge appears the moment both endpoints exist, plus
// soft deletion. Queries go through degree() / sample_neighbor(s)() /
// has_edge(), which are the only operations the counters account for.
// Raw adjacency access (neighbors()) is for evaluation and export code
// that lives outside the query model.
class AdjacencyStore {
 public:
  enum class Status : std::uint8_t { kAbsent, kActive, kSoftDeleted };

  // Inserts node u together with its incident edges. Every endpoint in
  // `incident` must already be present (active or soft-deleted).
  // Duplicates and self-loops in `incident` are dropped.
  void insert_node(NodeId u, const std::vector<NodeId>& incident);

  // Marks u soft-deleted. Edges stay; all queries keep answering for u,
  // and future insertions may still attach edges to u.
  void soft_delete(NodeId u);

  // Removes all soft-deleted nodes and their incident edges. Returns the
  // number of nodes purged.
  int purge_soft_deleted();

  // --- counted database queries ---
  int degree(NodeId u);
  NodeId sample_neighbor(NodeId u, Rng& rng);
  std::vector<NodeId> sample_neighbors(NodeId u, int k, Rng& rng);
  bool has_edge(NodeId u, NodeId v);
  // Full neighborhood scan, charged as degree(u) neighbor retrievals.
  const std::vector<NodeId>& scan_neighbors(NodeId u);

  // --- uncounted accessors (evaluation / ingestion plumbing) ---
  bool present(NodeId u) const {
    return u >= 0 && u < static_cast<NodeId>(status_.size()) &&
           status_[u] != Status::kAbsent;
  }
  bool active(NodeId u) const {
    return present(u) && status_[u] == Status::kActive;
  }
  bool soft_deleted(NodeId u) const {
    return present(u) && status_[u] == Status::kSoftDeleted;
  }
  const std::vector<NodeId>& neighbors(NodeId u) const;
  bool has_edge_raw(NodeId u, NodeId v) const;
  int degree_raw(NodeId u) const;
  // Largest id ever assigned plus one; includes purged slots.
  NodeId id_bound() const { return static_cast<NodeId>(status_.size()); }
  int present_count() const { return present_count_; }
  int active_count() const { return active_count_; }
  std::vector<NodeId> present_nodes() const;
  std::vector<NodeId> active_nodes() const;
  std::int64_t edge_count() const { return edge_count_; }

  OpCounter& ops() { return ops_; }
  const OpCounter& ops() const { return ops_; }

 private:
  void require_present(NodeId u, const char* what) const;
  void add_directed(NodeId u, NodeId v);

  std::vector<std::vector<NodeId>> neighbors_;     // insertion order
  std::vector<std::vector<NodeId>> sorted_index_;  // sorted, for has_edge
  std::vector<Status> status_;
  std::int64_t edge_count_ = 0;
  int present_count_ = 0;
  int active_count_ = 0;
  OpCounter ops_;
};

}  // namespace ccdyn

#endif  // CCDYN_GRAPH_STORE_H_
