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

#ifndef CCDYN_PIVOT_STATE_H_
#define CCDYN_PIVOT_STATE_H_

#include <vector>

#include "ccdyn/graph_store.hpp"

namespace ccdyn {

// A clustering materialized as disjoint blocks of node ids.
using Partition = std::vector<std::vector<NodeId>>;

// Per-node rank pi(u), drawn uniformly from [0,1) and fixed until the next
// recompute. Ties (probability ~0 with 64-bit draws) break by node id so
// runs are reproducible under a fixed seed.
class RankAssignment {
 public:
  double assign(NodeId u, Rng& rng);
  void preassign(NodeId u, double rank);  // used by recompute
  bool has_rank(NodeId u) const {
    return u >= 0 && u < static_cast<NodeId>(assigned_.size()) && assigned_[u];
  }
  double rank(NodeId u) const { return pi_[u]; }
  // pi-then-id lexicographic order.
  bool less(NodeId a, NodeId b) const {
    return pi_[a] != pi_[b] ? pi_[a] < pi_[b] : a < b;
  }
  void clear() {
    pi_.clear();
    assigned_.clear();
  }

 private:
  void store(NodeId u, double rank);
  std::vector<double> pi_;
  std::vector<char> assigned_;
};

// Pivot pointers p, pivot flags, and the reverse indices B_v (nodes whose
// pivot pointer is v) and C_v subseteq B_v (the part of B_v kept as v's
// cluster). With auto_cluster enabled, C mirrors B; otherwise callers manage
// C (break/update-cluster).
class PivotState {
 public:
  static constexpr NodeId kNoPivot = -1;

  explicit PivotState(bool auto_cluster = false)
      : auto_cluster_(auto_cluster) {}

  bool known(NodeId u) const {
    return u >= 0 && u < static_cast<NodeId>(p_.size()) && known_[u];
  }
  bool is_pivot(NodeId u) const { return known(u) && is_pivot_[u]; }
  NodeId pivot_of(NodeId u) const { return known(u) ? p_[u] : kNoPivot; }
  bool has_pointer(NodeId u) const { return pivot_of(u) != kNoPivot; }
  // A node is clustered iff its pointer targets a live pivot.
  bool clustered(NodeId u) const {
    NodeId v = pivot_of(u);
    return v != kNoPivot && is_pivot(v);
  }

  const std::vector<NodeId>& members(NodeId pivot) const { return B_[pivot]; }
  const std::vector<NodeId>& cluster(NodeId pivot) const { return C_[pivot]; }
  const std::vector<NodeId>& pivots() const { return pivot_list_; }

  // Registers a node with no pointer yet (a fresh singleton).
  void add_node(NodeId u);
  // Makes u a pivot with B_u = C_u = {u}.
  void make_pivot(NodeId u);
  // Points u at pivot v, moving it between B sets as needed.
  void set_pointer(NodeId u, NodeId v);
  // Records a pointer to a non-pivot node (reference-clustering semantics);
  // u stays a singleton.
  void set_dangling_pointer(NodeId u, NodeId v);
  // Drops v's pivot status, dissolving B_v / C_v. Members keep their stale
  // pointer and become singletons. A demoted node never becomes a pivot
  // again before the next recompute.
  void demote(NodeId v);

  // Cluster membership management for break/update-cluster. No-ops when
  // auto_cluster is on.
  void set_cluster(NodeId pivot, std::vector<NodeId> cluster);
  void add_to_cluster(NodeId pivot, NodeId u);

  // One pointer reassignment made by explore: `node` now points at the
  // exploring pivot; `previous` is its old pointer target (kNoPivot if it
  // had none).
  struct Capture {
    NodeId node;
    NodeId previous;
  };

  // Algorithm: for every neighbor w of pivot u whose current pivot ranks
  // worse than u, capture w (dissolving w's own cluster first if w was a
  // pivot). Appends every node whose pointer switched to u onto `captured`
  // when non-null.
  void explore(NodeId u, AdjacencyStore& store, const RankAssignment& ranks,
               std::vector<Capture>* captured = nullptr);

  // One block C_v + {v} per pivot v; every other known node is a singleton.
  Partition export_clustering(const AdjacencyStore& store) const;

  void clear();

 private:
  void remove_from_B(NodeId pivot, NodeId u);

  bool auto_cluster_;
  std::vector<NodeId> p_;
  std::vector<char> known_;
  std::vector<char> is_pivot_;
  std::vector<char> ever_demoted_;
  std::vector<char> in_cluster_;  // u in C_{p(u)}
  std::vector<std::vector<NodeId>> B_;
  std::vector<std::vector<NodeId>> C_;
  std::vector<NodeId> pivot_list_;
};

}  // namespace ccdyn

#endif  // CCDYN_PIVOT_STATE_H_
