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

#ifndef CCDYN_REFERENCE_PIVOT_H_
#define CCDYN_REFERENCE_PIVOT_H_

#include <optional>

#include "ccdyn/graph_store.hpp"
#include "ccdyn/pivot_state.hpp"

namespace ccdyn {

// Dynamic 5-approximation pivot clustering: every insertion scans the full
// neighborhood of the new node, so it is the quality baseline, not the fast
// path.
//
// With maintain_argmin (the default) each insertion also lowers the pointer
// of any neighbor whose current target ranks worse than the new node, so the
// pointer array always equals the static argmin and the output is invariant
// under insertion order. Without it, only pivot insertions repoint
// neighbors; that older behavior is kept for pairwise-equivalence tests.
class ReferenceClusterer {
 public:
  explicit ReferenceClusterer(bool maintain_argmin = true)
      : maintain_argmin_(maintain_argmin), state_(/*auto_cluster=*/true) {}

  // Processes node u, which must already be in the store with its incident
  // edges. Draws a fresh rank unless one is supplied (recompute replay).
  void insert(NodeId u, AdjacencyStore& store, Rng& rng,
              std::optional<double> preassigned_rank = std::nullopt);

  Partition export_clustering(const AdjacencyStore& store) const {
    return state_.export_clustering(store);
  }

  const PivotState& state() const { return state_; }
  const RankAssignment& ranks() const { return ranks_; }
  RankAssignment& ranks() { return ranks_; }

  void reset() {
    state_.clear();
    ranks_.clear();
  }

 private:
  bool maintain_argmin_;
  PivotState state_;
  RankAssignment ranks_;
};

// Static oracle for the same clustering: p(u) = argmin rank over N[u]; u is
// clustered with p(u) iff p(p(u)) = p(u). Uses raw adjacency, no DB ops.
Partition static_pivot_oracle(const AdjacencyStore& store,
                              const RankAssignment& ranks);

}  // namespace ccdyn

#endif  // CCDYN_REFERENCE_PIVOT_H_
