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

#include "ccdyn/sparse_pivot.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ccdyn/evaluator.hpp"

namespace ccdyn {

namespace {
double log_n(int n) { return std::log(static_cast<double>(std::max(n, 2))); }
}  // namespace

std::vector<double> threshold_grid(double eps, int n) {
  if (eps <= 0.0) {
    throw std::invalid_argument("threshold_grid: eps must be > 0");
  }
  double top = static_cast<double>(std::max(n, 2));
  std::vector<double> grid{1.0};
  double t = 1.0;
  while (t < top) {
    t *= 1.0 + eps;
    grid.push_back(t);
  }
  grid.push_back(t * (1.0 + eps));
  return grid;
}

SparsePivotClusterer::SparsePivotClusterer(SparsePivotParams params)
    : params_(params),
      state_(/*auto_cluster=*/params.break_mode == BreakMode::kKeepAll) {
  if (params_.eps <= 0.0 || params_.est_eps <= 0.0 || params_.L_coeff <= 0.0) {
    throw std::invalid_argument("sparse pivot: parameters must be positive");
  }
}

double SparsePivotClusterer::exploration_budget(int n) const {
  return std::max(1.0, std::ceil(params_.L_coeff * log_n(n)));
}

int SparsePivotClusterer::sample_count(int n) const {
  if (params_.sample_size) return std::max(1, *params_.sample_size);
  double eps = params_.eps;
  double beta = (4.0 + eps) / eps;
  double x = (1.0 / (beta + 1.0) - eps) / beta;
  double k;
  if (x <= 0.0 || x >= 1.0) {
    // The theory constant is vacuous here; fall back to a plain log factor.
    k = std::ceil(5.0 * log_n(n));
  } else {
    k = std::ceil(100.0 * std::log(1.0 / (1.0 - x)) * log_n(n));
  }
  return std::max(1, static_cast<int>(k));
}

void SparsePivotClusterer::insert(NodeId u, AdjacencyStore& store, Rng& rng,
                                  std::optional<double> preassigned_rank) {
  if (state_.known(u)) {
    throw std::invalid_argument("sparse insert: node already processed");
  }
  if (preassigned_rank) {
    if (!ranks_.has_rank(u)) ranks_.preassign(u, *preassigned_rank);
  } else {
    ranks_.assign(u, rng);
  }
  state_.add_node(u);

  int n = std::max(store.present_count(), 2);
  double L = exploration_budget(n);
  double pi_u = ranks_.rank(u);
  int d_u = store.degree(u);

  if (d_u == 0 || pi_u <= L / d_u) {
    // Low-rank branch: full neighborhood scan.
    NodeId v = u;
    for (NodeId w : store.scan_neighbors(u)) {
      if (state_.known(w) && ranks_.less(w, v)) v = w;
    }
    if (v == u) {
      state_.make_pivot(u);
      std::vector<PivotState::Capture> captured;
      state_.explore(u, store, ranks_, &captured);
      after_explore(u, captured, store, rng);
      run_break_cluster(u, store, rng);
    } else if (state_.is_pivot(v)) {
      state_.set_pointer(u, v);
      handle_join(v, u, store, rng);
      if (static_cast<double>(store.degree(v)) <= L / pi_u) {
        std::vector<PivotState::Capture> captured;
        state_.explore(v, store, ranks_, &captured);
        after_explore(v, captured, store, rng);
        if (!captured.empty()) {
          if (params_.break_mode == BreakMode::kHeuristic) {
            for (const PivotState::Capture& c : captured) {
              handle_join(v, c.node, store, rng);
            }
          } else if (params_.break_mode != BreakMode::kKeepAll) {
            if (params_.break_mode == BreakMode::kEstimate) {
              ++sketch_rebuilds_;
            }
            run_break_cluster(v, store, rng);
          }
        }
      }
    } else {
      // Lower-ranked neighbor that is not a pivot: u stays a singleton but
      // remembers who beat it.
      state_.set_dangling_pointer(u, v);
    }
    return;
  }

  // High-rank branch: a logarithmic sample of neighbors, each vouching for
  // its own pivot if that pivot is adjacent to u.
  int k = sample_count(n);
  NodeId best = PivotState::kNoPivot;
  std::map<NodeId, bool> adjacent_cache;
  for (NodeId s : store.sample_neighbors(u, k, rng)) {
    if (!state_.known(s)) continue;
    NodeId ps = state_.pivot_of(s);
    if (ps == PivotState::kNoPivot || !state_.is_pivot(ps)) continue;
    auto it = adjacent_cache.find(ps);
    if (it == adjacent_cache.end()) {
      it = adjacent_cache.emplace(ps, store.has_edge(ps, u)).first;
    }
    if (!it->second) continue;
    if (best == PivotState::kNoPivot || ranks_.less(ps, best)) best = ps;
  }
  if (best != PivotState::kNoPivot && ranks_.less(best, u)) {
    state_.set_pointer(u, best);
    handle_join(best, u, store, rng);
  }
  // Otherwise u is a singleton with no pivot pointer.
}

void SparsePivotClusterer::run_break_cluster(NodeId v, AdjacencyStore& store,
                                             Rng& rng) {
  switch (params_.break_mode) {
    case BreakMode::kEstimate:
      break_cluster_estimate(v, store, rng);
      break;
    case BreakMode::kExact:
      break_cluster_exact(v, store);
      break;
    case BreakMode::kHeuristic:
      heuristic_break_cluster(v, store, rng);
      break;
    case BreakMode::kKeepAll:
      break;
  }
}

void SparsePivotClusterer::handle_join(NodeId v, NodeId z,
                                       AdjacencyStore& store, Rng& rng) {
  switch (params_.break_mode) {
    case BreakMode::kEstimate:
      update_estimate(v, z, store, rng);
      break;
    case BreakMode::kExact:
      break_cluster_exact(v, store);
      break;
    case BreakMode::kHeuristic: {
      state_.add_to_cluster(v, z);
      BreakState& bs = break_states_[v];
      ++bs.additions_since_break;
      double limit =
          params_.eps * static_cast<double>(state_.members(v).size());
      if (static_cast<double>(bs.additions_since_break) >= limit) {
        heuristic_break_cluster(v, store, rng);
      }
      break;
    }
    case BreakMode::kKeepAll:
      break;
  }
}

void SparsePivotClusterer::after_explore(
    NodeId owner, const std::vector<PivotState::Capture>& captured,
    AdjacencyStore& store, Rng& rng) {
  for (auto it = break_states_.begin(); it != break_states_.end();) {
    if (!state_.is_pivot(it->first)) {
      it = break_states_.erase(it);
    } else {
      ++it;
    }
  }
  if (params_.break_mode == BreakMode::kKeepAll ||
      params_.break_mode == BreakMode::kHeuristic) {
    return;
  }
  // Pivots that lost a member have stale sketches; rebuild their clusters.
  std::set<NodeId> losers;
  for (const PivotState::Capture& c : captured) {
    if (c.previous != PivotState::kNoPivot && c.previous != owner &&
        state_.is_pivot(c.previous)) {
      losers.insert(c.previous);
    }
  }
  for (NodeId v : losers) {
    if (params_.break_mode == BreakMode::kEstimate) ++sketch_rebuilds_;
    run_break_cluster(v, store, rng);
  }
}

void SparsePivotClusterer::select_best_estimate(NodeId v, BreakState& bs) {
  const Group* best = &bs.groups.front();
  for (std::size_t i = 1; i < bs.groups.size(); ++i) {
    // Ties move to the higher threshold, mirroring the comparison rule.
    if (bs.groups[i].sketch.estimate() <= best->sketch.estimate()) {
      best = &bs.groups[i];
    }
  }
  state_.set_cluster(v, best->candidate);
}

void SparsePivotClusterer::break_cluster_estimate(NodeId v,
                                                  AdjacencyStore& store,
                                                  Rng& rng) {
  const std::vector<NodeId> B = state_.members(v);
  int n_nodes = std::max(store.present_count(), 2);
  int n_est = std::max(store.active_count(), 2);

  BreakState bs;
  bs.grid.push_back(0.0);  // stands for the full candidate C = B_v
  for (double t : threshold_grid(params_.eps, n_nodes)) bs.grid.push_back(t);

  std::vector<int> deg(B.size());
  for (std::size_t i = 0; i < B.size(); ++i) deg[i] = store.degree(B[i]);

  for (int t_idx = 0; t_idx < static_cast<int>(bs.grid.size()); ++t_idx) {
    std::vector<NodeId> candidate;
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (static_cast<double>(deg[i]) >= bs.grid[t_idx]) {
        candidate.push_back(B[i]);
      }
    }
    // Candidate sets are nested in t, so equal size means equal set.
    if (!bs.groups.empty() &&
        bs.groups.back().candidate.size() == candidate.size()) {
      bs.groups.back().last = t_idx;
      continue;
    }
    Group g;
    g.first = t_idx;
    g.last = t_idx;
    g.sketch = cost_estimate(B, candidate, store, params_.est_eps, n_est, rng);
    g.candidate = std::move(candidate);
    bs.groups.push_back(std::move(g));
  }
  select_best_estimate(v, bs);
  break_states_[v] = std::move(bs);
}

void SparsePivotClusterer::update_estimate(NodeId v, NodeId z,
                                           AdjacencyStore& store, Rng& rng) {
  auto it = break_states_.find(v);
  if (it == break_states_.end()) {
    ++sketch_rebuilds_;
    break_cluster_estimate(v, store, rng);
    return;
  }
  BreakState& bs = it->second;
  double d = static_cast<double>(store.degree(z));
  std::vector<Group> next;
  next.reserve(bs.groups.size() + 1);
  for (Group& g : bs.groups) {
    if (bs.grid[g.first] > d) {
      update_singleton_insert(g.sketch, z, store);
      next.push_back(std::move(g));
    } else if (bs.grid[g.last] <= d) {
      update_cluster_insert(g.sketch, z, store, rng);
      g.candidate.push_back(z);
      next.push_back(std::move(g));
    } else {
      // z's degree splits the group: the low thresholds take z into the
      // candidate, the high ones keep it as a boundary singleton.
      int k = g.first;
      while (k + 1 <= g.last && bs.grid[k + 1] <= d) ++k;
      Group high;
      high.first = k + 1;
      high.last = g.last;
      high.candidate = g.candidate;
      high.sketch = g.sketch;
      g.last = k;
      update_cluster_insert(g.sketch, z, store, rng);
      g.candidate.push_back(z);
      update_singleton_insert(high.sketch, z, store);
      next.push_back(std::move(g));
      next.push_back(std::move(high));
    }
  }
  bs.groups = std::move(next);
  select_best_estimate(v, bs);
}

void SparsePivotClusterer::break_cluster_exact(NodeId v,
                                               AdjacencyStore& store) {
  const std::vector<NodeId> B = state_.members(v);
  int n_nodes = std::max(store.present_count(), 2);
  std::vector<double> grid{0.0};
  for (double t : threshold_grid(params_.eps, n_nodes)) grid.push_back(t);

  std::vector<int> deg(B.size());
  for (std::size_t i = 0; i < B.size(); ++i) deg[i] = store.degree(B[i]);

  std::vector<NodeId> best;
  std::int64_t best_cost = 0;
  bool have_best = false;
  std::size_t last_size = B.size() + 1;
  for (double t : grid) {
    std::vector<NodeId> candidate;
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (static_cast<double>(deg[i]) >= t) candidate.push_back(B[i]);
    }
    if (have_best && candidate.size() == last_size) continue;
    last_size = candidate.size();
    std::int64_t cost = cost_given_cluster_doubled(store, B, candidate);
    // Ties move to the higher threshold, mirroring the comparison rule.
    if (!have_best || cost <= best_cost) {
      best_cost = cost;
      best = std::move(candidate);
      have_best = true;
    }
  }
  state_.set_cluster(v, best);
}

void SparsePivotClusterer::heuristic_break_cluster(NodeId v,
                                                   AdjacencyStore& store,
                                                   Rng& rng) {
  const std::vector<NodeId>& B = state_.members(v);
  int n = std::max(store.present_count(), 2);
  int k = std::max(
      1, static_cast<int>(std::ceil(params_.heuristic_coeff * log_n(n))));
  std::vector<NodeId> C;
  if (B.size() == 1) {
    C = B;
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, B.size() - 2);
    for (std::size_t i = 0; i < B.size(); ++i) {
      NodeId u = B[i];
      int adjacent = 0;
      for (int s = 0; s < k; ++s) {
        std::size_t j = pick(rng);
        if (j >= i) ++j;
        if (store.has_edge(u, B[j])) ++adjacent;
      }
      if (2 * adjacent >= k) C.push_back(u);
    }
  }
  state_.set_cluster(v, std::move(C));
  break_states_[v].additions_since_break = 0;
}

void SparsePivotClusterer::reset() {
  state_.clear();
  ranks_.clear();
  break_states_.clear();
  sketch_rebuilds_ = 0;
}

}  // namespace ccdyn
