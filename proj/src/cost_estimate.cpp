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

#include "ccdyn/cost_estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccdyn {

namespace {

double log_n(int n) { return std::log(static_cast<double>(std::max(n, 2))); }

double binom2(std::int64_t c) {
  return 0.5 * static_cast<double>(c) * static_cast<double>(c - 1);
}

// One uniformly random unordered pair of distinct members; counts one edge
// check against the store.
InClusterSketch::PairSample draw_pair(const std::vector<NodeId>& members,
                                      AdjacencyStore& store, Rng& rng) {
  std::size_t c = members.size();
  std::uniform_int_distribution<std::size_t> first(0, c - 1);
  std::uniform_int_distribution<std::size_t> second(0, c - 2);
  std::size_t i = first(rng);
  std::size_t j = second(rng);
  if (j >= i) ++j;
  NodeId a = members[i], b = members[j];
  return {a, b, !store.has_edge(a, b)};
}

}  // namespace

std::int64_t pair_budget(std::int64_t cluster_size, double eps, int n) {
  if (eps <= 0.0) throw std::invalid_argument("pair_budget: eps must be > 0");
  if (cluster_size < 2) return 0;
  double tau = 5.0 * static_cast<double>(cluster_size) * log_n(n) /
               (eps * eps * eps);
  return static_cast<std::int64_t>(std::ceil(tau));
}

std::int64_t edge_sample_budget(double eps, int n) {
  if (eps <= 0.0) {
    throw std::invalid_argument("edge_sample_budget: eps must be > 0");
  }
  return static_cast<std::int64_t>(
      std::ceil(10.0 * log_n(n) / (eps * eps * eps)));
}

double InClusterSketch::estimate() const {
  if (size() < 2 || pairs.empty()) return 0.0;
  return static_cast<double>(nonedge_count) * binom2(size()) /
         static_cast<double>(pairs.size());
}

InClusterSketch build_in_cluster_sketch(const std::vector<NodeId>& cluster,
                                        AdjacencyStore& store, double eps,
                                        int n, Rng& rng) {
  InClusterSketch sketch;
  sketch.members = cluster;
  sketch.eps = eps;
  sketch.n_at_build = n;
  std::int64_t tau = pair_budget(sketch.size(), eps, n);
  sketch.pairs.reserve(static_cast<std::size_t>(tau));
  for (std::int64_t i = 0; i < tau; ++i) {
    InClusterSketch::PairSample s = draw_pair(sketch.members, store, rng);
    sketch.nonedge_count += s.nonedge;
    sketch.pairs.push_back(s);
  }
  return sketch;
}

double in_cluster_cost_estimate(const std::vector<NodeId>& cluster,
                                AdjacencyStore& store, double eps, int n,
                                Rng& rng) {
  return build_in_cluster_sketch(cluster, store, eps, n, rng).estimate();
}

std::vector<std::size_t> resample_indices(std::size_t length, double q,
                                          Rng& rng) {
  std::vector<std::size_t> out;
  if (length == 0 || q >= 1.0) return out;
  if (q <= 0.0) {
    out.resize(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = i;
    return out;
  }
  // Gaps between selected slots are geometric with success prob 1-q.
  std::geometric_distribution<std::size_t> skip(1.0 - q);
  std::size_t pos = skip(rng);
  while (pos < length) {
    out.push_back(pos);
    pos += skip(rng) + 1;
  }
  return out;
}

double ClusterCostSketch::tcost() const {
  return degree_sum - 2.0 * binom2(cluster_size()) +
         3.0 * in_cluster.estimate() + boundary_sum;
}

double ClusterCostSketch::estimate() const {
  double e = correction_eps(eps);
  return (tcost() + 9.0 * e * static_cast<double>(cluster_size())) /
         (1.0 - 37.0 * e);
}

ClusterCostSketch cost_estimate(const std::vector<NodeId>& B,
                                const std::vector<NodeId>& C,
                                AdjacencyStore& store, double eps, int n,
                                Rng& rng) {
  ClusterCostSketch sketch;
  sketch.eps = eps;
  sketch.n_at_build = n;
  sketch.b_members.insert(B.begin(), B.end());
  for (NodeId w : C) {
    if (!sketch.b_members.count(w)) {
      throw std::invalid_argument("cost_estimate: C not within B");
    }
  }
  sketch.in_cluster = build_in_cluster_sketch(C, store, eps, n, rng);

  std::set<NodeId> in_C(C.begin(), C.end());
  for (NodeId w : C) sketch.degree_sum += store.degree(w);

  std::int64_t eta = edge_sample_budget(eps, n);
  for (NodeId w : B) {
    if (in_C.count(w)) continue;
    int dw = store.degree(w);
    if (dw == 0) continue;
    std::int64_t hits_bc = 0;   // neighbor in B - C
    std::int64_t hits_out = 0;  // neighbor outside B
    for (std::int64_t i = 0; i < eta; ++i) {
      NodeId y = store.sample_neighbor(w, rng);
      if (!sketch.b_members.count(y)) {
        ++hits_out;
      } else if (!in_C.count(y)) {
        ++hits_bc;
      }
    }
    double scale = static_cast<double>(dw) / static_cast<double>(eta);
    sketch.boundary_sum +=
        scale * (0.5 * static_cast<double>(hits_bc) +
                 static_cast<double>(hits_out));
  }
  return sketch;
}

void update_singleton_insert(ClusterCostSketch& sketch, NodeId z,
                             AdjacencyStore& store) {
  if (sketch.b_members.count(z)) {
    throw std::invalid_argument("singleton update: node already counted");
  }
  sketch.b_members.insert(z);
  sketch.boundary_sum += store.degree(z);
}

std::int64_t update_cluster_insert(ClusterCostSketch& sketch, NodeId z,
                                   AdjacencyStore& store, Rng& rng) {
  if (sketch.b_members.count(z)) {
    throw std::invalid_argument("cluster update: node already counted");
  }
  std::vector<NodeId>& members = sketch.in_cluster.members;
  std::int64_t c = sketch.cluster_size();
  sketch.degree_sum += store.degree(z);

  // Each stored pair survives with probability binom(c,2)/binom(c+1,2);
  // a resampled slot becomes {z, uniform old member}.
  std::int64_t resampled = 0;
  if (c >= 2) {
    double q = binom2(c) / binom2(c + 1);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (std::size_t idx :
         resample_indices(sketch.in_cluster.pairs.size(), q, rng)) {
      InClusterSketch::PairSample& slot = sketch.in_cluster.pairs[idx];
      sketch.in_cluster.nonedge_count -= slot.nonedge;
      NodeId partner = members[pick(rng)];
      slot = {z, partner, !store.has_edge(z, partner)};
      sketch.in_cluster.nonedge_count += slot.nonedge;
      ++resampled;
    }
  }

  std::int64_t extra = pair_budget(c + 1, sketch.eps, sketch.n_at_build) -
                       pair_budget(c, sketch.eps, sketch.n_at_build);
  members.push_back(z);
  sketch.b_members.insert(z);
  for (std::int64_t i = 0; i < extra; ++i) {
    InClusterSketch::PairSample s = draw_pair(members, store, rng);
    sketch.in_cluster.nonedge_count += s.nonedge;
    sketch.in_cluster.pairs.push_back(s);
  }
  return resampled;
}

const std::vector<NodeId>& cost_compare(const std::vector<NodeId>& B,
                                        const std::vector<NodeId>& C,
                                        const std::vector<NodeId>& C2,
                                        AdjacencyStore& store, double eps,
                                        int n, Rng& rng) {
  double x = cost_estimate(B, C, store, eps, n, rng).estimate();
  double x2 = cost_estimate(B, C2, store, eps, n, rng).estimate();
  return x < x2 ? C : C2;
}

}  // namespace ccdyn
