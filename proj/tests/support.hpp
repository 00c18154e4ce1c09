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
//
// Shared test utilities: independent oracles, random graph builders and
// plain statistical tests. Everything here is deliberately simple and
// separate from the library under test.

#ifndef CCDYN_TESTS_SUPPORT_H_
#define CCDYN_TESTS_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "ccdyn/graph_store.hpp"
#include "ccdyn/pivot_state.hpp"

namespace ccdyn::test {

using AdjList = std::vector<std::vector<NodeId>>;

inline AdjList gnp(int n, double p, Rng& rng) {
  AdjList adj(n);
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

// Sparse G(n,p) via geometric skips over the pair index space.
inline AdjList gnp_sparse(int n, double p, Rng& rng) {
  AdjList adj(n);
  if (p <= 0.0) return adj;
  std::geometric_distribution<std::int64_t> skip(p);
  std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t idx = skip(rng);
  while (idx < total) {
    // Decode pair index -> (u,v), u < v.
    double d = std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    auto v = static_cast<std::int64_t>(d);
    while (v * (v - 1) / 2 > idx) --v;
    while ((v + 1) * v / 2 <= idx) ++v;
    std::int64_t u = idx - v * (v - 1) / 2;
    adj[u].push_back(static_cast<NodeId>(v));
    adj[v].push_back(static_cast<NodeId>(u));
    idx += skip(rng) + 1;
  }
  return adj;
}

inline AdjList planted_partition(int clusters, int size, double p_in,
                                 double p_out, Rng& rng) {
  int n = clusters * size;
  AdjList adj(n);
  std::bernoulli_distribution in(p_in), out(p_out);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      bool same = u / size == v / size;
      if (same ? in(rng) : out(rng)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

// Decodes an edge-set bitmask into an adjacency list (pairs in (u,v), u<v,
// lexicographic order), for exhaustive small-graph enumeration.
inline AdjList graph_from_mask(int n, std::uint64_t mask) {
  AdjList adj(n);
  int bit = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

// Inserts nodes in `order` into both the store and a clusterer, wiring each
// node to its already-present neighbors. `ranks`, when given, preassigns.
template <typename Clusterer>
void insert_all(const AdjList& adj, const std::vector<NodeId>& order,
                AdjacencyStore& store, Clusterer& clusterer, Rng& rng,
                const std::vector<double>* ranks = nullptr) {
  for (NodeId u : order) {
    std::vector<NodeId> incident;
    for (NodeId w : adj[u]) {
      if (store.present(w)) incident.push_back(w);
    }
    store.insert_node(u, incident);
    if (ranks) {
      clusterer.insert(u, store, rng, (*ranks)[u]);
    } else {
      clusterer.insert(u, store, rng);
    }
  }
}

inline std::set<std::vector<NodeId>> canonical(const Partition& partition) {
  std::set<std::vector<NodeId>> out;
  for (const auto& block : partition) {
    std::vector<NodeId> b = block;
    std::sort(b.begin(), b.end());
    out.insert(std::move(b));
  }
  return out;
}

inline std::int64_t brute_nonedges(const AdjacencyStore& store,
                                   const std::vector<NodeId>& C) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < C.size(); ++i) {
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      if (!store.has_edge_raw(C[i], C[j])) ++count;
    }
  }
  return count;
}

// --- incomplete gamma, for chi-square p-values ---

inline double gamma_p_series(double a, double x) {
  double sum = 1.0 / a, term = sum, ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-14) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-14) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma Q(a, x).
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

// P-value of a chi-square statistic with df degrees of freedom.
inline double chi_square_p(double stat, double df) {
  return gamma_q(df / 2.0, stat / 2.0);
}

// Chi-square goodness-of-fit p-value from observed counts and expected
// (same length, expected > 0, df = bins - 1).
inline double chi_square_gof_p(const std::vector<double>& observed,
                               const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_gof: size mismatch");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double diff = observed[i] - expected[i];
    stat += diff * diff / expected[i];
  }
  return chi_square_p(stat, static_cast<double>(observed.size() - 1));
}

// Asymptotic Kolmogorov distribution tail.
inline double kolmogorov_q(double lambda) {
  if (lambda < 1e-10) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    double term = 2.0 * (j % 2 == 1 ? 1.0 : -1.0) *
                  std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::fabs(term) < 1e-12) break;
  }
  return std::min(1.0, std::max(0.0, sum));
}

// Two-sample Kolmogorov-Smirnov p-value (asymptotic).
inline double ks_two_sample_p(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    double fa = static_cast<double>(i) / static_cast<double>(a.size());
    double fb = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::fabs(fa - fb));
  }
  double na = static_cast<double>(a.size());
  double nb = static_cast<double>(b.size());
  double ne = std::sqrt(na * nb / (na + nb));
  return kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
}

}  // namespace ccdyn::test

#endif  // CCDYN_TESTS_SUPPORT_H_
