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

#include "ccdyn/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ccdyn {

std::int64_t StaticGraph::edge_count() const {
  std::int64_t endpoints = 0;
  for (const auto& list : adj) endpoints += static_cast<std::int64_t>(list.size());
  return endpoints / 2;
}

double StaticGraph::density() const {
  if (adj.empty()) return 0.0;
  return static_cast<double>(edge_count()) / static_cast<double>(n());
}

StaticGraph load_snap_edgelist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);

  StaticGraph graph;
  std::unordered_map<std::string, NodeId> id_of;
  std::set<std::pair<NodeId, NodeId>> seen;
  auto intern = [&](const std::string& label) {
    auto it = id_of.find(label);
    if (it != id_of.end()) return it->second;
    NodeId id = static_cast<NodeId>(graph.adj.size());
    id_of.emplace(label, id);
    graph.adj.emplace_back();
    graph.labels.push_back(label);
    return id;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;  // blank line
    if (a[0] == '#') continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected two endpoints per line");
    }
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) continue;
    graph.adj[u].push_back(v);
    graph.adj[v].push_back(u);
  }
  return graph;
}

std::vector<std::vector<double>> load_point_rows(const std::string& path,
                                                 int skip_columns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point file: " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    }
    std::istringstream fields(line);
    std::string tok;
    std::vector<double> row;
    int col = 0;
    bool bad = false;
    while (fields >> tok) {
      if (col++ < skip_columns) continue;
      try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        bad = true;
        break;
      }
    }
    if (bad) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": non-numeric field '" + tok + "'");
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": dimension mismatch");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double sq = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double d = a[k] - b[k];
    sq += d * d;
  }
  return std::sqrt(sq);
}

void check_dimensions(const std::vector<std::vector<double>>& points) {
  for (const auto& p : points) {
    if (p.size() != points.front().size()) {
      throw std::invalid_argument("points have mixed dimensions");
    }
  }
}

}  // namespace

double mean_pairwise_distance(const std::vector<std::vector<double>>& points,
                              bool sampled, std::int64_t sample_pairs,
                              std::uint64_t seed) {
  std::int64_t m = static_cast<std::int64_t>(points.size());
  if (m < 2) throw std::invalid_argument("need at least two points");
  check_dimensions(points);

  if (sampled) {
    Rng rng(seed);
    std::uniform_int_distribution<std::int64_t> first(0, m - 1);
    std::uniform_int_distribution<std::int64_t> second(0, m - 2);
    double total = 0.0;
    for (std::int64_t s = 0; s < sample_pairs; ++s) {
      std::int64_t i = first(rng);
      std::int64_t j = second(rng);
      if (j >= i) ++j;
      total += euclidean(points[i], points[j]);
    }
    return total / static_cast<double>(sample_pairs);
  }

  double total = 0.0;
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = i + 1; j < m; ++j) {
      total += euclidean(points[i], points[j]);
    }
  }
  return total / (0.5 * static_cast<double>(m) * static_cast<double>(m - 1));
}

StaticGraph build_drift_graph(const DriftConfig& config) {
  if (config.divisor <= 0.0) {
    throw std::invalid_argument("drift divisor must be positive");
  }
  check_dimensions(config.points);
  double threshold =
      mean_pairwise_distance(config.points, config.sampled_mean,
                             config.mean_sample_pairs, config.mean_seed) /
      config.divisor;

  StaticGraph graph;
  std::size_t m = config.points.size();
  graph.adj.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (euclidean(config.points[i], config.points[j]) < threshold) {
        graph.adj[i].push_back(static_cast<NodeId>(j));
        graph.adj[j].push_back(static_cast<NodeId>(i));
      }
    }
  }
  return graph;
}

}  // namespace ccdyn
