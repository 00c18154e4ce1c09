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

#include "ccdyn/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ccdyn/evaluator.hpp"
#include "ccdyn/reference_pivot.hpp"

namespace ccdyn {

namespace {

// The trivial baseline: every node its own cluster, normalized cost 1.
struct SingletonClusterer {
  void insert(NodeId, AdjacencyStore&, Rng&,
              std::optional<double> = std::nullopt) {}
  void reset() {}
  Partition export_clustering(const AdjacencyStore& store) const {
    Partition out;
    for (NodeId u : store.present_nodes()) out.push_back({u});
    return out;
  }
};

template <typename Clusterer>
ExperimentResult drive(const StaticGraph& graph, const ExperimentConfig& cfg,
                       Clusterer clusterer) {
  if (cfg.measure_every < 1) {
    throw std::invalid_argument("measure_every must be >= 1");
  }
  ExperimentResult result;
  Rng rng(cfg.seed);
  const std::vector<UpdateEvent> events =
      generate_stream(graph.n(), cfg.insert_probability, rng);

  AdjacencyStore store;
  EpochState epoch;
  epoch.trigger_mode = cfg.trigger;
  const auto start = std::chrono::steady_clock::now();
  std::int64_t step = 0;
  const std::int64_t total = static_cast<std::int64_t>(events.size());

  auto measure = [&] {
    Partition partition = clusterer.export_clustering(store);
    EvalMode mode =
        cfg.true_graph_eval ? EvalMode::kTrueGraph : EvalMode::kAsSeen;
    ObjectiveReport report = normalized_objective(store, partition, mode);
    MetricsRecord rec;
    rec.step = step;
    rec.n = store.active_count();
    rec.raw_cost = report.raw_cost;
    rec.normalized = report.normalized;
    rec.ops = store.ops().total();
    rec.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    result.records.push_back(rec);
  };

  try {
    for (const UpdateEvent& e : events) {
      ++step;
      if (e.type == EventType::kInsert) {
        std::vector<NodeId> incident;
        for (NodeId w : graph.adj[e.node]) {
          if (store.present(w)) incident.push_back(w);
        }
        store.insert_node(e.node, incident);
        note_insert(epoch);
        clusterer.insert(e.node, store, rng);
      } else {
        handle_delete(epoch, store, e.node);
      }
      if (should_recompute(epoch, cfg.epsilon)) {
        recompute(clusterer, store, epoch, rng);
        ++result.recomputes;
      }
      if (step % cfg.measure_every == 0 || step == total) measure();
    }
  } catch (const std::exception& ex) {
    result.error = ex.what();
  }

  double sum = 0.0;
  std::int64_t defined = 0;
  for (const MetricsRecord& rec : result.records) {
    if (rec.normalized) {
      sum += *rec.normalized;
      ++defined;
    }
  }
  result.mean_normalized = defined > 0 ? sum / static_cast<double>(defined)
                                       : 0.0;
  result.total_ops = store.ops().total();
  return result;
}

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

ExperimentResult run_experiment(const StaticGraph& graph,
                                const ExperimentConfig& config) {
  switch (config.algo) {
    case Algo::kSparse:
      return drive(graph, config, SparsePivotClusterer(config.sparse));
    case Algo::kReference:
      return drive(graph, config, ReferenceClusterer());
    case Algo::kSingletons:
      return drive(graph, config, SingletonClusterer());
  }
  throw std::logic_error("unknown algorithm");
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  out << "step,n,raw_cost,normalized,ops,ms\n";
  for (const MetricsRecord& rec : result.records) {
    out << rec.step << ',' << rec.n << ',' << rec.raw_cost << ',';
    if (rec.normalized) out << format_double(*rec.normalized, "%.6f");
    out << ',' << rec.ops << ',' << format_double(rec.ms, "%.3f") << '\n';
  }
  out << "# mean_normalized=" << format_double(result.mean_normalized, "%.6f")
      << " total_ops=" << result.total_ops
      << " recomputes=" << result.recomputes << '\n';
  if (!result.error.empty()) out << "# error: " << result.error << '\n';
}

namespace {

bool wildcard_match(const std::string& text, const std::string& pattern) {
  std::size_t t = 0, p = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() &&
        (pattern[p] == '?' || pattern[p] == text[t])) {
      ++t;
      ++p;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

std::vector<std::string> expand_glob(const std::string& pattern) {
  namespace fs = std::filesystem;
  fs::path full(pattern);
  std::string name = full.filename().string();
  if (name.find('*') == std::string::npos &&
      name.find('?') == std::string::npos) {
    if (fs::exists(full)) return {pattern};
    return {};
  }
  fs::path dir = full.parent_path();
  if (dir.empty()) dir = ".";
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (wildcard_match(entry.path().filename().string(), name)) {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AggregateSummary summarize_files(const std::vector<std::string>& paths) {
  AggregateSummary agg;
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv: " + path);
    FileSummary fs;
    fs.path = path;
    double sum = 0.0;
    std::int64_t defined = 0;
    std::string line;
    bool saw_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      if (!saw_header) {
        if (line != "step,n,raw_cost,normalized,ops,ms") {
          throw std::runtime_error(path + ": unexpected csv header");
        }
        saw_header = true;
        continue;
      }
      std::istringstream fields(line);
      std::string field;
      std::vector<std::string> cols;
      while (std::getline(fields, field, ',')) cols.push_back(field);
      if (cols.size() < 5) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": short csv row");
      }
      ++fs.rows;
      if (!cols[3].empty()) {
        sum += std::stod(cols[3]);
        ++defined;
      }
      fs.total_ops = std::stoull(cols[4]);
    }
    fs.mean_normalized = defined > 0 ? sum / static_cast<double>(defined) : 0.0;
    agg.files.push_back(std::move(fs));
  }

  if (!agg.files.empty()) {
    double sum = 0.0, ops = 0.0;
    for (const FileSummary& f : agg.files) {
      sum += f.mean_normalized;
      ops += static_cast<double>(f.total_ops);
    }
    double k = static_cast<double>(agg.files.size());
    agg.mean_of_means = sum / k;
    agg.mean_total_ops = ops / k;
    double var = 0.0;
    for (const FileSummary& f : agg.files) {
      double d = f.mean_normalized - agg.mean_of_means;
      var += d * d;
    }
    agg.stddev_of_means = agg.files.size() > 1
                              ? std::sqrt(var / (k - 1.0))
                              : 0.0;
  }
  return agg;
}

void print_summary(const AggregateSummary& summary, std::ostream& out) {
  for (const FileSummary& f : summary.files) {
    out << f.path << " rows=" << f.rows
        << " mean_normalized=" << format_double(f.mean_normalized, "%.6f")
        << " total_ops=" << f.total_ops << '\n';
  }
  out << "files=" << summary.files.size()
      << " mean_normalized=" << format_double(summary.mean_of_means, "%.6f")
      << " stddev=" << format_double(summary.stddev_of_means, "%.6f")
      << " mean_total_ops=" << format_double(summary.mean_total_ops, "%.1f")
      << '\n';
}

}  // namespace ccdyn
