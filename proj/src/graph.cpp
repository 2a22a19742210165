// Copyright 2026 The ADITUM Authors
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

#include "aditum/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "aditum/error.hpp"
#include "aditum/rng.hpp"
#include "text_util.hpp"

namespace aditum {

namespace {

bool valid_probability(double p) { return p > 0.0 && p <= 1.0; }

}  // namespace

DiffusionGraph DiffusionGraph::from_edges(std::size_t node_count,
                                          std::vector<Edge> edges,
                                          std::vector<std::string> labels) {
  if (node_count > std::numeric_limits<NodeId>::max()) {
    throw FormatError("graph has too many nodes");
  }
  DiffusionGraph g;
  g.node_count_ = node_count;
  for (const Edge& e : edges) {
    if (e.src >= node_count || e.dst >= node_count) {
      throw FormatError("edge endpoint out of range");
    }
    if (e.src == e.dst) {
      throw FormatError("self-loop on node " + std::to_string(e.src));
    }
    if (!valid_probability(e.prob)) {
      throw FormatError("edge probability outside (0,1]");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].src == edges[i - 1].src && edges[i].dst == edges[i - 1].dst) {
      throw FormatError("duplicate edge " + std::to_string(edges[i].src) +
                        " -> " + std::to_string(edges[i].dst));
    }
  }

  g.out_offsets_.assign(node_count + 1, 0);
  g.in_offsets_.assign(node_count + 1, 0);
  for (const Edge& e : edges) {
    ++g.out_offsets_[e.src + 1];
    ++g.in_offsets_[e.dst + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(),
                   g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(),
                   g.in_offsets_.begin());

  g.out_targets_.resize(edges.size());
  g.out_probs_.resize(edges.size());
  g.in_sources_.resize(edges.size());
  g.in_probs_.resize(edges.size());
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(),
                                   g.in_offsets_.end() - 1);
  // Edges are sorted by (src, dst), so each in-list ends up sorted by src.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    g.out_targets_[i] = e.dst;
    g.out_probs_[i] = e.prob;
    const std::size_t slot = in_fill[e.dst]++;
    g.in_sources_[slot] = e.src;
    g.in_probs_[slot] = e.prob;
  }

  g.scores_.assign(node_count, 1.0);
  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) {
      labels.push_back(std::to_string(v));
    }
  } else if (labels.size() != node_count) {
    throw UsageError("label count does not match node count");
  }
  g.labels_ = std::move(labels);
  g.ids_.reserve(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    if (!g.ids_.emplace(g.labels_[v], static_cast<NodeId>(v)).second) {
      throw FormatError("duplicate node label '" + g.labels_[v] + "'");
    }
  }
  return g;
}

DiffusionGraph DiffusionGraph::from_records(std::span<const EdgeRecord> records,
                                            WeightMode mode) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<NodeId>(labels.size()));
    if (fresh) labels.push_back(name);
    return it->second;
  };

  std::vector<Edge> edges;
  edges.reserve(records.size());
  EdgeCounts counts;
  for (const EdgeRecord& r : records) {
    if (r.src == r.dst) throw FormatError("self-loop on node '" + r.src + "'");
    const NodeId u = intern(r.src);
    const NodeId v = intern(r.dst);
    double prob = 1.0;
    switch (mode) {
      case WeightMode::explicit_weights:
        if (!r.weight) {
          throw FormatError("edge " + r.src + " -> " + r.dst +
                            " has no weight (explicit mode)");
        }
        if (!valid_probability(*r.weight)) {
          throw FormatError("edge " + r.src + " -> " + r.dst +
                            " has weight outside (0,1]");
        }
        prob = *r.weight;
        break;
      case WeightMode::interaction:
        if (!r.weight) {
          throw FormatError("edge " + r.src + " -> " + r.dst +
                            " has no interaction count");
        }
        if (!(*r.weight > 0.0) || !std::isfinite(*r.weight)) {
          throw FormatError("edge " + r.src + " -> " + r.dst +
                            " has non-positive interaction count");
        }
        counts[edge_key(u, v)] = *r.weight;
        break;
      case WeightMode::uniform_indegree:
        break;
    }
    edges.push_back({u, v, prob});
  }

  const std::size_t n = labels.size();
  DiffusionGraph g = from_edges(n, std::move(edges), std::move(labels));
  switch (mode) {
    case WeightMode::explicit_weights:
      return g;
    case WeightMode::uniform_indegree:
      return derive_weights_uniform(g);
    case WeightMode::interaction:
      return derive_weights_interaction(g, counts);
  }
  return g;
}

double DiffusionGraph::in_weight_sum(NodeId v) const {
  double s = 0.0;
  for (double p : in_probs(v)) s += p;
  return s;
}

std::optional<double> DiffusionGraph::edge_probability(NodeId u,
                                                       NodeId v) const {
  const auto nbrs = out_neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return out_probs(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<Edge> DiffusionGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count_; ++u) {
    const auto nbrs = out_neighbors(u);
    const auto probs = out_probs(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      out.push_back({u, nbrs[i], probs[i]});
    }
  }
  return out;
}

void DiffusionGraph::set_target_scores(std::vector<double> scores) {
  if (scores.size() != node_count_) {
    throw UsageError("target score vector has wrong length");
  }
  for (std::size_t v = 0; v < scores.size(); ++v) {
    if (!valid_probability(scores[v])) {
      throw FormatError("target score of node '" + labels_[v] +
                        "' outside (0,1]");
    }
  }
  scores_ = std::move(scores);
}

std::optional<NodeId> DiffusionGraph::find(std::string_view label) const {
  const auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

DiffusionGraph derive_weights_uniform(const DiffusionGraph& graph) {
  std::vector<Edge> edges = graph.edges();
  for (Edge& e : edges) {
    e.prob = 1.0 / static_cast<double>(graph.in_degree(e.dst));
  }
  std::vector<std::string> labels;
  labels.reserve(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    labels.push_back(graph.label(v));
  }
  DiffusionGraph g =
      DiffusionGraph::from_edges(graph.node_count(), std::move(edges), labels);
  g.set_target_scores({graph.target_scores().begin(),
                       graph.target_scores().end()});
  return g;
}

DiffusionGraph derive_weights_interaction(const DiffusionGraph& graph,
                                          const EdgeCounts& counts) {
  std::vector<Edge> edges = graph.edges();
  std::vector<double> totals(graph.node_count(), 0.0);
  for (Edge& e : edges) {
    const auto it = counts.find(edge_key(e.src, e.dst));
    if (it == counts.end()) {
      throw FormatError("missing interaction count for edge " +
                        graph.label(e.src) + " -> " + graph.label(e.dst));
    }
    if (!(it->second > 0.0)) {
      throw FormatError("non-positive interaction count for edge " +
                        graph.label(e.src) + " -> " + graph.label(e.dst));
    }
    e.prob = it->second;
    totals[e.dst] += it->second;
  }
  for (Edge& e : edges) e.prob /= totals[e.dst];
  std::vector<std::string> labels;
  labels.reserve(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    labels.push_back(graph.label(v));
  }
  DiffusionGraph g =
      DiffusionGraph::from_edges(graph.node_count(), std::move(edges), labels);
  g.set_target_scores({graph.target_scores().begin(),
                       graph.target_scores().end()});
  return g;
}

std::vector<double> indegree_target_scores(const DiffusionGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<double> scores(n, 1.0);
  if (n == 0) return scores;
  std::size_t lo = graph.in_degree(0);
  std::size_t hi = lo;
  for (NodeId v = 1; v < n; ++v) {
    lo = std::min(lo, graph.in_degree(v));
    hi = std::max(hi, graph.in_degree(v));
  }
  const double span = static_cast<double>(hi - lo + 1);
  for (NodeId v = 0; v < n; ++v) {
    scores[v] = static_cast<double>(graph.in_degree(v) - lo + 1) / span;
  }
  return scores;
}

DiffusionGraph synth_graph(std::size_t node_count, std::size_t avg_out_degree,
                           std::uint64_t seed) {
  if (node_count < 2) throw UsageError("synthetic graph needs >= 2 nodes");
  if (avg_out_degree == 0) throw UsageError("average out-degree must be >= 1");
  const std::size_t max_degree =
      std::min(2 * avg_out_degree - 1, node_count - 1);
  std::vector<Edge> edges;
  std::vector<NodeId> heads;
  std::vector<NodeId> picked;
  for (NodeId u = 0; u < node_count; ++u) {
    StreamRng rng(seed, StreamPurpose::graph_synthesis, u);
    const std::size_t degree = 1 + rng.below(max_degree);
    picked.clear();
    while (picked.size() < degree) {
      NodeId v = 0;
      if (!heads.empty() && rng.bernoulli(0.5)) {
        v = heads[rng.below(heads.size())];
      } else {
        v = static_cast<NodeId>(rng.below(node_count));
      }
      if (v == u || std::find(picked.begin(), picked.end(), v) != picked.end()) {
        continue;
      }
      picked.push_back(v);
    }
    for (NodeId v : picked) {
      edges.push_back({u, v, 1.0});
      heads.push_back(v);
    }
  }
  return derive_weights_uniform(
      DiffusionGraph::from_edges(node_count, std::move(edges)));
}

std::vector<EdgeRecord> read_edge_records(std::istream& in) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_whitespace(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": expected 'src dst [weight]'");
    }
    EdgeRecord r{std::string(fields[0]), std::string(fields[1]), std::nullopt};
    if (fields.size() == 3) {
      const auto w = detail::parse_double(fields[2]);
      if (!w) {
        throw FormatError("edge list line " + std::to_string(line_no) +
                          ": bad weight '" + std::string(fields[2]) + "'");
      }
      r.weight = *w;
    }
    records.push_back(std::move(r));
  }
  return records;
}

DiffusionGraph load_graph(std::istream& in, WeightMode mode) {
  const auto records = read_edge_records(in);
  return DiffusionGraph::from_records(records, mode);
}

DiffusionGraph load_graph_file(const std::string& path, WeightMode mode) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return load_graph(in, mode);
}

std::vector<double> read_node_weights(std::istream& in,
                                      const DiffusionGraph& graph) {
  std::vector<double> scores(graph.node_count(), 0.0);
  std::vector<char> seen(graph.node_count(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_whitespace(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    const std::string where = "node weight line " + std::to_string(line_no);
    if (fields.size() != 2) throw FormatError(where + ": expected 'node t'");
    const auto id = graph.find(fields[0]);
    if (!id) {
      throw FormatError(where + ": unknown node '" + std::string(fields[0]) +
                        "'");
    }
    const auto t = detail::parse_double(fields[1]);
    if (!t || !valid_probability(*t)) {
      throw FormatError(where + ": score must lie in (0,1]");
    }
    if (seen[*id]) throw FormatError(where + ": node listed twice");
    seen[*id] = 1;
    scores[*id] = *t;
  }
  const auto missing = std::count(seen.begin(), seen.end(), 0);
  if (missing != 0) {
    throw FormatError("node weight file misses " + std::to_string(missing) +
                      " node(s)");
  }
  return scores;
}

void load_node_weights_file(const std::string& path, DiffusionGraph& graph) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open node weight file '" + path + "'");
  graph.set_target_scores(read_node_weights(in, graph));
}

void write_edge_list(std::ostream& out, const DiffusionGraph& graph) {
  for (const Edge& e : graph.edges()) {
    out << graph.label(e.src) << ' ' << graph.label(e.dst) << ' '
        << detail::format_double(e.prob) << '\n';
  }
}

void write_node_weights(std::ostream& out, const DiffusionGraph& graph) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    out << graph.label(v) << ' ' << detail::format_double(graph.target_score(v))
        << '\n';
  }
}

TargetSet select_targets(const DiffusionGraph& graph, TargetSpec spec) {
  const std::size_t n = graph.node_count();
  TargetSet ts;
  ts.mask.assign(n, 0);
  if (spec.mode == TargetSpec::Mode::threshold) {
    if (!(spec.value >= 0.0 && spec.value <= 1.0)) {
      throw UsageError("target threshold must lie in [0,1]");
    }
    for (NodeId v = 0; v < n; ++v) {
      if (graph.target_score(v) >= spec.value) ts.mask[v] = 1;
    }
  } else {
    if (!(spec.value > 0.0 && spec.value <= 100.0)) {
      throw UsageError("target percentage must lie in (0,100]");
    }
    const auto want = static_cast<std::size_t>(
        std::ceil(spec.value * static_cast<double>(n) / 100.0 - 1e-9));
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return graph.target_score(a) > graph.target_score(b);
    });
    for (std::size_t i = 0; i < std::min(want, n); ++i) ts.mask[order[i]] = 1;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (ts.mask[v]) {
      ts.members.push_back(v);
      ts.total_score += graph.target_score(v);
    }
  }
  if (ts.members.empty()) {
    throw ConfigError("target set is empty; capital would be identically 0");
  }
  return ts;
}

}  // namespace aditum
