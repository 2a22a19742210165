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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aditum {

using NodeId = std::uint32_t;

/// How edge probabilities b(u,v) are obtained at load time.
enum class WeightMode {
  explicit_weights,  ///< third column is b(u,v) in (0,1]
  uniform_indegree,  ///< b(u,v) = 1 / in-degree(v)
  interaction,       ///< third column is an interaction count P_uv > 0
};

/// One parsed line of an edge list.
struct EdgeRecord {
  std::string src;
  std::string dst;
  std::optional<double> weight;
};

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double prob = 1.0;
};

/// Directed diffusion graph with live-edge probabilities b and target
/// scores t.  Both adjacency directions are stored in CSR form.  Immutable
/// once built except for the target scores, which are usually loaded from a
/// separate file.
class DiffusionGraph {
 public:
  DiffusionGraph() = default;

  /// Builds from dense ids.  Rejects self-loops, duplicates, out-of-range
  /// endpoints and probabilities outside (0,1].  Labels default to the
  /// decimal id.
  static DiffusionGraph from_edges(std::size_t node_count,
                                   std::vector<Edge> edges,
                                   std::vector<std::string> labels = {});

  /// Builds from string-labelled records; dense ids follow first appearance.
  static DiffusionGraph from_records(std::span<const EdgeRecord> records,
                                     WeightMode mode);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return out_targets_.size(); }

  std::span<const NodeId> out_neighbors(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const double> out_probs(NodeId v) const {
    return {out_probs_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const NodeId> in_neighbors(NodeId v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::span<const double> in_probs(NodeId v) const {
    return {in_probs_.data() + in_offsets_[v],
            in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::size_t out_degree(NodeId v) const {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(NodeId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  /// Σ_u b(u,v).
  double in_weight_sum(NodeId v) const;
  std::optional<double> edge_probability(NodeId u, NodeId v) const;
  /// Every edge in (src, dst) order.
  std::vector<Edge> edges() const;

  double target_score(NodeId v) const { return scores_[v]; }
  std::span<const double> target_scores() const { return scores_; }
  /// Replaces t; every score must lie in (0,1].
  void set_target_scores(std::vector<double> scores);

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::optional<NodeId> find(std::string_view label) const;

 private:
  std::size_t node_count_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<double> out_probs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeId> in_sources_;
  std::vector<double> in_probs_;
  std::vector<double> scores_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

/// Interaction counts keyed by (src, dst).
using EdgeCounts = std::unordered_map<std::uint64_t, double>;
constexpr std::uint64_t edge_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

/// b(u,v) = 1/n_v, n_v the in-degree of v.
DiffusionGraph derive_weights_uniform(const DiffusionGraph& graph);

/// b(u,v) = P_uv / Σ_w P_wv.  Every edge needs a positive count.
DiffusionGraph derive_weights_interaction(const DiffusionGraph& graph,
                                          const EdgeCounts& counts);

/// Target scores from in-degree, min-max scaled into (0,1]:
/// t(v) = (deg(v) - min + 1) / (max - min + 1).
std::vector<double> indegree_target_scores(const DiffusionGraph& graph);

/// Random directed graph on `node_count` nodes for experiments.  Node u
/// draws an out-degree uniformly from 1..2·avg_out_degree-1 and picks each
/// distinct target either uniformly or, with probability 1/2, as the head
/// of an earlier edge, which skews in-degrees.  Weights are 1/in-degree and
/// every t is 1.
DiffusionGraph synth_graph(std::size_t node_count, std::size_t avg_out_degree,
                           std::uint64_t seed);

// --- text formats -------------------------------------------------------

/// Parses `src dst [weight]` lines; `#` lines and blank lines are skipped.
std::vector<EdgeRecord> read_edge_records(std::istream& in);
DiffusionGraph load_graph(std::istream& in, WeightMode mode);
DiffusionGraph load_graph_file(const std::string& path, WeightMode mode);

/// Reads `node t` lines.  Every node must be listed exactly once.
std::vector<double> read_node_weights(std::istream& in,
                                      const DiffusionGraph& graph);
void load_node_weights_file(const std::string& path, DiffusionGraph& graph);

/// Writes `src dst b` lines with round-trip precision.
void write_edge_list(std::ostream& out, const DiffusionGraph& graph);
void write_node_weights(std::ostream& out, const DiffusionGraph& graph);

// --- target set ---------------------------------------------------------

struct TargetSpec {
  enum class Mode { threshold, top_percent };
  Mode mode = Mode::top_percent;
  /// τ_TS in [0,1] for threshold mode, q in (0,100] for top-percent mode.
  double value = 100.0;

  static TargetSpec threshold(double tau) { return {Mode::threshold, tau}; }
  static TargetSpec top_percent(double q) { return {Mode::top_percent, q}; }
};

struct TargetSet {
  std::vector<NodeId> members;  ///< ascending ids
  std::vector<char> mask;       ///< node_count flags
  double total_score = 0.0;     ///< T_TS

  bool contains(NodeId v) const { return mask[v] != 0; }
  std::size_t size() const { return members.size(); }
};

/// Threshold mode keeps {v | t(v) >= τ}.  Top-percent mode keeps the
/// ⌈q·|V|/100⌉ highest-t nodes, ties broken by ascending id.
TargetSet select_targets(const DiffusionGraph& graph, TargetSpec spec);

}  // namespace aditum
