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
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "aditum/graph.hpp"
#include "aditum/rng.hpp"

namespace aditum {

enum class DiffusionModel { ic, lt };

DiffusionModel parse_model(std::string_view name);
std::string_view model_name(DiffusionModel model);

/// Live in-edge sampler of a triggering model: appends to `out` the
/// in-neighbors of v whose edge into v is live in this instance.
class TriggerDistribution {
 public:
  virtual ~TriggerDistribution() = default;
  virtual void live_in_edges(const DiffusionGraph& graph, NodeId v,
                             StreamRng& rng, std::vector<NodeId>& out) const = 0;
};

/// Each in-edge is live independently with probability b(u,v).
class IndependentCascade final : public TriggerDistribution {
 public:
  void live_in_edges(const DiffusionGraph& graph, NodeId v, StreamRng& rng,
                     std::vector<NodeId>& out) const override;
};

/// At most one live in-edge per node; u is chosen with probability b(u,v).
class LinearThreshold final : public TriggerDistribution {
 public:
  /// ConfigError if some node's in-weights sum above 1 + 1e-9.
  explicit LinearThreshold(const DiffusionGraph& graph);
  void live_in_edges(const DiffusionGraph& graph, NodeId v, StreamRng& rng,
                     std::vector<NodeId>& out) const override;
};

std::unique_ptr<TriggerDistribution> make_trigger(const DiffusionGraph& graph,
                                                  DiffusionModel model);

/// Draws target v with probability t(v) / T_TS.
class RootSampler {
 public:
  RootSampler(const DiffusionGraph& graph, const TargetSet& targets);
  NodeId operator()(StreamRng& rng) const;

 private:
  std::vector<NodeId> members_;
  std::vector<double> cumulative_;
};

/// Reverse breadth-first traversal from `root` over live in-edges.  `stamp`
/// and `epoch` implement an O(1)-reset visited set across calls; `stamp`
/// must hold node_count entries.
void reverse_reachable(const DiffusionGraph& graph,
                       const TriggerDistribution& trigger, NodeId root,
                       StreamRng& rng, std::vector<std::uint32_t>& stamp,
                       std::uint32_t epoch, std::vector<NodeId>& members);

/// θ reverse reachable sets in CSR layout plus the node → set index.
class RRCorpus {
 public:
  RRCorpus() = default;
  RRCorpus(std::size_t node_count, std::vector<std::size_t> offsets,
           std::vector<NodeId> members, std::vector<NodeId> roots,
           std::vector<double> root_scores);

  std::size_t size() const { return roots_.size(); }
  std::size_t node_count() const { return node_count_; }
  std::span<const NodeId> set(std::size_t i) const {
    return {members_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  NodeId root(std::size_t i) const { return roots_[i]; }
  double root_score(std::size_t i) const { return root_scores_[i]; }
  double total_root_score() const { return total_root_score_; }
  /// Ids of the sets containing v, ascending.
  std::span<const std::uint32_t> sets_containing(NodeId v) const {
    return {index_.data() + index_offsets_[v],
            index_offsets_[v + 1] - index_offsets_[v]};
  }
  /// Σ |R|, the memory/EPT statistic.
  std::size_t total_members() const { return members_.size(); }

  /// Number of sets intersecting `seeds`.
  std::size_t covered_count(std::span<const NodeId> seeds) const;

  friend bool operator==(const RRCorpus& a, const RRCorpus& b) {
    return a.offsets_ == b.offsets_ && a.members_ == b.members_ &&
           a.roots_ == b.roots_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> members_;
  std::vector<NodeId> roots_;
  std::vector<double> root_scores_;
  double total_root_score_ = 0.0;
  std::vector<std::size_t> index_offsets_;
  std::vector<std::uint32_t> index_;
};

struct CorpusRequest {
  std::size_t count = 0;
  std::uint64_t master_seed = 0;
  StreamPurpose purpose = StreamPurpose::rr_corpus;
  unsigned workers = 1;
};

/// Set i draws its root and live edges from stream (seed, purpose, i), so
/// the corpus does not depend on the worker count.
RRCorpus generate_corpus(const DiffusionGraph& graph, const TargetSet& targets,
                         DiffusionModel model, const CorpusRequest& request);

/// Debug dump, one `id root member...` line per set (labels, not ids).
void write_corpus(std::ostream& out, const RRCorpus& corpus,
                  const DiffusionGraph& graph);

}  // namespace aditum
