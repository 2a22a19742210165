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

#include "aditum/sampler.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

#include "aditum/error.hpp"
#include "aditum/parallel.hpp"

namespace aditum {

DiffusionModel parse_model(std::string_view name) {
  if (name == "ic" || name == "IC") return DiffusionModel::ic;
  if (name == "lt" || name == "LT") return DiffusionModel::lt;
  throw UsageError("unknown diffusion model '" + std::string(name) +
                   "' (ic | lt)");
}

std::string_view model_name(DiffusionModel model) {
  return model == DiffusionModel::ic ? "ic" : "lt";
}

void IndependentCascade::live_in_edges(const DiffusionGraph& graph, NodeId v,
                                       StreamRng& rng,
                                       std::vector<NodeId>& out) const {
  const auto sources = graph.in_neighbors(v);
  const auto probs = graph.in_probs(v);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (rng.bernoulli(probs[i])) out.push_back(sources[i]);
  }
}

LinearThreshold::LinearThreshold(const DiffusionGraph& graph) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (graph.in_weight_sum(v) > 1.0 + 1e-9) {
      throw ConfigError("LT model: in-weights of node '" + graph.label(v) +
                        "' sum to " + std::to_string(graph.in_weight_sum(v)) +
                        " > 1");
    }
  }
}

void LinearThreshold::live_in_edges(const DiffusionGraph& graph, NodeId v,
                                    StreamRng& rng,
                                    std::vector<NodeId>& out) const {
  const auto sources = graph.in_neighbors(v);
  if (sources.empty()) return;
  const auto probs = graph.in_probs(v);
  double x = rng.uniform();
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (x < probs[i]) {
      out.push_back(sources[i]);
      return;
    }
    x -= probs[i];
  }
}

std::unique_ptr<TriggerDistribution> make_trigger(const DiffusionGraph& graph,
                                                  DiffusionModel model) {
  if (model == DiffusionModel::ic) return std::make_unique<IndependentCascade>();
  return std::make_unique<LinearThreshold>(graph);
}

RootSampler::RootSampler(const DiffusionGraph& graph, const TargetSet& targets)
    : members_(targets.members) {
  if (members_.empty()) throw ConfigError("target set is empty");
  double running = 0.0;
  for (NodeId v : members_) {
    running += graph.target_score(v);
    cumulative_.push_back(running);
  }
}

NodeId RootSampler::operator()(StreamRng& rng) const {
  const double x = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  if (it == cumulative_.end()) --it;
  return members_[static_cast<std::size_t>(it - cumulative_.begin())];
}

void reverse_reachable(const DiffusionGraph& graph,
                       const TriggerDistribution& trigger, NodeId root,
                       StreamRng& rng, std::vector<std::uint32_t>& stamp,
                       std::uint32_t epoch, std::vector<NodeId>& members) {
  members.clear();
  members.push_back(root);
  stamp[root] = epoch;
  std::vector<NodeId> live;
  for (std::size_t head = 0; head < members.size(); ++head) {
    live.clear();
    trigger.live_in_edges(graph, members[head], rng, live);
    for (NodeId u : live) {
      if (stamp[u] == epoch) continue;
      stamp[u] = epoch;
      members.push_back(u);
    }
  }
}

RRCorpus::RRCorpus(std::size_t node_count, std::vector<std::size_t> offsets,
                   std::vector<NodeId> members, std::vector<NodeId> roots,
                   std::vector<double> root_scores)
    : node_count_(node_count),
      offsets_(std::move(offsets)),
      members_(std::move(members)),
      roots_(std::move(roots)),
      root_scores_(std::move(root_scores)) {
  if (roots_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw UsageError("corpus too large for 32-bit set ids");
  }
  for (double s : root_scores_) total_root_score_ += s;
  index_offsets_.assign(node_count_ + 1, 0);
  for (NodeId v : members_) ++index_offsets_[v + 1];
  for (std::size_t v = 0; v < node_count_; ++v) {
    index_offsets_[v + 1] += index_offsets_[v];
  }
  index_.resize(members_.size());
  std::vector<std::size_t> cursor(index_offsets_.begin(),
                                  index_offsets_.end() - 1);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
      index_[cursor[members_[p]]++] = static_cast<std::uint32_t>(i);
    }
  }
}

std::size_t RRCorpus::covered_count(std::span<const NodeId> seeds) const {
  std::vector<char> hit(size(), 0);
  for (NodeId s : seeds) {
    for (std::uint32_t id : sets_containing(s)) hit[id] = 1;
  }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

RRCorpus generate_corpus(const DiffusionGraph& graph, const TargetSet& targets,
                         DiffusionModel model, const CorpusRequest& request) {
  if (request.count == 0) throw UsageError("corpus size must be >= 1");
  const RootSampler roots(graph, targets);
  const auto trigger = make_trigger(graph, model);

  struct Chunk {
    std::vector<std::size_t> sizes;
    std::vector<NodeId> members;
    std::vector<NodeId> roots;
  };
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(request.workers), request.count));
  std::vector<Chunk> chunks(workers);
  parallel_chunks(request.count, workers,
                  [&](unsigned w, std::size_t begin, std::size_t end) {
                    Chunk& chunk = chunks[w];
                    std::vector<std::uint32_t> stamp(graph.node_count(), 0);
                    std::uint32_t epoch = 0;
                    std::vector<NodeId> set;
                    for (std::size_t i = begin; i < end; ++i) {
                      StreamRng rng(request.master_seed, request.purpose, i);
                      const NodeId root = roots(rng);
                      if (++epoch == 0) {
                        std::fill(stamp.begin(), stamp.end(), 0);
                        epoch = 1;
                      }
                      reverse_reachable(graph, *trigger, root, rng, stamp,
                                        epoch, set);
                      chunk.sizes.push_back(set.size());
                      chunk.members.insert(chunk.members.end(), set.begin(),
                                           set.end());
                      chunk.roots.push_back(root);
                    }
                  });

  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> members;
  std::vector<NodeId> root_ids;
  std::vector<double> scores;
  offsets.reserve(request.count + 1);
  root_ids.reserve(request.count);
  for (Chunk& chunk : chunks) {
    for (std::size_t s : chunk.sizes) offsets.push_back(offsets.back() + s);
    members.insert(members.end(), chunk.members.begin(), chunk.members.end());
    root_ids.insert(root_ids.end(), chunk.roots.begin(), chunk.roots.end());
    chunk = Chunk{};
  }
  scores.reserve(root_ids.size());
  for (NodeId r : root_ids) scores.push_back(graph.target_score(r));
  return RRCorpus(graph.node_count(), std::move(offsets), std::move(members),
                  std::move(root_ids), std::move(scores));
}

void write_corpus(std::ostream& out, const RRCorpus& corpus,
                  const DiffusionGraph& graph) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out << i << ' ' << graph.label(corpus.root(i));
    for (NodeId v : corpus.set(i)) out << ' ' << graph.label(v);
    out << '\n';
  }
}

}  // namespace aditum
