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

#include "aditum/simulator.hpp"

#include <cmath>
#include <vector>

#include "aditum/error.hpp"
#include "aditum/parallel.hpp"
#include "aditum/rng.hpp"

namespace aditum {

namespace {

void check_seeds(const DiffusionGraph& graph, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw UsageError("seed set is empty");
  for (NodeId s : seeds) {
    if (s >= graph.node_count()) throw UsageError("seed id out of range");
  }
}

struct Outcome {
  double spread;
  double capital;
};

// Forward spread over one live-edge instance.  `live(u, i)` tells whether
// the i-th out-edge of u is live; it is asked at most once per edge.
template <class Live>
Outcome spread_once(const DiffusionGraph& graph, const TargetSet& targets,
                    std::span<const NodeId> seeds, std::vector<char>& active,
                    std::vector<NodeId>& queue, Live&& live) {
  std::fill(active.begin(), active.end(), 0);
  queue.clear();
  for (NodeId s : seeds) {
    if (!active[s]) {
      active[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const auto outs = graph.out_neighbors(u);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const NodeId w = outs[i];
      if (active[w] || !live(u, i)) continue;
      active[w] = 1;
      queue.push_back(w);
    }
  }
  double capital = 0.0;
  for (NodeId v : queue) {
    if (targets.contains(v)) capital += graph.target_score(v);
  }
  return {static_cast<double>(queue.size()), capital};
}

// LT live-edge choice of every node: index into in_neighbors, or -1.
void sample_lt_choices(const DiffusionGraph& graph, StreamRng& rng,
                       std::vector<std::int64_t>& choice) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    choice[v] = -1;
    const auto probs = graph.in_probs(v);
    if (probs.empty()) continue;
    double x = rng.uniform();
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (x < probs[i]) {
        choice[v] = graph.in_neighbors(v)[i];
        break;
      }
      x -= probs[i];
    }
  }
}

}  // namespace

SimulationReport simulate(const DiffusionGraph& graph, const TargetSet& targets,
                          DiffusionModel model, std::span<const NodeId> seeds,
                          std::size_t runs, std::uint64_t master_seed,
                          unsigned workers) {
  check_seeds(graph, seeds);
  if (runs == 0) throw UsageError("runs must be >= 1");
  if (model == DiffusionModel::lt) LinearThreshold check(graph);

  std::vector<Outcome> outcomes(runs);
  parallel_chunks(runs, workers, [&](unsigned, std::size_t begin,
                                     std::size_t end) {
    std::vector<char> active(graph.node_count());
    std::vector<NodeId> queue;
    std::vector<std::int64_t> choice(graph.node_count());
    for (std::size_t r = begin; r < end; ++r) {
      StreamRng rng(master_seed, StreamPurpose::simulation, r);
      if (model == DiffusionModel::ic) {
        outcomes[r] = spread_once(graph, targets, seeds, active, queue,
                                  [&](NodeId u, std::size_t i) {
                                    return rng.bernoulli(graph.out_probs(u)[i]);
                                  });
      } else {
        sample_lt_choices(graph, rng, choice);
        outcomes[r] = spread_once(
            graph, targets, seeds, active, queue,
            [&](NodeId u, std::size_t i) {
              return choice[graph.out_neighbors(u)[i]] ==
                     static_cast<std::int64_t>(u);
            });
      }
    }
  });

  SimulationReport report;
  report.runs = runs;
  double s1 = 0.0, s2 = 0.0, c1 = 0.0, c2 = 0.0;
  for (const Outcome& o : outcomes) {
    s1 += o.spread;
    s2 += o.spread * o.spread;
    c1 += o.capital;
    c2 += o.capital * o.capital;
  }
  const double nr = static_cast<double>(runs);
  report.mean_spread = s1 / nr;
  report.mean_capital = c1 / nr;
  if (runs > 1) {
    const double vs = std::max(0.0, (s2 - s1 * s1 / nr) / (nr - 1.0));
    const double vc = std::max(0.0, (c2 - c1 * c1 / nr) / (nr - 1.0));
    report.stderr_spread = std::sqrt(vs / nr);
    report.stderr_capital = std::sqrt(vc / nr);
  }
  return report;
}

ExactExpectation exhaustive_expectation(const DiffusionGraph& graph,
                                        const TargetSet& targets,
                                        DiffusionModel model,
                                        std::span<const NodeId> seeds,
                                        std::size_t max_outcomes) {
  check_seeds(graph, seeds);
  const std::size_t n = graph.node_count();
  std::vector<char> active(n);
  std::vector<NodeId> queue;
  ExactExpectation out;

  if (model == DiffusionModel::ic) {
    const std::vector<Edge> edges = graph.edges();
    if (edges.size() >= 63 || (std::size_t{1} << edges.size()) > max_outcomes) {
      throw UsageError("instance too large to enumerate (" +
                       std::to_string(edges.size()) + " edges)");
    }
    // Edge index of the i-th out-edge of u, matching edges() order.
    std::vector<std::size_t> first(n + 1, 0);
    for (NodeId u = 0; u < n; ++u) first[u + 1] = first[u] + graph.out_degree(u);
    const std::size_t total = std::size_t{1} << edges.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
      double p = 1.0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        p *= (mask >> e & 1) ? edges[e].prob : 1.0 - edges[e].prob;
      }
      if (p == 0.0) continue;
      const Outcome o = spread_once(graph, targets, seeds, active, queue,
                                    [&](NodeId u, std::size_t i) {
                                      return (mask >> (first[u] + i) & 1) != 0;
                                    });
      out.spread += p * o.spread;
      out.capital += p * o.capital;
    }
    out.outcomes = total;
    return out;
  }

  LinearThreshold check(graph);
  std::size_t total = 1;
  for (NodeId v = 0; v < n; ++v) {
    total *= graph.in_degree(v) + 1;
    if (total > max_outcomes) {
      throw UsageError("instance too large to enumerate (LT choices)");
    }
  }
  // Mixed-radix counter: digit d_v < in-degree(v) picks that in-neighbor,
  // d_v = in-degree(v) means no live in-edge.
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::int64_t> choice(n, -1);
  for (std::size_t outcome = 0; outcome < total; ++outcome) {
    double p = 1.0;
    for (NodeId v = 0; v < n; ++v) {
      const std::size_t deg = graph.in_degree(v);
      if (digit[v] < deg) {
        p *= graph.in_probs(v)[digit[v]];
        choice[v] = graph.in_neighbors(v)[digit[v]];
      } else {
        p *= std::max(0.0, 1.0 - graph.in_weight_sum(v));
        choice[v] = -1;
      }
    }
    if (p > 0.0) {
      const Outcome o = spread_once(graph, targets, seeds, active, queue,
                                    [&](NodeId u, std::size_t i) {
                                      return choice[graph.out_neighbors(u)[i]] ==
                                             static_cast<std::int64_t>(u);
                                    });
      out.spread += p * o.spread;
      out.capital += p * o.capital;
    }
    for (NodeId v = 0; v < n; ++v) {
      if (++digit[v] <= graph.in_degree(v)) break;
      digit[v] = 0;
    }
  }
  out.outcomes = total;
  return out;
}

}  // namespace aditum
