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

#include "aditum/baselines.hpp"

#include "aditum/error.hpp"
#include "aditum/metrics.hpp"
#include "aditum/selector.hpp"

namespace aditum {

DegDResult deg_d_greedy(const DiffusionGraph& graph,
                        const NumericMatrix& preferences, GMode g,
                        double gamma, std::size_t k, ConcaveFn f) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw UsageError("gamma must lie in [0,1]");
  }
  if (k == 0) throw UsageError("k must be >= 1");
  NumericDiversity diversity(preferences, graph, g, f);
  const std::size_t n = graph.node_count();
  DegDResult result;
  while (result.seeds.size() < std::min(k, n)) {
    NodeId best = 0;
    double best_gain = -1.0;
    for (NodeId v = 0; v < n; ++v) {
      if (diversity.committed(v)) continue;
      const double gain =
          (1.0 - gamma) * static_cast<double>(graph.out_degree(v)) +
          gamma * diversity.gain(v);
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    diversity.commit(best);
    result.seeds.push_back(best);
    result.gains.push_back(best_gain);
  }
  result.diversity = diversity.value();
  return result;
}

DegDComparison compare_deg_d(const DiffusionGraph& graph,
                             const NumericMatrix& preferences, GMode g,
                             double gamma, std::size_t k, ConcaveFn f) {
  DegDComparison out;
  out.baseline = deg_d_greedy(graph, preferences, g, gamma, k, f).seeds;

  std::vector<double> degrees(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    degrees[v] = static_cast<double>(graph.out_degree(v));
  }
  ModularCapital capital(std::move(degrees));
  NumericDiversity diversity(preferences, graph, g, f);
  SelectorOptions options;
  options.k = k;
  options.alpha = 1.0 - gamma;
  out.selector = greedy_select(capital, diversity, options).seeds;
  if (out.selector.size() == out.baseline.size()) {
    out.overlap = seed_overlap(out.baseline, out.selector, out.baseline.size());
  }
  return out;
}

}  // namespace aditum
