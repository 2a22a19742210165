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

#include "aditum/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aditum/error.hpp"

namespace aditum {

namespace {

void check_accuracy(double epsilon, double ell) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw UsageError("epsilon must lie in (0,1)");
  }
  if (!(ell > 0.0)) throw UsageError("ell must be > 0");
}

// Plain greedy maximum coverage; ties go to the smaller id.
std::vector<NodeId> greedy_cover(const RRCorpus& corpus, std::size_t k) {
  const std::size_t n = corpus.node_count();
  std::vector<std::size_t> degree(n);
  for (NodeId v = 0; v < n; ++v) degree[v] = corpus.sets_containing(v).size();
  std::vector<char> covered(corpus.size(), 0);
  std::vector<char> chosen(n, 0);
  std::vector<NodeId> seeds;
  for (std::size_t it = 0; it < k && it < n; ++it) {
    std::size_t best = n;
    for (NodeId v = 0; v < n; ++v) {
      if (!chosen[v] && (best == n || degree[v] > degree[best])) best = v;
    }
    if (best == n || degree[best] == 0) break;
    chosen[best] = 1;
    seeds.push_back(static_cast<NodeId>(best));
    for (std::uint32_t id : corpus.sets_containing(static_cast<NodeId>(best))) {
      if (covered[id]) continue;
      covered[id] = 1;
      for (NodeId u : corpus.set(id)) --degree[u];
    }
  }
  return seeds;
}

}  // namespace

KptEstimate kpt_estimation(const DiffusionGraph& graph, const TargetSet& targets,
                           DiffusionModel model, std::size_t k, double ell,
                           std::uint64_t master_seed, unsigned workers) {
  if (k == 0) throw UsageError("k must be >= 1");
  KptEstimate out;
  const std::size_t n = graph.node_count();
  if (n < 2) return out;
  const double nd = static_cast<double>(n);
  const double log2n = std::log2(nd);
  const auto last_round = static_cast<int>(std::ceil(log2n)) - 1;
  const double m = static_cast<double>(graph.edge_count());
  const double base = 6.0 * ell * std::log(nd) + 6.0 * std::log(log2n);

  for (int i = 1; i <= last_round; ++i) {
    const double scale = std::ldexp(1.0, i);
    const auto count = static_cast<std::size_t>(std::ceil(base * scale));
    // Every round gets its own derived seed so rounds never share streams.
    const CorpusRequest request{count, master_seed ^ mix64(static_cast<std::uint64_t>(i)),
                                StreamPurpose::kpt_estimation, workers};
    RRCorpus corpus = generate_corpus(graph, targets, model, request);

    double sum = 0.0;
    for (std::size_t r = 0; r < corpus.size(); ++r) {
      if (m == 0.0) continue;
      double width = 0.0;
      for (NodeId v : corpus.set(r)) {
        width += static_cast<double>(graph.in_degree(v));
      }
      sum += 1.0 - std::pow(1.0 - width / m, static_cast<double>(k));
    }
    const double mean = sum / static_cast<double>(corpus.size());
    out.rounds = static_cast<std::size_t>(i);
    out.last_round = std::move(corpus);
    if (mean > 1.0 / scale) {
      out.kpt_star = std::max(1.0, nd * mean / 2.0);
      return out;
    }
  }
  return out;
}

KptRefinement refine_kpt(const DiffusionGraph& graph, const TargetSet& targets,
                         DiffusionModel model, const KptEstimate& estimate,
                         const EstimationParams& params) {
  check_accuracy(params.epsilon, params.ell);
  KptRefinement out;
  out.kpt_plus = estimate.kpt_star;
  const std::size_t n = graph.node_count();
  if (estimate.last_round.size() == 0 || n < 2) return out;

  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(params.k);
  out.epsilon_prime = 5.0 * std::cbrt(params.ell * params.epsilon *
                                      params.epsilon / (kd + params.ell));
  const double eps2 = out.epsilon_prime * out.epsilon_prime;
  const double lambda_prime =
      (2.0 + out.epsilon_prime) * params.ell * nd * std::log(nd) / eps2;
  const double wanted = std::ceil(lambda_prime / estimate.kpt_star);
  out.sample_size = static_cast<std::size_t>(std::clamp(
      wanted, 1.0, static_cast<double>(params.theta_cap)));

  const std::vector<NodeId> cover = greedy_cover(estimate.last_round, params.k);
  const RRCorpus fresh = generate_corpus(
      graph, targets, model,
      {out.sample_size, params.master_seed, StreamPurpose::kpt_refinement,
       params.workers});
  out.covered_fraction = static_cast<double>(fresh.covered_count(cover)) /
                         static_cast<double>(fresh.size());
  const double refined = out.covered_fraction * nd / (1.0 + out.epsilon_prime);
  out.kpt_plus = std::max(refined, estimate.kpt_star);
  return out;
}

double log_binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
         std::lgamma(nd - kd + 1.0);
}

double theta_lambda(std::size_t n, std::size_t k, double epsilon, double ell) {
  const double nd = static_cast<double>(n);
  const double logn = n > 1 ? std::log(nd) : 0.0;
  return (8.0 + 2.0 * epsilon) * nd *
         (ell * logn + log_binomial(n, std::min(k, n)) + std::log(2.0)) /
         (epsilon * epsilon);
}

ThetaChoice compute_theta(double kpt, double epsilon, double ell,
                          std::size_t k, std::size_t n, std::size_t cap) {
  check_accuracy(epsilon, ell);
  if (!(kpt >= 1.0)) throw UsageError("kpt must be >= 1");
  if (cap == 0) throw UsageError("theta cap must be >= 1");
  const double raw = std::ceil(theta_lambda(n, k, epsilon, ell) / kpt);
  ThetaChoice out;
  if (!(raw <= static_cast<double>(cap))) {
    out.theta = cap;
    out.capped = true;
  } else {
    out.theta = std::max<std::size_t>(1, static_cast<std::size_t>(raw));
  }
  return out;
}

double expected_capital(std::size_t covered, std::size_t theta,
                        double total_score) {
  if (theta == 0) throw UsageError("theta must be >= 1");
  if (covered > theta) throw UsageError("covered count exceeds theta");
  if (total_score < 0.0) throw UsageError("total score must be >= 0");
  return total_score * static_cast<double>(covered) /
         static_cast<double>(theta);
}

EstimationReport estimate_theta(const DiffusionGraph& graph,
                                const TargetSet& targets, DiffusionModel model,
                                const EstimationParams& params) {
  check_accuracy(params.epsilon, params.ell);
  if (params.k == 0) throw UsageError("k must be >= 1");
  EstimationReport report;
  if (params.theta_override) {
    if (*params.theta_override == 0) throw UsageError("theta must be >= 1");
    report.theta = *params.theta_override;
    report.overridden = true;
    return report;
  }
  const KptEstimate estimate =
      kpt_estimation(graph, targets, model, params.k, params.ell,
                     params.master_seed, params.workers);
  report.kpt_star = estimate.kpt_star;
  report.kpt_plus =
      refine_kpt(graph, targets, model, estimate, params).kpt_plus;
  const ThetaChoice choice =
      compute_theta(report.kpt_plus, params.epsilon, params.ell, params.k,
                    graph.node_count(), params.theta_cap);
  report.theta = choice.theta;
  report.capped = choice.capped;
  if (choice.capped) {
    report.warnings.push_back("theta capped at " +
                              std::to_string(params.theta_cap));
  }
  return report;
}

}  // namespace aditum
