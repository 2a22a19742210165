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

#include "aditum/selector.hpp"

#include <algorithm>
#include <queue>

#include "aditum/error.hpp"
#include "aditum/estimator.hpp"

namespace aditum {

CoverageCapital::CoverageCapital(const RRCorpus& corpus)
    : corpus_(corpus), covered_(corpus.size(), 0) {}

double CoverageCapital::gain(NodeId v) const {
  // Summed in set-id order every time, so equal states give equal bits.
  double total = 0.0;
  for (std::uint32_t id : corpus_.sets_containing(v)) {
    if (!covered_[id]) total += corpus_.root_score(id);
  }
  return total;
}

void CoverageCapital::commit(NodeId v) {
  for (std::uint32_t id : corpus_.sets_containing(v)) {
    if (!covered_[id]) {
      covered_[id] = 1;
      ++covered_count_;
    }
  }
}

std::vector<std::uint32_t> CoverageCapital::covered_sets() const {
  std::vector<std::uint32_t> out;
  out.reserve(covered_count_);
  for (std::size_t i = 0; i < covered_.size(); ++i) {
    if (covered_[i]) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

ModularCapital::ModularCapital(std::vector<double> scores)
    : scores_(std::move(scores)) {
  double total = 0.0;
  for (double s : scores_) {
    if (s < 0.0) throw UsageError("modular scores must be >= 0");
    total += s;
  }
  if (total > 0.0) scale_ = total;
}

namespace {

struct Candidate {
  double score;
  NodeId node;
  std::size_t tag;
  double capital;
  double diversity;
};

struct Worse {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.score != b.score) return a.score < b.score;
    return a.node > b.node;
  }
};

class Scorer {
 public:
  Scorer(const CapitalTerm& capital, const DiversityFunction& diversity,
         const SelectorOptions& options)
      : capital_(capital), diversity_(diversity), alpha_(options.alpha) {
    if (options.normalize) {
      const double c = capital.scale();
      const double d = diversity.upper_bound(options.k);
      capital_scale_ = c > 0.0 ? c : 1.0;
      diversity_scale_ = d > 0.0 ? d : 1.0;
    }
  }

  Candidate evaluate(NodeId v, std::size_t tag) const {
    const double c = capital_.gain(v);
    const double d = diversity_.gain(v);
    const double score = alpha_ * (c / capital_scale_) +
                         (1.0 - alpha_) * (d / diversity_scale_);
    return {score, v, tag, c, d};
  }

 private:
  const CapitalTerm& capital_;
  const DiversityFunction& diversity_;
  double alpha_;
  double capital_scale_ = 1.0;
  double diversity_scale_ = 1.0;
};

void record(const Candidate& best, std::size_t evaluations,
            CapitalTerm& capital, DiversityFunction& diversity,
            SeedResult& result) {
  capital.commit(best.node);
  diversity.commit(best.node);
  result.seeds.push_back(best.node);
  result.trace.push_back(
      {best.node, best.capital, best.diversity, best.score, evaluations});
}

}  // namespace

SeedResult greedy_select(CapitalTerm& capital, DiversityFunction& diversity,
                         const SelectorOptions& options) {
  if (options.k == 0) throw UsageError("k must be >= 1");
  if (!(options.alpha >= 0.0 && options.alpha <= 1.0)) {
    throw UsageError("alpha must lie in [0,1]");
  }
  const std::size_t n = capital.node_count();
  if (diversity.node_count() != n) {
    throw UsageError("capital and diversity disagree on the node count");
  }
  if (!diversity.seeds().empty()) {
    throw UsageError("diversity state must start empty");
  }

  SeedResult result;
  result.alpha = options.alpha;
  result.normalized = options.normalize;
  const std::size_t k = std::min(options.k, n);
  if (k < options.k) {
    result.warnings.push_back("k exceeds the node count; capped at " +
                              std::to_string(n));
  }
  const Scorer scorer(capital, diversity, options);

  if (options.lazy) {
    std::priority_queue<Candidate, std::vector<Candidate>, Worse> queue;
    for (NodeId v = 0; v < n; ++v) queue.push(scorer.evaluate(v, 0));
    std::size_t evaluations = n;
    while (result.seeds.size() < k && !queue.empty()) {
      const Candidate top = queue.top();
      queue.pop();
      if (top.tag == result.seeds.size()) {
        if (!(top.score > 0.0)) break;
        record(top, evaluations, capital, diversity, result);
        evaluations = 0;
      } else {
        queue.push(scorer.evaluate(top.node, result.seeds.size()));
        ++evaluations;
      }
    }
  } else {
    while (result.seeds.size() < k) {
      bool found = false;
      Candidate best{};
      for (NodeId v = 0; v < n; ++v) {
        if (diversity.committed(v)) continue;
        const Candidate c = scorer.evaluate(v, result.seeds.size());
        if (!found || Worse{}(best, c)) {
          best = c;
          found = true;
        }
      }
      if (!found || !(best.score > 0.0)) break;
      record(best, n - result.seeds.size(), capital, diversity, result);
    }
  }

  if (result.seeds.size() < k) {
    result.warnings.push_back("stopped after " +
                              std::to_string(result.seeds.size()) +
                              " seeds: no remaining node has a positive gain");
  }
  result.diversity = diversity.value();
  result.diversity_bound = diversity.upper_bound(result.seeds.size());
  return result;
}

SeedResult build_seed_set(const RRCorpus& corpus, const TargetSet& targets,
                          DiversityFunction& diversity,
                          const SelectorOptions& options) {
  if (corpus.size() == 0) throw UsageError("RR corpus is empty");
  CoverageCapital capital(corpus);
  SeedResult result = greedy_select(capital, diversity, options);
  result.theta = corpus.size();
  result.total_score = targets.total_score;
  result.covered_sets = capital.covered_sets();
  for (std::uint32_t id : result.covered_sets) {
    result.covered_root_score += corpus.root_score(id);
  }
  result.expected_capital = expected_capital(
      capital.covered_count(), corpus.size(), targets.total_score);
  return result;
}

double objective_value(const SeedResult& result, double alpha,
                       bool normalized) {
  double capital = result.expected_capital;
  double diversity = result.diversity;
  if (normalized) {
    if (result.total_score > 0.0) capital /= result.total_score;
    if (result.diversity_bound > 0.0) diversity /= result.diversity_bound;
  }
  return alpha * capital + (1.0 - alpha) * diversity;
}

}  // namespace aditum
