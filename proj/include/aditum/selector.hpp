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
#include <span>
#include <string>
#include <vector>

#include "aditum/diversity.hpp"
#include "aditum/graph.hpp"
#include "aditum/sampler.hpp"

namespace aditum {

/// The capital half of the greedy objective.  gain() must be computed from
/// scratch against the committed state, so a value never depends on when
/// it was last asked for.
class CapitalTerm {
 public:
  virtual ~CapitalTerm() = default;
  virtual std::size_t node_count() const = 0;
  virtual double gain(NodeId v) const = 0;
  virtual void commit(NodeId v) = 0;
  /// Divisor that maps the accumulated term onto [0,1].
  virtual double scale() const = 0;
};

/// pushedC(v) = Σ t(root(R)) over the uncovered sets R ∋ v.
class CoverageCapital final : public CapitalTerm {
 public:
  explicit CoverageCapital(const RRCorpus& corpus);

  std::size_t node_count() const override { return corpus_.node_count(); }
  double gain(NodeId v) const override;
  void commit(NodeId v) override;
  double scale() const override { return corpus_.total_root_score(); }

  std::size_t covered_count() const { return covered_count_; }
  /// Ascending ids of covered sets.
  std::vector<std::uint32_t> covered_sets() const;

 private:
  const RRCorpus& corpus_;
  std::vector<char> covered_;
  std::size_t covered_count_ = 0;
};

/// Fixed per-node score, e.g. the out-degree term of the Deg-D baseline.
class ModularCapital final : public CapitalTerm {
 public:
  explicit ModularCapital(std::vector<double> scores);

  std::size_t node_count() const override { return scores_.size(); }
  double gain(NodeId v) const override { return scores_[v]; }
  void commit(NodeId) override {}
  double scale() const override { return scale_; }

 private:
  std::vector<double> scores_;
  double scale_ = 1.0;
};

struct SelectorOptions {
  std::size_t k = 1;
  double alpha = 0.5;
  bool lazy = true;
  /// Mix capital/scale() with diversity/upper_bound(k) instead of raw sums.
  bool normalize = false;
};

struct IterationTrace {
  NodeId seed = 0;
  double capital_gain = 0.0;
  double diversity_gain = 0.0;
  double combined = 0.0;
  std::size_t evaluations = 0;
};

struct SeedResult {
  std::vector<NodeId> seeds;
  std::vector<IterationTrace> trace;
  double alpha = 0.0;
  bool normalized = false;
  /// Σ t(root) over covered sets (the raw coverage objective).
  double covered_root_score = 0.0;
  double expected_capital = 0.0;
  double diversity = 0.0;
  double diversity_bound = 0.0;
  double total_score = 0.0;
  std::size_t theta = 0;
  std::vector<std::uint32_t> covered_sets;
  std::vector<std::string> warnings;
};

/// Lazy greedy on α·capital + (1-α)·diversity.  Ties go to the smaller id.
/// Stops early, with a warning, once no candidate has a positive gain.
SeedResult greedy_select(CapitalTerm& capital, DiversityFunction& diversity,
                         const SelectorOptions& options);

/// greedy_select over an RR corpus, with E[C(S)] filled in from coverage.
SeedResult build_seed_set(const RRCorpus& corpus, const TargetSet& targets,
                          DiversityFunction& diversity,
                          const SelectorOptions& options);

/// α·E[C(S)] + (1-α)·div(S); the normalized form divides capital by T_TS
/// and diversity by its bound for k = |S|.
double objective_value(const SeedResult& result, double alpha,
                       bool normalized = false);

}  // namespace aditum
