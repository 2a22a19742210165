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
#include <optional>
#include <string>
#include <vector>

#include "aditum/graph.hpp"
#include "aditum/sampler.hpp"

namespace aditum {

struct EstimationParams {
  double epsilon = 0.1;
  double ell = 1.0;
  std::size_t k = 1;
  std::size_t theta_cap = 20'000'000;
  std::optional<std::size_t> theta_override;
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
};

struct KptEstimate {
  double kpt_star = 1.0;
  /// Sets of the last doubling round; RefineKPT builds its cover on them.
  RRCorpus last_round;
  std::size_t rounds = 0;
};

/// Doubling search for a lower bound on the mean spread of size-k sets.
/// Round i draws ⌈(6ℓ ln n + 6 ln log₂ n)·2^i⌉ sets and averages
/// κ(R) = 1 - (1 - w(R)/m)^k, w(R) the in-degree sum of R's members and m
/// the edge count; the first round whose mean exceeds 2^-i yields
/// kpt* = n·mean/2.  Falls back to 1.
KptEstimate kpt_estimation(const DiffusionGraph& graph, const TargetSet& targets,
                           DiffusionModel model, std::size_t k, double ell,
                           std::uint64_t master_seed, unsigned workers = 1);

struct KptRefinement {
  double kpt_plus = 1.0;
  double epsilon_prime = 0.0;
  std::size_t sample_size = 0;
  double covered_fraction = 0.0;
};

/// Covers the last estimation round greedily with k nodes, measures that
/// cover on a fresh corpus of λ'/kpt* sets and returns
/// max(f·n/(1+ε'), kpt*), where ε' = 5·∛(ℓε²/(k+ℓ)) and
/// λ' = (2+ε')·ℓ·n·ln n / ε'².
KptRefinement refine_kpt(const DiffusionGraph& graph, const TargetSet& targets,
                         DiffusionModel model, const KptEstimate& estimate,
                         const EstimationParams& params);

/// ln C(n, k) through log-gamma.
double log_binomial(std::size_t n, std::size_t k);

/// λ = (8+2ε)·n·(ℓ ln n + ln C(n,k) + ln 2)/ε².
double theta_lambda(std::size_t n, std::size_t k, double epsilon, double ell);

struct ThetaChoice {
  std::size_t theta = 1;
  bool capped = false;
};

/// θ = ⌈λ/kpt⌉, clamped into [1, cap].
ThetaChoice compute_theta(double kpt, double epsilon, double ell,
                          std::size_t k, std::size_t n, std::size_t cap);

/// E[C(S)] = T_TS · covered/θ.  Roots are drawn proportionally to t, so the
/// plain covered fraction already estimates C(S)/T_TS.
double expected_capital(std::size_t covered, std::size_t theta,
                        double total_score);

struct EstimationReport {
  double kpt_star = 1.0;
  double kpt_plus = 1.0;
  std::size_t theta = 1;
  bool capped = false;
  bool overridden = false;
  std::vector<std::string> warnings;
};

/// Runs estimation and refinement, or takes params.theta_override as is.
EstimationReport estimate_theta(const DiffusionGraph& graph,
                                const TargetSet& targets, DiffusionModel model,
                                const EstimationParams& params);

}  // namespace aditum
