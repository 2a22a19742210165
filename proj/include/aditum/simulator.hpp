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

#include "aditum/graph.hpp"
#include "aditum/sampler.hpp"

namespace aditum {

struct SimulationReport {
  std::size_t runs = 0;
  double mean_spread = 0.0;
  double stderr_spread = 0.0;
  double mean_capital = 0.0;
  double stderr_capital = 0.0;
};

/// Monte Carlo forward diffusion from `seeds`.  Run r samples a live-edge
/// instance from stream (seed, simulation, r); per-run outcomes are reduced
/// in run order, so the report is independent of the worker count.
SimulationReport simulate(const DiffusionGraph& graph, const TargetSet& targets,
                          DiffusionModel model, std::span<const NodeId> seeds,
                          std::size_t runs, std::uint64_t master_seed,
                          unsigned workers = 1);

struct ExactExpectation {
  double spread = 0.0;
  double capital = 0.0;
  std::size_t outcomes = 0;
};

/// Exact expectation by enumerating every live-edge outcome: 2^|E| for IC,
/// Π_v (in-degree(v)+1) for LT.  Refuses (UsageError) beyond max_outcomes.
ExactExpectation exhaustive_expectation(const DiffusionGraph& graph,
                                        const TargetSet& targets,
                                        DiffusionModel model,
                                        std::span<const NodeId> seeds,
                                        std::size_t max_outcomes = 1u << 20);

}  // namespace aditum
