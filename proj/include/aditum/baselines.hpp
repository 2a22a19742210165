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
#include <vector>

#include "aditum/diversity.hpp"
#include "aditum/graph.hpp"
#include "aditum/profiles.hpp"

namespace aditum {

struct DegDResult {
  std::vector<NodeId> seeds;
  std::vector<double> gains;
  double diversity = 0.0;
};

/// Greedy on (1-γ)·Σ_{u∈S} outdeg(u) + γ·D(S) with
/// D(S) = Σ_m f(Σ_{u∈S} ω_um g(u)); ties go to the smaller id.
DegDResult deg_d_greedy(const DiffusionGraph& graph,
                        const NumericMatrix& preferences, GMode g,
                        double gamma, std::size_t k,
                        ConcaveFn f = ConcaveFn::log2_1p);

struct DegDComparison {
  std::vector<NodeId> baseline;
  std::vector<NodeId> selector;
  double overlap = 0.0;
};

/// Runs deg_d_greedy at γ and the generic selector with the out-degree as a
/// modular capital term at α = 1-γ, and reports their seed overlap.
DegDComparison compare_deg_d(const DiffusionGraph& graph,
                             const NumericMatrix& preferences, GMode g,
                             double gamma, std::size_t k,
                             ConcaveFn f = ConcaveFn::log2_1p);

}  // namespace aditum
