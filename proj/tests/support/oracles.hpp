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

// Reference evaluators for tests.  Everything here recomputes from scratch
// and shares no code with the incremental implementations under test.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "aditum/diversity.hpp"
#include "aditum/graph.hpp"
#include "aditum/profiles.hpp"
#include "aditum/rng.hpp"
#include "aditum/sampler.hpp"

namespace aditum::oracle {

// --- exact rationals ------------------------------------------------------------

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(Rational a, Rational b);
  double to_double() const { return static_cast<double>(num) / den; }
  std::string str() const;
};

// --- pairwise-distance counterexamples --------------------------------------------
//
// Profiles are plain string tuples; "" is a missing value.

using Tuple = std::vector<std::string>;

/// (1/|S|) Σ over unordered pairs of 1[val(u) ≠ val(v)] on one attribute,
/// missing counting as a mismatch.
Rational f1(const std::vector<std::string>& values);
/// Σ over ordered pairs u ≠ v of the Hamming distance, where two missing
/// cells count as equal.
Rational f2(const std::vector<Tuple>& profiles);
Rational f2_hat(const std::vector<Tuple>& profiles);
Rational f2_hat_hat(const std::vector<Tuple>& profiles);
/// Σ over ordered pairs of the Jaccard distance; a cell matches only when
/// both values are present and equal.
Rational f3(const std::vector<Tuple>& profiles);
Rational f3_hat(const std::vector<Tuple>& profiles);
/// 1 − (#attributes where every member has the same present value) /
/// (Σ_j distinct present values of attribute j).
Rational f4(const std::vector<Tuple>& profiles);

// --- brute-force diversity --------------------------------------------------------------

double aw_value(const ProfileSet& profiles, std::span<const NodeId> seeds,
                double lambda);
/// Strict forward reachability matrix, reach[u][v] for u ≠ v.
std::vector<std::vector<char>> reachability(const DiffusionGraph& graph);
double hamming_value(const DiffusionGraph& graph, const ProfileSet& profiles,
                     std::size_t radius, std::span<const NodeId> seeds);
/// Joint entropy (bits) of the membership indicators under the frequency
/// prior, by grouping values with identical membership patterns.
double entropy_value(const ProfileSet& profiles, std::span<const NodeId> seeds);
/// The same quantity as Σ_i H(X_i | X_1..X_{i-1}), enumerating the 0/1
/// condition tuples.
double entropy_chain_rule(const ProfileSet& profiles,
                          std::span<const NodeId> seeds);
double class_value(const ClassAssignment& classes, std::span<const NodeId> seeds,
                   ConcaveFn f);
double numeric_value(const NumericMatrix& prefs, const DiffusionGraph& graph,
                     GMode g, std::span<const NodeId> seeds, ConcaveFn f);

/// Maximum of the single-attribute aw value over all count vectors
/// (n_1..n_d) with Σ n = k, in exact arithmetic for λ ∈ {1, 2}.
struct AwBruteMax {
  Rational best;
  std::vector<std::vector<std::size_t>> maximizers;
};
AwBruteMax aw_brute_max(std::size_t d, std::size_t k, int lambda);
/// Σ_{i=1}^{n} i^{-λ} exactly.
Rational harmonic(std::size_t n, int lambda);

// --- random instances ------------------------------------------------------------------

DiffusionGraph random_graph(StreamRng& rng, std::size_t n, std::size_t edges,
                            bool lt_compatible);

struct Instance {
  DiffusionGraph graph;
  ProfileSet profiles;
  ClassAssignment classes;
  NumericMatrix prefs;
};

struct InstanceShape {
  std::size_t nodes = 8;
  std::size_t edges = 12;
  std::size_t max_attributes = 3;
  std::size_t max_domain = 4;
  double missing = 0.2;
  bool unit_rewards = false;
};

std::unique_ptr<Instance> random_instance(std::uint64_t seed,
                                          const InstanceShape& shape);

/// A diversity function bound to an instance, plus its brute-force twin.
struct FunctionCase {
  std::string label;
  std::unique_ptr<HammingBallIndex> balls;
  std::unique_ptr<DiversityFunction> function;
  std::function<double(std::span<const NodeId>)> brute;
};

/// aw (λ=1 and 2), hamming ξ ∈ {1,3,5}, entropy, class, numeric-u and
/// numeric-w with f = log2(1+x).
std::vector<FunctionCase> all_function_cases(const Instance& instance);

// --- selection ---------------------------------------------------------------------------

/// Root-score mass of the corpus sets hit by `seeds`.
double covered_root_score(const RRCorpus& corpus, std::span<const NodeId> seeds);

/// Every size-k subset of 0..n-1 in lexicographic order.
std::vector<std::vector<NodeId>> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace aditum::oracle
