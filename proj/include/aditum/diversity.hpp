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
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aditum/graph.hpp"
#include "aditum/profiles.hpp"

namespace aditum {

/// Incrementally maintained set function div(S) over a growing seed set.
/// gain() is const and may run concurrently between commits.
class DiversityFunction {
 public:
  explicit DiversityFunction(std::size_t node_count);
  virtual ~DiversityFunction() = default;

  virtual std::string_view name() const = 0;
  virtual double value() const = 0;
  virtual double gain(NodeId v) const = 0;
  /// Adds v to S.  Adding a node twice is a UsageError.
  void commit(NodeId v);
  void reset();

  /// A value div(S) cannot exceed for |S| = k, used to put diversity on a
  /// [0,1] scale next to the capital fraction.
  virtual double upper_bound(std::size_t k) const = 0;

  std::size_t node_count() const { return committed_.size(); }
  bool committed(NodeId v) const { return committed_[v] != 0; }
  const std::vector<NodeId>& seeds() const { return seeds_; }

 protected:
  virtual void apply(NodeId v) = 0;
  virtual void clear() = 0;

 private:
  std::vector<char> committed_;
  std::vector<NodeId> seeds_;
};

// --- attribute-wise -----------------------------------------------------------

/// div(S) = Σ_j ω_j Σ_{a ∈ dom(A_j)} Σ_{i=1}^{n_a} i^{-λ}.
class AttributeWiseDiversity final : public DiversityFunction {
 public:
  explicit AttributeWiseDiversity(const ProfileSet& profiles,
                                  double lambda = 1.0);

  std::string_view name() const override { return "aw"; }
  double value() const override { return value_; }
  double gain(NodeId v) const override;
  double upper_bound(std::size_t k) const override;

  std::size_t count(ValueId a) const { return counts_[a]; }

 protected:
  void apply(NodeId v) override;
  void clear() override;

 private:
  const ProfileSet& profiles_;
  double lambda_;
  std::vector<std::size_t> counts_;
  double value_ = 0.0;
};

/// Largest attribute-wise diversity any k full profiles can reach: each
/// attribute spreads k values over its d_j domain values as evenly as
/// possible.
double aw_theoretical_max(std::size_t k, std::span<const std::size_t> domain_sizes,
                          std::span<const double> weights, double lambda);

// --- Hamming balls --------------------------------------------------------------

/// Number of attributes on which u and v differ; a missing cell differs from
/// everything, including another missing cell.
std::size_t hamming_distance(const ProfileSet& profiles, NodeId u, NodeId v);

/// B_v = { u reachable from v by a directed path, u != v, dist(u,v) <= ξ }.
/// Balls are built on first use and cached; precompute() builds them all.
class HammingBallIndex {
 public:
  HammingBallIndex(const DiffusionGraph& graph, const ProfileSet& profiles,
                   std::size_t radius);

  std::size_t radius() const { return radius_; }
  std::size_t node_count() const { return graph_.node_count(); }
  /// Sorted ascending.  Thread-safe.
  const std::vector<NodeId>& ball(NodeId v) const;
  void precompute(unsigned workers = 1) const;

 private:
  std::vector<NodeId> build(NodeId v) const;

  const DiffusionGraph& graph_;
  const ProfileSet& profiles_;
  std::size_t radius_;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<std::vector<NodeId>> balls_;
};

/// div(S) = |∪_{v ∈ S} B_v|.
class HammingDiversity final : public DiversityFunction {
 public:
  explicit HammingDiversity(const HammingBallIndex& index);

  std::string_view name() const override { return "hamming"; }
  double value() const override { return static_cast<double>(covered_count_); }
  double gain(NodeId v) const override;
  double upper_bound(std::size_t k) const override;

 protected:
  void apply(NodeId v) override;
  void clear() override;

 private:
  const HammingBallIndex& index_;
  std::vector<char> covered_;
  std::size_t covered_count_ = 0;
};

// --- entropy --------------------------------------------------------------------

/// Joint entropy (bits) of the membership indicators X_v = [a ∈ A[v]] for
/// v ∈ S, where a is drawn from the qualified values with probability
/// proportional to their frequency in the profile set.  Maintained as a
/// partition of the values by membership pattern.
class EntropyDiversity final : public DiversityFunction {
 public:
  explicit EntropyDiversity(const ProfileSet& profiles);

  std::string_view name() const override { return "entropy"; }
  double value() const override { return value_; }
  double gain(NodeId v) const override;
  double upper_bound(std::size_t k) const override;

  /// Integer frequency mass of every current group, for tests.
  std::vector<std::size_t> group_masses() const;

 private:
  struct Touch {
    std::uint32_t group;
    std::size_t mass_in;
  };
  void touched(NodeId v, std::vector<Touch>& out) const;

 protected:
  void apply(NodeId v) override;
  void clear() override;

 private:
  const ProfileSet& profiles_;
  std::vector<std::uint32_t> group_of_;  // per qualified value
  std::vector<std::size_t> group_mass_;
  double value_ = 0.0;
};

// --- classes ----------------------------------------------------------------------

enum class ConcaveFn { log2_1p, sqrt };

double apply_concave(ConcaveFn f, double x);
/// f(x + delta) - f(x), written so that it is non-increasing in x in
/// floating point as well.
double concave_increment(ConcaveFn f, double x, double delta);

/// div(S) = Σ_l f(Σ_{v ∈ C_l ∩ S} r_v).
class ClassDiversity final : public DiversityFunction {
 public:
  ClassDiversity(const ClassAssignment& classes, std::size_t node_count,
                 ConcaveFn f = ConcaveFn::log2_1p);

  std::string_view name() const override { return "class"; }
  double value() const override;
  double gain(NodeId v) const override;
  double upper_bound(std::size_t k) const override;

  /// Number of classes holding at least one seed.
  std::size_t classes_hit() const;

 protected:
  void apply(NodeId v) override;
  void clear() override;

 private:
  const ClassAssignment& classes_;
  ConcaveFn f_;
  std::vector<double> accumulated_;
  double max_reward_ = 1.0;
};

// --- numeric preferences ----------------------------------------------------------

enum class GMode { unit, degree };

/// D(S) = Σ_m f(Σ_{u ∈ S} ω_um g(u)) over per-node preference rows; g is 1
/// or the out-degree.  NaN preferences count as zero.
class NumericDiversity final : public DiversityFunction {
 public:
  NumericDiversity(const NumericMatrix& preferences,
                   const DiffusionGraph& graph, GMode g,
                   ConcaveFn f = ConcaveFn::log2_1p);

  std::string_view name() const override {
    return g_ == GMode::unit ? "numeric-u" : "numeric-w";
  }
  double value() const override;
  double gain(NodeId v) const override;
  double upper_bound(std::size_t k) const override;

 protected:
  void apply(NodeId v) override;
  void clear() override;

 private:
  double weight(NodeId v, std::size_t m) const;

  const NumericMatrix& prefs_;
  GMode g_;
  ConcaveFn f_;
  std::vector<double> g_values_;
  std::vector<double> accumulated_;
};

// --- construction by name ------------------------------------------------------------

enum class DiversityKind { aw, hamming, entropy, klass, numeric_u, numeric_w };

DiversityKind parse_diversity_kind(std::string_view name);
std::string_view diversity_kind_name(DiversityKind kind);

}  // namespace aditum
