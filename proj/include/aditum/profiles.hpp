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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aditum/graph.hpp"

namespace aditum {

/// Qualified value id: unique across all attribute domains, so value "3" of
/// attribute 1 and value "3" of attribute 2 never collide.
using ValueId = std::uint32_t;

/// Ordered categorical attributes, their domains and mixing weights ω_j.
class Schema {
 public:
  Schema() = default;
  /// Empty `weights` means uniform 1/m.  Weights must lie in [0,1] and sum
  /// to one within 1e-9.
  Schema(std::vector<std::string> names,
         std::vector<std::vector<std::string>> domains,
         std::vector<double> weights = {});

  std::size_t attribute_count() const { return names_.size(); }
  const std::string& name(std::size_t j) const { return names_[j]; }
  std::optional<std::size_t> attribute_index(std::string_view name) const;

  std::size_t domain_size(std::size_t j) const { return domains_[j].size(); }
  std::vector<std::size_t> domain_sizes() const;
  /// |dom|, the size of the union of all domains.
  std::size_t total_domain_size() const { return offsets_.back(); }
  const std::string& value_label(std::size_t j, std::size_t index) const {
    return domains_[j][index];
  }
  std::optional<std::size_t> value_index(std::size_t j,
                                         std::string_view label) const;

  ValueId qualify(std::size_t j, std::size_t index) const {
    return static_cast<ValueId>(offsets_[j] + index);
  }
  std::size_t attribute_of(ValueId a) const;

  double weight(std::size_t j) const { return weights_[j]; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> domains_;
  std::vector<double> weights_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::unordered_map<std::string, std::size_t>> lookup_;
};

/// Per-node categorical tuples A[v] with missing values, plus the global
/// frequency of every qualified value across the profile set.
class ProfileSet {
 public:
  static constexpr std::int32_t kMissing = -1;

  ProfileSet() = default;
  /// All cells start missing.
  ProfileSet(Schema schema, std::size_t node_count);

  const Schema& schema() const { return schema_; }
  std::size_t node_count() const { return node_count_; }
  std::size_t attribute_count() const { return schema_.attribute_count(); }

  /// Sets (or clears, with nullopt) the value index of attribute j for v.
  void set(NodeId v, std::size_t j, std::optional<std::size_t> value_index);

  /// Qualified value of attribute j, or kMissing.
  std::int32_t cell(NodeId v, std::size_t j) const {
    return cells_[static_cast<std::size_t>(v) * attribute_count() + j];
  }
  std::span<const std::int32_t> row(NodeId v) const {
    return {cells_.data() + static_cast<std::size_t>(v) * attribute_count(),
            attribute_count()};
  }
  /// |A[v]|, the number of non-missing attributes.
  std::size_t length(NodeId v) const;
  /// Non-missing qualified values of v in attribute order.
  std::vector<ValueId> values(NodeId v) const;

  std::size_t global_count(ValueId a) const { return global_counts_[a]; }
  std::span<const std::size_t> global_counts() const { return global_counts_; }
  /// Number of non-missing cells, Σ_a global_count(a).
  std::size_t total_value_count() const { return total_values_; }

  friend bool operator==(const ProfileSet& a, const ProfileSet& b) {
    return a.node_count_ == b.node_count_ && a.cells_ == b.cells_;
  }

 private:
  Schema schema_;
  std::size_t node_count_ = 0;
  std::vector<std::int32_t> cells_;
  std::vector<std::size_t> global_counts_;
  std::size_t total_values_ = 0;
};

// --- schema and profile files --------------------------------------------

/// Schema text: one attribute per line, `name[@weight] value value ...`.
Schema read_schema(std::istream& in);
Schema load_schema_file(const std::string& path);
void write_schema(std::ostream& out, const Schema& schema);

/// Profile CSV: header row of attribute names, optionally led by a `node`
/// column holding graph labels; empty cells are missing.  Without a node
/// column row i describes dense node i.  `graph` may be null, in which case
/// the node count equals the row count and a node column is rejected.
ProfileSet read_profiles(std::istream& in, const Schema& schema,
                         const DiffusionGraph* graph);
/// Same as read_profiles but builds the schema from the values present
/// (domains in order of first appearance, uniform weights).
ProfileSet read_profiles_infer_schema(std::istream& in,
                                      const DiffusionGraph* graph);
ProfileSet load_profiles_file(const std::string& path,
                              const Schema* schema,
                              const DiffusionGraph* graph);
/// Writes the CSV read_profiles understands.  With a graph the node column
/// carries its labels.
void write_profiles(std::ostream& out, const ProfileSet& profiles,
                    const DiffusionGraph* graph);

// --- synthesis ------------------------------------------------------------

enum class ValueDistribution { uniform, exponential };

/// One value per attribute and node.  Uniform draws an index in 1..n_i;
/// exponential draws e ~ Exp(1), maps it to ⌈e⌉ and rejects indices above
/// n_i.  Attributes are named A1..Am and values "1".."n_i".
ProfileSet synth_profiles(std::size_t node_count,
                          std::span<const std::size_t> domain_sizes,
                          ValueDistribution distribution,
                          std::uint64_t seed);

// --- numeric attributes -----------------------------------------------------

/// Dense node x column matrix of reals; NaN marks a missing cell.
struct NumericMatrix {
  std::vector<std::string> column_names;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  NumericMatrix() = default;
  NumericMatrix(std::size_t r, std::size_t c);
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// CSV of reals.  A first row containing a non-numeric cell is a header;
/// a header starting with `node` keys rows by graph label.  Empty cells
/// are NaN.
NumericMatrix read_numeric_csv(std::istream& in, const DiffusionGraph* graph);
NumericMatrix load_numeric_file(const std::string& path,
                                const DiffusionGraph* graph);

/// Maps each column onto labels 1..bins by empirical quantiles.  Boundary b
/// is the ⌈b·n/bins⌉-th smallest value; a value equal to a boundary stays
/// in the lower bin.  NaN cells become missing.
ProfileSet quantile_discretize(const NumericMatrix& matrix, std::size_t bins);

/// Scales every row by its maximum into [0,1]; all-zero rows stay zero.
NumericMatrix derive_numeric_preferences(const NumericMatrix& matrix);

// --- class partition --------------------------------------------------------

/// Node → class map with per-node selection rewards r_j > 0.
struct ClassAssignment {
  static constexpr std::int32_t kUnassigned = -1;
  std::vector<std::int32_t> class_of;
  std::vector<double> reward;
  std::vector<std::string> class_names;

  std::size_t class_count() const { return class_names.size(); }
};

/// `node class [reward]` lines; rewards default to 1.  Nodes not listed
/// stay unassigned (class diversity refuses them).
ClassAssignment read_class_map(std::istream& in, const DiffusionGraph& graph);
ClassAssignment load_class_map_file(const std::string& path,
                                    const DiffusionGraph& graph);

/// Groups identical profiles, then folds the distinct profiles (in order of
/// first appearance) onto at most h classes round-robin.  Unit rewards.
ClassAssignment classes_from_profiles(const ProfileSet& profiles,
                                      std::size_t class_limit);

}  // namespace aditum
