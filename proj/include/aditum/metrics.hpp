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
#include <span>
#include <string>
#include <vector>

#include "aditum/graph.hpp"
#include "aditum/profiles.hpp"

namespace aditum {

/// Shannon entropy (bits) of the value frequencies in the seeds' profiles,
/// times ζ = 1/(1 + log₂(|dom|/|dom(S)|)).  |dom| counts every declared
/// value.  Zero when the seeds carry no value at all.
double seed_entropy(std::span<const NodeId> seeds, const ProfileSet& profiles);

/// |S1 ∩ S2| / k.  Both sets must have exactly k members.
double seed_overlap(std::span<const NodeId> a, std::span<const NodeId> b,
                    std::size_t k);

/// Distinct classes among the seeds.
std::size_t class_count(std::span<const NodeId> seeds,
                        const ClassAssignment& classes);

struct CurvePoint {
  std::size_t k = 0;
  double alpha = 0.0;
  double diversity = 0.0;
};

struct CurveRow {
  std::size_t k = 0;
  double alpha = 0.0;
  double diversity = 0.0;
  double maximum = 0.0;
  double ratio = 0.0;
};

/// Attaches div*[k] and the achieved/maximum ratio to each point.
std::vector<CurveRow> diversity_curve(std::span<const CurvePoint> points,
                                      const Schema& schema, double lambda);

void write_curve_csv(std::ostream& out, std::span<const CurveRow> rows);

/// One experiment outcome in the fixed column order of metrics_columns().
struct MetricsRow {
  std::string dataset;
  std::string diversity;
  std::size_t k = 0;
  double alpha = 0.0;
  std::string target;
  std::uint64_t master_seed = 0;
  std::size_t theta = 0;
  std::size_t seed_count = 0;
  double expected_capital = 0.0;
  double diversity_value = 0.0;
  double diversity_max = 0.0;
  double objective = 0.0;
  double seed_entropy = 0.0;
  std::string class_count;  // empty when no class map was given
  std::string mc_capital;   // empty when no simulation was run
  std::string seeds;        // space separated labels
};

const std::vector<std::string>& metrics_columns();
void write_metrics_header(std::ostream& out);
void write_metrics_row(std::ostream& out, const MetricsRow& row);

}  // namespace aditum
