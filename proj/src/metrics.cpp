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

#include "aditum/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "aditum/diversity.hpp"
#include "aditum/error.hpp"
#include "text_util.hpp"

namespace aditum {

double seed_entropy(std::span<const NodeId> seeds, const ProfileSet& profiles) {
  if (seeds.empty()) throw UsageError("seed set is empty");
  std::vector<std::size_t> counts(profiles.schema().total_domain_size(), 0);
  std::size_t total = 0;
  for (NodeId v : seeds) {
    for (std::int32_t c : profiles.row(v)) {
      if (c == ProfileSet::kMissing) continue;
      ++counts[static_cast<std::size_t>(c)];
      ++total;
    }
  }
  if (total == 0) return 0.0;
  double entropy = 0.0;
  std::size_t present = 0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    ++present;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    entropy -= p * std::log2(p);
  }
  const double dom = static_cast<double>(counts.size());
  const double zeta =
      1.0 / (1.0 + std::log2(dom / static_cast<double>(present)));
  return std::max(0.0, entropy) * zeta;
}

double seed_overlap(std::span<const NodeId> a, std::span<const NodeId> b,
                    std::size_t k) {
  if (k == 0 || a.size() != k || b.size() != k) {
    throw UsageError("seed_overlap needs two sets of exactly k seeds");
  }
  const std::set<NodeId> left(a.begin(), a.end());
  std::size_t shared = 0;
  for (NodeId v : std::set<NodeId>(b.begin(), b.end())) {
    shared += left.count(v);
  }
  return static_cast<double>(shared) / static_cast<double>(k);
}

std::size_t class_count(std::span<const NodeId> seeds,
                        const ClassAssignment& classes) {
  std::set<std::int32_t> seen;
  for (NodeId v : seeds) {
    if (v >= classes.class_of.size()) throw UsageError("seed id out of range");
    if (classes.class_of[v] != ClassAssignment::kUnassigned) {
      seen.insert(classes.class_of[v]);
    }
  }
  return seen.size();
}

std::vector<CurveRow> diversity_curve(std::span<const CurvePoint> points,
                                      const Schema& schema, double lambda) {
  std::vector<CurveRow> rows;
  const auto sizes = schema.domain_sizes();
  for (const CurvePoint& p : points) {
    CurveRow row{p.k, p.alpha, p.diversity, 0.0, 0.0};
    row.maximum = aw_theoretical_max(p.k, sizes, schema.weights(), lambda);
    row.ratio = row.maximum > 0.0 ? p.diversity / row.maximum : 0.0;
    rows.push_back(row);
  }
  return rows;
}

void write_curve_csv(std::ostream& out, std::span<const CurveRow> rows) {
  out << "k,alpha,diversity,div_max,ratio\n";
  for (const CurveRow& r : rows) {
    out << r.k << ',' << detail::format_double(r.alpha) << ','
        << detail::format_double(r.diversity) << ','
        << detail::format_double(r.maximum) << ','
        << detail::format_double(r.ratio) << '\n';
  }
}

const std::vector<std::string>& metrics_columns() {
  static const std::vector<std::string> columns{
      "dataset",        "diversity",        "k",
      "alpha",          "target",           "master_seed",
      "theta",          "seed_count",       "expected_capital",
      "diversity_value", "diversity_max",   "objective",
      "seed_entropy",   "class_count",      "mc_capital",
      "seeds"};
  return columns;
}

void write_metrics_header(std::ostream& out) {
  const auto& columns = metrics_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << '\n';
}

void write_metrics_row(std::ostream& out, const MetricsRow& row) {
  using detail::format_double;
  out << row.dataset << ',' << row.diversity << ',' << row.k << ','
      << format_double(row.alpha) << ',' << row.target << ','
      << row.master_seed << ',' << row.theta << ',' << row.seed_count << ','
      << format_double(row.expected_capital) << ','
      << format_double(row.diversity_value) << ','
      << format_double(row.diversity_max) << ','
      << format_double(row.objective) << ','
      << format_double(row.seed_entropy) << ',' << row.class_count << ','
      << row.mc_capital << ',' << row.seeds << '\n';
}

}  // namespace aditum
