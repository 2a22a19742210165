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

#include "aditum/diversity.hpp"

#include <algorithm>
#include <cmath>

#include "aditum/error.hpp"
#include "aditum/parallel.hpp"

namespace aditum {

DiversityFunction::DiversityFunction(std::size_t node_count)
    : committed_(node_count, 0) {}

void DiversityFunction::commit(NodeId v) {
  if (v >= committed_.size()) throw UsageError("node id out of range");
  if (committed_[v]) {
    throw UsageError("node " + std::to_string(v) + " committed twice");
  }
  apply(v);
  committed_[v] = 1;
  seeds_.push_back(v);
}

void DiversityFunction::reset() {
  clear();
  std::fill(committed_.begin(), committed_.end(), 0);
  seeds_.clear();
}

// --- attribute-wise ---------------------------------------------------------

AttributeWiseDiversity::AttributeWiseDiversity(const ProfileSet& profiles,
                                               double lambda)
    : DiversityFunction(profiles.node_count()),
      profiles_(profiles),
      lambda_(lambda),
      counts_(profiles.schema().total_domain_size(), 0) {
  if (!(lambda >= 1.0)) throw UsageError("lambda must be >= 1");
}

double AttributeWiseDiversity::gain(NodeId v) const {
  const Schema& schema = profiles_.schema();
  double g = 0.0;
  const auto row = profiles_.row(v);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == ProfileSet::kMissing) continue;
    const double n = static_cast<double>(counts_[static_cast<std::size_t>(row[j])]);
    g += schema.weight(j) * std::pow(n + 1.0, -lambda_);
  }
  return g;
}

void AttributeWiseDiversity::apply(NodeId v) {
  value_ += gain(v);
  for (std::int32_t c : profiles_.row(v)) {
    if (c != ProfileSet::kMissing) ++counts_[static_cast<std::size_t>(c)];
  }
}

void AttributeWiseDiversity::clear() {
  std::fill(counts_.begin(), counts_.end(), 0);
  value_ = 0.0;
}

double AttributeWiseDiversity::upper_bound(std::size_t k) const {
  const Schema& schema = profiles_.schema();
  const auto sizes = schema.domain_sizes();
  return aw_theoretical_max(k, sizes, schema.weights(), lambda_);
}

double aw_theoretical_max(std::size_t k, std::span<const std::size_t> domain_sizes,
                          std::span<const double> weights, double lambda) {
  if (domain_sizes.size() != weights.size()) {
    throw UsageError("one weight per attribute required");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < domain_sizes.size(); ++j) {
    const std::size_t d = domain_sizes[j];
    if (d == 0) throw UsageError("empty domain");
    const std::size_t full = k / d;
    double harmonic = 0.0;
    for (std::size_t i = 1; i <= full; ++i) {
      harmonic += std::pow(static_cast<double>(i), -lambda);
    }
    const double rest = static_cast<double>(k % d) *
                        std::pow(static_cast<double>(full + 1), -lambda);
    total += weights[j] * (static_cast<double>(d) * harmonic + rest);
  }
  return total;
}

// --- Hamming balls --------------------------------------------------------------

std::size_t hamming_distance(const ProfileSet& profiles, NodeId u, NodeId v) {
  const auto a = profiles.row(u);
  const auto b = profiles.row(v);
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    d += (a[j] == ProfileSet::kMissing || a[j] != b[j]);
  }
  return d;
}

HammingBallIndex::HammingBallIndex(const DiffusionGraph& graph,
                                   const ProfileSet& profiles,
                                   std::size_t radius)
    : graph_(graph),
      profiles_(profiles),
      radius_(radius),
      once_(new std::once_flag[graph.node_count()]),
      balls_(graph.node_count()) {
  if (radius == 0) throw UsageError("Hamming radius must be >= 1");
  if (profiles.node_count() != graph.node_count()) {
    throw ConfigError("profile count differs from graph node count");
  }
}

const std::vector<NodeId>& HammingBallIndex::ball(NodeId v) const {
  std::call_once(once_[v], [&] { balls_[v] = build(v); });
  return balls_[v];
}

void HammingBallIndex::precompute(unsigned workers) const {
  parallel_chunks(node_count(), workers,
                  [&](unsigned, std::size_t begin, std::size_t end) {
                    for (std::size_t v = begin; v < end; ++v) {
                      ball(static_cast<NodeId>(v));
                    }
                  });
}

std::vector<NodeId> HammingBallIndex::build(NodeId v) const {
  std::vector<char> seen(graph_.node_count(), 0);
  std::vector<NodeId> frontier{v};
  std::vector<NodeId> out;
  seen[v] = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.back();
    frontier.pop_back();
    for (NodeId w : graph_.out_neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      frontier.push_back(w);
      if (hamming_distance(profiles_, w, v) <= radius_) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HammingDiversity::HammingDiversity(const HammingBallIndex& index)
    : DiversityFunction(index.node_count()),
      index_(index),
      covered_(index.node_count(), 0) {}

double HammingDiversity::gain(NodeId v) const {
  std::size_t fresh = 0;
  for (NodeId u : index_.ball(v)) fresh += !covered_[u];
  return static_cast<double>(fresh);
}

void HammingDiversity::apply(NodeId v) {
  for (NodeId u : index_.ball(v)) {
    if (!covered_[u]) {
      covered_[u] = 1;
      ++covered_count_;
    }
  }
}

void HammingDiversity::clear() {
  std::fill(covered_.begin(), covered_.end(), 0);
  covered_count_ = 0;
}

double HammingDiversity::upper_bound(std::size_t) const {
  return static_cast<double>(index_.node_count());
}

// --- entropy ----------------------------------------------------------------------

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

EntropyDiversity::EntropyDiversity(const ProfileSet& profiles)
    : DiversityFunction(profiles.node_count()), profiles_(profiles) {
  clear();
}

void EntropyDiversity::clear() {
  group_of_.assign(profiles_.schema().total_domain_size(), 0);
  group_mass_.assign(1, profiles_.total_value_count());
  value_ = 0.0;
}

void EntropyDiversity::touched(NodeId v, std::vector<Touch>& out) const {
  out.clear();
  for (std::int32_t c : profiles_.row(v)) {
    if (c == ProfileSet::kMissing) continue;
    const auto a = static_cast<std::size_t>(c);
    const std::size_t mass = profiles_.global_count(a);
    if (mass == 0) continue;
    const std::uint32_t g = group_of_[a];
    auto it = std::find_if(out.begin(), out.end(),
                           [g](const Touch& t) { return t.group == g; });
    if (it == out.end()) {
      out.push_back({g, mass});
    } else {
      it->mass_in += mass;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Touch& a, const Touch& b) { return a.group < b.group; });
}

double EntropyDiversity::gain(NodeId v) const {
  const double total = static_cast<double>(profiles_.total_value_count());
  if (total == 0.0) return 0.0;
  std::vector<Touch> touches;
  touched(v, touches);
  // Splitting a group of mass M into (m, M - m) adds M·H(m/M) bits.
  double bits = 0.0;
  for (const Touch& t : touches) {
    const double whole = static_cast<double>(group_mass_[t.group]);
    const double in = static_cast<double>(t.mass_in);
    bits += xlog2x(whole) - xlog2x(in) - xlog2x(whole - in);
  }
  return std::max(0.0, bits / total);
}

void EntropyDiversity::apply(NodeId v) {
  std::vector<Touch> touches;
  touched(v, touches);
  value_ += gain(v);
  for (const Touch& t : touches) {
    if (t.mass_in == group_mass_[t.group]) continue;
    const auto fresh = static_cast<std::uint32_t>(group_mass_.size());
    group_mass_.push_back(t.mass_in);
    group_mass_[t.group] -= t.mass_in;
    for (std::int32_t c : profiles_.row(v)) {
      if (c == ProfileSet::kMissing) continue;
      const auto a = static_cast<std::size_t>(c);
      if (group_of_[a] == t.group && profiles_.global_count(a) != 0) {
        group_of_[a] = fresh;
      }
    }
  }
}

double EntropyDiversity::upper_bound(std::size_t) const {
  return std::log2(static_cast<double>(profiles_.schema().total_domain_size()));
}

std::vector<std::size_t> EntropyDiversity::group_masses() const {
  std::vector<std::size_t> out;
  for (std::size_t m : group_mass_) {
    if (m != 0) out.push_back(m);
  }
  return out;
}

// --- classes ------------------------------------------------------------------------

double apply_concave(ConcaveFn f, double x) {
  return f == ConcaveFn::log2_1p ? std::log2(1.0 + x) : std::sqrt(x);
}

double concave_increment(ConcaveFn f, double x, double delta) {
  if (delta <= 0.0) return 0.0;
  if (f == ConcaveFn::log2_1p) return std::log2(1.0 + delta / (1.0 + x));
  return delta / (std::sqrt(x + delta) + std::sqrt(x));
}

ClassDiversity::ClassDiversity(const ClassAssignment& classes,
                               std::size_t node_count, ConcaveFn f)
    : DiversityFunction(node_count),
      classes_(classes),
      f_(f),
      accumulated_(classes.class_count(), 0.0) {
  if (classes.class_of.size() != node_count ||
      classes.reward.size() != node_count) {
    throw ConfigError("class map does not cover the graph");
  }
  for (NodeId v = 0; v < node_count; ++v) {
    const std::int32_t c = classes.class_of[v];
    if (c == ClassAssignment::kUnassigned) {
      throw ConfigError("node " + std::to_string(v) + " has no class");
    }
    if (static_cast<std::size_t>(c) >= classes.class_count()) {
      throw ConfigError("class id out of range");
    }
    if (!(classes.reward[v] > 0.0)) throw ConfigError("rewards must be > 0");
    max_reward_ = std::max(max_reward_, classes.reward[v]);
  }
}

double ClassDiversity::value() const {
  double total = 0.0;
  for (double r : accumulated_) total += apply_concave(f_, r);
  return total;
}

double ClassDiversity::gain(NodeId v) const {
  const auto c = static_cast<std::size_t>(classes_.class_of[v]);
  return concave_increment(f_, accumulated_[c], classes_.reward[v]);
}

void ClassDiversity::apply(NodeId v) {
  accumulated_[static_cast<std::size_t>(classes_.class_of[v])] +=
      classes_.reward[v];
}

void ClassDiversity::clear() {
  std::fill(accumulated_.begin(), accumulated_.end(), 0.0);
}

double ClassDiversity::upper_bound(std::size_t k) const {
  // k seeds in k distinct classes, each with the largest reward.
  return static_cast<double>(k) * apply_concave(f_, max_reward_);
}

std::size_t ClassDiversity::classes_hit() const {
  return static_cast<std::size_t>(
      std::count_if(accumulated_.begin(), accumulated_.end(),
                    [](double r) { return r > 0.0; }));
}

// --- numeric preferences --------------------------------------------------------------

NumericDiversity::NumericDiversity(const NumericMatrix& preferences,
                                   const DiffusionGraph& graph, GMode g,
                                   ConcaveFn f)
    : DiversityFunction(graph.node_count()),
      prefs_(preferences),
      g_(g),
      f_(f),
      g_values_(graph.node_count(), 1.0),
      accumulated_(preferences.cols, 0.0) {
  if (preferences.rows != graph.node_count()) {
    throw ConfigError("preference matrix has " +
                      std::to_string(preferences.rows) + " rows for " +
                      std::to_string(graph.node_count()) + " nodes");
  }
  if (g == GMode::degree) {
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      g_values_[v] = static_cast<double>(graph.out_degree(v));
    }
  }
  for (double x : preferences.data) {
    if (x < 0.0) throw ConfigError("preferences must be non-negative");
  }
}

double NumericDiversity::weight(NodeId v, std::size_t m) const {
  const double w = prefs_.at(v, m);
  return std::isnan(w) ? 0.0 : w * g_values_[v];
}

double NumericDiversity::value() const {
  double total = 0.0;
  for (double x : accumulated_) total += apply_concave(f_, x);
  return total;
}

double NumericDiversity::gain(NodeId v) const {
  double g = 0.0;
  for (std::size_t m = 0; m < accumulated_.size(); ++m) {
    g += concave_increment(f_, accumulated_[m], weight(v, m));
  }
  return g;
}

void NumericDiversity::apply(NodeId v) {
  for (std::size_t m = 0; m < accumulated_.size(); ++m) {
    accumulated_[m] += weight(v, m);
  }
}

void NumericDiversity::clear() {
  std::fill(accumulated_.begin(), accumulated_.end(), 0.0);
}

double NumericDiversity::upper_bound(std::size_t k) const {
  const double g_max =
      g_values_.empty() ? 0.0
                        : *std::max_element(g_values_.begin(), g_values_.end());
  return static_cast<double>(accumulated_.size()) *
         apply_concave(f_, static_cast<double>(k) * g_max);
}

// --- names ---------------------------------------------------------------------------

DiversityKind parse_diversity_kind(std::string_view name) {
  if (name == "aw") return DiversityKind::aw;
  if (name == "hamming") return DiversityKind::hamming;
  if (name == "entropy") return DiversityKind::entropy;
  if (name == "class") return DiversityKind::klass;
  if (name == "numeric-u") return DiversityKind::numeric_u;
  if (name == "numeric-w") return DiversityKind::numeric_w;
  throw UsageError("unknown diversity function '" + std::string(name) +
                   "' (aw | hamming | entropy | class | numeric-u | numeric-w)");
}

std::string_view diversity_kind_name(DiversityKind kind) {
  switch (kind) {
    case DiversityKind::aw: return "aw";
    case DiversityKind::hamming: return "hamming";
    case DiversityKind::entropy: return "entropy";
    case DiversityKind::klass: return "class";
    case DiversityKind::numeric_u: return "numeric-u";
    case DiversityKind::numeric_w: return "numeric-w";
  }
  return "?";
}

}  // namespace aditum
