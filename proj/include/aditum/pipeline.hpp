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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aditum/baselines.hpp"
#include "aditum/diversity.hpp"
#include "aditum/estimator.hpp"
#include "aditum/graph.hpp"
#include "aditum/metrics.hpp"
#include "aditum/profiles.hpp"
#include "aditum/selector.hpp"
#include "aditum/simulator.hpp"

namespace aditum {

struct ConfigKey {
  const char* name;
  const char* default_value;
  const char* help;
};

/// Flat key=value experiment configuration.  Every key has a default; an
/// unknown key is a UsageError that names all offending keys.
class Config {
 public:
  Config();

  static const std::vector<ConfigKey>& keys();

  void set(const std::string& key, const std::string& value);
  /// Applies many assignments, reporting every unknown key at once.
  void set_all(const std::vector<std::pair<std::string, std::string>>& pairs);
  /// `key = value` lines; `#` starts a comment line.
  void read(std::istream& in);
  void load_file(const std::string& path);

  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::size_t get_size(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  bool get_bool(const std::string& key) const;

  /// Every key in declaration order, `key=value` per line.
  void write(std::ostream& out) const;

 private:
  std::map<std::string, std::string> values_;
};

/// Everything loaded from the files a Config points at.
struct Dataset {
  DiffusionGraph graph;
  TargetSet targets;
  std::optional<ProfileSet> profiles;
  std::optional<ClassAssignment> classes;
  std::optional<NumericMatrix> preferences;
  std::string name;
};

Dataset load_dataset(const Config& config);
/// `top:<q>` keeps the top q percent by t; `threshold:<tau>` keeps t >= tau.
TargetSpec parse_target_spec(const std::string& text);

/// Owns the diversity function together with the index it may need.
struct DiversityBundle {
  std::unique_ptr<HammingBallIndex> balls;
  std::unique_ptr<DiversityFunction> function;
};

DiversityBundle make_diversity(const Config& config, const Dataset& data);

struct SelectOutcome {
  EstimationReport estimation;
  SeedResult result;
  double objective = 0.0;
  double objective_normalized = 0.0;
  std::optional<double> seed_entropy;
  std::optional<std::size_t> class_count;
  std::optional<SimulationReport> simulation;
  std::size_t corpus_members = 0;
  double estimate_ms = 0.0;
  double sample_ms = 0.0;
  double select_ms = 0.0;
};

/// Estimation, corpus sampling and selection, plus optional Monte Carlo
/// validation when mc_runs > 0.
SelectOutcome run_select(const Config& config, const Dataset& data);

/// Structured text result: [config], [summary], [trace] and, when asked,
/// [timing].  Everything outside [timing] is a function of the inputs.
void write_result_document(std::ostream& out, const Config& config,
                           const Dataset& data, const SelectOutcome& outcome,
                           bool include_timing);

/// Parsed sections of a result document: section → ordered key/value list.
using ResultDocument =
    std::map<std::string, std::vector<std::pair<std::string, std::string>>>;
ResultDocument read_result_document(std::istream& in);

/// CSV row in metrics_columns() order from a result document.
MetricsRow metrics_row_from_document(const ResultDocument& doc);

std::vector<NodeId> resolve_seeds(const DiffusionGraph& graph,
                                  const std::vector<std::string>& labels);

SimulationReport run_simulate(const Config& config, const Dataset& data,
                              const std::vector<NodeId>& seeds);
void write_simulation_report(std::ostream& out, const Config& config,
                             const Dataset& data,
                             const std::vector<NodeId>& seeds,
                             const SimulationReport& report);

void write_deg_d_report(std::ostream& out, const Config& config,
                        const Dataset& data);

void write_synth_profiles(std::ostream& out, const Config& config);
void write_synth_graph(std::ostream& edges, std::ostream* node_weights,
                       const Config& config);

}  // namespace aditum
