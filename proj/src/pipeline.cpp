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

#include "aditum/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "aditum/error.hpp"
#include "aditum/sampler.hpp"
#include "text_util.hpp"

namespace aditum {

// --- config -------------------------------------------------------------------

const std::vector<ConfigKey>& Config::keys() {
  static const std::vector<ConfigKey> table{
      {"graph", "", "edge list path (src dst [weight])"},
      {"weights", "uniform", "edge weights: explicit | uniform | interaction"},
      {"node_weights", "", "node target score file (node t)"},
      {"scores", "unit", "target scores without a file: unit | indegree"},
      {"target", "top:100", "target set: top:<percent> | threshold:<tau>"},
      {"profiles", "", "categorical profile CSV"},
      {"schema", "", "schema file; inferred from the profiles when empty"},
      {"numeric", "", "numeric attribute CSV, discretized into bins"},
      {"bins", "10", "quantile bins for numeric attributes"},
      {"classes", "", "class map file (node class [reward])"},
      {"class_limit", "0", "derive at most this many classes from profiles"},
      {"preferences", "", "numeric preference CSV for numeric-u/w and deg-d"},
      {"dataset", "", "dataset name in outputs; defaults to the graph stem"},
      {"model", "ic", "diffusion model: ic | lt"},
      {"diversity", "aw",
       "aw | hamming | entropy | class | numeric-u | numeric-w"},
      {"k", "10", "budget"},
      {"alpha", "0.5", "capital weight in [0,1]"},
      {"epsilon", "0.1", "accuracy of the RR-set bound"},
      {"ell", "1", "confidence exponent"},
      {"lambda", "1", "attribute-wise decay exponent"},
      {"xi", "1", "Hamming ball radius"},
      {"concave", "log2_1p", "concave f for class/numeric: log2_1p | sqrt"},
      {"seed", "1", "master RNG seed"},
      {"workers", "1", "worker threads (0 = all cores)"},
      {"theta", "0", "fixed number of RR sets (0 = estimate)"},
      {"theta_cap", "20000000", "upper limit for the estimated theta"},
      {"lazy", "true", "lazy greedy evaluation"},
      {"normalize", "false", "mix normalized capital and diversity"},
      {"precompute_balls", "false", "build every Hamming ball up front"},
      {"mc_runs", "0", "Monte Carlo runs validating the selection"},
      {"runs", "10000", "Monte Carlo runs of the simulate command"},
      {"gamma", "0.5", "Deg-D diversity weight"},
      {"g_mode", "unit", "Deg-D node weight: unit | degree"},
      {"nodes", "1000", "synth: node count"},
      {"avg_degree", "5", "synth: average out-degree"},
      {"attributes", "10", "synth: attribute count"},
      {"domain", "10", "synth: values per attribute"},
      {"distribution", "uniform", "synth: uniform | exponential"},
  };
  return table;
}

Config::Config() {
  for (const ConfigKey& key : keys()) values_[key.name] = key.default_value;
}

void Config::set(const std::string& key, const std::string& value) {
  set_all({{key, value}});
}

void Config::set_all(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string unknown;
  for (const auto& [key, value] : pairs) {
    if (!values_.count(key)) unknown += (unknown.empty() ? "" : ", ") + key;
  }
  if (!unknown.empty()) throw UsageError("unknown config keys: " + unknown);
  for (const auto& [key, value] : pairs) values_[key] = value;
}

void Config::read(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected key=value");
    }
    pairs.emplace_back(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  set_all(pairs);
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  read(in);
}

const std::string& Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("unknown config key '" + key + "'");
  return it->second;
}

double Config::get_double(const std::string& key) const {
  const auto x = detail::parse_double(get(key));
  if (!x) throw UsageError(key + ": '" + get(key) + "' is not a number");
  return *x;
}

std::uint64_t Config::get_u64(const std::string& key) const {
  const std::string& text = get(key);
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(key + ": '" + text + "' is not a non-negative integer");
  }
  return value;
}

std::size_t Config::get_size(const std::string& key) const {
  return static_cast<std::size_t>(get_u64(key));
}

bool Config::get_bool(const std::string& key) const {
  const std::string& text = get(key);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UsageError(key + ": '" + text + "' is not a boolean");
}

void Config::write(std::ostream& out) const {
  for (const ConfigKey& key : keys()) {
    out << key.name << '=' << values_.at(key.name) << '\n';
  }
}

// --- dataset --------------------------------------------------------------------

namespace {

WeightMode parse_weight_mode(const std::string& text) {
  if (text == "explicit") return WeightMode::explicit_weights;
  if (text == "uniform") return WeightMode::uniform_indegree;
  if (text == "interaction") return WeightMode::interaction;
  throw UsageError("weights: '" + text +
                   "' (explicit | uniform | interaction)");
}

ConcaveFn parse_concave(const std::string& text) {
  if (text == "log2_1p") return ConcaveFn::log2_1p;
  if (text == "sqrt") return ConcaveFn::sqrt;
  throw UsageError("concave: '" + text + "' (log2_1p | sqrt)");
}

GMode parse_g_mode(const std::string& text) {
  if (text == "unit") return GMode::unit;
  if (text == "degree") return GMode::degree;
  throw UsageError("g_mode: '" + text + "' (unit | degree)");
}

std::string stem(const std::string& path) {
  std::string name = path.substr(path.find_last_of('/') + 1);
  const auto dot = name.find('.');
  return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

std::string join_labels(const DiffusionGraph& graph,
                        std::span<const NodeId> seeds) {
  std::string out;
  for (NodeId v : seeds) {
    if (!out.empty()) out += ' ';
    out += graph.label(v);
  }
  return out;
}

}  // namespace

TargetSpec parse_target_spec(const std::string& text) {
  const auto colon = text.find(':');
  const auto value = colon == std::string::npos
                         ? std::nullopt
                         : detail::parse_double(text.substr(colon + 1));
  if (value) {
    const std::string mode = text.substr(0, colon);
    if (mode == "top") return TargetSpec::top_percent(*value);
    if (mode == "threshold") return TargetSpec::threshold(*value);
  }
  throw UsageError("target: '" + text + "' (top:<percent> | threshold:<tau>)");
}

Dataset load_dataset(const Config& config) {
  Dataset data;
  const std::string& graph_path = config.get("graph");
  if (graph_path.empty()) throw UsageError("no graph given (key 'graph')");
  data.graph =
      load_graph_file(graph_path, parse_weight_mode(config.get("weights")));
  data.name = config.get("dataset").empty() ? stem(graph_path)
                                            : config.get("dataset");

  if (!config.get("node_weights").empty()) {
    load_node_weights_file(config.get("node_weights"), data.graph);
  } else if (config.get("scores") == "indegree") {
    data.graph.set_target_scores(indegree_target_scores(data.graph));
  } else if (config.get("scores") != "unit") {
    throw UsageError("scores: '" + config.get("scores") + "' (unit | indegree)");
  }
  data.targets =
      select_targets(data.graph, parse_target_spec(config.get("target")));

  if (!config.get("profiles").empty()) {
    std::optional<Schema> schema;
    if (!config.get("schema").empty()) {
      schema = load_schema_file(config.get("schema"));
    }
    data.profiles = load_profiles_file(config.get("profiles"),
                                       schema ? &*schema : nullptr, &data.graph);
  } else if (!config.get("numeric").empty()) {
    data.profiles = quantile_discretize(
        load_numeric_file(config.get("numeric"), &data.graph),
        config.get_size("bins"));
  }

  if (!config.get("classes").empty()) {
    data.classes = load_class_map_file(config.get("classes"), data.graph);
  } else if (config.get_size("class_limit") > 0 && data.profiles) {
    data.classes =
        classes_from_profiles(*data.profiles, config.get_size("class_limit"));
  }

  if (!config.get("preferences").empty()) {
    data.preferences = derive_numeric_preferences(
        load_numeric_file(config.get("preferences"), &data.graph));
  }
  return data;
}

DiversityBundle make_diversity(const Config& config, const Dataset& data) {
  const DiversityKind kind = parse_diversity_kind(config.get("diversity"));
  const auto need_profiles = [&]() -> const ProfileSet& {
    if (!data.profiles) {
      throw ConfigError(std::string(diversity_kind_name(kind)) +
                        " diversity needs profiles (key 'profiles' or "
                        "'numeric')");
    }
    return *data.profiles;
  };
  const ConcaveFn f = parse_concave(config.get("concave"));
  DiversityBundle bundle;
  switch (kind) {
    case DiversityKind::aw:
      bundle.function = std::make_unique<AttributeWiseDiversity>(
          need_profiles(), config.get_double("lambda"));
      break;
    case DiversityKind::hamming: {
      bundle.balls = std::make_unique<HammingBallIndex>(
          data.graph, need_profiles(), config.get_size("xi"));
      if (config.get_bool("precompute_balls")) {
        bundle.balls->precompute(
            static_cast<unsigned>(config.get_size("workers")));
      }
      bundle.function = std::make_unique<HammingDiversity>(*bundle.balls);
      break;
    }
    case DiversityKind::entropy:
      bundle.function = std::make_unique<EntropyDiversity>(need_profiles());
      break;
    case DiversityKind::klass:
      if (!data.classes) {
        throw ConfigError(
            "class diversity needs a class map (key 'classes') or "
            "class_limit > 0 with profiles");
      }
      bundle.function = std::make_unique<ClassDiversity>(
          *data.classes, data.graph.node_count(), f);
      break;
    case DiversityKind::numeric_u:
    case DiversityKind::numeric_w:
      if (!data.preferences) {
        throw ConfigError("numeric diversity needs preferences");
      }
      bundle.function = std::make_unique<NumericDiversity>(
          *data.preferences, data.graph,
          kind == DiversityKind::numeric_u ? GMode::unit : GMode::degree, f);
      break;
  }
  if (data.profiles && data.profiles->node_count() != data.graph.node_count() &&
      kind != DiversityKind::klass && kind != DiversityKind::numeric_u &&
      kind != DiversityKind::numeric_w) {
    throw ConfigError("profile count differs from graph node count");
  }
  return bundle;
}

// --- select ---------------------------------------------------------------------

SelectOutcome run_select(const Config& config, const Dataset& data) {
  const DiffusionModel model = parse_model(config.get("model"));
  const unsigned workers = static_cast<unsigned>(config.get_size("workers"));
  const std::uint64_t seed = config.get_u64("seed");
  SelectOutcome outcome;

  EstimationParams params;
  params.epsilon = config.get_double("epsilon");
  params.ell = config.get_double("ell");
  params.k = config.get_size("k");
  params.theta_cap = config.get_size("theta_cap");
  if (config.get_size("theta") > 0) params.theta_override = config.get_size("theta");
  params.master_seed = seed;
  params.workers = workers;

  DiversityBundle diversity = make_diversity(config, data);

  auto start = std::chrono::steady_clock::now();
  outcome.estimation = estimate_theta(data.graph, data.targets, model, params);
  outcome.estimate_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  const RRCorpus corpus = generate_corpus(
      data.graph, data.targets, model,
      {outcome.estimation.theta, seed, StreamPurpose::rr_corpus, workers});
  outcome.corpus_members = corpus.total_members();
  outcome.sample_ms = elapsed_ms(start);

  SelectorOptions options;
  options.k = params.k;
  options.alpha = config.get_double("alpha");
  options.lazy = config.get_bool("lazy");
  options.normalize = config.get_bool("normalize");
  start = std::chrono::steady_clock::now();
  outcome.result =
      build_seed_set(corpus, data.targets, *diversity.function, options);
  outcome.select_ms = elapsed_ms(start);
  for (const std::string& w : outcome.estimation.warnings) {
    outcome.result.warnings.insert(outcome.result.warnings.begin(), w);
  }

  outcome.objective = objective_value(outcome.result, options.alpha, false);
  outcome.objective_normalized =
      objective_value(outcome.result, options.alpha, true);
  if (data.profiles && !outcome.result.seeds.empty()) {
    outcome.seed_entropy = seed_entropy(outcome.result.seeds, *data.profiles);
  }
  if (data.classes) {
    outcome.class_count = class_count(outcome.result.seeds, *data.classes);
  }
  const std::size_t mc_runs = config.get_size("mc_runs");
  if (mc_runs > 0 && !outcome.result.seeds.empty()) {
    outcome.simulation = simulate(data.graph, data.targets, model,
                                  outcome.result.seeds, mc_runs, seed, workers);
  }
  return outcome;
}

void write_result_document(std::ostream& out, const Config& config,
                           const Dataset& data, const SelectOutcome& outcome,
                           bool include_timing) {
  using detail::format_double;
  const SeedResult& r = outcome.result;
  out << "# aditum result\n[config]\n";
  // workers changes scheduling only, so documents stay identical across it.
  for (const ConfigKey& key : Config::keys()) {
    if (std::string_view(key.name) != "workers") out << key.name << '=' << config.get(key.name) << '\n';
  }
  out << "[summary]\n";
  out << "dataset=" << data.name << '\n';
  out << "nodes=" << data.graph.node_count() << '\n';
  out << "edges=" << data.graph.edge_count() << '\n';
  out << "target_size=" << data.targets.size() << '\n';
  out << "total_score=" << format_double(data.targets.total_score) << '\n';
  out << "seeds=" << join_labels(data.graph, r.seeds) << '\n';
  out << "seed_count=" << r.seeds.size() << '\n';
  out << "theta=" << r.theta << '\n';
  out << "theta_capped=" << (outcome.estimation.capped ? "true" : "false")
      << '\n';
  out << "kpt_star=" << format_double(outcome.estimation.kpt_star) << '\n';
  out << "kpt_plus=" << format_double(outcome.estimation.kpt_plus) << '\n';
  out << "rr_members=" << outcome.corpus_members << '\n';
  out << "covered_sets=" << r.covered_sets.size() << '\n';
  out << "covered_root_score=" << format_double(r.covered_root_score) << '\n';
  out << "expected_capital=" << format_double(r.expected_capital) << '\n';
  out << "diversity_value=" << format_double(r.diversity) << '\n';
  out << "diversity_max=" << format_double(r.diversity_bound) << '\n';
  out << "objective=" << format_double(outcome.objective) << '\n';
  out << "objective_normalized=" << format_double(outcome.objective_normalized)
      << '\n';
  out << "seed_entropy="
      << (outcome.seed_entropy ? format_double(*outcome.seed_entropy) : "")
      << '\n';
  out << "class_count="
      << (outcome.class_count ? std::to_string(*outcome.class_count) : "")
      << '\n';
  if (outcome.simulation) {
    const SimulationReport& s = *outcome.simulation;
    out << "mc_runs=" << s.runs << '\n';
    out << "mc_capital=" << format_double(s.mean_capital) << '\n';
    out << "mc_capital_stderr=" << format_double(s.stderr_capital) << '\n';
    out << "mc_spread=" << format_double(s.mean_spread) << '\n';
    out << "mc_spread_stderr=" << format_double(s.stderr_spread) << '\n';
  } else {
    out << "mc_runs=0\nmc_capital=\nmc_capital_stderr=\nmc_spread=\n"
           "mc_spread_stderr=\n";
  }
  std::string warnings;
  for (const std::string& w : r.warnings) {
    warnings += (warnings.empty() ? "" : "; ") + w;
  }
  out << "warnings=" << warnings << '\n';
  out << "[trace]\n";
  out << "iteration,seed,capital_gain,diversity_gain,combined,evaluations\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const IterationTrace& t = r.trace[i];
    out << i + 1 << ',' << data.graph.label(t.seed) << ','
        << format_double(t.capital_gain) << ','
        << format_double(t.diversity_gain) << ',' << format_double(t.combined)
        << ',' << t.evaluations << '\n';
  }
  if (include_timing) {
    out << "[timing]\n";
    out << "estimate_ms=" << format_double(outcome.estimate_ms) << '\n';
    out << "sample_ms=" << format_double(outcome.sample_ms) << '\n';
    out << "select_ms=" << format_double(outcome.select_ms) << '\n';
  }
}

ResultDocument read_result_document(std::istream& in) {
  ResultDocument doc;
  std::string section;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      doc[section];
      continue;
    }
    if (section.empty()) throw FormatError("result line outside a section");
    const auto eq = line.find('=');
    if (section == "trace" || eq == std::string::npos) {
      doc[section].emplace_back("", line);
    } else {
      doc[section].emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
  }
  if (!doc.count("config") || !doc.count("summary")) {
    throw FormatError("not a result document (missing [config] or [summary])");
  }
  return doc;
}

MetricsRow metrics_row_from_document(const ResultDocument& doc) {
  const auto lookup = [&](const std::string& section, const std::string& key) {
    for (const auto& [k, v] : doc.at(section)) {
      if (k == key) return v;
    }
    throw FormatError("result document lacks " + section + "." + key);
  };
  const auto number = [&](const std::string& section, const std::string& key) {
    const auto x = detail::parse_double(lookup(section, key));
    if (!x) throw FormatError(section + "." + key + " is not a number");
    return *x;
  };
  const auto integer = [&](const std::string& section, const std::string& key) {
    const std::string text = lookup(section, key);
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw FormatError(section + "." + key + " is not an integer");
    }
    return value;
  };
  MetricsRow row;
  row.dataset = lookup("summary", "dataset");
  row.diversity = lookup("config", "diversity");
  row.k = static_cast<std::size_t>(integer("config", "k"));
  row.alpha = number("config", "alpha");
  row.target = lookup("config", "target");
  row.master_seed = integer("config", "seed");
  row.theta = static_cast<std::size_t>(integer("summary", "theta"));
  row.seed_count = static_cast<std::size_t>(integer("summary", "seed_count"));
  row.expected_capital = number("summary", "expected_capital");
  row.diversity_value = number("summary", "diversity_value");
  row.diversity_max = number("summary", "diversity_max");
  row.objective = number("summary", "objective");
  const std::string entropy = lookup("summary", "seed_entropy");
  row.seed_entropy = entropy.empty() ? 0.0 : number("summary", "seed_entropy");
  row.class_count = lookup("summary", "class_count");
  row.mc_capital = lookup("summary", "mc_capital");
  row.seeds = lookup("summary", "seeds");
  return row;
}

// --- simulate / baseline / synth ----------------------------------------------------

std::vector<NodeId> resolve_seeds(const DiffusionGraph& graph,
                                  const std::vector<std::string>& labels) {
  std::vector<NodeId> seeds;
  for (const std::string& label : labels) {
    const auto v = graph.find(label);
    if (!v) throw FormatError("unknown seed node '" + label + "'");
    if (std::find(seeds.begin(), seeds.end(), *v) != seeds.end()) {
      throw FormatError("seed '" + label + "' listed twice");
    }
    seeds.push_back(*v);
  }
  return seeds;
}

SimulationReport run_simulate(const Config& config, const Dataset& data,
                              const std::vector<NodeId>& seeds) {
  return simulate(data.graph, data.targets, parse_model(config.get("model")),
                  seeds, config.get_size("runs"), config.get_u64("seed"),
                  static_cast<unsigned>(config.get_size("workers")));
}

void write_simulation_report(std::ostream& out, const Config& config,
                             const Dataset& data,
                             const std::vector<NodeId>& seeds,
                             const SimulationReport& report) {
  using detail::format_double;
  out << "# aditum simulation\n[config]\n";
  config.write(out);
  out << "[simulation]\n";
  out << "dataset=" << data.name << '\n';
  out << "seeds=" << join_labels(data.graph, seeds) << '\n';
  out << "runs=" << report.runs << '\n';
  out << "mean_spread=" << format_double(report.mean_spread) << '\n';
  out << "stderr_spread=" << format_double(report.stderr_spread) << '\n';
  out << "mean_capital=" << format_double(report.mean_capital) << '\n';
  out << "stderr_capital=" << format_double(report.stderr_capital) << '\n';
  out << "total_score=" << format_double(data.targets.total_score) << '\n';
}

void write_deg_d_report(std::ostream& out, const Config& config,
                        const Dataset& data) {
  using detail::format_double;
  if (!data.preferences) {
    throw ConfigError("deg-d needs preferences (key 'preferences')");
  }
  const GMode g = parse_g_mode(config.get("g_mode"));
  const ConcaveFn f = parse_concave(config.get("concave"));
  const double gamma = config.get_double("gamma");
  const std::size_t k = config.get_size("k");
  const DegDResult result =
      deg_d_greedy(data.graph, *data.preferences, g, gamma, k, f);
  const DegDComparison cmp =
      compare_deg_d(data.graph, *data.preferences, g, gamma, k, f);
  out << "# aditum deg-d\n[config]\n";
  config.write(out);
  out << "[deg-d]\n";
  out << "dataset=" << data.name << '\n';
  out << "seeds=" << join_labels(data.graph, result.seeds) << '\n';
  std::string gains;
  for (double g_value : result.gains) {
    gains += (gains.empty() ? "" : " ") + format_double(g_value);
  }
  out << "gains=" << gains << '\n';
  out << "diversity=" << format_double(result.diversity) << '\n';
  out << "selector_alpha=" << format_double(1.0 - gamma) << '\n';
  out << "selector_seeds=" << join_labels(data.graph, cmp.selector) << '\n';
  out << "overlap=" << format_double(cmp.overlap) << '\n';
}

void write_synth_profiles(std::ostream& out, const Config& config) {
  const std::string& dist = config.get("distribution");
  ValueDistribution distribution = ValueDistribution::uniform;
  if (dist == "exponential") {
    distribution = ValueDistribution::exponential;
  } else if (dist != "uniform") {
    throw UsageError("distribution: '" + dist + "' (uniform | exponential)");
  }
  const std::vector<std::size_t> domains(config.get_size("attributes"),
                                         config.get_size("domain"));
  const ProfileSet profiles =
      synth_profiles(config.get_size("nodes"), domains, distribution,
                     config.get_u64("seed"));
  // Rows are keyed by the decimal labels synth_graph uses for its nodes.
  const DiffusionGraph labels =
      DiffusionGraph::from_edges(profiles.node_count(), {});
  write_profiles(out, profiles, &labels);
}

void write_synth_graph(std::ostream& edges, std::ostream* node_weights,
                       const Config& config) {
  DiffusionGraph graph = synth_graph(config.get_size("nodes"),
                                     config.get_size("avg_degree"),
                                     config.get_u64("seed"));
  write_edge_list(edges, graph);
  if (node_weights) {
    if (config.get("scores") == "indegree") {
      graph.set_target_scores(indegree_target_scores(graph));
    }
    write_node_weights(*node_weights, graph);
  }
}

}  // namespace aditum
