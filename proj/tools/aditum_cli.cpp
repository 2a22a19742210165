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

// Command line front end.  Talks to the library only through aditum.h.
//
//   aditum [global options] select | simulate | baseline deg-d | metrics | synth
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "aditum/aditum.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Carries a library status out of nested helpers.
struct Failure : std::runtime_error {
  Failure(int code, const std::string& message)
      : std::runtime_error(message), exit_code(code) {}
  int exit_code;
};

int exit_code_for(aditum_status status) {
  return status == ADITUM_E_USAGE ? kExitUsage : kExitData;
}

void check(aditum_status status) {
  if (status != ADITUM_OK) throw Failure(exit_code_for(status), aditum_last_error());
}

std::string take(char* text) {
  std::string out(text ? text : "");
  aditum_string_free(text);
  return out;
}

struct ConfigDeleter {
  void operator()(aditum_config* c) const { aditum_config_free(c); }
};
struct DatasetDeleter {
  void operator()(aditum_dataset* d) const { aditum_dataset_free(d); }
};
struct ResultDeleter {
  void operator()(aditum_result* r) const { aditum_result_free(r); }
};
using ConfigPtr = std::unique_ptr<aditum_config, ConfigDeleter>;
using DatasetPtr = std::unique_ptr<aditum_dataset, DatasetDeleter>;
using ResultPtr = std::unique_ptr<aditum_result, ResultDeleter>;

struct KeyInfo {
  std::string name;
  std::string default_value;
  std::string help;
};

std::vector<KeyInfo> config_keys() {
  char* text = nullptr;
  check(aditum_config_describe(&text));
  std::vector<KeyInfo> keys;
  std::istringstream in(take(text));
  std::string line;
  while (std::getline(in, line)) {
    const auto a = line.find('\t');
    const auto b = line.find('\t', a + 1);
    keys.push_back({line.substr(0, a), line.substr(a + 1, b - a - 1),
                    line.substr(b + 1)});
  }
  return keys;
}

// Configuration sources in precedence order: defaults, --config file,
// --set key=value, then the per-key flags.
struct ConfigSources {
  std::string file;
  std::vector<std::string> assignments;
  std::map<std::string, std::string> flags;

  std::vector<std::pair<std::string, std::string>> overrides() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& a : assignments) {
      const auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Failure(kExitUsage, "--set expects key=value, got '" + a + "'");
      }
      out.emplace_back(a.substr(0, eq), a.substr(eq + 1));
    }
    for (const auto& [k, v] : flags) out.emplace_back(k, v);
    return out;
  }

  ConfigPtr build(
      const std::vector<std::pair<std::string, std::string>>& extra = {}) const {
    aditum_config* raw = nullptr;
    check(aditum_config_new(&raw));
    ConfigPtr config(raw);
    if (!file.empty()) check(aditum_config_load_file(config.get(), file.c_str()));
    auto pairs = overrides();
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    std::vector<const char*> keys;
    std::vector<const char*> values;
    for (const auto& [k, v] : pairs) {
      keys.push_back(k.c_str());
      values.push_back(v.c_str());
    }
    check(aditum_config_set_many(config.get(), keys.data(), values.data(),
                                 pairs.size()));
    return config;
  }
};

std::string get(const aditum_config* config, const std::string& key) {
  char* value = nullptr;
  check(aditum_config_get(config, key.c_str(), &value));
  return take(value);
}

DatasetPtr load(const aditum_config* config) {
  aditum_dataset* raw = nullptr;
  check(aditum_dataset_load(config, &raw));
  return DatasetPtr(raw);
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw Failure(kExitUsage, what + ": '" + text + "' is not a number");
  }
  return value;
}

std::string format_grid_value(double x) {
  // Grid steps like 0.1 accumulate binary noise; 10 significant digits
  // recover the intended decimal.
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// "a:b:step" (inclusive) or "v1,v2,...".  A plain value is a one-point grid.
std::vector<std::string> expand_grid(const std::string& text,
                                     const std::string& what) {
  std::vector<std::string> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) {
      throw Failure(kExitUsage, what + ": range must be start:stop:step");
    }
    const double start = parse_number(parts[0], what);
    const double stop = parse_number(parts[1], what);
    const double step = parse_number(parts[2], what);
    if (!(step > 0) || stop < start) {
      throw Failure(kExitUsage, what + ": empty or unbounded range '" + text + "'");
    }
    const auto count =
        static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(format_grid_value(start + static_cast<double>(i) * step));
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Failure(kExitUsage, what + ": empty grid entry");
    out.push_back(item);
  }
  if (out.empty()) throw Failure(kExitUsage, what + ": empty grid");
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw Failure(kExitData, "cannot write '" + path.string() + "'");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitData, "cannot read '" + path.string() + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::string metrics_csv(const std::vector<std::string>& documents) {
  std::vector<const char*> ptrs;
  for (const std::string& d : documents) ptrs.push_back(d.c_str());
  char* csv = nullptr;
  check(aditum_metrics_csv(ptrs.data(), ptrs.size(), &csv));
  return take(csv);
}

// --- select -----------------------------------------------------------------

struct SelectArgs {
  std::string out_dir;
  std::string metrics_path;
  std::size_t jobs = 1;
  bool timing = false;
};

struct GridPoint {
  std::string k;
  std::string alpha;
  std::string document;
  std::string deterministic_document;
};

int run_select(const ConfigSources& sources, const SelectArgs& args) {
  const ConfigPtr base = sources.build();
  const auto ks = expand_grid(get(base.get(), "k"), "k");
  const auto alphas = expand_grid(get(base.get(), "alpha"), "alpha");
  std::vector<GridPoint> points;
  for (const std::string& k : ks) {
    for (const std::string& a : alphas) points.push_back({k, a, "", ""});
  }

  // The dataset does not depend on k or alpha; load it once.
  const ConfigPtr first =
      sources.build({{"k", points.front().k}, {"alpha", points.front().alpha}});
  const DatasetPtr dataset = load(first.get());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::optional<Failure> error;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        GridPoint& p = points[i];
        const ConfigPtr config = sources.build({{"k", p.k}, {"alpha", p.alpha}});
        aditum_result* raw = nullptr;
        check(aditum_select(dataset.get(), config.get(), &raw));
        const ResultPtr result(raw);
        char* text = nullptr;
        check(aditum_result_document(result.get(), args.timing ? 1 : 0, &text));
        p.document = take(text);
        if (args.timing) {
          check(aditum_result_document(result.get(), 0, &text));
          p.deterministic_document = take(text);
        } else {
          p.deterministic_document = p.document;
        }
      } catch (const Failure& f) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = f;
        next = points.size();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(
      1, std::min(args.jobs, points.size()));
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (error) throw *error;

  std::vector<std::string> documents;
  for (const GridPoint& p : points) documents.push_back(p.deterministic_document);
  const std::string csv = metrics_csv(documents);

  if (!args.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) throw Failure(kExitData, "cannot create '" + args.out_dir + "'");
    for (const GridPoint& p : points) {
      write_file(fs::path(args.out_dir) / ("result_k" + p.k + "_a" + p.alpha + ".txt"),
                 p.document);
    }
    write_file(args.metrics_path.empty() ? fs::path(args.out_dir) / "metrics.csv"
                                         : fs::path(args.metrics_path),
               csv);
  } else {
    for (const GridPoint& p : points) std::cout << p.document;
    if (!args.metrics_path.empty()) write_file(args.metrics_path, csv);
  }
  std::cerr << points.size() << " grid point(s) done\n";
  return 0;
}

// --- simulate -----------------------------------------------------------------

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

int run_simulate(const ConfigSources& sources, const std::string& seeds_text,
                 const std::string& result_path, const std::string& out_path) {
  std::string labels_text = seeds_text;
  if (!result_path.empty()) {
    if (!seeds_text.empty()) {
      throw Failure(kExitUsage, "give either --seeds or --result, not both");
    }
    const std::string doc = read_file(result_path);
    char* value = nullptr;
    check(aditum_document_value(doc.c_str(), "summary", "seeds", &value));
    labels_text = take(value);
  }
  const auto labels = split_labels(labels_text);
  if (labels.empty()) throw Failure(kExitUsage, "simulate needs a non-empty seed set");
  const ConfigPtr config = sources.build();
  const DatasetPtr dataset = load(config.get());
  std::vector<const char*> ptrs;
  for (const std::string& l : labels) ptrs.push_back(l.c_str());
  char* report = nullptr;
  check(aditum_simulate(dataset.get(), config.get(), ptrs.data(), ptrs.size(),
                        &report));
  emit(out_path, take(report));
  return 0;
}

int run_deg_d(const ConfigSources& sources, const std::string& out_path) {
  const ConfigPtr config = sources.build();
  const DatasetPtr dataset = load(config.get());
  char* report = nullptr;
  check(aditum_deg_d(dataset.get(), config.get(), &report));
  emit(out_path, take(report));
  return 0;
}

// --- metrics ------------------------------------------------------------------

bool looks_like_result(const fs::path& path) {
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  return first.rfind("# aditum result", 0) == 0;
}

int run_metrics(const std::vector<std::string>& inputs, const std::string& out_path) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && looks_like_result(entry.path())) {
          files.push_back(entry.path());
        }
      }
    } else if (fs::is_regular_file(input, ec)) {
      files.emplace_back(input);
    } else {
      throw Failure(kExitData, "no such file or directory '" + input + "'");
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<std::string> documents;
  for (const fs::path& f : files) documents.push_back(read_file(f));
  emit(out_path, metrics_csv(documents));
  return 0;
}

// --- synth --------------------------------------------------------------------

int run_synth_profiles(const ConfigSources& sources, const std::string& out_path) {
  const ConfigPtr config = sources.build();
  char* csv = nullptr;
  check(aditum_synth_profiles(config.get(), &csv));
  emit(out_path, take(csv));
  return 0;
}

int run_synth_graph(const ConfigSources& sources, const std::string& out_path,
                    const std::string& weights_path) {
  const ConfigPtr config = sources.build();
  char* edges = nullptr;
  char* weights = nullptr;
  check(aditum_synth_graph(config.get(), &edges,
                           weights_path.empty() ? nullptr : &weights));
  emit(out_path, take(edges));
  if (!weights_path.empty()) write_file(weights_path, take(weights));
  return 0;
}

std::string flag_name(const std::string& key) {
  std::string name = key;
  std::replace(name.begin(), name.end(), '_', '-');
  return name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diversity-aware targeted influence maximization"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", aditum_version());

  ConfigSources sources;
  app.add_option("--config", sources.file, "key=value configuration file");
  app.add_option("--set", sources.assignments,
                 "override one config key (key=value); repeatable");

  std::vector<KeyInfo> keys;
  try {
    keys = config_keys();
  } catch (const Failure& f) {
    std::cerr << "aditum: " << f.what() << '\n';
    return f.exit_code;
  }
  auto* keys_group = app.add_option_group("Config keys");
  for (const KeyInfo& key : keys) {
    std::string names = "--" + flag_name(key.name);
    if (key.name == "theta") names += ",--theta-override";
    keys_group
        ->add_option_function<std::string>(
            names,
            [&sources, name = key.name](const std::string& v) {
              sources.flags[name] = v;
            },
            key.help + " [default: " + key.default_value + "]")
        ->type_name("VALUE");
  }

  SelectArgs select_args;
  auto* select = app.add_subcommand(
      "select", "estimate, sample and select seeds for every (k, alpha) point");
  select->add_option("--out-dir", select_args.out_dir,
                     "write result_k<k>_a<alpha>.txt files and metrics.csv here");
  select->add_option("--metrics", select_args.metrics_path, "metrics CSV path");
  select->add_option("--jobs", select_args.jobs, "grid points run in parallel")
      ->check(CLI::PositiveNumber);
  select->add_flag("--timing", select_args.timing,
                   "append a [timing] section to result documents");
  select->footer(
      "--k and --alpha accept grids: start:stop:step (inclusive) or a,b,c");

  std::string seeds_text;
  std::string result_path;
  std::string out_path;
  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo spread and capital of a seed set");
  simulate->add_option("--seeds", seeds_text, "seed labels, comma or space separated");
  simulate->add_option("--result", result_path, "take the seeds from a result document")
      ->check(CLI::ExistingFile);
  simulate->add_option("--out", out_path, "report path (default stdout)");

  auto* baseline = app.add_subcommand("baseline", "comparison baselines");
  baseline->require_subcommand(1);
  auto* deg_d = baseline->add_subcommand("deg-d", "degree-plus-diversity greedy");
  deg_d->add_option("--out", out_path, "report path (default stdout)");

  std::vector<std::string> metric_inputs;
  auto* metrics =
      app.add_subcommand("metrics", "collect result documents into one CSV");
  metrics->add_option("inputs", metric_inputs, "result files or directories")
      ->required();
  metrics->add_option("--out", out_path, "CSV path (default stdout)");

  std::string weights_path;
  auto* synth = app.add_subcommand("synth", "synthetic inputs");
  synth->require_subcommand(1);
  auto* synth_profiles = synth->add_subcommand("profiles", "categorical profile CSV");
  synth_profiles->add_option("--out", out_path, "CSV path (default stdout)");
  auto* synth_graph = synth->add_subcommand("graph", "random directed edge list");
  synth_graph->add_option("--out", out_path, "edge list path (default stdout)");
  synth_graph->add_option("--weights-out", weights_path,
                          "also write in-degree node scores here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*select) return run_select(sources, select_args);
    if (*simulate) return run_simulate(sources, seeds_text, result_path, out_path);
    if (*deg_d) return run_deg_d(sources, out_path);
    if (*metrics) return run_metrics(metric_inputs, out_path);
    if (*synth_profiles) return run_synth_profiles(sources, out_path);
    if (*synth_graph) return run_synth_graph(sources, out_path, weights_path);
  } catch (const Failure& f) {
    std::cerr << "aditum: " << f.what() << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "aditum: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
