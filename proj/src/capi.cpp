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

#include "aditum/aditum.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "aditum/error.hpp"
#include "aditum/pipeline.hpp"

struct aditum_config {
  aditum::Config config;
};

struct aditum_dataset {
  aditum::Dataset data;
};

struct aditum_result {
  aditum::Config config;
  const aditum::Dataset* data;
  aditum::SelectOutcome outcome;
  std::vector<std::string> labels;
};

namespace {

thread_local std::string last_error;

template <class Fn>
aditum_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return ADITUM_OK;
  } catch (const aditum::FormatError& e) {
    last_error = e.what();
    return ADITUM_E_FORMAT;
  } catch (const aditum::ConfigError& e) {
    last_error = e.what();
    return ADITUM_E_CONFIG;
  } catch (const aditum::UsageError& e) {
    last_error = e.what();
    return ADITUM_E_USAGE;
  } catch (const aditum::IoError& e) {
    last_error = e.what();
    return ADITUM_E_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ADITUM_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ADITUM_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ADITUM_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw aditum::UsageError(std::string(what) + " is null");
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* aditum_version(void) { return "1.0.0"; }

const char* aditum_last_error(void) { return last_error.c_str(); }

void aditum_string_free(char* text) { std::free(text); }

aditum_status aditum_config_new(aditum_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new aditum_config();
  });
}

void aditum_config_free(aditum_config* config) { delete config; }

aditum_status aditum_config_set(aditum_config* config, const char* key,
                                const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    config->config.set(key, value);
  });
}

aditum_status aditum_config_set_many(aditum_config* config,
                                     const char* const* keys,
                                     const char* const* values, size_t count) {
  return guarded([&] {
    require(config, "config");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t i = 0; i < count; ++i) {
      require(keys[i], "key");
      require(values[i], "value");
      pairs.emplace_back(keys[i], values[i]);
    }
    config->config.set_all(pairs);
  });
}

aditum_status aditum_config_load_file(aditum_config* config, const char* path) {
  return guarded([&] {
    require(config, "config");
    require(path, "path");
    config->config.load_file(path);
  });
}

aditum_status aditum_config_get(const aditum_config* config, const char* key,
                                char** value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    *value = copy_out(config->config.get(key));
  });
}

aditum_status aditum_config_dump(const aditum_config* config, char** text) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    std::ostringstream out;
    config->config.write(out);
    *text = copy_out(out.str());
  });
}

aditum_status aditum_config_describe(char** text) {
  return guarded([&] {
    require(text, "text");
    std::string out;
    for (const aditum::ConfigKey& key : aditum::Config::keys()) {
      out += std::string(key.name) + '\t' + key.default_value + '\t' +
             key.help + '\n';
    }
    *text = copy_out(out);
  });
}

aditum_status aditum_dataset_load(const aditum_config* config,
                                  aditum_dataset** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    auto dataset = std::make_unique<aditum_dataset>();
    dataset->data = aditum::load_dataset(config->config);
    *out = dataset.release();
  });
}

void aditum_dataset_free(aditum_dataset* dataset) { delete dataset; }

aditum_status aditum_dataset_node_count(const aditum_dataset* dataset,
                                        size_t* count) {
  return guarded([&] {
    require(dataset, "dataset");
    require(count, "count");
    *count = dataset->data.graph.node_count();
  });
}

aditum_status aditum_dataset_edge_count(const aditum_dataset* dataset,
                                        size_t* count) {
  return guarded([&] {
    require(dataset, "dataset");
    require(count, "count");
    *count = dataset->data.graph.edge_count();
  });
}

aditum_status aditum_dataset_target_count(const aditum_dataset* dataset,
                                          size_t* count) {
  return guarded([&] {
    require(dataset, "dataset");
    require(count, "count");
    *count = dataset->data.targets.size();
  });
}

aditum_status aditum_dataset_retarget(aditum_dataset* dataset,
                                      const aditum_config* config) {
  return guarded([&] {
    require(dataset, "dataset");
    require(config, "config");
    dataset->data.targets = aditum::select_targets(
        dataset->data.graph,
        aditum::parse_target_spec(config->config.get("target")));
  });
}

aditum_status aditum_select(const aditum_dataset* dataset,
                            const aditum_config* config, aditum_result** out) {
  return guarded([&] {
    require(dataset, "dataset");
    require(config, "config");
    require(out, "out");
    auto result = std::make_unique<aditum_result>();
    result->config = config->config;
    result->data = &dataset->data;
    result->outcome = aditum::run_select(config->config, dataset->data);
    for (aditum::NodeId v : result->outcome.result.seeds) {
      result->labels.push_back(dataset->data.graph.label(v));
    }
    *out = result.release();
  });
}

void aditum_result_free(aditum_result* result) { delete result; }

aditum_status aditum_result_seed_count(const aditum_result* result,
                                       size_t* count) {
  return guarded([&] {
    require(result, "result");
    require(count, "count");
    *count = result->labels.size();
  });
}

aditum_status aditum_result_seed(const aditum_result* result, size_t index,
                                 const char** label) {
  return guarded([&] {
    require(result, "result");
    require(label, "label");
    if (index >= result->labels.size()) {
      throw aditum::UsageError("seed index out of range");
    }
    *label = result->labels[index].c_str();
  });
}

aditum_status aditum_result_expected_capital(const aditum_result* result,
                                             double* value) {
  return guarded([&] {
    require(result, "result");
    require(value, "value");
    *value = result->outcome.result.expected_capital;
  });
}

aditum_status aditum_result_diversity(const aditum_result* result,
                                      double* value) {
  return guarded([&] {
    require(result, "result");
    require(value, "value");
    *value = result->outcome.result.diversity;
  });
}

aditum_status aditum_result_theta(const aditum_result* result, size_t* theta) {
  return guarded([&] {
    require(result, "result");
    require(theta, "theta");
    *theta = result->outcome.result.theta;
  });
}

aditum_status aditum_result_document(const aditum_result* result,
                                     int include_timing, char** text) {
  return guarded([&] {
    require(result, "result");
    require(text, "text");
    std::ostringstream out;
    aditum::write_result_document(out, result->config, *result->data,
                                  result->outcome, include_timing != 0);
    *text = copy_out(out.str());
  });
}

aditum_status aditum_simulate(const aditum_dataset* dataset,
                              const aditum_config* config,
                              const char* const* seed_labels,
                              size_t seed_count, char** report) {
  return guarded([&] {
    require(dataset, "dataset");
    require(config, "config");
    require(report, "report");
    std::vector<std::string> labels;
    for (size_t i = 0; i < seed_count; ++i) {
      require(seed_labels[i], "seed label");
      labels.emplace_back(seed_labels[i]);
    }
    const auto seeds = aditum::resolve_seeds(dataset->data.graph, labels);
    const auto sim = aditum::run_simulate(config->config, dataset->data, seeds);
    std::ostringstream out;
    aditum::write_simulation_report(out, config->config, dataset->data, seeds,
                                    sim);
    *report = copy_out(out.str());
  });
}

aditum_status aditum_deg_d(const aditum_dataset* dataset,
                           const aditum_config* config, char** report) {
  return guarded([&] {
    require(dataset, "dataset");
    require(config, "config");
    require(report, "report");
    std::ostringstream out;
    aditum::write_deg_d_report(out, config->config, dataset->data);
    *report = copy_out(out.str());
  });
}

aditum_status aditum_synth_profiles(const aditum_config* config, char** csv) {
  return guarded([&] {
    require(config, "config");
    require(csv, "csv");
    std::ostringstream out;
    aditum::write_synth_profiles(out, config->config);
    *csv = copy_out(out.str());
  });
}

aditum_status aditum_synth_graph(const aditum_config* config, char** edges,
                                 char** node_weights) {
  return guarded([&] {
    require(config, "config");
    require(edges, "edges");
    std::ostringstream edge_text;
    std::ostringstream weight_text;
    aditum::write_synth_graph(edge_text, node_weights ? &weight_text : nullptr,
                              config->config);
    char* e = copy_out(edge_text.str());
    if (node_weights) {
      try {
        *node_weights = copy_out(weight_text.str());
      } catch (...) {
        std::free(e);
        throw;
      }
    }
    *edges = e;
  });
}

aditum_status aditum_document_value(const char* document, const char* section,
                                   const char* key, char** value) {
  return guarded([&] {
    require(document, "document");
    require(section, "section");
    require(key, "key");
    require(value, "value");
    std::istringstream in(document);
    const aditum::ResultDocument doc = aditum::read_result_document(in);
    const auto it = doc.find(section);
    if (it != doc.end()) {
      for (const auto& [k, v] : it->second) {
        if (k == key) {
          *value = copy_out(v);
          return;
        }
      }
    }
    throw aditum::FormatError(std::string("result document has no ") +
                              section + "." + key);
  });
}

aditum_status aditum_metrics_csv(const char* const* documents, size_t count,
                                 char** csv) {
  return guarded([&] {
    require(csv, "csv");
    std::vector<aditum::MetricsRow> rows;
    for (size_t i = 0; i < count; ++i) {
      require(documents[i], "document");
      std::istringstream in(documents[i]);
      rows.push_back(aditum::metrics_row_from_document(aditum::read_result_document(in)));
    }
    // Row order depends only on the grid point, not on input order.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      return std::tie(a.dataset, a.diversity, a.target, a.master_seed, a.k, a.alpha) <
             std::tie(b.dataset, b.diversity, b.target, b.master_seed, b.k, b.alpha);
    });
    std::ostringstream out;
    aditum::write_metrics_header(out);
    for (const auto& row : rows) aditum::write_metrics_row(out, row);
    *csv = copy_out(out.str());
  });
}

}  // extern "C"
