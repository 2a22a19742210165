/*
 * Copyright 2026 The ADITUM Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the aditum library.  Every call returns an aditum_status;
 * on failure aditum_last_error() describes the problem (per thread).
 * Strings returned through char** are owned by the caller and released
 * with aditum_string_free. */

#ifndef ADITUM_ADITUM_H
#define ADITUM_ADITUM_H

#include <stddef.h>

#if defined(ADITUM_BUILDING_LIBRARY)
#define ADITUM_API __attribute__((visibility("default")))
#else
#define ADITUM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aditum_status {
  ADITUM_OK = 0,
  ADITUM_E_FORMAT = 1,   /* malformed input data */
  ADITUM_E_CONFIG = 2,   /* inputs that cannot be combined */
  ADITUM_E_USAGE = 3,    /* bad arguments or unknown config keys */
  ADITUM_E_IO = 4,       /* file could not be read */
  ADITUM_E_INTERNAL = 5
} aditum_status;

typedef struct aditum_config aditum_config;
typedef struct aditum_dataset aditum_dataset;
typedef struct aditum_result aditum_result;

ADITUM_API const char* aditum_version(void);
ADITUM_API const char* aditum_last_error(void);
ADITUM_API void aditum_string_free(char* text);

/* Configuration: flat key=value pairs with defaults for every key. */
ADITUM_API aditum_status aditum_config_new(aditum_config** out);
ADITUM_API void aditum_config_free(aditum_config* config);
ADITUM_API aditum_status aditum_config_set(aditum_config* config,
                                           const char* key, const char* value);
/* Applies `count` assignments at once; unknown keys are all listed. */
ADITUM_API aditum_status aditum_config_set_many(aditum_config* config,
                                                const char* const* keys,
                                                const char* const* values,
                                                size_t count);
ADITUM_API aditum_status aditum_config_load_file(aditum_config* config,
                                                 const char* path);
ADITUM_API aditum_status aditum_config_get(const aditum_config* config,
                                           const char* key, char** value);
ADITUM_API aditum_status aditum_config_dump(const aditum_config* config,
                                            char** text);
/* One "key<TAB>default<TAB>help" line per key. */
ADITUM_API aditum_status aditum_config_describe(char** text);

/* Loads graph, target scores, profiles, classes and preferences. */
ADITUM_API aditum_status aditum_dataset_load(const aditum_config* config,
                                             aditum_dataset** out);
ADITUM_API void aditum_dataset_free(aditum_dataset* dataset);
ADITUM_API aditum_status aditum_dataset_node_count(const aditum_dataset* dataset,
                                                   size_t* count);
ADITUM_API aditum_status aditum_dataset_edge_count(const aditum_dataset* dataset,
                                                   size_t* count);
ADITUM_API aditum_status aditum_dataset_target_count(
    const aditum_dataset* dataset, size_t* count);
/* Re-selects the targets after the config's `target` key changed. */
ADITUM_API aditum_status aditum_dataset_retarget(aditum_dataset* dataset,
                                                 const aditum_config* config);

/* Seed selection for the config's k and alpha. */
ADITUM_API aditum_status aditum_select(const aditum_dataset* dataset,
                                       const aditum_config* config,
                                       aditum_result** out);
ADITUM_API void aditum_result_free(aditum_result* result);
ADITUM_API aditum_status aditum_result_seed_count(const aditum_result* result,
                                                  size_t* count);
/* Label of the i-th seed; valid while the result lives. */
ADITUM_API aditum_status aditum_result_seed(const aditum_result* result,
                                            size_t index, const char** label);
ADITUM_API aditum_status aditum_result_expected_capital(
    const aditum_result* result, double* value);
ADITUM_API aditum_status aditum_result_diversity(const aditum_result* result,
                                                 double* value);
ADITUM_API aditum_status aditum_result_theta(const aditum_result* result,
                                             size_t* theta);
ADITUM_API aditum_status aditum_result_document(const aditum_result* result,
                                                int include_timing,
                                                char** text);

/* Monte Carlo report for the given seed labels. */
ADITUM_API aditum_status aditum_simulate(const aditum_dataset* dataset,
                                         const aditum_config* config,
                                         const char* const* seed_labels,
                                         size_t seed_count, char** report);

/* Deg-D baseline report, including the overlap with the selector run at
 * alpha = 1 - gamma. */
ADITUM_API aditum_status aditum_deg_d(const aditum_dataset* dataset,
                                      const aditum_config* config,
                                      char** report);

/* Synthetic profile CSV, and a synthetic edge list with node weights. */
ADITUM_API aditum_status aditum_synth_profiles(const aditum_config* config,
                                               char** csv);
ADITUM_API aditum_status aditum_synth_graph(const aditum_config* config,
                                            char** edges, char** node_weights);

/* Value of `key` in `section` of a result document, e.g. the seed list
 * ("summary", "seeds"). */
ADITUM_API aditum_status aditum_document_value(const char* document,
                                               const char* section,
                                               const char* key, char** value);

/* Metrics CSV (header plus one row per document) from result documents. */
ADITUM_API aditum_status aditum_metrics_csv(const char* const* documents,
                                            size_t count, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* ADITUM_ADITUM_H */
