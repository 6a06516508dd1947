/*
 * Copyright 2026 The insproc Authors
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

/*
 * C interface to libinsproc.
 *
 * Every call returns an insproc_status. On failure insproc_last_error() holds a
 * message for the calling thread. Strings handed out through char** belong to
 * the caller and are released with insproc_string_free. Vertex ids and words
 * are 1-based; rationals travel as "p/q" strings; reports are JSON.
 */

#ifndef INSPROC_H
#define INSPROC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(INSPROC_BUILDING_LIBRARY)
#    define INSPROC_API __declspec(dllexport)
#  else
#    define INSPROC_API __declspec(dllimport)
#  endif
#else
#  define INSPROC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum insproc_status {
    INSPROC_OK = 0,
    INSPROC_ERR_INVALID_ARGUMENT = 1,
    INSPROC_ERR_PARSE = 2,
    INSPROC_ERR_LIMIT = 3,
    INSPROC_ERR_PRECONDITION = 4,
    INSPROC_ERR_DEAD_END = 5,
    INSPROC_ERR_INTERNAL = 6
} insproc_status;

typedef enum insproc_sampler {
    INSPROC_SAMPLER_EXACT = 0,
    INSPROC_SAMPLER_INSERTION = 1
} insproc_sampler;

typedef struct insproc_graph insproc_graph;
typedef struct insproc_sft insproc_sft;

INSPROC_API const char* insproc_version(void);
INSPROC_API const char* insproc_last_error(void);
INSPROC_API void insproc_string_free(char* s);

/* Graphs */
INSPROC_API insproc_status insproc_graph_from_json(const char* json, insproc_graph** out);
INSPROC_API insproc_status insproc_graph_complete(size_t q, const char* weight, insproc_graph** out);
INSPROC_API insproc_status insproc_graph_multipartite(size_t q, size_t r, const char* weight, insproc_graph** out);
INSPROC_API void insproc_graph_free(insproc_graph* g);
INSPROC_API insproc_status insproc_graph_vertex_count(const insproc_graph* g, size_t* out);
INSPROC_API insproc_status insproc_graph_to_json(const insproc_graph* g, char** json);

/* B(x) when reduced == 0, B~(x) otherwise; value is a "p/q" string. */
INSPROC_API insproc_status insproc_building_count(const insproc_graph* g, const uint32_t* word, size_t length,
                                                  int reduced, char** value);

/* Reports. *verdict is 1 when the property holds (or the search succeeded), 0 on a counterexample. */
INSPROC_API insproc_status insproc_analyze(const insproc_graph* g, size_t max_n, size_t threads, char** json);
INSPROC_API insproc_status insproc_check_property_c(const insproc_graph* g, size_t max_n, size_t threads,
                                                    int* verdict, char** json);
INSPROC_API insproc_status insproc_check_k_dependence(const insproc_graph* g, size_t k, size_t max_n, size_t max_m,
                                                      size_t threads, int* verdict, char** json);
INSPROC_API insproc_status insproc_min_k(const insproc_graph* g, size_t max_k, size_t max_n, size_t max_m,
                                         size_t threads, int* verdict, char** json);
INSPROC_API insproc_status insproc_triangle_certificate(const insproc_graph* g, int* verdict, char** json);

/* Sampling: newline-delimited JSON arrays, one word per line. */
INSPROC_API insproc_status insproc_sample(const insproc_graph* g, size_t length, uint64_t seed, size_t count,
                                          insproc_sampler method, size_t threads, char** ndjson);
/* Chi-square test of (X_1, X_{gap+2}) on a fresh exact batch; *verdict is 1 when independence is rejected. */
INSPROC_API insproc_status insproc_gap_independence(const insproc_graph* g, size_t length, size_t gap, uint64_t seed,
                                                    size_t count, size_t threads, int* verdict, char** json);

/* Shifts of finite type */
INSPROC_API insproc_status insproc_sft_from_json(const char* json, insproc_sft** out);
INSPROC_API void insproc_sft_free(insproc_sft* s);
INSPROC_API insproc_status insproc_sft_analyze(const insproc_sft* s, size_t max_n, size_t threads, int* verdict,
                                               char** json);
INSPROC_API insproc_status insproc_sft_certify(const insproc_sft* s, int* verdict, char** json);
INSPROC_API insproc_status insproc_sft_sample(const insproc_sft* s, size_t window, uint64_t seed, size_t count,
                                              size_t threads, char** ndjson);

/* Identity suite. omit_boundary != 0 injects the wrong boundary convention. */
INSPROC_API insproc_status insproc_verify_identities(size_t sweep_max_n, size_t random_graphs, uint64_t seed,
                                                     int omit_boundary, int* verdict, char** json);

/* Flattened two-column rendering of a JSON report. */
INSPROC_API insproc_status insproc_render_table(const char* json, char** table);

#ifdef __cplusplus
}
#endif

#endif /* INSPROC_H */
