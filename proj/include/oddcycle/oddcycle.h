/*
 * Copyright 2026 The oddcycle Authors.
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

/* C interface to the oddcycle library. Graphs are opaque handles; every
 * call returns an oc_status and leaves a message for oc_last_error() when
 * it fails. Strings handed out by the library are released with
 * oc_string_free. Structured results are JSON documents. */

#ifndef ODDCYCLE_ODDCYCLE_H
#define ODDCYCLE_ODDCYCLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OC_API __declspec(dllexport)
#else
#define OC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct oc_graph oc_graph;

typedef enum oc_status {
  OC_OK = 0,
  OC_INVALID_PARAMETER = 1,
  OC_PRECONDITION_VIOLATION = 2,
  OC_CONSTRUCTION_FAILURE = 3,
  OC_PARSE_ERROR = 4,
  OC_IO_ERROR = 5,
  OC_SIZE_LIMIT = 6,
  OC_BRACKET_FAILURE = 7,
  OC_NOT_EQUITABLE = 8,
  OC_BUDGET_EXHAUSTED = 9,
  OC_INTERNAL_ERROR = 99
} oc_status;

OC_API const char* oc_version(void);
OC_API const char* oc_status_name(oc_status status);
/* Message of the last failing call on this thread; empty when none. */
OC_API const char* oc_last_error(void);
OC_API void oc_string_free(char* s);

/* Graph input and output. */
OC_API oc_status oc_graph_parse_edge_list(const char* text, oc_graph** out);
OC_API oc_status oc_graph_read_file(const char* path, oc_graph** out);
OC_API oc_status oc_graph_from_graph6(const char* line, oc_graph** out);
OC_API void oc_graph_free(oc_graph* g);
OC_API size_t oc_graph_order(const oc_graph* g);
OC_API size_t oc_graph_size(const oc_graph* g);
OC_API oc_status oc_graph_to_edge_list(const oc_graph* g, char** out);
OC_API oc_status oc_graph_to_graph6(const oc_graph* g, char** out);
OC_API oc_status oc_graph_digest(const oc_graph* g, char** out);

/* Families: "turan" {n, r}, "extremal" {n, r}, "star" {n, r},
 * "c5" {a, b, c}, "gnr" {n, r, seed, density, outside}. */
OC_API oc_status oc_construct(const char* family, const char* params_json, oc_graph** out);

/* Stability decomposition; params {k, r, c, budget}. Writes a certificate
 * envelope of kind "stability_outcome". */
OC_API oc_status oc_decompose(const oc_graph* g, const char* params_json, char** out_json);

/* Dense bipartite pair extraction; params {k, r, c}. Envelope of kind
 * "dense_certificate" when extraction succeeds. */
OC_API oc_status oc_dense_pair(const oc_graph* g, const char* params_json, char** out_json);

/* Spectral radius; params {method: "power" | "quotient" | "both", tol, r}.
 * With r given and the graph isomorphic to the extremal suspension, the
 * quotient quartic is reported too. */
OC_API oc_status oc_spectral(const oc_graph* g, const char* params_json, char** out_json);

/* Exact search for a cycle of the given length; envelope of kind "cycle".
 * Sets *found to 1, 0, or -1 when the budget ran out. */
OC_API oc_status oc_find_cycle(const oc_graph* g, size_t length, uint64_t budget, int* found, char** out_json);

/* Exact chromatic number with a coloring. */
OC_API oc_status oc_chromatic(const oc_graph* g, char** out_json);

/* Exhaustive oracles: query "ex" {n, cycle, r}, "spex" {n, cycle, r},
 * "enumerate" {n, cycle}. Writes an extremal record or counts. */
OC_API oc_status oc_oracle(const char* query, const char* params_json, char** out_json);

/* Verification suites. */
OC_API oc_status oc_suite_list(char** out_json);
OC_API oc_status oc_suite_run(const char* name, uint64_t seed, unsigned threads, int* passed, char** out_json);

/* Re-verifies a certificate envelope against a graph (NULL when the
 * envelope names no graph). */
OC_API oc_status oc_certcheck(const char* envelope_json, const oc_graph* g, int* valid, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ODDCYCLE_ODDCYCLE_H */
