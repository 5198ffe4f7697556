// Copyright 2026 The rookgon Authors
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

#ifndef ROOKGON_ROOKGON_H_
#define ROOKGON_ROOKGON_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ROOKGON_BUILDING_LIBRARY)
#define ROOKGON_API __attribute__((visibility("default")))
#else
#define ROOKGON_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rookgon_status {
  ROOKGON_OK = 0,
  ROOKGON_ERR_INVALID_SIZE = 1,
  ROOKGON_ERR_INVALID_ARGUMENT = 2,
  ROOKGON_ERR_PRECONDITION = 3,
  ROOKGON_ERR_PARSE = 4,
  ROOKGON_ERR_UNSUPPORTED = 5,
  ROOKGON_ERR_USAGE = 6,
  ROOKGON_ERR_IO = 7,
  ROOKGON_ERR_INTERNAL = 100
} rookgon_status;

typedef struct rookgon_graph rookgon_graph;

// Message of the last failed call on this thread ("" if none).
ROOKGON_API const char* rookgon_last_error(void);
ROOKGON_API const char* rookgon_version(void);

ROOKGON_API rookgon_status rookgon_graph_rook(const int* dims, size_t count,
                                              rookgon_graph** out);
ROOKGON_API rookgon_status rookgon_graph_complete(int n, rookgon_graph** out);
ROOKGON_API rookgon_status rookgon_graph_from_json(const char* json, rookgon_graph** out);
// *out is released with rookgon_string_free.
ROOKGON_API rookgon_status rookgon_graph_to_json(const rookgon_graph* g, char** out);
ROOKGON_API void rookgon_graph_free(rookgon_graph* g);
ROOKGON_API int rookgon_graph_vertex_count(const rookgon_graph* g);

// Vertex sets are passed as arrays of vertex indices; divisors as arrays of
// vertex_count chip counts.
ROOKGON_API rookgon_status rookgon_cut_weight(const rookgon_graph* g, const int* side,
                                              size_t count, int64_t* weight);
// source_side, if not NULL, receives vertex_count flags (1 = source side).
ROOKGON_API rookgon_status rookgon_min_cut_between(const rookgon_graph* g, const int* s,
                                                   size_t s_count, const int* t,
                                                   size_t t_count, int64_t* value,
                                                   int* source_side);
// firings may be NULL.
ROOKGON_API rookgon_status rookgon_reduce(const rookgon_graph* g, const int* chips, int v,
                                          int* reduced, int64_t* firings);
ROOKGON_API rookgon_status rookgon_is_winnable(const rookgon_graph* g, const int* chips,
                                               int* winnable);
ROOKGON_API rookgon_status rookgon_rank(const rookgon_graph* g, const int* chips, int* rank);
// counterexample may be NULL; on failure it receives the stolen chips.
ROOKGON_API rookgon_status rookgon_verify_rank_at_least(const rookgon_graph* g,
                                                        const int* chips, int k, int* holds,
                                                        int* counterexample);

typedef void (*rookgon_log_fn)(const char* line, void* user);

// Runs a command ("gonality", "scramble.order", "verify", ...) on a JSON
// request. On ROOKGON_OK, *report holds the report text (free with
// rookgon_string_free) and *exit_code is 0, or 1 when a verified claim failed.
ROOKGON_API rookgon_status rookgon_run(const char* command, const char* request_json,
                                       rookgon_log_fn log, void* user, char** report,
                                       int* exit_code);
ROOKGON_API void rookgon_string_free(char* s);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ROOKGON_ROOKGON_H_
