/* Copyright 2026 The onionpeel Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface. Every function returns an op_status; on failure the message
 * is available from op_last_error() on the calling thread. Strings handed
 * out through char** must be released with op_free_string, embeddings with
 * op_embedding_free.
 */
#ifndef ONIONPEEL_ONIONPEEL_H_
#define ONIONPEEL_ONIONPEEL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define OP_API __declspec(dllexport)
#else
#  define OP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct op_embedding op_embedding;

/* Values 1..27 match the library's error variants. */
typedef enum op_status {
  OP_OK = 0,
  OP_PARSE_ERROR = 1,
  OP_UNKNOWN_VERTEX = 2,
  OP_SELF_LOOP = 3,
  OP_PARALLEL_EDGE = 4,
  OP_ASYMMETRIC_ADJACENCY = 5,
  OP_EULER_VIOLATION = 6,
  OP_NESTED_COMPONENT = 7,
  OP_BAD_OUTER_DART = 8,
  OP_NOT_ON_FACE = 9,
  OP_EDGE_EXISTS = 10,
  OP_SAME_VERTEX = 11,
  OP_NOT_ON_OUTER_FACE = 12,
  OP_DISCONNECTED = 13,
  OP_UNREACHABLE_VERTEX = 14,
  OP_INVALID_FOREST = 15,
  OP_BOUND_VIOLATED = 16,
  OP_TOO_SMALL = 17,
  OP_REPAIR_STUCK = 18,
  OP_NOT_A_DISK = 19,
  OP_NOT_A_TREE = 20,
  OP_DEGREE_OVERFLOW = 21,
  OP_BAD_PARAMETER = 22,
  OP_BUDGET_EXCEEDED = 23,
  OP_NOT_PLANAR = 24,
  OP_FACE_NOT_SIMPLE = 25,
  OP_INVALID_ARTIFACT = 26,
  OP_INTERNAL = 27,
  OP_NULL_ARGUMENT = 100,
  OP_OUT_OF_MEMORY = 101
} op_status;

OP_API const char* op_version(void);
/* "AsymmetricAdjacency" etc.; "Ok" for OP_OK. */
OP_API const char* op_status_name(op_status status);
/* Message of the last failure on this thread, "" if none. */
OP_API const char* op_last_error(void);
OP_API void op_free_string(char* s);

OP_API op_status op_embedding_parse(const char* epg_text, op_embedding** out);
OP_API void op_embedding_free(op_embedding* g);
OP_API op_status op_embedding_to_epg(const op_embedding* g, char** out);
OP_API op_status op_embedding_to_dot(const op_embedding* g, char** out);
OP_API op_status op_embedding_counts(const op_embedding* g, size_t* vertices, size_t* edges, size_t* faces);

/* family: nested, counterexample, cycle, wheel, path, k4minus, random.
 * width and seed only matter for random. */
OP_API op_status op_generate(const char* family, int parameter, int width, uint64_t seed, op_embedding** out);

OP_API op_status op_peel_count(const op_embedding* g, int* k);
OP_API op_status op_peel_json(const op_embedding* g, char** json);
/* Saturates, builds the BFS forest and checks its bound. `saturated` may be NULL. */
OP_API op_status op_forest_json(const op_embedding* g, op_embedding** saturated, char** json);
/* Trace JSON may be NULL. */
OP_API op_status op_to_disk(const op_embedding* g, op_embedding** disk, char** trace_json);
OP_API op_status op_to_triangulation(const op_embedding* g, op_embedding** out, char** trace_json);
/* Branch decomposition of the triangulated disk built from g. `disk` may be NULL. */
OP_API op_status op_bd_json(const op_embedding* g, op_embedding** disk, char** json);
OP_API op_status op_pipeline_json(const op_embedding* g, int with_timings, char** json);

OP_API op_status op_oracle_branchwidth(const op_embedding* g, int max_edges, int* out);
OP_API op_status op_oracle_outerplanarity(const op_embedding* g, int max_vertices, int* out);
/* threads <= 0: ONIONPEEL_THREADS or hardware concurrency. */
OP_API op_status op_certify_theorem1(int k, uint64_t max_chord_sets, int threads, char** json);

/* artifact_json may be NULL to validate the graph alone. */
OP_API op_status op_verify(const op_embedding* g, const char* artifact_json, char** json);

/* max(1, floor(3 bw / 2) - 1); -1 for negative bw. */
OP_API int op_treewidth_bound(int bw);

#ifdef __cplusplus
}
#endif

#endif /* ONIONPEEL_ONIONPEEL_H_ */
