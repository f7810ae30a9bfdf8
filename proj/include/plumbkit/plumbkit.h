/*
 * plumbkit C interface.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every function returning pk_status leaves a message retrievable with
 * pk_last_error() (per thread) when it fails. Strings handed out through a
 * char** parameter are heap allocated and must be released with
 * pk_string_free(). Arbitrary-precision integers cross the boundary as
 * base-10 strings.
 */
#ifndef PLUMBKIT_H
#define PLUMBKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PLUMBKIT_BUILDING)
#    define PK_API __declspec(dllexport)
#  else
#    define PK_API __declspec(dllimport)
#  endif
#else
#  define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_ARGUMENT = 1,   /* null pointer or malformed argument */
  PK_ERR_DOMAIN = 2,     /* value outside the operation's domain */
  PK_ERR_PARITY = 3,     /* internal divisibility check failed */
  PK_ERR_SINGULAR = 4,   /* even determinant where odd is required */
  PK_ERR_MOVE = 5,       /* calculus move not applicable / replay mismatch */
  PK_ERR_HYPOTHESIS = 6, /* triple extraction does not apply */
  PK_ERR_PARSE = 7,      /* malformed graph or trace document */
  PK_ERR_IO = 8,
  PK_ERR_INTERNAL = 9
} pk_status;

typedef enum pk_verdict {
  PK_VERDICT_S3 = 0,
  PK_VERDICT_NOT_HOMOLOGY_SPHERE = 1,
  PK_VERDICT_UNKNOWN = 2
} pk_verdict;

typedef struct pk_graph pk_graph;
typedef struct pk_reduction pk_reduction;
typedef struct pk_scan pk_scan;

typedef struct pk_scan_params {
  int64_t p_bound;
  int64_t q_bound;
  int64_t r_min;
  int64_t r_max;
  int64_t s_min;
  int64_t s_max;
  unsigned threads; /* 0: hardware concurrency */
} pk_scan_params;

PK_API const char* pk_version(void);
PK_API const char* pk_status_name(pk_status status);
PK_API const char* pk_last_error(void);
PK_API void pk_string_free(char* s);

/* Continued fractions. */
PK_API pk_status pk_expand(const char* num, const char* den, char** terms_out);
PK_API pk_status pk_evaluate(const char* terms, char** value_out);

/* Brieskorn spheres. Indices may be given in any order. */
PK_API pk_status pk_seifert(int64_t a1, int64_t a2, int64_t a3, char** text_out);
PK_API pk_status pk_all_odd(int64_t a1, int64_t a2, int64_t a3, int* odd_out);
PK_API pk_status pk_brieskorn_signature(int64_t a1, int64_t a2, int64_t a3, char** sigma_out);
PK_API pk_status pk_rohlin_lattice(int64_t a1, int64_t a2, int64_t a3, int* mu_out);
PK_API pk_status pk_rohlin_plumbing(int64_t a1, int64_t a2, int64_t a3, int* mu_out);

/* Plumbing graphs. */
PK_API pk_status pk_graph_parse(const char* text, pk_graph** graph_out);
PK_API pk_status pk_graph_load(const char* path, pk_graph** graph_out);
PK_API pk_status pk_graph_fixture(const char* name, pk_graph** graph_out);
PK_API pk_status pk_graph_star(int64_t a1, int64_t a2, int64_t a3, pk_graph** graph_out);
PK_API void pk_graph_free(pk_graph* graph);
PK_API size_t pk_graph_vertex_count(const pk_graph* graph);
PK_API size_t pk_graph_edge_count(const pk_graph* graph);
PK_API pk_status pk_graph_serialize(const pk_graph* graph, char** text_out);
PK_API pk_status pk_graph_dot(const pk_graph* graph, char** dot_out);
PK_API pk_status pk_graph_canonical(const pk_graph* graph, char** code_out);
PK_API pk_status pk_graph_determinant(const pk_graph* graph, char** det_out);
PK_API pk_status pk_graph_signature(const pk_graph* graph, int64_t* sigma_out);
/* Space-separated ids of the Wu class, ascending. */
PK_API pk_status pk_graph_wu_class(const pk_graph* graph, char** ids_out);
PK_API pk_status pk_graph_mu_bar(const pk_graph* graph, char** mu_bar_out);
PK_API pk_status pk_graph_rohlin(const pk_graph* graph, int* mu_out);

/* Calculus. budget counts visited canonical states. */
PK_API pk_status pk_reduce(const pk_graph* graph, size_t budget, size_t blow_up_depth, pk_reduction** out);
PK_API pk_verdict pk_reduction_verdict(const pk_reduction* r);
PK_API pk_status pk_reduction_label(const pk_reduction* r, char** label_out);
PK_API size_t pk_reduction_move_count(const pk_reduction* r);
PK_API size_t pk_reduction_states_visited(const pk_reduction* r);
PK_API int pk_reduction_budget_exhausted(const pk_reduction* r);
/* Trace document; PK_ERR_ARGUMENT unless the verdict is S3. */
PK_API pk_status pk_reduction_trace(const pk_reduction* r, char** trace_out);
/* Canonical codes of every graph along the trace, one per line. */
PK_API pk_status pk_reduction_path(const pk_reduction* r, char** codes_out);
PK_API void pk_reduction_free(pk_reduction* r);
PK_API pk_status pk_trace_replay(const char* text, pk_graph** end_out, size_t* move_count_out);

/* Surgery-coefficient scan. */
PK_API void pk_scan_params_default(pk_scan_params* params);
PK_API pk_status pk_surgery_coefficient(int64_t p, int64_t q, int64_t r, int64_t s, char** coefficient_out);
PK_API pk_status pk_scan_run(const pk_scan_params* params, pk_scan** out);
PK_API size_t pk_scan_record_count(const pk_scan* scan);
PK_API size_t pk_scan_hit_count(const pk_scan* scan);
PK_API pk_status pk_scan_records(const pk_scan* scan, char** jsonl_out);
PK_API pk_status pk_scan_summary(const pk_scan* scan, char** text_out);
/* Distinct hit triples, one "a1,a2,a3" per line. */
PK_API pk_status pk_scan_hit_triples(const pk_scan* scan, char** text_out);
PK_API void pk_scan_free(pk_scan* scan);

/* Target-property report for Sigma(a1,a2,a3); as_record selects one JSON line. */
PK_API pk_status pk_lemma_report(int64_t a1, int64_t a2, int64_t a3, int as_record, char** text_out,
                                 int* satisfied_out);

#ifdef __cplusplus
}
#endif

#endif /* PLUMBKIT_H */
