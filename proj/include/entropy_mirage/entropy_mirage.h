/* entropy-mirage C API.
 *
 * C++ core behind an extern "C" surface: opaque handles, status codes,
 * caller-owned output buffers. Every function returns em_status; on failure
 * em_last_error() holds a thread-local message. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * em_string_free().
 */
#ifndef ENTROPY_MIRAGE_H_
#define ENTROPY_MIRAGE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum em_status {
    EM_OK = 0,
    EM_ERR_INVALID_ARGUMENT = 1, /* bad parameters, malformed input data   */
    EM_ERR_IO = 2,               /* missing or unreadable files            */
    EM_ERR_LIMIT = 3,            /* size bound or compute budget exceeded  */
    EM_ERR_TARGET = 4,           /* iterative search budget exhausted      */
    EM_ERR_CHECK = 5,            /* experiment self-check failed           */
    EM_ERR_INTERNAL = 6
} em_status;

typedef struct em_graph em_graph;
typedef struct em_digit_stream em_digit_stream;

const char* em_version(void);
const char* em_last_error(void);
void em_string_free(char* s);

/* ---- graphs -------------------------------------------------------- */

/* edges: 2*edge_count labels, (u1,v1,u2,v2,...), 1-indexed. */
em_status em_graph_build(int32_t node_count, const int32_t* edges, size_t edge_count,
                         em_graph** out);
void em_graph_free(em_graph* g);

int32_t em_graph_node_count(const em_graph* g);
int64_t em_graph_edge_count(const em_graph* g);
/* out must hold node_count entries. */
em_status em_graph_degree_sequence(const em_graph* g, int32_t* out);
em_status em_graph_edge_density(const em_graph* g, double* out);
/* '0'/'1' row-major strict upper triangle. */
em_status em_graph_adjacency_bits(const em_graph* g, char** out);
em_status em_graph_canonical_form(const em_graph* g, char** out);
em_status em_graphs_isomorphic(const em_graph* a, const em_graph* b, int* out);

em_status em_is_graphical(const int32_t* seq, size_t len, int* out);
em_status em_realize_graph(const int32_t* seq, size_t len, em_graph** out);

/* Edge-list text format: "# nodes=N" then one "u v" line per edge. */
em_status em_graph_to_text(const em_graph* g, char** out);
em_status em_graph_from_text(const char* text, em_graph** out);
em_status em_graph_write_file(const em_graph* g, const char* path);
em_status em_graph_read_file(const char* path, em_graph** out);

/* ---- digit streams -------------------------------------------------- */

em_status em_digits_champernowne(int32_t base, int64_t count, em_digit_stream** out);
em_status em_digits_pi(int32_t base, int64_t count, em_digit_stream** out);
em_status em_digits_prng(int32_t base, int64_t count, uint64_t seed, em_digit_stream** out);
em_status em_digits_load_file(const char* path, em_digit_stream** out);
em_status em_digits_binarize(const em_digit_stream* s, em_digit_stream** out);
void em_digit_stream_free(em_digit_stream* s);

int32_t em_digit_stream_base(const em_digit_stream* s);
int64_t em_digit_stream_count(const em_digit_stream* s);
/* out must hold count entries; digit values, not ASCII. */
em_status em_digit_stream_copy(const em_digit_stream* s, uint8_t* out, size_t capacity);
em_status em_digit_stream_provenance(const em_digit_stream* s, char** out);
/* Digit file format: '# base=B' header, contiguous ASCII digits. */
em_status em_digit_stream_to_text(const em_digit_stream* s, char** out);
em_status em_digit_stream_write_file(const em_digit_stream* s, const char* path);

/* ---- generators ------------------------------------------------------ */

em_status em_zk_graph(int32_t steps, em_graph** out);
em_status em_zk_edge_count_formula(int32_t steps, int64_t* out);
em_status em_zk_graph_randomized(int32_t steps, uint64_t seed, em_graph** out);
/* mode 0: consume n(n-1)/2 bits (upper triangle); mode 1: consume n*n bits. */
em_status em_digit_graph(const em_digit_stream* bits, int32_t n, int mode, em_graph** out);
em_status em_er_graph(int32_t n, double p, uint64_t seed, em_graph** out);
em_status em_er_graph_exact(int32_t n, int64_t edges, uint64_t seed, em_graph** out);
em_status em_ba_graph(int32_t n, int32_t m, uint64_t seed, em_graph** out);
em_status em_regular_ring_graph(int32_t n, int32_t k, em_graph** out);
/* matrix: row-major 2x2 with rows summing to 1; y1,y2 must hold count each. */
em_status em_correlated_pair(const double matrix[4], int64_t count, uint64_t seed, double* y1,
                             double* y2);
/* out must hold n entries. */
em_status em_targeted_degree_sequence(int32_t n, double target_bits, double tol, uint64_t seed,
                                      int32_t* out);

/* ---- measures -------------------------------------------------------- */

em_status em_shannon_entropy(const double* probabilities, size_t len, double* out);
/* symbols are raw byte values; mode 0: non-overlapping blocks, 1: sliding. */
em_status em_block_entropy(const uint8_t* symbols, size_t len, int32_t block_len, int mode,
                           double* out);
/* out_rates must hold max_block_len entries (H_L / L for L = 1..max). */
em_status em_entropy_rate_profile(const uint8_t* symbols, size_t len, int32_t max_block_len,
                                  int mode, double* out_rates, int32_t* out_argmin);
em_status em_adjacency_entropy(const em_graph* g, double* out);
em_status em_degree_sequence_entropy(const em_graph* g, double* out);
em_status em_lz78(const char* bits, int64_t* out_phrases, int64_t* out_compressed_bits);
em_status em_clustering_coefficient(const em_graph* g, double* out);
/* pairs written as (degree, count); call with out=NULL to query the length. */
em_status em_degree_histogram(const em_graph* g, int64_t* out_pairs, size_t capacity,
                              size_t* out_len);
/* feature: adjacency | degree-sequence | block (needs block_len) |
 * compression | clustering. Returns the JSON report the measure CLI emits. */
em_status em_graph_entropy_json(const em_graph* g, const char* feature, int32_t block_len,
                                const char* provenance, char** out_json);
em_status em_graph_entropy_value(const em_graph* g, const char* feature, int32_t block_len,
                                 double* out);

/* ---- experiments ------------------------------------------------------ */

/* kind: pi-histogram | density-entropy-equality | ba-vs-er | zk-growth |
 * zk-divergence | compression-vs-entropy | omega-graph.
 * params_json: kind-specific parameters (may be NULL or "{}").
 * out_dir: when non-NULL and non-empty, <kind>.csv/.json (and .svg when
 * svg != 0) are written there. Returns the JSON report. */
em_status em_experiment_run(const char* kind, const char* params_json, uint64_t seed,
                            const char* out_dir, int svg, char** out_report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTROPY_MIRAGE_H_ */
