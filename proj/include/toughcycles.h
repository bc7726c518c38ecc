/* C API for the toughcycles engine: opaque handles, integer status codes,
 * malloc'd JSON strings released through tc_string_free. The CLI links
 * against this surface only. */

#ifndef TOUGHCYCLES_H
#define TOUGHCYCLES_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_PARSE = 1,       /* malformed graph6 / edge list input */
    TC_ERR_INVALID_ARG = 2, /* precondition violated (bad cycle, bad vertex, ...) */
    TC_ERR_UNSUPPORTED = 3, /* outside engine limits (n > 64, generation n > 10) */
    TC_ERR_IO = 4,          /* unreadable input file */
    TC_ERR_INTERNAL = 5
} tc_status;

typedef struct tc_graph tc_graph;

const char* tc_version(void);

/* Thread-local message for the most recent failing call. */
const char* tc_last_error(void);

void tc_string_free(char* s);
void tc_graph_free(tc_graph* g);

tc_status tc_graph_from_graph6(const char* line, tc_graph** out);
tc_status tc_graph_from_edge_list(const char* text, tc_graph** out);
int tc_graph_order(const tc_graph* g);
int tc_graph_size(const tc_graph* g);
tc_status tc_graph_to_graph6(const tc_graph* g, char** out);

/* Per-graph analyses. Each returns one JSON record (caller frees).
 * offsets: array of bound offsets drawn from {0,2,4}; may be NULL/empty.
 * failure_out (optional): set to 1 when the record contains a counterexample
 * or a failing oracle, else 0. */
tc_status tc_invariants_json(const tc_graph* g, const int* offsets, int n_offsets, int timeout_ms,
                             char** out, int* failure_out);
tc_status tc_check_json(const tc_graph* g, const int* offsets, int n_offsets, int timeout_ms,
                        char** out, int* failure_out);
tc_status tc_oracles_json(const tc_graph* g, const int* offsets, int n_offsets, int timeout_ms,
                          char** out, int* failure_out);
tc_status tc_setups_json(const tc_graph* g, int require_s3, char** out);
tc_status tc_hopping_json(const tc_graph* g, const int* cycle, int cycle_len, int u, char** out,
                          int* failure_out);

/* Corpus scan. Exactly one of input_path / gen_n is used: gen_n > 0 selects
 * the internal generator (n <= 10), otherwise input_path names a file with
 * one graph6 string per line. Records are emitted through the callback in
 * deterministic order (sorted by graph6 string), followed by one summary
 * line. */
typedef void (*tc_emit_fn)(const char* line, void* user);

typedef struct tc_scan_options {
    const char* input_path; /* NULL when generating */
    int gen_n;              /* 0 when reading a file */
    int connected_only;     /* generator filter */
    const int* offsets;
    int n_offsets;
    int with_oracles;
    int jobs;
    int timeout_ms; /* per graph; <= 0 disables */
    int timing;     /* emit measured elapsed_ms (breaks byte-determinism) */
} tc_scan_options;

tc_status tc_scan(const tc_scan_options* opts, tc_emit_fn emit, void* user, int* failure_out);

#ifdef __cplusplus
}
#endif

#endif /* TOUGHCYCLES_H */
