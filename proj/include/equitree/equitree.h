#ifndef EQUITREE_H
#define EQUITREE_H

/* equitree: equitable forest colorings of degenerate graphs.
 *
 * Partition the vertices of a d-degenerate graph into k classes so that
 * every class induces a forest and no class exceeds ceil(n/k) vertices.
 * The library parses and generates edge lists, solves, verifies, and
 * provides an exhaustive oracle for small graphs.
 *
 * All handles are opaque; every object returned by the library is released
 * with its matching _free function. Strings returned through char** out
 * parameters are released with eqt_string_free. Functions returning int
 * return a status code from the EQT_* list below.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* status codes */
enum {
  EQT_OK = 0,
  EQT_ERR_USAGE = 1,    /* bad arguments or unparsable input */
  EQT_ERR_INVALID = 2,  /* a claimed success failed verification */
  EQT_ERR_SOLVE = 3,    /* solver stalled; see eqt_result_fail_kind */
  EQT_NOT_EXIST = 4,    /* oracle: exhaustive search found no coloring */
  EQT_BUDGET_EXCEEDED = 5, /* oracle: node budget ran out */
  EQT_ERR_INTERNAL = 9
};

/* oracle modes */
enum { EQT_MODE_CAP_ONLY = 0, EQT_MODE_STRICT = 1 };

/* generator back-degree distributions */
enum { EQT_DIST_FIXED = 0, EQT_DIST_UNIFORM = 1 };

/* solve flags */
enum {
  EQT_SOLVE_DIAGNOSTICS = 1,  /* audit the layer construction */
  EQT_SOLVE_REBALANCE = 2,    /* push a valid coloring toward spread <= 1 */
  EQT_SOLVE_DEBUG_CHECKS = 4  /* re-verify state after every mutation */
};

typedef struct eqt_graph eqt_graph;
typedef struct eqt_result eqt_result;

const char* eqt_version(void);
void eqt_string_free(char* s);

/* Graphs ---------------------------------------------------------------- */

/* Parse edge-list text: optional "v <n>" header, "u v" per line, '#'
 * comments. On error returns EQT_ERR_USAGE and, when err_msg is non-NULL,
 * stores a message with the offending line number. */
int eqt_graph_parse(const char* text, eqt_graph** out, char** err_msg);
int eqt_graph_read_file(const char* path, eqt_graph** out, char** err_msg);
void eqt_graph_free(eqt_graph* g);

char* eqt_graph_write(const eqt_graph* g);
int eqt_graph_n(const eqt_graph* g);
long long eqt_graph_edge_count(const eqt_graph* g);
int eqt_graph_degeneracy(const eqt_graph* g);
int eqt_graph_max_degree(const eqt_graph* g);

/* Deterministic random graph: d-degenerate, max degree at most dmax,
 * reproducible from the seed. dist is EQT_DIST_FIXED or EQT_DIST_UNIFORM.
 * Output is edge-list text with a descriptive header comment. */
int eqt_generate(int n, int d, int dmax, unsigned long long seed, int dist, char** out_text,
                 char** err_msg);

/* Solving --------------------------------------------------------------- */

/* Solve for k classes. Returns EQT_OK when the coloring was produced and
 * re-verified, EQT_ERR_SOLVE when the solver stalled, EQT_ERR_INVALID if a
 * claimed success failed verification. A result handle is produced in all
 * three cases. */
int eqt_solve(const eqt_graph* g, int k, unsigned flags, eqt_result** out, char** err_msg);
void eqt_result_free(eqt_result* r);

int eqt_result_valid(const eqt_result* r);
long long eqt_result_t(const eqt_result* r);
int eqt_result_alpha(const eqt_result* r);
int eqt_result_beta(const eqt_result* r);
int eqt_result_guaranteed(const eqt_result* r);
const char* eqt_result_branch(const eqt_result* r);
const char* eqt_result_fail_kind(const eqt_result* r); /* NULL when none */
int eqt_result_color(const eqt_result* r, int v);      /* -1 when uncolored */
long long eqt_result_class_size(const eqt_result* r, int c);
long long eqt_result_max_class(const eqt_result* r);
long long eqt_result_min_class(const eqt_result* r);
long long eqt_result_spread(const eqt_result* r);
/* violations found by the diagnostics audit; -1 when not computed */
long long eqt_result_diag_violations(const eqt_result* r);
long long eqt_result_millis(const eqt_result* r);
/* canonical JSON record; owned by the result, do not free */
const char* eqt_result_json(eqt_result* r);

/* Verification ---------------------------------------------------------- */

/* Check a complete coloring (array of n_colors = n entries). Returns EQT_OK
 * when valid, EQT_ERR_INVALID otherwise; the JSON report is produced either
 * way unless arguments are unusable. */
int eqt_verify(const eqt_graph* g, const int* colors, int n_colors, int k, char** report_json);

/* Rebalance a valid coloring toward spread <= 1; writes the adjusted colors
 * back into the array. */
int eqt_rebalance(const eqt_graph* g, int* colors, int n_colors, int k, long long* moves);

/* Oracle ---------------------------------------------------------------- */

/* Exhaustive search, graphs of at most 20 vertices. Returns EQT_OK with a
 * JSON {"k":..,"colors":[..]} on Found, EQT_NOT_EXIST, or
 * EQT_BUDGET_EXCEEDED. */
int eqt_oracle_solve(const eqt_graph* g, int k, int mode, long long node_limit,
                     char** coloring_json, char** err_msg);
int eqt_oracle_min_k(const eqt_graph* g, int mode, long long node_limit, int* out_k,
                     char** err_msg);

#ifdef __cplusplus
}
#endif

#endif /* EQUITREE_H */
