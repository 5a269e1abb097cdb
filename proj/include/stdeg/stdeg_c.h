/* C interface to the strict-degeneracy toolkit. All functions return a
 * status code; on failure, stdeg_last_error() describes the problem for the
 * calling thread. Output strings are heap-allocated and must be released
 * with stdeg_string_free; handles with their matching _free function. */

#ifndef STDEG_C_H
#define STDEG_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stdeg_status {
  STDEG_OK = 0,
  STDEG_BAD_INPUT = 1,  /* precondition or parse failure; see last_error */
  STDEG_INTERNAL = 2,   /* invariant violation inside the library */
} stdeg_status;

typedef struct stdeg_graph stdeg_graph;
typedef struct stdeg_cert stdeg_cert;

const char* stdeg_version(void);

/* Message from the most recent failing call on this thread ("" if none). */
const char* stdeg_last_error(void);

void stdeg_string_free(char* s);
void stdeg_graph_free(stdeg_graph* g);
void stdeg_cert_free(stdeg_cert* c);

/* --- graphs -------------------------------------------------------------- */

/* format: "edge_json", "graph6", or NULL to sniff (leading '{' means JSON). */
stdeg_status stdeg_graph_parse(const char* text, const char* format,
                               stdeg_graph** out);

/* family: "path" {k}, "cycle" {k}, "complete-bipartite" {m,n},
 * "complete-multipartite" {sizes...}, "single-vertex" {}, "edgeless" {n}. */
stdeg_status stdeg_graph_family(const char* family, const int* params,
                                int n_params, stdeg_graph** out);

/* Replaces every edge by a path with `length` edges (length 1 is a no-op). */
stdeg_status stdeg_graph_subdivide(const stdeg_graph* g, int length,
                                   stdeg_graph** out);

stdeg_status stdeg_graph_serialize(const stdeg_graph* g, const char* format,
                                   char** out);

int stdeg_graph_vertex_count(const stdeg_graph* g);
int stdeg_graph_edge_count(const stdeg_graph* g);

/* --- certificates -------------------------------------------------------- */

stdeg_status stdeg_cert_parse(const char* json_text, stdeg_cert** out);
stdeg_status stdeg_cert_serialize(const stdeg_cert* c, char** out);

/* --- decision and verification ------------------------------------------ */

/* mode: 3 or 4. budget <= 0 selects the built-in default (1e7 states).
 * answer: 0 = yes, 1 = no, 3 = budget exhausted. result_json carries the
 * answer, the certificate (when yes), and states_expanded. */
stdeg_status stdeg_decide(const stdeg_graph* g, int s, int t, int mode,
                          long long budget, char** result_json, int* answer);

/* verdict: 0 = complete, 1 = anything else (report_json has the details). */
stdeg_status stdeg_verify(const stdeg_graph* g, const stdeg_cert* c,
                          char** report_json, int* verdict);

/* family: "even-cycle" {r,t}, "even-cycle-plan" {r,t}, "path" {k,r},
 * "odd-cycle" {r}, "complete-bipartite" {m,n,t},
 * "complete-bipartite-plan" {m,n,t},
 * "linear-forest-reduction" {r} with graph g and branch vertices x.
 * g and x are only read for linear-forest-reduction (g NULL otherwise).
 * cert_json carries the certificate plus its construction header. */
stdeg_status stdeg_certify(const char* family, const int* params, int n_params,
                           const stdeg_graph* g, const int* x, int n_x,
                           stdeg_cert** out_cert, char** cert_json);

/* Minimum uniform shield for t = 1..t_max, with exact ratios. jobs > 1
 * spreads rows over threads; results are identical. complete: 1 if no row
 * hit the budget. */
stdeg_status stdeg_scan(const stdeg_graph* g, int t_max, int mode,
                        long long budget, int jobs, char** result_json,
                        int* complete);

/* --- cover oracle --------------------------------------------------------- */

/* cover_json NULL builds a seeded random cover; otherwise the given cover
 * is validated against g and used. found: 1 if a transversal exists. */
stdeg_status stdeg_oracle_transversal(const stdeg_graph* g, int a, int b,
                                      const char* cover_json, uint64_t seed,
                                      char** result_json, int* found);

/* strategy: "exhaustive" or "sampled". verdict: 0 holds, 1 refuted,
 * 3 inconclusive. */
stdeg_status stdeg_oracle_check(const stdeg_graph* g, int a, int b,
                                const char* strategy, long long samples,
                                uint64_t seed, char** result_json,
                                int* verdict);

/* Decides uniform (s, t) unrestricted degeneracy, then checks (s+t, t)
 * covers. outcome: 0 = consistent, 1 = counterexample found,
 * 3 = undecided (search budget or inconclusive cover check). */
stdeg_status stdeg_oracle_stdp(const stdeg_graph* g, int s, int t,
                               const char* strategy, long long samples,
                               uint64_t seed, long long budget,
                               char** result_json, int* outcome);

stdeg_status stdeg_oracle_multipartite(const int* parts, int n_parts,
                                       int order_scan, char** result_json);

/* --- acceptance suite ------------------------------------------------------ */

/* which/n_which: specific check ids, or NULL/0 for all. all_pass: 1 iff
 * every executed check passed. result_json lists one row per check. */
stdeg_status stdeg_selftest(const int* which, int n_which, long long budget,
                            int jobs, char** result_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* STDEG_C_H */
