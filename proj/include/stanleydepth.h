#ifndef STANLEYDEPTH_H
#define STANLEYDEPTH_H

/*
 * C interface to the Stanley depth toolkit. Objects are opaque handles
 * owned by the library; every function returns a status code and reports
 * detail through sd_last_error(). Strings returned through char** are
 * heap-allocated and must be released with sd_string_free().
 *
 * Antichain text format: facets separated by whitespace, each facet a
 * comma-separated 1-based vertex list ("1,2,3 1,2,4"); the compact digit
 * form "123 124" is accepted when the ground set has at most 9 vertices.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_IMPOSSIBLE = 1,  /* exhausted search: no partition at the requested depth */
  SD_MISMATCH = 2,    /* table verification found a difference */
  SD_ERR_PARSE = 10,
  SD_ERR_INVALID = 11,
  SD_ERR_SCALE = 12,
  SD_ERR_IO = 13,
  SD_ERR_INTERNAL = 14
} sd_status;

typedef struct sd_antichain sd_antichain;
typedef struct sd_family sd_family;
typedef struct sd_partition sd_partition;

const char* sd_status_name(sd_status status);
/* thread-local message for the most recent failure in this thread */
const char* sd_last_error(void);
void sd_string_free(char* s);

/* ---- antichains ---------------------------------------------------- */

/* ground_n = 0 infers the ground set as the largest vertex mentioned */
sd_status sd_antichain_parse(const char* text, int ground_n, sd_antichain** out);
void sd_antichain_free(sd_antichain* a);
int sd_antichain_ground(const sd_antichain* a);
int sd_antichain_count(const sd_antichain* a);
sd_status sd_antichain_format(const sd_antichain* a, char** out);

/* ---- set families and the exact solver ------------------------------ */

sd_status sd_down_closure(const sd_antichain* a, sd_family** out);
sd_status sd_complement_upset(const sd_antichain* a, sd_family** out);
void sd_family_free(sd_family* f);
long long sd_family_count(const sd_family* f);

/*
 * Exact Stanley depth. witness may be NULL; *flagged_empty is set when
 * the family is empty and the value is the ground-set size by convention.
 */
sd_status sd_sdepth(const sd_family* f, int* value, unsigned long long* nodes,
                    int* flagged_empty, sd_partition** witness);
/* SD_OK with a witness, or SD_IMPOSSIBLE after exhausting the search */
sd_status sd_decide_at_least(const sd_family* f, int k, sd_partition** witness);
/* exhaustive reference search; ground sets of size at most 4 */
sd_status sd_sdepth_naive(const sd_family* f, int* value);

void sd_partition_free(sd_partition* p);
int sd_partition_size(const sd_partition* p);
int sd_partition_min_top(const sd_partition* p);
sd_status sd_partition_format(const sd_partition* p, char** out);

/* ---- reports (JSON documents) --------------------------------------- */

/* criterion + strong criterion verdict, witness, and residual traces */
sd_status sd_scc_report(const sd_antichain* a, char** json);
/* support / common-vertex / purification reduction to a fixpoint */
sd_status sd_reduce_report(const sd_antichain* a, char** json);
/* per-vertex splitting verdicts; mode is "exact" or "criterion" */
sd_status sd_splits_report(const sd_antichain* a, const char* mode, char** json);
/*
 * Grid poset of monomial generators under a bound. gens/g/j are tuple
 * lists like "2,0,1 0,1,2"; g or j may be NULL (componentwise-maximum
 * bound, no quotient generators). side is "ideal" or "quotient";
 * construct_n3 nonzero runs the three-variable constructive partition.
 */
sd_status sd_grid_report(const char* gens, const char* g, const char* j,
                         const char* side, int construct_n3, char** json);
/*
 * Classification census over all k-uniform hypergraphs on [n] up to
 * isomorphism. jsonl_path may be NULL. include_empty counts the empty
 * edge set as a bad-degree instance.
 */
sd_status sd_census_report(int n, int k, int jobs, int long_running,
                           int include_empty, const char* mode,
                           const char* jsonl_path, int sort_records,
                           char** json);
/* exact Stanley depth of both sides for every instance; csv_path optional */
sd_status sd_gap_report(int n, int k, int jobs, int long_running,
                        const char* csv_path, char** json);
/*
 * Reruns every desk-scale census and gap table and diffs against the
 * built-in expected values (or tables_json when non-NULL). Returns SD_OK
 * on an exact match, SD_MISMATCH otherwise; *json carries the details.
 */
sd_status sd_verify_tables(int jobs, int long_running, const char* tables_json,
                           char** json);

#ifdef __cplusplus
}
#endif

#endif /* STANLEYDEPTH_H */
