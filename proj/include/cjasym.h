/* C interface to the colored-Jones asymptotics library.
 *
 * All functions that produce data write a malloc'd NUL-terminated string
 * (JSON unless noted) through the out parameter; release it with
 * cj_string_free. On failure the out parameters are untouched and
 * cj_last_error holds a message. Contexts are not thread-safe.
 */
#ifndef CJASYM_H
#define CJASYM_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, aligned with the CLI exit codes. */
#define CJ_OK 0
#define CJ_CHECK_FAILED 1
#define CJ_USAGE_ERROR 2
#define CJ_CERTIFICATION_FAILED 3

typedef struct cj_ctx cj_ctx;

const char* cj_version(void);

/* config_json: one flat JSON configuration document; NULL or "" for
 * defaults. Returns NULL when the configuration is invalid. */
cj_ctx* cj_ctx_new(const char* config_json);
void cj_ctx_free(cj_ctx* ctx);

/* Message of the most recent failure on this context ("" when none).
 * The pointer stays valid until the next call on the context. */
const char* cj_last_error(const cj_ctx* ctx);

void cj_string_free(char* s);

/* JSON array of the catalog knot names. */
int cj_knot_names(cj_ctx* ctx, char** out_json);

/* Exact colored Jones polynomial at color n (n >= 1). */
int cj_colored_jones(cj_ctx* ctx, const char* knot, int n, char** out_json);

/* Symmetrized Alexander polynomial. */
int cj_alexander(cj_ctx* ctx, const char* knot, char** out_json);

/* Cyclotomic coefficient table C_k, k = 0..k_max. */
int cj_cyclotomic(cj_ctx* ctx, const char* knot, char** out_json);

/* Recompute an artifact ("jones" | "alexander" | "cyclotomic"), verify it
 * against any existing cache, and persist it when a cache directory is
 * configured. */
int cj_compute(cj_ctx* ctx, const char* knot, const char* what,
               char** out_json);

/* Run one verification suite ("mmr" | "loops" | "lemma21" | "bounds" |
 * "asymptotics"). Returns the suite status; out parameters may be NULL
 * individually. out_csv receives "" for suites without scan tables. */
int cj_verify(cj_ctx* ctx, const char* knot, const char* suite,
              char** out_report_json, char** out_summary, char** out_csv);

/* Consolidated report for a comma-separated knot list ("" for none). */
int cj_report(cj_ctx* ctx, const char* knots_csv, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CJASYM_H */
