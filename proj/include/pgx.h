/* C interface of the post-groupoid toolkit.
 *
 * Documents and reports are opaque handles owned by the library. Every
 * function returning PGX_OK has filled its output parameters; on any other
 * status the outputs are untouched and *errmsg (when requested) holds a
 * malloc'd description to be released with pgx_string_free.
 */
#ifndef PGX_H
#define PGX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pgx_doc pgx_doc;
typedef struct pgx_report pgx_report;

typedef enum {
  PGX_OK = 0,
  PGX_ERR_MALFORMED = 2,   /* document or table not well-shaped */
  PGX_ERR_BAD_INPUT = 3,   /* well-shaped data violating a precondition */
  PGX_ERR_LIMIT = 4,       /* size cap or search budget exceeded */
  PGX_ERR_INTERNAL = 5,
  PGX_ERR_UNSUPPORTED = 6, /* operation undefined for this document kind */
  PGX_ERR_NULL = 7
} pgx_status;

/* ---- documents ---- */

pgx_status pgx_doc_parse(const char* text, pgx_doc** out, char** errmsg);
pgx_status pgx_doc_read_file(const char* path, pgx_doc** out, char** errmsg);
/* Canonical text: sorted keys, two-space indent, newline-terminated. */
pgx_status pgx_doc_emit(const pgx_doc* doc, char** out, char** errmsg);
const char* pgx_doc_kind(const pgx_doc* doc);
void pgx_doc_free(pgx_doc* doc);
void pgx_string_free(char* s);

/* ---- reports ---- */

int pgx_report_ok(const pgx_report* report);
size_t pgx_report_violation_count(const pgx_report* report);
/* "rule-id w0 w1 ..." for violation i; caller frees. */
pgx_status pgx_report_violation(const pgx_report* report, size_t i, char** out);
size_t pgx_report_note_count(const pgx_report* report);
pgx_status pgx_report_note(const pgx_report* report, size_t i, char** out);
/* 1 and *value set when the stat exists, 0 otherwise. */
int pgx_report_stat(const pgx_report* report, const char* key, long long* value);
void pgx_report_free(pgx_report* report);

/* ---- operations ---- */

/* Dispatches the validator matching the document kind. */
pgx_status pgx_check(const pgx_doc* doc, pgx_report** out, char** errmsg);

/* post_groupoid -> groupoid with source pi, target phi, x * y = x (x |> y). */
pgx_status pgx_gl(const pgx_doc* doc, pgx_doc** out, char** errmsg);

/* group_action -> post_groupoid; with use_post the document's tri table is
 * used and the action must be one of the induced group. */
pgx_status pgx_from_action(const pgx_doc* doc, int use_post, pgx_doc** out,
                           char** errmsg);

/* post_groupoid | bracoid | rb_instance -> braided_quiver plus the combined
 * Yang-Baxter / non-degeneracy report. When the input itself violates its
 * axioms, *solution stays NULL and *report carries those violations. Report
 * stats: pairs, triples, ybe_ok, nondeg_ok. */
pgx_status pgx_ybe(const pgx_doc* doc, int all_witnesses, pgx_doc** solution,
                   pgx_report** report, char** errmsg);

/* "bracoid" or "post_groupoid". */
pgx_status pgx_convert(const pgx_doc* doc, const char* to_kind, pgx_doc** out,
                       char** errmsg);

/* mode: "induced" | "descendent" | "matched-pair". */
pgx_status pgx_rb_transform(const pgx_doc* doc, const char* mode, pgx_doc** out,
                            char** errmsg);

/* Deterministic section/bisection report; cap 0 means the default 10^6. */
pgx_status pgx_sections(const pgx_doc* doc, int bisections_only, size_t cap,
                        char** out, char** errmsg);

/* All post structures on the document's bundle and phi. text receives
 * either "count=N" or the concatenated canonical documents; *complete is 0
 * when the node budget ran out (budget 0 means the default 10^7). */
pgx_status pgx_enumerate(const pgx_doc* doc, long long budget, int count_only,
                         char** text, long long* count, int* complete,
                         char** errmsg);

/* psi_json is a bare JSON array mapping p's carrier into q's. */
pgx_status pgx_hom(const pgx_doc* p, const pgx_doc* q, const char* psi_json,
                   pgx_report** out, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* PGX_H */
