/* otrid: exact checkers and products for generalized tridendriform structures.
 *
 * C interface over the shared library. All functions return a status code
 * (OTRID_OK on success); results come back through out-parameters. Strings
 * returned through char** are heap-allocated and must be released with
 * otrid_string_free. On failure otrid_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread).
 */
#ifndef OTRID_H
#define OTRID_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    OTRID_OK = 0,
    OTRID_ERR_PARSE = 1,   /* malformed text or JSON */
    OTRID_ERR_INVALID = 2, /* structural validation failed */
    OTRID_ERR_DOMAIN = 3,  /* arguments outside the declared domain */
    OTRID_ERR_LIMIT = 4,   /* resource guard tripped */
    OTRID_ERR_NULL = 5     /* required argument was NULL */
};

typedef struct otrid_table otrid_table;
typedef struct otrid_algebra otrid_algebra; /* matching associative algebra */
typedef struct otrid_rb otrid_rb;           /* Rota-Baxter data */

const char* otrid_version(void);
const char* otrid_feature_list(void); /* one capability per line */
const char* otrid_last_error(void);
void otrid_string_free(char* s);

/* ---- operation tables ---- */
int otrid_table_parse_json(const char* json, otrid_table** out);
int otrid_table_builtin(const char* name, int size, const char* aux_json, otrid_table** out);
int otrid_table_random(int size, uint64_t seed, otrid_table** out);
void otrid_table_free(otrid_table* t);
int otrid_table_size(const otrid_table* t);
int otrid_table_to_json(const otrid_table* t, char** out_json);
int otrid_table_opposite(const otrid_table* t, otrid_table** out);
int otrid_table_is_commutative(const otrid_table* t, int* out);
/* level: "diassociative" | "eds" | "ets" */
int otrid_table_check(const otrid_table* t, const char* level, char** out_report_json);

/* ---- decorated trees ---- */
int otrid_trees_count(int n, int x_size, int omega_size, char** out_decimal);
/* labels: space-separated angle labels; lines of canonical trees, sorted */
int otrid_trees_enumerate(int n, const char* labels, int omega_size, int max_n, char** out_lines);
int otrid_tree_canonical(const char* text, int omega_size, char** out);
/* op: "prec" | "succ" | "circ"; left/right: tree text or "|" for the unit;
 * unchecked != 0 skips the ETS precondition on the table */
int otrid_tree_product(const otrid_table* t, const char* op, int omega, const char* left,
                       const char* right, int unchecked, char** out_comb);

/* ---- generic axiom scans ---- */
/* structure: "trees" | "words" | "rb" | "tensor". words/rb need algebra_json.
 * trees/words/tensor scan exhaustively within max_size (total leaves or total
 * letters); rb samples `samples` seeded random triples. */
int otrid_axioms_fuzz(const otrid_table* t, const char* structure, const char* algebra_json,
                      int max_size, int samples, uint64_t seed, char** out_report_json);
int otrid_ets_equivalence_probe(const otrid_table* t, int leaf_bound, int* ets_ok, int* axioms_ok);

/* ---- typed words ---- */
int otrid_algebra_parse_json(const char* json, otrid_algebra** out);
void otrid_algebra_free(otrid_algebra* a);
int otrid_algebra_check_matching(const otrid_algebra* a, char** out_report_json);
int otrid_word_product(const otrid_table* t, const otrid_algebra* a, const char* op, int omega,
                       const char* left, const char* right, int unchecked, char** out_comb);

/* ---- Rota-Baxter ---- */
int otrid_rb_parse_json(const char* json, otrid_rb** out);
void otrid_rb_free(otrid_rb* a);
int otrid_rb_verify(const otrid_table* t, const otrid_rb* a, char** out_report_json);
int otrid_rb_induce_check(const otrid_table* t, const otrid_rb* a, int samples, uint64_t seed,
                          char** out_report_json);

/* ---- tensor collapse ---- */
int otrid_tensor_phi(const otrid_table* t, char** out_report_json);
/* mode: "generation" | "freeness"; labels as in otrid_trees_enumerate */
int otrid_tensor_probe(const otrid_table* t, const char* mode, const char* labels, int n_max,
                       char** out_report_json);

/* ---- operad ---- */
int otrid_operad_relations(const otrid_table* t, int emit_vectors, char** out_report_json);
int otrid_operad_koszul_dual(const otrid_table* t, int emit_presentation, char** out_report_json);
/* a,b,c: comma-separated rationals indexed by Omega */
int otrid_operad_assoc(const otrid_table* t, const char* a, const char* b, const char* c,
                       char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* OTRID_H */
