/*
 * asx — asymptotic power series toolkit, C interface.
 *
 * The engine computes the coefficients b_0, b_1, ... of expansions
 *     x_n = y_n (b_0 + b_1/n + b_2/n^2 + ...)
 * for sequences given by difference-, product- or ratio-form relations,
 * using exact rational arithmetic, and verifies truncated estimates
 * against exactly-evaluated sequence values in high precision.
 *
 * All objects are opaque handles freed with their asx_*_free function.
 * Functions return ASX_OK on success; on failure the out-parameters are
 * untouched and asx_last_error() describes the problem for the calling
 * thread. Strings returned through char** are heap copies released with
 * asx_string_free().
 */

#ifndef ASX_H
#define ASX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum asx_status {
    ASX_OK = 0,
    ASX_ERR_INVALID = 1,       /* bad arguments, parse failures, unknown names */
    ASX_ERR_NORMALIZATION = 2, /* coefficient stream violates its kind's normalization */
    ASX_ERR_CAPABILITY = 3,    /* sequence lacks what the operation needs */
    ASX_ERR_PRECISION = 4,     /* measurement fell below the precision floor */
    ASX_ERR_DEGENERATE = 5,    /* the measured error vanishes identically */
    ASX_ERR_INTERNAL = 6
} asx_status;

typedef struct asx_spec asx_spec;     /* a sequence: kind, a-stream, evaluators */
typedef struct asx_series asx_series; /* truncated series, exact rational coefficients */
typedef struct asx_table asx_table;   /* estimate/exact/error rows */

const char* asx_version(void);

/* Description of the last failure on this thread; empty string if none. */
const char* asx_last_error(void);

void asx_string_free(char* s);

/* ---- sequence catalog ------------------------------------------------- */

size_t asx_builtin_count(void);
asx_status asx_builtin_info(size_t index, char** name, char** kind);

asx_status asx_spec_builtin(const char* name, asx_spec** out);
/* Sequence file: "kind: ...", "order: m", then one rational per line. */
asx_status asx_spec_from_file(const char* path, asx_spec** out);
asx_status asx_spec_from_text(const char* text, asx_spec** out);
void asx_spec_free(asx_spec* spec);

asx_status asx_spec_name(const asx_spec* spec, char** out);
asx_status asx_spec_kind(const asx_spec* spec, char** out);
/* "gamma", "e" or "" when the sequence has no named constant. */
asx_status asx_spec_limit_name(const asx_spec* spec, char** out);
/* 1 when exact values of x_n are computable (built-in sequences). */
int asx_spec_has_exact(const asx_spec* spec);
/* 1 for difference-form sequences, which expand additively around a limit. */
int asx_spec_is_additive(const asx_spec* spec);
/* Order declared in a sequence file, -1 for built-ins. */
long asx_spec_declared_order(const asx_spec* spec);

/* ---- expansions ------------------------------------------------------- */

asx_status asx_expand(const asx_spec* spec, long order, asx_series** out);
void asx_series_free(asx_series* series);
long asx_series_order(const asx_series* series);
/* Exact coefficient as rational text "p/q" ("p" when q == 1). */
asx_status asx_series_coeff(const asx_series* series, long k, char** out);

/* ---- numeric verification --------------------------------------------- */

/* Truncated estimate of x_n / exact x_n as decimal strings at the given
 * precision (decimal digits, >= 10). */
asx_status asx_estimate(const asx_spec* spec, const asx_series* series, long n, long k,
                        long digits, char** out);
asx_status asx_exact_value(const asx_spec* spec, long n, long digits, char** out);

asx_status asx_error_table(const asx_spec* spec, const asx_series* series, const long* n_values,
                           size_t n_count, const long* k_values, size_t k_count, long digits,
                           asx_table** out);
void asx_table_free(asx_table* table);
size_t asx_table_rows(const asx_table* table);
asx_status asx_table_cell(const asx_table* table, size_t row, long* n, long* k, char** estimate,
                          char** exact, char** abs_error);
/* format: "plain" (display-rounded, aligned), "csv" or "json". */
asx_status asx_table_render(const asx_table* table, const char* format, char** out);

/* Empirical exponent log2(err(n0)/err(2 n0)) of the k-truncation error. */
asx_status asx_convergence_order(const asx_spec* spec, const asx_series* series, long k, long n0,
                                 long digits, double* out);

/* Full check battery; *passed is 1 when every check held. n_values may be
 * NULL/0 to use the sequence's published reference points. */
asx_status asx_verify(const asx_spec* spec, long order, const long* n_values, size_t n_count,
                      long digits, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* ASX_H */
