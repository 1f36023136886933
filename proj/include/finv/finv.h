#ifndef FINV_FINV_H
#define FINV_FINV_H

/* C interface to the involution library. Every function returning
 * finv_status leaves its outputs untouched on failure; the message of the
 * last failure on the calling thread is available from finv_last_error.
 * Strings handed out by the library are released with finv_free_string. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FINV_BUILDING)
#    define FINV_API __declspec(dllexport)
#  else
#    define FINV_API __declspec(dllimport)
#  endif
#else
#  define FINV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum finv_status
{
  FINV_OK = 0,
  FINV_ERR_NOT_A_BIJECTION,
  FINV_ERR_NOT_AN_INVOLUTION,
  FINV_ERR_PARSE,
  FINV_ERR_NEGATIVE_HEIGHT,
  FINV_ERR_NONZERO_FINAL_HEIGHT,
  FINV_ERR_LABEL_OUT_OF_RANGE,
  FINV_ERR_OUT_OF_DOMAIN,
  FINV_ERR_POSITION_OUT_OF_RANGE,
  FINV_ERR_ARITY_MISMATCH,
  FINV_ERR_UNDECOMPOSABLE,
  FINV_ERR_NOT_A_DYCK_PATH,
  FINV_ERR_NOT_IRREDUCIBLE,
  FINV_ERR_DIVISION_BY_NON_UNIT,
  FINV_ERR_BAD_CONSTANT_TERM,
  FINV_ERR_NONZERO_INNER_CONSTANT,
  FINV_ERR_INTERNAL_MISMATCH,
  FINV_ERR_UNKNOWN_SERIES,
  FINV_ERR_OUT_OF_RANGE,
  FINV_ERR_INVALID_ARGUMENT, /* null pointer or bad enum value */
  FINV_ERR_INTERNAL          /* unexpected exception, e.g. out of memory */
} finv_status;

/* Snake-case name such as "not_an_involution"; "ok" for FINV_OK. */
FINV_API const char *finv_status_token(finv_status status);
/* Empty when the last call on this thread succeeded. */
FINV_API const char *finv_last_error(void);
FINV_API void finv_free_string(char *s);

typedef enum finv_format
{
  FINV_FORMAT_TEXT = 0,
  FINV_FORMAT_CSV,
  FINV_FORMAT_JSON,
  FINV_FORMAT_BFILE /* series only */
} finv_format;

/* Permutations, 1-indexed. */

typedef struct finv_perm finv_perm;

FINV_API finv_status finv_perm_parse(const char *text, finv_perm **out);
FINV_API finv_status finv_perm_from_values(const int *values, size_t n, finv_perm **out);
FINV_API finv_perm *finv_perm_clone(const finv_perm *p);
FINV_API void finv_perm_free(finv_perm *p);
FINV_API size_t finv_perm_size(const finv_perm *p);
/* Value at position i (1..n); 0 when i is out of range. */
FINV_API int finv_perm_at(const finv_perm *p, size_t i);
/* Space separated. */
FINV_API finv_status finv_perm_to_string(const finv_perm *p, char **out);
FINV_API int finv_perm_is_involution(const finv_perm *p);
FINV_API finv_status finv_perm_contains(const finv_perm *p, const finv_perm *pattern, int *out);
FINV_API finv_status finv_perm_reverse_complement(const finv_perm *p, finv_perm **out);
FINV_API finv_status finv_perm_is_simple(const finv_perm *p, int *out);

/* Fine class token ("one", "type12", "type21", "simple",
 * "inflation_of_simple") and a decomposition sketch such as
 * "21[1, 321]"; sketch may be null. */
FINV_API finv_status finv_classify(const finv_perm *p, char **class_token, char **sketch);

/* Labelled Motzkin paths. */

typedef struct finv_path finv_path;

FINV_API finv_status finv_path_of_involution(const finv_perm *p, finv_path **out);
/* "UUD[2]UHUD[3]D[2]D[1]"; unbracketed down steps get label 1, or the
 * maximal label when default_maximal is nonzero. */
FINV_API finv_status finv_path_parse(const char *text, int default_maximal, finv_path **out);
FINV_API void finv_path_free(finv_path *path);
FINV_API finv_status finv_path_to_involution(const finv_path *path, finv_perm **out);
FINV_API finv_status finv_path_to_string(const finv_path *path, char **out);
FINV_API finv_status finv_path_draw(const finv_path *path, char **out);
/* "unitary", "maximal" or "other". */
FINV_API const char *finv_path_kind(const finv_path *path);
FINV_API int finv_path_is_irreducible(const finv_path *path);

/* Census. avoid is a pattern list such as "4321,132"; null or "" avoids
 * nothing. */

typedef enum finv_group_by
{
  FINV_GROUP_NONE = 0,
  FINV_GROUP_FINE_CLASS,
  FINV_GROUP_FIXED_POINTS,
  FINV_GROUP_FINE_CLASS_AND_FIXED_POINTS
} finv_group_by;

typedef struct finv_census_options
{
  int n;
  const char *avoid;
  finv_group_by group_by;
  size_t witness_cap;
  unsigned threads;
} finv_census_options;

FINV_API finv_census_options finv_census_defaults(void);

typedef struct finv_report finv_report;

FINV_API finv_status finv_census(const finv_census_options *options, finv_report **out);
FINV_API void finv_report_free(finv_report *r);
FINV_API uint64_t finv_report_total(const finv_report *r);
FINV_API finv_status finv_report_format(const finv_report *r, finv_format format, int with_witnesses,
                                        char **out);

/* Returning nonzero stops the enumeration early (still FINV_OK). The
 * permutation is only valid during the call. */
typedef int (*finv_perm_visitor)(const finv_perm *p, void *user);

/* Visits involutions in generation order. group_by and witness_cap are
 * ignored. */
FINV_API finv_status finv_enumerate(const finv_census_options *options, finv_perm_visitor visit,
                                    void *user);

/* Simple involutions of I_n(4321), one per line, for 5 <= n <= 10. */
FINV_API finv_status finv_appendix(int n, char **out);

/* Power series. */

typedef struct finv_series finv_series;

FINV_API size_t finv_series_name_count(void);
FINV_API const char *finv_series_name(size_t i);
FINV_API finv_status finv_series_named(const char *name, int order, finv_series **out);
FINV_API void finv_series_free(finv_series *s);
FINV_API int finv_series_is_bivariate(const finv_series *s);
/* Exact decimal or "p/q"; j must be 0 for univariate series. */
FINV_API finv_status finv_series_coefficient(const finv_series *s, int i, int j, char **out);
/* TEXT, JSON or BFILE. */
FINV_API finv_status finv_series_format(const finv_series *s, finv_format format, char **out);

/* Census against series. */

typedef struct finv_reconciliation finv_reconciliation;

FINV_API finv_status finv_reconcile(const char *name, int n_max, unsigned threads,
                                    finv_reconciliation **out);
FINV_API void finv_reconciliation_free(finv_reconciliation *r);
FINV_API int finv_reconciliation_all_pass(const finv_reconciliation *r);
FINV_API size_t finv_reconciliation_row_count(const finv_reconciliation *r);
FINV_API finv_status finv_reconciliation_format(const finv_reconciliation *r, finv_format format,
                                                char **out);

#ifdef __cplusplus
}
#endif

#endif
