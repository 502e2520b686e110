/* SPDX-License-Identifier: Apache-2.0 */
#ifndef PSEUDOARR_H
#define PSEUDOARR_H

/*
 * C interface to the pseudoarr library.
 *
 * Functions return a pa_status. On failure the message is available from
 * pa_last_error() until the next call on the same thread. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * pa_string_free(); handles are released with their matching free function.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PA_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define PA_API __attribute__((visibility("default")))
#else
#  define PA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pa_status {
  PA_OK = 0,
  PA_ERR_INVALID_CURVE,
  PA_ERR_TANGENTIAL_CONTACT,
  PA_ERR_TOO_MANY_INTERSECTIONS,
  PA_ERR_VERTEX_CONTACT,
  PA_ERR_TRIPLE_POINT,
  PA_ERR_DUPLICATE_ID,
  PA_ERR_DEGENERATE_INPUT,
  PA_ERR_UNKNOWN_ID,
  PA_ERR_INCOMPLETE_TRIPLE,
  PA_ERR_UNKNOWN_SIGNATURE,
  PA_ERR_CONSTRUCTION_FAILED,
  PA_ERR_DEGENERATE_RADIUS,
  PA_ERR_NO_FULL_WEIGHT_FACE,
  PA_ERR_REVERSAL_CHECK_FAILED,
  PA_ERR_VALIDATION_FAILED,
  PA_ERR_BUDGET_EXHAUSTED,
  PA_ERR_UNKNOWN_FAMILY,
  PA_ERR_PARSE,
  PA_ERR_IO,
  PA_ERR_INVALID_ARGUMENT,
  PA_ERR_NULL_ARGUMENT,
  PA_ERR_INTERNAL
} pa_status;

typedef struct pa_arrangement pa_arrangement;

PA_API const char *pa_version(void);
PA_API const char *pa_status_name(pa_status status);
PA_API const char *pa_last_error(void);
PA_API void pa_string_free(char *text);

/* Arrangements ----------------------------------------------------------- */

/* Parses and validates an arrangement file. */
PA_API pa_status pa_arrangement_parse(const char *text, pa_arrangement **out);
PA_API pa_status pa_arrangement_load(const char *path, pa_arrangement **out);
PA_API void pa_arrangement_free(pa_arrangement *arr);

PA_API size_t pa_arrangement_size(const pa_arrangement *arr);
PA_API int pa_arrangement_is_complete(const pa_arrangement *arr);
/* Metadata object as compact JSON; "{}" when the source had none. */
PA_API pa_status pa_arrangement_metadata(const pa_arrangement *arr, char **json);
PA_API pa_status pa_arrangement_serialize(const pa_arrangement *arr, char **text);
PA_API pa_status pa_arrangement_save(const pa_arrangement *arr, const char *path);

/* {"v": [...], "f": [...]} */
PA_API pa_status pa_weight_profile(const pa_arrangement *arr, char **json);

/*
 * Reads and checks a file without stopping at the first problem.
 * *valid is set to 1 or 0; *listing receives one line per violation (empty
 * when valid). Returns PA_ERR_PARSE or PA_ERR_IO for unreadable input; an
 * invalid arrangement is reported through *valid, not the status.
 */
PA_API pa_status pa_validate_file(const char *path, int *valid, char **listing);
PA_API pa_status pa_validate_text(const char *text, int *valid, char **listing);

/* Analysis --------------------------------------------------------------- */

/*
 * Full analysis document as JSON. k_list may be NULL (k_count 0) for the
 * default list. *violated is set to 1 when any proven bound is reported
 * as violated.
 */
PA_API pa_status pa_analyze(const pa_arrangement *arr, const long *k_list, size_t k_count, char **document,
                            int *violated);

/* Debug hook shifting every computed vertex weight; 0 disables it. */
PA_API void pa_set_vertex_weight_mutation(int offset);

/* Constructions ---------------------------------------------------------- */

/* [{"name", "parameters", "summary"}, ...] */
PA_API pa_status pa_families(char **json);
/*
 * keys/values are parallel arrays of count parameter strings such as
 * "n" = "6" or "epsilon" = "1/20".
 */
PA_API pa_status pa_construct(const char *family, const char *const *keys, const char *const *values, size_t count,
                              pa_arrangement **out);
/* {"v_0": 10, "f_0": 1, ...}; an empty object when no formula is known. */
PA_API pa_status pa_family_expectations(const char *family, const char *const *keys, const char *const *values,
                                        size_t count, char **json);
/*
 * Inverts through a point of a weight-n face. *report receives
 * {"before": [...], "after": [...], "reversal_check": "passed"}.
 * resolution 0 selects the default.
 */
PA_API pa_status pa_invert(const pa_arrangement *arr, unsigned resolution, pa_arrangement **out, char **report);

/* Search ----------------------------------------------------------------- */

typedef struct pa_search_overrides {
  int has_seed;
  uint64_t seed;
  int has_budget;
  long budget;
} pa_search_overrides;

/*
 * Runs the fuzzer or the conjecture hunt described by a JSON config.
 * overrides may be NULL. *failed is set to 1 when the fuzzer saw a proven
 * bound violated or an unknown triple signature. Conjecture violations are
 * findings, listed in the report, and do not set it.
 */
PA_API pa_status pa_search(const char *config, const pa_search_overrides *overrides, char **report, int *failed);

/* Rendering -------------------------------------------------------------- */

typedef struct pa_render_options {
  int vertices;
  int faces;
  int emphasize_zero;
  double width;
} pa_render_options;

/* options may be NULL for curves only at the default width. */
PA_API pa_status pa_render_svg(const pa_arrangement *arr, const pa_render_options *options, char **svg);

#ifdef __cplusplus
}
#endif

#endif /* PSEUDOARR_H */
