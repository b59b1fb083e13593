/* C interface to the diagram monoid library.
 *
 * Values are opaque handles owned by the caller and released with
 * dm_value_free. Strings returned through char** are heap-allocated and must
 * be released with dm_string_free. Every call returns a dm_status; on failure
 * dm_last_error() and dm_last_error_name() describe the most recent error on
 * the calling thread.
 */
#ifndef DIAGMON_H
#define DIAGMON_H

#include <stddef.h>
#include <stdint.h>

#if defined(DIAGMON_BUILDING_LIBRARY)
#define DM_API __attribute__((visibility("default")))
#else
#define DM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dm_status {
    DM_OK = 0,
    DM_E_USAGE = 1,      /* malformed input, unknown category or monoid, null argument */
    DM_E_VALIDATION = 2, /* well-formed input that violates a structural constraint */
    DM_E_INTERNAL = 3
} dm_status;

typedef struct dm_value dm_value;
typedef struct dm_report dm_report;

DM_API const char* dm_version(void);
DM_API const char* dm_last_error(void);
/* Symbolic name of the last error, e.g. "ShapeMismatch"; "" after success. */
DM_API const char* dm_last_error_name(void);
DM_API void dm_string_free(char* s);

/* Categories: P, Pd, Pd-bar, Cob, Cob-bar, Cob0, Cob0-bar, aTLe, aTL, aTLd, Ann, Annd. */
DM_API dm_status dm_value_parse(const char* category, const char* json, dm_value** out);
DM_API void dm_value_free(dm_value* v);
DM_API dm_status dm_value_to_json(const dm_value* v, char** out);
DM_API const char* dm_value_category(const dm_value* v);

/* Product of two values of one category. diagnostics may be null; otherwise it
 * receives a JSON object with dead-block or circle counts. */
DM_API dm_status dm_compose(const dm_value* x, const dm_value* y, dm_value** product, char** diagnostics);

/* which: "star", "sigma" or "rho". */
DM_API dm_status dm_involution(const dm_value* v, const char* which, dm_value** out);

typedef enum dm_check_mode { DM_CHECK_AUTO = 0, DM_CHECK_CRITERION = 1, DM_CHECK_SEARCH = 2 } dm_check_mode;

typedef struct dm_check_options {
    dm_check_mode mode;
    uint64_t budget;
    uint64_t seed;
    int digit_exponents;
} dm_check_options;

DM_API dm_check_options dm_check_options_default(void);

/* Verdict JSON for "u = v" (or an alias such as "@nested") in the named monoid.
 * options may be null. */
DM_API dm_status dm_check_identity(const char* identity, const char* monoid, const dm_check_options* options,
                                   char** verdict);

DM_API dm_status dm_normal_form(const char* word, int canonical, int digit_exponents, char** out);

/* category: "P" or "Ann". */
DM_API dm_status dm_idempotents(int n, const char* category, char** out);

typedef enum dm_check_status { DM_CHECK_PASS = 0, DM_CHECK_FAIL = 1, DM_CHECK_SKIPPED = 2 } dm_check_status;

typedef void (*dm_progress_fn)(const char* line, void* user);

/* Runs the acceptance battery. filter may be null or empty; progress may be
 * null and is called once per finished entry, serialized. */
DM_API dm_status dm_suite_run(uint64_t seed, const char* filter, int parallel, dm_progress_fn progress, void* user,
                              dm_report** out);
DM_API void dm_report_free(dm_report* r);
DM_API size_t dm_report_size(const dm_report* r);
DM_API int dm_report_passed(const dm_report* r);
DM_API dm_check_status dm_report_status(const dm_report* r, size_t i);
/* Owned by the report; null when i is out of range. */
DM_API const char* dm_report_id(const dm_report* r, size_t i);
DM_API const char* dm_report_line(const dm_report* r, size_t i);
DM_API dm_status dm_report_to_json(const dm_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
