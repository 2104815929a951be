#ifndef MOTZPERM_H
#define MOTZPERM_H

/*
 * C interface to the motzperm library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a motzperm_status;
 * on failure motzperm_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings returned through
 * a `char**` out-parameter are owned by the caller and released with
 * motzperm_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MOTZPERM_BUILDING)
#    define MOTZPERM_API __declspec(dllexport)
#  else
#    define MOTZPERM_API __declspec(dllimport)
#  endif
#else
#  define MOTZPERM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum motzperm_status {
    MOTZPERM_OK = 0,
    MOTZPERM_ERR_PARSE = 1,
    MOTZPERM_ERR_INVALID_ARGUMENT = 2,
    MOTZPERM_ERR_SIZE_LIMIT = 3,
    MOTZPERM_ERR_INVALID_PATH = 4,
    MOTZPERM_ERR_NULL_POINTER = 5,
    MOTZPERM_ERR_INTERNAL = 6
} motzperm_status;

typedef enum motzperm_step_kind {
    MOTZPERM_STEP_U = 0,
    MOTZPERM_STEP_D = 1,
    MOTZPERM_STEP_H1 = 2,
    MOTZPERM_STEP_H2 = 3,
    MOTZPERM_STEP_H3 = 4
} motzperm_step_kind;

typedef enum motzperm_preset {
    MOTZPERM_PRESET_DEPTH = 0,
    MOTZPERM_PRESET_REFINED = 1
} motzperm_preset;

typedef enum motzperm_statistic {
    MOTZPERM_STAT_DEPTH = 0,
    MOTZPERM_STAT_EXC = 1
} motzperm_statistic;

typedef enum motzperm_check_selection {
    MOTZPERM_CHECKS_ALL = 0,
    MOTZPERM_CHECKS_SIGNED_PERMUTATION_GF = 1,
    MOTZPERM_CHECKS_DERANGEMENT_SERIES = 2,
    MOTZPERM_CHECKS_TABLE1 = 3
} motzperm_check_selection;

typedef enum motzperm_format {
    MOTZPERM_FORMAT_TEXT = 0,
    MOTZPERM_FORMAT_JSON = 1,
    MOTZPERM_FORMAT_CSV = 2
} motzperm_format;

typedef struct motzperm_permutation motzperm_permutation;
typedef struct motzperm_path motzperm_path;
typedef struct motzperm_series motzperm_series;
typedef struct motzperm_report motzperm_report;

typedef struct motzperm_stats {
    uint64_t inv;
    uint64_t fix;
    uint64_t exc;
    uint64_t depth;
} motzperm_stats;

/* Exponents of q^q p^p s^s t^t. */
typedef struct motzperm_monomial {
    uint32_t q;
    uint32_t p;
    uint32_t s;
    uint32_t t;
} motzperm_monomial;

typedef struct motzperm_step {
    motzperm_step_kind kind;
    int32_t height;
    int32_t choice;
} motzperm_step;

/* Borrowed view; strings live as long as the report. */
typedef struct motzperm_record {
    const char* check;
    int32_t n;
    const char* expected;
    const char* computed;
    int32_t pass;
    double elapsed_ms;
} motzperm_record;

MOTZPERM_API const char* motzperm_last_error(void);
MOTZPERM_API const char* motzperm_status_string(motzperm_status status);
MOTZPERM_API void motzperm_string_free(char* text);

/* Permutations: one-line notation, space separated, 1-based. */
MOTZPERM_API motzperm_status motzperm_permutation_parse(const char* text, motzperm_permutation** out);
MOTZPERM_API motzperm_status motzperm_permutation_from_images(const int32_t* images, size_t n,
                                                              motzperm_permutation** out);
MOTZPERM_API void motzperm_permutation_free(motzperm_permutation* perm);
MOTZPERM_API size_t motzperm_permutation_size(const motzperm_permutation* perm);
MOTZPERM_API motzperm_status motzperm_permutation_images(const motzperm_permutation* perm, int32_t* buffer,
                                                         size_t capacity);
MOTZPERM_API motzperm_status motzperm_permutation_to_string(const motzperm_permutation* perm, char** out);
MOTZPERM_API motzperm_status motzperm_permutation_stats(const motzperm_permutation* perm,
                                                        motzperm_stats* out);
/* Shortest transposition factorization cost; n <= 7. */
MOTZPERM_API motzperm_status motzperm_depth_via_factorization(const motzperm_permutation* perm,
                                                              uint64_t* out);

/* Weighted Motzkin paths: `U(1,0) H3(1,0) D(1,0)` or a JSON array of
 * {"kind","height","choice"} records. Parsing checks syntax only. */
MOTZPERM_API motzperm_status motzperm_path_parse(const char* text, motzperm_path** out);
MOTZPERM_API motzperm_status motzperm_path_from_json(const char* json, motzperm_path** out);
MOTZPERM_API void motzperm_path_free(motzperm_path* path);
MOTZPERM_API size_t motzperm_path_length(const motzperm_path* path);
MOTZPERM_API motzperm_status motzperm_path_step(const motzperm_path* path, size_t index,
                                                motzperm_step* out);
/* *valid is set to 1 or 0; *diagnostic (may be NULL) receives the reason. */
MOTZPERM_API motzperm_status motzperm_path_validate(const motzperm_path* path, int* valid,
                                                    char** diagnostic);
MOTZPERM_API motzperm_status motzperm_path_weight(const motzperm_path* path, motzperm_monomial* out);
MOTZPERM_API motzperm_status motzperm_path_to_string(const motzperm_path* path, char** out);
MOTZPERM_API motzperm_status motzperm_path_to_json(const motzperm_path* path, char** out);

/* The weight-preserving bijection and its inverse. */
MOTZPERM_API motzperm_status motzperm_encode(const motzperm_permutation* perm, motzperm_path** out);
MOTZPERM_API motzperm_status motzperm_decode(const motzperm_path* path, motzperm_permutation** out);

/* Continued-fraction expansion up to z^order (order <= 30). */
MOTZPERM_API motzperm_status motzperm_expand(motzperm_preset preset, int order, motzperm_series** out);
MOTZPERM_API void motzperm_series_free(motzperm_series* series);
MOTZPERM_API size_t motzperm_series_length(const motzperm_series* series);
MOTZPERM_API motzperm_status motzperm_series_coefficient(const motzperm_series* series, size_t index,
                                                         char** out);

/* Parity-reversing involution; *delta = depth(perm) - depth(image). */
MOTZPERM_API motzperm_status motzperm_involution(const motzperm_permutation* perm,
                                                 motzperm_permutation** image, int* delta);
/* Signed sum of (-1)^stat over S_n, n <= 10. */
MOTZPERM_API motzperm_status motzperm_sign_imbalance(motzperm_statistic stat, int n, int64_t* out);
/* E_n as decimal text, n <= 50. */
MOTZPERM_API motzperm_status motzperm_euler_number(int n, char** out);

/* Verification battery, max_n <= 9. */
MOTZPERM_API motzperm_status motzperm_verify(int max_n, motzperm_check_selection selection,
                                             motzperm_report** out);
MOTZPERM_API void motzperm_report_free(motzperm_report* report);
MOTZPERM_API size_t motzperm_report_size(const motzperm_report* report);
MOTZPERM_API int motzperm_report_all_passed(const motzperm_report* report);
MOTZPERM_API motzperm_status motzperm_report_record(const motzperm_report* report, size_t index,
                                                    motzperm_record* out);
MOTZPERM_API motzperm_status motzperm_report_render(const motzperm_report* report, motzperm_format format,
                                                    int include_timing, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MOTZPERM_H */
