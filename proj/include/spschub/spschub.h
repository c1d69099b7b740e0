#ifndef SPSCHUB_SPSCHUB_H
#define SPSCHUB_SPSCHUB_H

/* C interface to libspschub. Every call returns a status; on failure the
 * message is available from spschub_last_error() on the same thread.
 * Strings returned through `out` are owned by the caller and released with
 * spschub_string_free(). */

#include <stddef.h>

#if defined(SPSCHUB_BUILDING_LIBRARY)
#define SPSCHUB_API __attribute__((visibility("default")))
#else
#define SPSCHUB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spschub_status {
  SPSCHUB_OK = 0,
  SPSCHUB_INVALID_ARGUMENT = 1,
  SPSCHUB_PARSE = 2,
  SPSCHUB_UNSUPPORTED = 3,
  SPSCHUB_INTERNAL = 4,
  /* table check found differences; the report is still returned */
  SPSCHUB_MISMATCH = 5
} spschub_status;

typedef enum spschub_format {
  SPSCHUB_TEXT = 0,
  SPSCHUB_JSON = 1
} spschub_format;

typedef struct spschub_context spschub_context;

SPSCHUB_API spschub_status spschub_context_new(spschub_context** out);
SPSCHUB_API void spschub_context_free(spschub_context* ctx);

SPSCHUB_API const char* spschub_version(void);
/* "ok", "invalid_argument", "parse", "unsupported", "internal", "mismatch" */
SPSCHUB_API const char* spschub_status_name(spschub_status status);
/* Message of the last failed call on this thread, "" if none. */
SPSCHUB_API const char* spschub_last_error(void);
SPSCHUB_API void spschub_string_free(char* s);

/* Normalized form of a polynomial expression in x1..xn. */
SPSCHUB_API spschub_status spschub_parse_poly(spschub_context* ctx, int n, const char* expr,
                                              spschub_format format, char** out);

/* The symplectic Schubert polynomial of w ("-2 1 3" or "s1 s0"). */
SPSCHUB_API spschub_status spschub_schubert(spschub_context* ctx, int n, const char* w,
                                            spschub_format format, char** out);

/* Every element of W_n with its polynomial. */
SPSCHUB_API spschub_status spschub_table(spschub_context* ctx, int n, spschub_format format,
                                         char** out);

/* Compares a JSON fixture file with the computed table. Returns
 * SPSCHUB_MISMATCH, with the report in `out`, when they differ. */
SPSCHUB_API spschub_status spschub_table_check(spschub_context* ctx, const char* fixture_path,
                                               spschub_format format, char** out);

/* Expansion of the product of two symplectic Schubert polynomials. */
SPSCHUB_API spschub_status spschub_multiply(spschub_context* ctx, int n, const char* u,
                                            const char* v, spschub_format format, char** out);

/* Expansion of a polynomial over the combined basis. With check_ideal set,
 * also reports whether the polynomial lies in the ideal. */
SPSCHUB_API spschub_status spschub_expand(spschub_context* ctx, int n, const char* expr,
                                          int check_ideal, spschub_format format, char** out);

/* Arithmetic class and degree of x1^k1 ... xn^kn, sum k_i = n^2 + 1. */
SPSCHUB_API spschub_status spschub_arith_monomial(spschub_context* ctx, const int* exponents,
                                                  size_t count, spschub_format format,
                                                  char** out);

/* Height of Sp(2n)/B with respect to O(1). */
SPSCHUB_API spschub_status spschub_height(spschub_context* ctx, int n, spschub_format format,
                                          char** out);

#ifdef __cplusplus
}
#endif

#endif
