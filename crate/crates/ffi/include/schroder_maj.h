#ifndef SCHRODER_MAJ_H
#define SCHRODER_MAJ_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SmStatus {
  SM_STATUS_OK = 0,
  SM_STATUS_NULL_POINTER = 1,
  SM_STATUS_INVALID_ARGUMENT = 2,
  SM_STATUS_PARSE = 3,
  SM_STATUS_INVALID_SHAPE = 4,
  SM_STATUS_NOT_IN_FAMILY = 5,
  SM_STATUS_NON_EXACT_DIVISION = 6,
  SM_STATUS_OVERFLOW = 7,
  SM_STATUS_PANIC = 8,
} SmStatus;

/**
 * Opaque exact Laurent polynomial in q.
 */
typedef struct SmPoly SmPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *sm_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void sm_string_free(char *s);

/**
 * # Safety
 * `p` must be null or a handle returned by this library.
 */
void sm_poly_free(struct SmPoly *p);

/**
 * Parses text such as `"1 + 2*q + q^2"` or `"q^-1 - 3"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum SmStatus sm_poly_parse(const char *text, struct SmPoly **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SmStatus sm_poly_to_string(const struct SmPoly *p, char **out);

/**
 * Lowest and highest exponents with a nonzero coefficient. Fails with
 * `INVALID_ARGUMENT` on the zero polynomial.
 *
 * # Safety
 * `p` must be a live handle; `lo` and `hi` must be writable.
 */
enum SmStatus sm_poly_degree_range(const struct SmPoly *p, int64_t *lo, int64_t *hi);

/**
 * Coefficient of `q^exp`; `OVERFLOW` if it does not fit in 64 bits.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SmStatus sm_poly_coeff(const struct SmPoly *p, int64_t exp, int64_t *out);

/**
 * Value at q = 1 as a decimal string (it may exceed 64 bits).
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SmStatus sm_poly_eval_at_one(const struct SmPoly *p, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum SmStatus sm_poly_equal(const struct SmPoly *a, const struct SmPoly *b, bool *out);

/**
 * Gaussian binomial [n choose k]; zero outside 0 <= k <= n.
 *
 * # Safety
 * `out` must be writable.
 */
enum SmStatus sm_qbinom(int64_t n, int64_t k, struct SmPoly **out);

/**
 * Sum of q^maj over Schröder paths from (r,0) to (n,m) with k diagonal
 * steps, by enumeration. `order` is a step order such as `"E>D>N"`; null
 * means `"E>D>N"`.
 *
 * # Safety
 * `order` must be null or a nul-terminated string; `out` must be writable.
 */
enum SmStatus sm_schroeder_maj_enum(uint32_t r,
                                    uint32_t n,
                                    uint32_t m,
                                    uint32_t k,
                                    const char *order,
                                    struct SmPoly **out);

/**
 * Closed form for the same generating function. `family_empty` may be null.
 *
 * # Safety
 * `order` must be null or a nul-terminated string; `out` must be writable.
 */
enum SmStatus sm_schroeder_maj_closed(uint32_t r,
                                      uint32_t n,
                                      uint32_t m,
                                      uint32_t k,
                                      const char *order,
                                      struct SmPoly **out,
                                      bool *family_empty);

/**
 * Closed form over row-increasing tableaux of shape (n,m)/(r) with k
 * repeated values; `amaj` selects the ascent statistic.
 *
 * # Safety
 * `out` must be writable; `family_empty` may be null.
 */
enum SmStatus sm_rinc_closed(uint32_t r,
                             uint32_t n,
                             uint32_t m,
                             uint32_t k,
                             bool amaj,
                             struct SmPoly **out,
                             bool *family_empty);

/**
 * Closed form over increasing tableaux of shape (n,m)/(r).
 *
 * # Safety
 * `out` must be writable; `family_empty` may be null.
 */
enum SmStatus sm_inc_maj_closed(uint32_t r,
                                uint32_t n,
                                uint32_t m,
                                uint32_t k,
                                struct SmPoly **out,
                                bool *family_empty);

/**
 * Maj polynomial of standard tableaux of a skew shape such as `"4,3/1"`,
 * from the determinant formula.
 *
 * # Safety
 * `shape` must be a nul-terminated string; `out` must be writable.
 */
enum SmStatus sm_skew_syt_closed(const char *shape, struct SmPoly **out);

/**
 * Generating function of a tableau family by enumeration. `family` is
 * `"rinc"`, `"inc"` or `"syt"`; `stat` is `"maj"` or `"amaj"`. Cost grows
 * exponentially with the number of cells.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum SmStatus sm_tableau_stat_enum(const char *family,
                                   const char *shape,
                                   uint32_t k,
                                   const char *stat,
                                   struct SmPoly **out);

/**
 * Applies a bijection to a tableau written as rows separated by `/` with
 * `.` for inner cells. `map` is `phi` (the image is a path word), `chi`,
 * `rho`, `g` or `rinc_to_syt`.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum SmStatus sm_bijection_apply(const char *map, const char *tableau, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHRODER_MAJ_H */
