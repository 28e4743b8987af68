#ifndef PUISEUX_H
#define PUISEUX_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first four match the CLI exit codes.
 */
typedef enum PxStatus {
  PX_STATUS_OK = 0,
  PX_STATUS_DOMAIN = 1,
  PX_STATUS_PARSE = 2,
  PX_STATUS_RESOURCE = 3,
  PX_STATUS_NULL_POINTER = 4,
  PX_STATUS_INVALID_UTF8 = 5,
  PX_STATUS_PANIC = 6,
} PxStatus;

/**
 * Opaque list of divisor representatives.
 */
typedef struct PxDivisorSet PxDivisorSet;

/**
 * Opaque finitely generated Puiseux monoid.
 */
typedef struct PxMonoid PxMonoid;

/**
 * Opaque element of Q[Q_+].
 */
typedef struct PxPoly PxPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *px_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void px_string_free(char *s);

/**
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum PxStatus px_poly_parse(const char *text, struct PxPoly **out);

/**
 * # Safety
 * `p` is a live handle; `out` is writable. Free the string with `px_string_free`.
 */
enum PxStatus px_poly_format(const struct PxPoly *p, char **out);

/**
 * # Safety
 * `p` is NULL or a handle not yet freed.
 */
void px_poly_free(struct PxPoly *p);

/**
 * # Safety
 * `a`, `b` are live handles; `out` is writable.
 */
enum PxStatus px_poly_mul(const struct PxPoly *a, const struct PxPoly *b, struct PxPoly **out);

/**
 * # Safety
 * `a`, `b` are live handles; `out` is writable.
 */
enum PxStatus px_poly_equal(const struct PxPoly *a, const struct PxPoly *b, bool *out);

/**
 * Fails with `PX_STATUS_DOMAIN` on the zero element.
 *
 * # Safety
 * `p` is a live handle; `out` is writable.
 */
enum PxStatus px_poly_is_symmetric_support(const struct PxPoly *p, bool *out);

/**
 * `X -> X^r` with `r` given as text such as "1/2".
 *
 * # Safety
 * `p` is a live handle, `r` a NUL-terminated string, `out` writable.
 */
enum PxStatus px_poly_substitute(const struct PxPoly *p, const char *r, struct PxPoly **out);

/**
 * Canonical factorization as a JSON document (same shape as `factor --json`).
 *
 * # Safety
 * `p` is a live handle; `out` is writable. Free the string with `px_string_free`.
 */
enum PxStatus px_poly_factor_json(const struct PxPoly *p, char **out);

/**
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum PxStatus px_monoid_parse(const char *text, struct PxMonoid **out);

/**
 * # Safety
 * `m` is NULL or a handle not yet freed.
 */
void px_monoid_free(struct PxMonoid *m);

/**
 * Membership of a non-negative rational given as text.
 *
 * # Safety
 * `m` is a live handle, `value` a NUL-terminated string, `out` writable.
 */
enum PxStatus px_monoid_contains(const struct PxMonoid *m, const char *value, bool *out);

/**
 * Non-associate divisors of `p` in Q[S]. `limit` caps the candidate
 * sub-multisets; pass 0 for the library default.
 *
 * # Safety
 * `p`, `m` are live handles; `out` is writable.
 */
enum PxStatus px_divisors(const struct PxPoly *p,
                          const struct PxMonoid *m,
                          uint64_t limit,
                          struct PxDivisorSet **out);

/**
 * Number of divisors in the set; 0 for NULL.
 *
 * # Safety
 * `set` is NULL or a live handle.
 */
size_t px_divisor_set_len(const struct PxDivisorSet *set);

/**
 * A new handle holding a copy of the `index`-th divisor (canonical order).
 *
 * # Safety
 * `set` is a live handle; `out` is writable.
 */
enum PxStatus px_divisor_set_get(const struct PxDivisorSet *set, size_t index, struct PxPoly **out);

/**
 * # Safety
 * `set` is NULL or a handle not yet freed.
 */
void px_divisor_set_free(struct PxDivisorSet *set);

/**
 * Number of non-associate divisors of `p` in Q[S].
 *
 * # Safety
 * `p`, `m` are live handles; `out` is writable.
 */
enum PxStatus px_ff_divisor_count(const struct PxPoly *p,
                                  const struct PxMonoid *m,
                                  uint64_t limit,
                                  size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PUISEUX_H */
