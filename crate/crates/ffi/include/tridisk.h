#ifndef TRIDISK_H
#define TRIDISK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum TdStatus {
  TD_STATUS_OK = 0,
  TD_STATUS_NULL_POINTER = 1,
  TD_STATUS_INVALID_ARGUMENT = 2,
  TD_STATUS_IO = 3,
  TD_STATUS_PARSE = 4,
  TD_STATUS_DOMAIN = 5,
  TD_STATUS_BUDGET_EXHAUSTED = 6,
  TD_STATUS_BUFFER_TOO_SMALL = 7,
  TD_STATUS_INTERNAL = 8,
} TdStatus;

/**
 * Opaque handle to an immutable 2-complex.
 */
typedef struct TdComplex TdComplex;

/**
 * The library version as a static NUL-terminated string.
 */
const char *td_version(void);

/**
 * Copy of the last error message on this thread, or null. Free with
 * `td_string_free`.
 */
char *td_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void td_string_free(char *s);

/**
 * Writes `t_k` in decimal to `buf`.
 *
 * # Safety
 * `buf` must hold `len` bytes; `needed` may be null.
 */
enum TdStatus td_count_triangulations(size_t k, char *buf, size_t len, size_t *needed);

/**
 * Samples `Y_2(n, p)`.
 *
 * # Safety
 * `out` must be a valid out-pointer.
 */
enum TdStatus td_complex_sample(uint32_t n, double p, uint64_t seed, struct TdComplex **out);

/**
 * Reads a complex from a text file.
 *
 * # Safety
 * `path` must be NUL-terminated; `out` a valid out-pointer.
 */
enum TdStatus td_complex_read(const char *path, struct TdComplex **out);

/**
 * # Safety
 * `c` must be a live handle; `path` NUL-terminated.
 */
enum TdStatus td_complex_write(const struct TdComplex *c, const char *path);

/**
 * # Safety
 * `c` must be null or a handle not freed before.
 */
void td_complex_free(struct TdComplex *c);

/**
 * # Safety
 * `c` must be a live handle.
 */
uint32_t td_complex_n(const struct TdComplex *c);

/**
 * # Safety
 * `c` must be a live handle.
 */
size_t td_complex_face_count(const struct TdComplex *c);

/**
 * # Safety
 * `c` must be a live handle; `out` a valid out-pointer.
 */
enum TdStatus td_complex_contains_face(const struct TdComplex *c,
                                       uint32_t a,
                                       uint32_t b,
                                       uint32_t d,
                                       bool *out);

/**
 * Looks for a disk bounding `(a, b, d)`. Sets `found` to 1 and
 * `internal_used` on success, `found` to 0 when none exists within
 * `max_internal`. Returns `TD_STATUS_BUDGET_EXHAUSTED` if the search gave
 * up.
 *
 * # Safety
 * `c` must be a live handle; out-pointers valid (`internal_used` may be
 * null).
 */
enum TdStatus td_find_disk(const struct TdComplex *c,
                           uint32_t a,
                           uint32_t b,
                           uint32_t d,
                           size_t max_internal,
                           uint64_t budget,
                           int32_t *found,
                           size_t *internal_used);

/**
 * Runs the certifier on every 3-cycle. `yes` is 1 only if all are
 * certified; `exhausted` counts searches that ran out of budget.
 *
 * # Safety
 * `c` must be a live handle; out-pointers valid (`exhausted` may be null).
 */
enum TdStatus td_certify(const struct TdComplex *c,
                         size_t max_internal,
                         uint64_t budget,
                         int32_t *yes,
                         size_t *exhausted);

/**
 * Fraction of `samples` random 3-cycles (all of them when `samples` is 0)
 * that bound a disk.
 *
 * # Safety
 * `c` must be a live handle; `out` a valid out-pointer.
 */
enum TdStatus td_triangulated_fraction(const struct TdComplex *c,
                                       size_t max_internal,
                                       uint64_t budget,
                                       size_t samples,
                                       uint64_t seed,
                                       double *out);

/**
 * `2Φ` of the face set given as `count` consecutive vertex triples.
 *
 * # Safety
 * `faces` must hold `3 * count` values; `out` a valid out-pointer.
 */
enum TdStatus td_phi(const uint32_t *faces, size_t count, int64_t *twice_phi);

/**
 * `e^(-μ/2) + e^(-μ²/2Δ)` (first term only when `Δ = 0`), clamped to
 * `[0, 1]`.
 */
double td_janson_bound(double mu, double delta);

#endif  /* TRIDISK_H */
