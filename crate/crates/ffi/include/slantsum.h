#ifndef SLANTSUM_H
#define SLANTSUM_H

/* This header is generated from the Rust sources by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum {
  // The call succeeded and out-parameters are valid.
  SS_STATUS_OK = 0,
  // A required pointer argument was null.
  SS_STATUS_NULL_POINTER = 1,
  // Sizes or values violated a precondition (empty grid, length mismatch).
  SS_STATUS_INVALID_ARGUMENT = 2,
  // Coordinates referenced vertices or cells outside the grid.
  SS_STATUS_OUT_OF_RANGE = 3,
  // The exact result does not fit the 64-bit output type.
  SS_STATUS_OVERFLOW = 4,
  // The vertex list does not form a valid closed rectilinear boundary.
  SS_STATUS_INVALID_CURVE = 5,
  // The boundary is valid but not positively oriented (counterclockwise).
  SS_STATUS_NOT_POSITIVELY_ORIENTED = 6,
} SsStatus;

// Opaque handle to an integer grid (owned by the library).
typedef struct SsGrid SsGrid;

// Opaque handle to a summed-area table over an integer grid.
typedef struct SsSat SsSat;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates a grid from `width * height` row-major values, row 0 at the
// bottom. On success writes a handle to `out` and returns `Ok`; the handle
// must be released with [`ss_grid_free`].
//
// # Safety
// `values` must point to `len` readable `int64_t`s and `out` to a writable
// pointer slot.
SsStatus ss_grid_new_i64(size_t width,
                         size_t height,
                         const int64_t *values,
                         size_t len,
                         SsGrid **out);

// Releases a grid handle. Null is ignored.
//
// # Safety
// `grid` must be null or a handle produced by [`ss_grid_new_i64`] that has
// not been freed.
void ss_grid_free(SsGrid *grid);

// Builds the summed-area table of a grid. On success writes a handle to
// `out`; release it with [`ss_sat_free`].
//
// # Safety
// `grid` must be a live grid handle and `out` a writable pointer slot.
SsStatus ss_sat_build(const SsGrid *grid, SsSat **out);

// Releases a summed-area-table handle. Null is ignored.
//
// # Safety
// `sat` must be null or a handle produced by [`ss_sat_build`] that has not
// been freed.
void ss_sat_free(SsSat *sat);

// Sums the inclusive cell box `x0..=x1, y0..=y1` in constant time and
// writes the exact result to `out`.
//
// # Safety
// `sat` must be a live table handle and `out` a writable `int64_t` slot.
SsStatus ss_sat_rect_sum(const SsSat *sat,
                         int64_t x0,
                         int64_t y0,
                         int64_t x1,
                         int64_t y1,
                         int64_t *out);

// Integrates the grid over the region enclosed by a simple closed
// counterclockwise rectilinear boundary given as `len` vertices
// (`xs[i]`, `ys[i]`), without repeating the first vertex at the end.
// Writes the exact cell sum to `out`.
//
// # Safety
// `grid` must be a live grid handle, `xs`/`ys` must point to `len` readable
// `int64_t`s, and `out` must be a writable `int64_t` slot.
SsStatus ss_region_integral(const SsGrid *grid,
                            const int64_t *xs,
                            const int64_t *ys,
                            size_t len,
                            int64_t *out);

// A static, null-terminated name for a status code (for logging).
const char *ss_status_name(SsStatus status);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SLANTSUM_H */
