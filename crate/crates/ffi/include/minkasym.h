#ifndef MINKASYM_H
#define MINKASYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. `MA_STATUS_OK` is zero; everything else is an error.
typedef enum MaStatus {
  MA_STATUS_OK = 0,
  MA_STATUS_NULL_POINTER = 1,
  MA_STATUS_DEGENERATE_INPUT = 2,
  MA_STATUS_EMPTY_INTERSECTION = 3,
  MA_STATUS_SINGULAR_MATRIX = 4,
  MA_STATUS_ASYMMETRIC_GAUGE = 5,
  MA_STATUS_ORIGIN_NOT_INTERIOR = 6,
  MA_STATUS_NOT_SYMMETRIC = 7,
  MA_STATUS_LP_FAILURE = 8,
  MA_STATUS_NO_TRIPLE = 9,
  MA_STATUS_UNCLASSIFIED_POINT = 10,
  MA_STATUS_DOMAIN = 11,
  MA_STATUS_INCONSISTENT_CHARACTERIZATION = 12,
  MA_STATUS_PARSE = 13,
  MA_STATUS_IO = 14,
  MA_STATUS_BUFFER_TOO_SMALL = 15,
  MA_STATUS_PANIC = 16,
} MaStatus;

// Gauge body handle; always centrally symmetric.
typedef struct MaGauge MaGauge;

// Convex polygon handle.
typedef struct MaPolygon MaPolygon;

// Radii, diameter, width and completeness flags of a body in a gauge.
typedef struct MaReport {
  double inradius;
  double circumradius;
  double diameter;
  double width;
  double asymmetry;
  double dw_ratio;
  bool pseudo_complete;
  bool complete;
  bool constant_width;
} MaReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static, NUL-terminated name of a status code.
const char *ma_status_name(enum MaStatus status);

// Copies the last error message of this thread into `buf` (NUL-terminated,
// truncated to `len`). Returns the full message length without the NUL.
//
// # Safety
// `buf` must be null or valid for `len` bytes.
size_t ma_last_error(char *buf, size_t len);

// Convex hull of `n` points given as interleaved `x, y` pairs.
//
// # Safety
// `xy` must point to `2 * n` doubles and `out` must be writable.
enum MaStatus ma_polygon_new(const double *xy, size_t n, struct MaPolygon **out);

// Member of a named family; `params` is `"key=value;key=value"` or null.
//
// # Safety
// `name` and `params` must be null or NUL-terminated; `out` must be writable.
enum MaStatus ma_polygon_family(const char *name, const char *params, struct MaPolygon **out);

// # Safety
// `p` must be null or a handle from this library not yet freed.
void ma_polygon_free(struct MaPolygon *p);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
size_t ma_polygon_vertex_count(const struct MaPolygon *p);

// Writes counter-clockwise vertices as `x, y` pairs into `xy`, which holds
// `cap` points.
//
// # Safety
// `p` must be a live handle and `xy` valid for `2 * cap` doubles.
enum MaStatus ma_polygon_vertices(const struct MaPolygon *p, double *xy, size_t cap);

// Minkowski asymmetry and the Minkowski center.
//
// # Safety
// `p` must be a live handle; outputs must be writable.
enum MaStatus ma_asymmetry(const struct MaPolygon *p, double *s, double *cx, double *cy);

// Symmetrization ratios of the body translated to its Minkowski center.
//
// # Safety
// `p` must be a live handle; outputs must be writable.
enum MaStatus ma_alpha_tau(const struct MaPolygon *p, double *alpha, double *tau);

// Boundary crossings of the centred body with its negative; -1 when the
// boundaries overlap along a segment.
//
// # Safety
// `p` must be a live handle; `count` must be writable.
enum MaStatus ma_crossings(const struct MaPolygon *p, int64_t *count);

// Symmetric gauge from `n` points (`x, y` pairs). Fails unless the hull is
// symmetric about the origin.
//
// # Safety
// `xy` must point to `2 * n` doubles and `out` must be writable.
enum MaStatus ma_gauge_new(const double *xy, size_t n, struct MaGauge **out);

// Regular `m`-gon approximation of the Euclidean disk.
//
// # Safety
// `out` must be writable.
enum MaStatus ma_gauge_disk(size_t m, struct MaGauge **out);

// # Safety
// `g` must be null or a handle from this library not yet freed.
void ma_gauge_free(struct MaGauge *g);

// Radii, diameter, width and completeness of `p` in gauge `g`. A
// non-positive `tol` selects the default completeness tolerance.
//
// # Safety
// `p` and `g` must be live handles; `out` must be writable.
enum MaStatus ma_report(const struct MaPolygon *p,
                        const struct MaGauge *g,
                        double tol,
                        struct MaReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MINKASYM_H */
