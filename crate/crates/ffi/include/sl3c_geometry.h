#ifndef SL3C_GEOMETRY_H
#define SL3C_GEOMETRY_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Number of coordinates of a hypersurface tangent vector.
 */
#define SL3C_TANGENT_DIM 7

typedef enum Sl3cStatus {
  SL3C_STATUS_OK = 0,
  SL3C_STATUS_NULL_POINTER = 1,
  SL3C_STATUS_INVALID_ARGUMENT = 2,
  SL3C_STATUS_INVALID_ALGEBRA = 3,
  SL3C_STATUS_DIMENSION_MISMATCH = 4,
  SL3C_STATUS_DEGENERATE_PLANE = 5,
  SL3C_STATUS_ANGLE_OUT_OF_RANGE = 6,
  SL3C_STATUS_NOT_UNIT = 7,
  SL3C_STATUS_PANIC = 99,
} Sl3cStatus;

typedef enum Sl3cRegime {
  SL3C_REGIME_NEGATIVE_RICCI = 0,
  SL3C_REGIME_RICCI_NULL_DIRECTION = 1,
  SL3C_REGIME_MIXED_RICCI = 2,
} Sl3cRegime;

/**
 * Opaque metric Lie algebra.
 */
typedef struct Sl3cAlgebra Sl3cAlgebra;

/**
 * Opaque hypersurface `S_H` at a fixed angle.
 */
typedef struct Sl3cHypersurface Sl3cHypersurface;

/**
 * Flat copy of a curvature report.
 */
typedef struct Sl3cReport {
  double alpha;
  double mean_curvature;
  double cheeger;
  double shape_eigenvalues[7];
  double ricci_min;
  double ricci_max;
  double k_sigma;
  enum Sl3cRegime regime;
  bool is_minimal;
  bool is_einstein;
  bool is_horosphere_range;
  double cross_pipeline_residual;
} Sl3cReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *sl3c_last_error_message(void);

/**
 * Parses an algebra from its JSON description.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_from_json(const char *json, struct Sl3cAlgebra **out);

/**
 * The 7-dimensional algebra of the hypersurface at angle `alpha`.
 *
 * # Safety
 * `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_hypersurface(double alpha, struct Sl3cAlgebra **out);

/**
 * The 8-dimensional algebra of the symmetric space.
 *
 * # Safety
 * `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_symmetric_space(struct Sl3cAlgebra **out);

/**
 * Releases an algebra. Null is ignored.
 *
 * # Safety
 * `handle` must come from this library and not be freed twice.
 */
void sl3c_algebra_free(struct Sl3cAlgebra *handle);

/**
 * # Safety
 * `handle` must be a live algebra; `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_dim(const struct Sl3cAlgebra *handle, size_t *out);

/**
 * # Safety
 * `handle` must be a live algebra; `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_cheeger(const struct Sl3cAlgebra *handle, double *out);

/**
 * Ricci curvature `Ric(X)`; `x` holds `len` coefficients.
 *
 * # Safety
 * `x` must point to `len` doubles; `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_ricci(const struct Sl3cAlgebra *handle,
                                   const double *x,
                                   size_t len,
                                   double *out);

/**
 * Sectional curvature of the plane spanned by `x` and `y`, each `len` long.
 *
 * # Safety
 * `x` and `y` must point to `len` doubles; `out` must be writable.
 */
enum Sl3cStatus sl3c_algebra_sectional(const struct Sl3cAlgebra *handle,
                                       const double *x,
                                       const double *y,
                                       size_t len,
                                       double *out);

/**
 * Whether the Ricci eigenvalues agree within `tol`, and their mean.
 *
 * # Safety
 * `handle` must be a live algebra; both out-pointers must be writable.
 */
enum Sl3cStatus sl3c_algebra_einstein(const struct Sl3cAlgebra *handle,
                                      double tol,
                                      bool *is_einstein,
                                      double *constant);

/**
 * # Safety
 * `out` must be writable.
 */
enum Sl3cStatus sl3c_hypersurface_new(double alpha, struct Sl3cHypersurface **out);

/**
 * Releases a hypersurface. Null is ignored.
 *
 * # Safety
 * `handle` must come from this library and not be freed twice.
 */
void sl3c_hypersurface_free(struct Sl3cHypersurface *handle);

/**
 * # Safety
 * `handle` must be live; `out` must be writable.
 */
enum Sl3cStatus sl3c_hypersurface_mean_curvature(const struct Sl3cHypersurface *handle,
                                                 double *out);

/**
 * Eigenvalues of the shape operator, descending, into `out[0..7]`.
 *
 * # Safety
 * `out` must have room for 7 doubles.
 */
enum Sl3cStatus sl3c_hypersurface_shape_spectrum(const struct Sl3cHypersurface *handle,
                                                 double *out);

/**
 * Ricci curvature from the Gauss equation; `x` holds 7 coordinates
 * `(Re a, Im a, Re b, Im b, Re c, Im c, t)`.
 *
 * # Safety
 * `x` must point to 7 doubles; `out` must be writable.
 */
enum Sl3cStatus sl3c_hypersurface_ricci_gauss(const struct Sl3cHypersurface *handle,
                                              const double *x,
                                              double *out);

/**
 * Sectional curvature from the Gauss equation.
 *
 * # Safety
 * `x` and `y` must point to 7 doubles; `out` must be writable.
 */
enum Sl3cStatus sl3c_hypersurface_gauss_sectional(const struct Sl3cHypersurface *handle,
                                                  const double *x,
                                                  const double *y,
                                                  double *out);

/**
 * Closed-form Ricci curvature of a unit vector `x` (7 coordinates).
 *
 * # Safety
 * `x` must point to 7 doubles; `out` must be writable.
 */
enum Sl3cStatus sl3c_ricci_closed(double alpha, const double *x, double *out);

/**
 * Full report at angle `alpha`; `samples` random unit vectors seeded by
 * `seed` feed the cross-pipeline residual.
 *
 * # Safety
 * `out` must be writable.
 */
enum Sl3cStatus sl3c_classify(double alpha, size_t samples, uint64_t seed, struct Sl3cReport *out);

/**
 * [`sl3c_classify`] with 1000 samples and seed 42.
 *
 * # Safety
 * `out` must be writable.
 */
enum Sl3cStatus sl3c_classify_default(double alpha, struct Sl3cReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SL3C_GEOMETRY_H */
