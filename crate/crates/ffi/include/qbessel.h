#ifndef QBESSEL_H
#define QBESSEL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QbStatus {
  QB_STATUS_OK = 0,
  QB_STATUS_DOMAIN = 1,
  QB_STATUS_PARAMETER = 2,
  QB_STATUS_UNSUPPORTED_MODE = 3,
  QB_STATUS_DIVERGENCE = 4,
  QB_STATUS_TRUNCATION_CAP = 5,
  QB_STATUS_SPAN_FAILURE = 6,
  QB_STATUS_NOT_CENTRAL = 7,
  QB_STATUS_ACCURACY = 8,
  QB_STATUS_PARSE = 9,
  QB_STATUS_LIMIT = 10,
  QB_STATUS_NULL_POINTER = 11,
  QB_STATUS_INVALID_UTF8 = 12,
  QB_STATUS_PANIC = 13,
} QbStatus;

// Opaque handle to an operator representation.
typedef struct QbRepresentation QbRepresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *qb_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void qb_string_free(char *s);

// Normalized Bessel function `Gamma(alpha+1) (t/2)^-alpha J_alpha(t)`.
//
// # Safety
// `out` must be valid for writes.
enum QbStatus qb_bessel_norm(double alpha, double t, double *out);

// The (-1)-Bessel function.
//
// # Safety
// `out` must be valid for writes.
enum QbStatus qb_minus1_bessel(double alpha, double t, double *out);

// Normalized third q-Bessel function at `x` with parameters `a`, `q`.
//
// # Safety
// `out` must be valid for writes.
enum QbStatus qb_q_bessel3(double x, double a, double q, double *out);

// Build a representation by name (`little_q_jacobi`, `minus1_jacobi`,
// `q_bessel3`, `dunkl`, `q_laguerre`, `q_bessel2`) from exact parameters
// written as `"q=1/2,a=1/3"`.
//
// # Safety
// `name` and `params` must be nul-terminated strings; `out` must be valid
// for writes. Release the handle with [`qb_representation_free`].
enum QbStatus qb_representation_new(const char *name,
                                    const char *params,
                                    struct QbRepresentation **out);

// # Safety
// `rep` must be null or a handle from [`qb_representation_new`], not yet freed.
void qb_representation_free(struct QbRepresentation *rep);

// Number of defining relations of `rep`.
//
// # Safety
// `rep` must be a live handle; `out` must be valid for writes.
enum QbStatus qb_representation_relation_count(const struct QbRepresentation *rep, size_t *out);

// Check every relation exactly on monomials up to `max_degree`; sets
// `passed` and returns nothing else.
//
// # Safety
// `rep` must be a live handle; `passed` must be valid for writes.
enum QbStatus qb_representation_verify(const struct QbRepresentation *rep,
                                       int64_t max_degree,
                                       bool *passed);

// Relation reports for `rep` as a JSON array.
//
// # Safety
// `rep` must be a live handle; `out` must be valid for writes. Free the
// returned string with [`qb_string_free`].
enum QbStatus qb_representation_verify_json(const struct QbRepresentation *rep,
                                            int64_t max_degree,
                                            char **out);

// Scalar value of the first Casimir, as a float and as an exact `p/q`
// string. Either out-pointer may be null.
//
// # Safety
// `rep` must be a live handle; non-null out-pointers must be valid for
// writes. Free `exact` with [`qb_string_free`].
enum QbStatus qb_representation_casimir(const struct QbRepresentation *rep,
                                        int64_t max_degree,
                                        double *value,
                                        char **exact);

// Full verification battery as JSON; `passed` receives the overall verdict.
//
// # Safety
// `out` and `passed` must be valid for writes. Free `out` with
// [`qb_string_free`].
enum QbStatus qb_report_json(uint64_t seed, char **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QBESSEL_H */
