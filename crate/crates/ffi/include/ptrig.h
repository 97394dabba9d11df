#ifndef PTRIG_H
#define PTRIG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PtrigStatus {
  PtrigStatus_Ok = 0,
  PtrigStatus_Domain = 1,
  PtrigStatus_Convergence = 2,
  PtrigStatus_ToleranceNotMet = 3,
  PtrigStatus_UnknownBound = 4,
  PtrigStatus_UnknownClaim = 5,
  PtrigStatus_MixedTargets = 6,
  PtrigStatus_RouteDisagreement = 7,
  PtrigStatus_NullPointer = 8,
  PtrigStatus_InvalidUtf8 = 9,
  PtrigStatus_Panic = 10,
} PtrigStatus;

typedef enum PtrigFn {
  PtrigFn_Arcsin = 0,
  PtrigFn_Arccos = 1,
  PtrigFn_Arctan = 2,
  PtrigFn_Arcsinh = 3,
  PtrigFn_Arctanh = 4,
} PtrigFn;

typedef enum PtrigMethod {
  PtrigMethod_Auto = 0,
  PtrigMethod_Series = 1,
  PtrigMethod_SeriesPfaff = 2,
  PtrigMethod_Quadrature = 3,
  PtrigMethod_ClosedForm = 4,
} PtrigMethod;

typedef enum PtrigCertStatus {
  PtrigCertStatus_Holds = 0,
  PtrigCertStatus_Violated = 1,
  PtrigCertStatus_Vacuous = 2,
  PtrigCertStatus_Reported = 3,
} PtrigCertStatus;

/**
 * An owned certification report.
 */
typedef struct PtrigCertificate PtrigCertificate;

typedef struct PtrigResult {
  double value;
  double abs_err;
  /**
   * The route actually used; never `Auto`.
   */
  enum PtrigMethod method;
  uint64_t work;
} PtrigResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ptrig_last_error_message(void);

/**
 * Evaluates `func` at `(p, x)`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `PtrigResult`.
 */
enum PtrigStatus ptrig_eval(enum PtrigFn func,
                            double p,
                            double x,
                            enum PtrigMethod method,
                            struct PtrigResult *out);

/**
 * Value and error estimate of the registered bound `id` at `(p, x)`.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` must be writable.
 */
enum PtrigStatus ptrig_bound_value(const char *id, double p, double x, struct PtrigResult *out);

/**
 * `π_p = 2π / (p sin(π/p))`, `p > 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PtrigStatus ptrig_pi_p(double p, double *out);

/**
 * `b_p = arctan_p(1)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PtrigStatus ptrig_b_p(double p, double *out);

/**
 * `c_p = arcsinh_p(1)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PtrigStatus ptrig_c_p(double p, double *out);

/**
 * Gauss `₂F₁(a, b; c; z)` for `z < 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PtrigStatus ptrig_hyp2f1(double a, double b, double c, double z, struct PtrigResult *out);

/**
 * Clausen `₃F₂(a1, a2, a3; b1, b2; z)` for `z ∈ [0, 1)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PtrigStatus ptrig_hyp3f2(double a1,
                              double a2,
                              double a3,
                              double b1,
                              double b2,
                              double z,
                              struct PtrigResult *out);

/**
 * Certifies `claim_id` on its default grids. On success `*out` owns a
 * certificate to be released with [`ptrig_certificate_free`].
 *
 * # Safety
 * `claim_id` must be a NUL-terminated string; `out` must be writable.
 */
enum PtrigStatus ptrig_certify(const char *claim_id,
                               uint64_t seed,
                               size_t samples,
                               bool dual_route,
                               struct PtrigCertificate **out);

/**
 * # Safety
 * `cert` and `out` must be valid.
 */
enum PtrigStatus ptrig_certificate_status(const struct PtrigCertificate *cert,
                                          enum PtrigCertStatus *out);

/**
 * Number of evaluated points in the certificate, or 0 for null.
 *
 * # Safety
 * `cert` must be null or valid.
 */
size_t ptrig_certificate_points_checked(const struct PtrigCertificate *cert);

/**
 * The certificate as JSON. Release with [`ptrig_string_free`].
 *
 * # Safety
 * `cert` must be valid; `out` writable.
 */
enum PtrigStatus ptrig_certificate_to_json(const struct PtrigCertificate *cert, char **out);

/**
 * # Safety
 * `cert` must be null or come from [`ptrig_certify`] and not be freed yet.
 */
void ptrig_certificate_free(struct PtrigCertificate *cert);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not freed yet.
 */
void ptrig_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PTRIG_H */
