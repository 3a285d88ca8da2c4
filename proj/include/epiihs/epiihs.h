/* Copyright 2026 The epiihs Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to libepiihs.
 *
 * Every fallible call returns an epiihs_status; results are written through
 * out-pointers only on EPIIHS_OK. After a failure, epiihs_last_error()
 * returns a message describing it (per thread, valid until the next failing
 * call on that thread). Opaque handles are owned by the caller and released
 * with the matching *_free function; passing NULL to *_free is allowed.
 */

#ifndef EPIIHS_EPIIHS_H_
#define EPIIHS_EPIIHS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(EPIIHS_BUILDING_LIBRARY)
#define EPIIHS_API __attribute__((visibility("default")))
#else
#define EPIIHS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum epiihs_status {
  EPIIHS_OK = 0,
  EPIIHS_ERR_INVALID_ARGUMENT = 1,
  EPIIHS_ERR_ENUMERATION_TOO_LARGE = 2,
  EPIIHS_ERR_POLE = 3,
  EPIIHS_ERR_DOMAIN = 4,
  EPIIHS_ERR_DIVISION_BY_ZERO = 5,
  EPIIHS_ERR_CONFIG = 6,
  EPIIHS_ERR_INTERNAL = 7
} epiihs_status;

typedef enum epiihs_sum_method {
  EPIIHS_SUM_BRUTE = 0,     /* scan of the full cube {1..N}^k */
  EPIIHS_SUM_RECURRENCE = 1, /* nesting recurrence */
  EPIIHS_SUM_PARTITION = 2, /* partitions with k parts, parts <= N */
  EPIIHS_SUM_SERIES = 3     /* generating-function coefficient */
} epiihs_sum_method;

typedef struct epiihs_complex {
  double re;
  double im;
} epiihs_complex;

typedef struct epiihs_mc_estimate {
  epiihs_complex mean;
  double std_err;    /* standard error of the real part */
  double std_err_im; /* standard error of the imaginary part */
  uint64_t n_samples;
  uint64_t seed;
  uint64_t rejected; /* simplex draws redrawn for tiny coordinates */
} epiihs_mc_estimate;

typedef struct epiihs_quad_result {
  double value;
  double error_estimate;
  double tail_bound;
  uint64_t evaluations;
} epiihs_quad_result;

/* name points into the owning check list. */
typedef struct epiihs_check {
  const char* name;
  int passed;
  double measured;
  double tolerance;
} epiihs_check;

typedef struct epiihs_rational epiihs_rational;
typedef struct epiihs_check_list epiihs_check_list;

EPIIHS_API const char* epiihs_version(void);
EPIIHS_API const char* epiihs_status_string(epiihs_status status);
EPIIHS_API const char* epiihs_last_error(void);

/* Rationals. to_string returns the length of "p/q" (without the NUL) and
 * writes the NUL-terminated text when capacity exceeds that length. */
EPIIHS_API epiihs_status epiihs_rational_parse(const char* text, epiihs_rational** out);
EPIIHS_API void epiihs_rational_free(epiihs_rational* q);
EPIIHS_API size_t epiihs_rational_to_string(const epiihs_rational* q, char* buffer,
                                            size_t capacity);
EPIIHS_API double epiihs_rational_to_double(const epiihs_rational* q);
EPIIHS_API int epiihs_rational_equal(const epiihs_rational* lhs, const epiihs_rational* rhs);

/* S_{a_k}(N) exactly for finite N. */
EPIIHS_API epiihs_status epiihs_harmonic_sum(unsigned a, unsigned k, uint64_t n,
                                             epiihs_sum_method method,
                                             epiihs_rational** out);
/* S_{a_k}(infinity) from the generating-function series (needs a >= 2 when k >= 1). */
EPIIHS_API epiihs_status epiihs_harmonic_sum_infinite(unsigned a, unsigned k, double* out);

EPIIHS_API epiihs_status epiihs_qseries_coefficient(uint64_t n, uint64_t m,
                                                    const epiihs_rational* t, unsigned a,
                                                    epiihs_rational** out);
EPIIHS_API epiihs_status epiihs_partition_weight_sum(uint64_t n, uint64_t m,
                                                     const epiihs_rational* t, unsigned a,
                                                     epiihs_rational** out);

/* Truncated series sum_{k<=order} S_{m_k}(inf) t^(mk) and a rigorous bound on
 * the omitted tail. tail_bound may be NULL. */
EPIIHS_API epiihs_status epiihs_genfunc_series(unsigned m, double t, unsigned order,
                                               double* value, double* tail_bound);

EPIIHS_API epiihs_status epiihs_gamma(epiihs_complex z, epiihs_complex* out);
EPIIHS_API epiihs_status epiihs_gamma_product(unsigned m, double t, epiihs_complex* out);
EPIIHS_API epiihs_status epiihs_finite_product(double a, uint64_t n, double t, double* out);
EPIIHS_API epiihs_status epiihs_beta(epiihs_complex x, epiihs_complex y, epiihs_complex* out);
EPIIHS_API epiihs_status epiihs_beta_limit(epiihs_complex z, uint64_t n, epiihs_complex* out);
EPIIHS_API epiihs_status epiihs_multibeta(const double* alphas, size_t count, double* out);
EPIIHS_API epiihs_status epiihs_zeta(unsigned s, double* out);

/* Quadrature and Monte Carlo. threads = 0 selects EPIIHS_THREADS or the
 * hardware count; results do not depend on it. */
EPIIHS_API epiihs_status epiihs_quad_m2(unsigned k, double truncation, unsigned levels,
                                        epiihs_quad_result* out);
EPIIHS_API epiihs_status epiihs_mc_harmonic(unsigned m, unsigned k, uint64_t n_samples,
                                            uint64_t seed, unsigned threads,
                                            epiihs_mc_estimate* out);
EPIIHS_API epiihs_status epiihs_multibeta_check(const double* alphas, size_t count,
                                                uint64_t n_samples, uint64_t seed,
                                                unsigned threads, epiihs_mc_estimate* out);

/* Verification suites: "exact", "series", "gamma", "integral" or "all". */
EPIIHS_API epiihs_status epiihs_verify(const char* suite, uint64_t seed, unsigned threads,
                                       epiihs_check_list** out);
EPIIHS_API size_t epiihs_check_list_size(const epiihs_check_list* list);
EPIIHS_API epiihs_status epiihs_check_list_get(const epiihs_check_list* list, size_t index,
                                               epiihs_check* out);
EPIIHS_API void epiihs_check_list_free(epiihs_check_list* list);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* EPIIHS_EPIIHS_H_ */
