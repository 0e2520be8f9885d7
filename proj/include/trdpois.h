/* Copyright (c) 2026 trdpois contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the trdpois shared library: r-truncated degenerate Poisson
 * distributions, their special numbers, sampling, and the reference oracles.
 *
 * Conventions:
 *  - Objects are opaque handles created/destroyed through this interface.
 *  - Fallible calls return trdp_status and write results through out-pointers;
 *    infallible numeric queries return the value directly (NaN on bad handle).
 *  - All arrays are caller-allocated; sizes are documented per function.
 */
#ifndef TRDPOIS_H
#define TRDPOIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TRDP_API __declspec(dllexport)
#elif defined(__GNUC__) || defined(__clang__)
#define TRDP_API __attribute__((visibility("default")))
#else
#define TRDP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trdp_status {
    TRDP_OK = 0,
    TRDP_ERR_ARGUMENT = 1,       /* null pointer or malformed argument */
    TRDP_ERR_INVALID_PARAMS = 2, /* no valid distribution for these parameters */
    TRDP_ERR_DOMAIN = 3,         /* function undefined at the requested point */
    TRDP_ERR_CONVERGENCE = 4,    /* series failed to reach the tolerance */
    TRDP_ERR_OVERFLOW = 5,       /* refused: double precision would overflow */
} trdp_status;

typedef enum trdp_domain {
    TRDP_DOMAIN_INFINITE = 0,
    TRDP_DOMAIN_FINITE = 1,
    TRDP_DOMAIN_INVALID = 2,
} trdp_domain;

typedef struct trdp_dist trdp_dist;
typedef struct trdp_sampler trdp_sampler;

TRDP_API const char* trdp_version(void);
TRDP_API const char* trdp_status_name(trdp_status status);

/* ---- scalar primitives ------------------------------------------------- */

/* (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda); returns NaN for n < 0. */
TRDP_API double trdp_falling_factorial(double x, int32_t n, double lambda);

/* (1+lambda*t)^(x/lambda), continued as exp(x*t) for |lambda| < 1e-8. */
TRDP_API trdp_status trdp_deg_exp(double x, double t, double lambda,
                                  double* out);

/* Degree-r partial sum of the series of trdp_deg_exp(1, t, lambda). */
TRDP_API trdp_status trdp_deg_exp_truncated(double t, int32_t r, double lambda,
                                            double* out);

/* Classifies (lambda, alpha, r); writes the violated condition into `reason`
 * (truncated to reason_size, may be NULL) when the result is invalid. */
TRDP_API trdp_status trdp_classify_domain(double lambda, double alpha,
                                          int32_t r, trdp_domain* kind,
                                          int64_t* support_max, char* reason,
                                          size_t reason_size);

/* ---- distribution ------------------------------------------------------ */

/* Fails with TRDP_ERR_INVALID_PARAMS when the classifier rejects the triple
 * (call trdp_classify_domain for the reason) and TRDP_ERR_OVERFLOW for
 * r > 170. */
TRDP_API trdp_status trdp_dist_create(double lambda, double alpha, int32_t r,
                                      trdp_dist** out);
TRDP_API void trdp_dist_free(trdp_dist* dist);

TRDP_API double trdp_dist_lambda(const trdp_dist* dist);
TRDP_API double trdp_dist_alpha(const trdp_dist* dist);
TRDP_API int32_t trdp_dist_r(const trdp_dist* dist);
TRDP_API double trdp_dist_normalizer(const trdp_dist* dist);
TRDP_API trdp_domain trdp_dist_domain(const trdp_dist* dist);
TRDP_API int64_t trdp_dist_support_min(const trdp_dist* dist);
/* -1 when the support is unbounded. */
TRDP_API int64_t trdp_dist_support_max(const trdp_dist* dist);

TRDP_API double trdp_dist_pmf(const trdp_dist* dist, int64_t k);
TRDP_API double trdp_dist_cdf(const trdp_dist* dist, double x);
TRDP_API double trdp_dist_mean(const trdp_dist* dist);
TRDP_API double trdp_dist_variance(const trdp_dist* dist);
TRDP_API trdp_status trdp_dist_moment(const trdp_dist* dist, int32_t n,
                                      double* out);
TRDP_API trdp_status trdp_dist_pgf(const trdp_dist* dist, double t,
                                   double* out);

/* Masses of the k-fold i.i.d. sum for n = 0..n_max into out[0..n_max]
 * (zero below n = k*(r+1)).  *overflow_warning (may be NULL) is set to 1
 * when intermediates exceeded 1e300. */
TRDP_API trdp_status trdp_dist_sum_pmf(const trdp_dist* dist, int32_t k,
                                       int64_t n_max, double* out,
                                       int32_t* overflow_warning);

/* ---- special numbers --------------------------------------------------- */

/* r-truncated degenerate Stirling numbers with k blocks for n = 0..n_max
 * into out[0..n_max]; n_max > 170 is refused with TRDP_ERR_OVERFLOW. */
TRDP_API trdp_status trdp_stirling_r_truncated(double lambda, int32_t r,
                                               int32_t k, int32_t n_max,
                                               double* out,
                                               int32_t* overflow_warning);

/* Degenerate Bell polynomial value by its Dobinski-type series. */
TRDP_API trdp_status trdp_degenerate_bell(int32_t n, double x, double lambda,
                                          double tol, double* out);

/* ---- sampling ----------------------------------------------------------- */

/* The sampler copies the distribution; the handle may outlive `dist`.
 * Streams are xoshiro256** seeded via splitmix64: identical seeds replay
 * identical draws on every platform. */
TRDP_API trdp_status trdp_sampler_create(const trdp_dist* dist, uint64_t seed,
                                         trdp_sampler** out);
TRDP_API void trdp_sampler_free(trdp_sampler* sampler);
TRDP_API int64_t trdp_sampler_draw(trdp_sampler* sampler);
TRDP_API trdp_status trdp_sampler_draw_batch(trdp_sampler* sampler,
                                             int64_t count, int64_t* out);

/* ---- oracles (reference routes used by verification) ------------------- */

/* n-th raw moment by direct series accumulation to relative tolerance tol. */
TRDP_API trdp_status trdp_oracle_series_moment(double lambda, double alpha,
                                               int32_t r, int32_t n, double tol,
                                               double* out);

/* k-fold discrete self-convolution of the pmf for n = 0..n_max. */
TRDP_API trdp_status trdp_oracle_convolve_pmf(const trdp_dist* dist, int32_t k,
                                              int64_t n_max, double* out);

/* Degenerate Stirling triangle by the recurrence S(n+1,k) = S(n,k-1)
 * + (k - n*lambda) S(n,k); out is row-major (n_max+1) x (k_max+1). */
TRDP_API trdp_status trdp_oracle_stirling_recurrence(double lambda,
                                                     int32_t n_max,
                                                     int32_t k_max,
                                                     double* out);

/* Exact-rational r-truncated Stirling numbers, rounded to nearest double,
 * for n = 0..n_max.  `lambda` is parsed exactly: "p/q", integer, or decimal
 * text such as "-0.25" or "1e-9". */
TRDP_API trdp_status trdp_oracle_stirling_exact(const char* lambda, int32_t r,
                                                int32_t k, int32_t n_max,
                                                double* out);

#ifdef __cplusplus
}
#endif

#endif /* TRDPOIS_H */
