// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_ORACLES_HPP
#define TRDPOIS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "trdpois/distribution.hpp"
#include "trdpois/rational.hpp"

// Reference implementations that deliberately avoid the closed forms and
// algorithms of the main modules.  They exist to cross-check results, both
// in the test suites and behind the CLI verify command; nothing on the hot
// path depends on them.
namespace trdpois::oracle {

/// n-th raw moment by direct series accumulation,
///   sum_{k>r} k^n (1)_{k,lambda} alpha^k / k!  /  sum_{k>r} (1)_{k,lambda} alpha^k / k!,
/// both sums taken until the relative tail drops below tol.  Independent of
/// the Bell-polynomial route used by TruncatedDegenPoisson::moment.
double series_moment(const DistributionParams& params, int n, double tol);

/// Exact-rational mirror of stirling_r_truncated: the k-th binomial
/// convolution power of the truncated base series divided by k!, carried out
/// in BigRational arithmetic.  Index n runs 0..n_max.
std::vector<BigRational> exact_stirling_r_truncated(const BigRational& lambda,
                                                    int r, int k, int n_max);

/// Degenerate Stirling numbers by the triangular recurrence
///   S(n+1, k) = S(n, k-1) + (k - n*lambda) S(n, k),  S(0,0) = 1.
/// Returns rows n = 0..n_max, columns k = 0..k_max.
std::vector<std::vector<BigRational>> recurrence_stirling_table(
    const BigRational& lambda, int n_max, int k_max);

/// Distribution of a k-fold i.i.d. sum by repeated discrete convolution of
/// pmf values; entry n = 0..n_max.  Independent of the Stirling-number route.
std::vector<double> convolve_pmf(const TruncatedDegenPoisson& dist, int k,
                                 std::int64_t n_max);

/// Classical Bell polynomial sum_k S(n,k) x^k from the exact recurrence
/// triangle at lambda = 0.
double classical_bell(int n, double x);

// Classical r-truncated Poisson references, computed with exp/lgamma and
// index-shift identities rather than the library's ratio recursions.
double classical_normalizer(double alpha, int r);
double classical_pmf(double alpha, int r, std::int64_t k);
double classical_cdf(double alpha, int r, double x);
double classical_mean(double alpha, int r);
double classical_variance(double alpha, int r);
double classical_moment(double alpha, int r, int n);
double classical_pgf(double alpha, int r, double t);

}  // namespace trdpois::oracle

#endif  // TRDPOIS_ORACLES_HPP
