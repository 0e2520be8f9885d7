// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_SPECIAL_NUMBERS_HPP
#define TRDPOIS_SPECIAL_NUMBERS_HPP

#include <vector>

#include "trdpois/degenerate_core.hpp"

namespace trdpois {

/// Magnitude bound above which intermediate series coefficients are flagged
/// as unreliable (OverflowWarning metadata on the result).
inline constexpr double kOverflowGuard = 1e300;

/// Binomial coefficients C(n, j) as doubles, built additively row by row.
/// Rows above kMaxSeriesOrder are refused (OverflowError).
class PascalTriangle {
public:
    explicit PascalTriangle(int n_max);

    double binom(int n, int j) const;
    int n_max() const noexcept { return n_max_; }

private:
    int n_max_ = 0;
    std::vector<double> rows_;  // row n starts at n*(n+1)/2
};

/// Coefficients c_0..c_order of an exponential generating function
/// sum_n c_n t^n / n!.
class CoefficientSeries {
public:
    explicit CoefficientSeries(int order);          // all-zero coefficients
    explicit CoefficientSeries(std::vector<double> coeffs);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int n) const;
    void set_coeff(int n, double value);
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

private:
    std::vector<double> coeffs_;
};

/// Product of two generating functions under the binomial convolution
/// (f*g)_n = sum_j C(n,j) f_j g_{n-j}, truncated to the smaller order.
/// Coefficient n of the product depends only on coefficients 0..n of the
/// factors.  Sets *overflow when any intermediate exceeds kOverflowGuard.
CoefficientSeries egf_product(const CoefficientSeries& f,
                              const CoefficientSeries& g,
                              const PascalTriangle& binom,
                              bool* overflow = nullptr);

/// Series coefficients of deg_exp(1,t,lambda) with the first r+1 removed:
/// c_n = (1)_{n,lambda} for n > r and 0 for n <= r.
CoefficientSeries base_series(DegenerateLambda lambda, int r, int n_max);

struct StirlingSequence {
    std::vector<double> values;     ///< index n = 0..n_max
    bool overflow_warning = false;  ///< some intermediate exceeded kOverflowGuard
};

/// r-truncated degenerate Stirling numbers of the second kind with k blocks:
/// the coefficients of (1/k!) times the k-th binomial-convolution power of
/// base_series(lambda, r, n_max).  Entry n is zero for n < k*(r+1).
/// n_max above kMaxSeriesOrder is refused with OverflowError.
StirlingSequence stirling_r_truncated(DegenerateLambda lambda, int r, int k,
                                      int n_max);

/// Rectangular table of the numbers above for k = 1..k_max.
class StirlingTable {
public:
    StirlingTable(DegenerateLambda lambda, int r, int n_max, int k_max);

    /// Value at (n, k); zero outside 0 <= n <= n_max or below n = k*(r+1).
    double value(int n, int k) const;

    DegenerateLambda lambda() const noexcept { return lambda_; }
    int r() const noexcept { return r_; }
    int n_max() const noexcept { return n_max_; }
    int k_max() const noexcept { return k_max_; }
    bool overflow_warning() const noexcept { return overflow_warning_; }

private:
    DegenerateLambda lambda_;
    int r_;
    int n_max_;
    int k_max_;
    bool overflow_warning_ = false;
    std::vector<double> values_;  // (n_max+1) x k_max, column-major by k-1
};

/// Degenerate Bell polynomial value via the Dobinski-type series
///   deg_exp(1,x,lambda)^{-1} * sum_{m>=0} (1)_{m,lambda} x^m m^n / m!
/// with the 0^0 = 1 convention.  The series must converge: accepted domains
/// are lambda = 0; lambda < 0 with 1 + lambda*x > 0; positive lambda equal to
/// a reciprocal 1/m (terminating); and generic positive lambda with
/// lambda*x < 1.  Stops once three consecutive terms fall below
/// tol * |running sum|; throws ConvergenceError when kMaxSeriesTerms is hit
/// or tol is below kMinRelativeTolerance.
double degenerate_bell(int n, double x, DegenerateLambda lambda,
                       double tol = 1e-12);

}  // namespace trdpois

#endif  // TRDPOIS_SPECIAL_NUMBERS_HPP
