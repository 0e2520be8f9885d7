// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_DISTRIBUTION_HPP
#define TRDPOIS_DISTRIBUTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trdpois/degenerate_core.hpp"

namespace trdpois {

/// Relative bound on the neglected tail when the normalizer series is summed.
inline constexpr double kNormalizerRelTail = 1e-16;

/// r-truncated degenerate Poisson distribution on {r+1, r+2, ...} with
///   P[X = k] = (1)_{k,lambda} alpha^k / (normalizer * k!).
/// The normalizer is the tail series sum_{k>r} (1)_{k,lambda} alpha^k / k!,
/// accumulated with the term ratio alpha*(1 - k*lambda)/(k+1); all terms
/// share one sign on the valid domain, so no cancellation occurs.
/// Instances are immutable after construction and safe to share across
/// threads.
class TruncatedDegenPoisson;

std::int64_t inverse_transform(const TruncatedDegenPoisson& dist, double u);

class TruncatedDegenPoisson {
public:
    /// Throws InvalidParamsError (with the classifier's reason) for invalid
    /// parameters and OverflowError for r > kMaxSeriesOrder.
    explicit TruncatedDegenPoisson(const DistributionParams& params);

    const DistributionParams& params() const noexcept { return params_; }
    const DomainClass& domain() const noexcept { return domain_; }
    double normalizer() const noexcept { return normalizer_; }

    std::int64_t support_min() const noexcept { return params_.r + 1; }
    /// Empty for infinite support.
    std::optional<std::int64_t> support_max() const;

    /// Probability mass at k; zero outside the support.
    double pmf(std::int64_t k) const;

    /// P[X <= x] with floor semantics: 0 below r+1, 1 at or beyond the end
    /// of a finite support, otherwise the partial sum of the pmf up to
    /// floor(x) (equivalently, the truncated-exponential difference
    /// divided by the normalizer).
    double cdf(double x) const;

    /// Closed-form mean (alpha + A) / (1 + alpha*lambda) with the
    /// truncation correction A = (alpha^{r+1}/r!) (1)_{r+1,lambda} / normalizer.
    double mean() const;

    /// Closed-form variance
    ///   (alpha + A)(1 - A)/(1 + alpha*lambda)^2 + r*A/(1 + alpha*lambda).
    double variance() const;

    /// n-th raw moment through the degenerate Bell polynomial route:
    ///   E[X^n] = deg_exp(1,alpha,lambda)/normalizer *
    ///            (Bel_{n,lambda}(alpha)
    ///             - deg_exp(1,alpha,lambda)^{-1}
    ///               * sum_{m=0}^{r} (alpha^m/m!)(1)_{m,lambda} m^n),
    /// with 0^0 = 1.  n = 0 is the total probability and returns exactly 1.
    double moment(int n) const;

    /// Probability generating function
    ///   E[t^X] = (deg_exp(1, alpha*t, lambda) - deg_exp_truncated(alpha*t, r))
    ///            / normalizer.
    /// Requires 1 + lambda*alpha*t > 0 unless the support is finite, in which
    /// case the polynomial continuation (1 + lambda*alpha*t)^m is used.
    double pgf(double t) const;

private:
    DistributionParams params_;
    DomainClass domain_;
    double normalizer_ = 0.0;
    double first_mass_ = 0.0;  // pmf(r+1), start of the iteration walks

    friend std::int64_t inverse_transform(const TruncatedDegenPoisson&,
                                          double);
};

/// Distribution of a sum of k independent copies.
struct SumDistribution {
    int k = 1;
    DistributionParams params;
    std::int64_t first = 0;       ///< lowest support point k*(r+1)
    std::vector<double> masses;   ///< masses[i] = P[sum = first + i]
    bool overflow_warning = false;

    std::int64_t n_max() const noexcept {
        return first + static_cast<std::int64_t>(masses.size()) - 1;
    }
    double mass(std::int64_t n) const;
};

/// Masses of the k-fold i.i.d. sum for n = k*(r+1)..n_max:
///   P[sum = n] = k!/normalizer^k * (alpha^n/n!) * S^{[r]}(n, k*(r+1))
/// where S^{[r]} are the r-truncated degenerate Stirling numbers.
/// Requires n_max >= k*(r+1); n_max above kMaxSeriesOrder is refused.
SumDistribution iid_sum_distribution(const DistributionParams& params, int k,
                                     std::int64_t n_max);

/// Moments bundle as reported by the CLI and the verification harness.
struct MomentReport {
    int order = 0;
    std::vector<double> moments;  ///< E[X^0] .. E[X^order], closed forms
    double mean = 0.0;            ///< closed-form mean
    double variance = 0.0;        ///< closed-form variance
    std::optional<std::vector<double>> oracle_moments;  ///< filled by callers
};

MomentReport moment_report(const TruncatedDegenPoisson& dist, int order);

}  // namespace trdpois

#endif  // TRDPOIS_DISTRIBUTION_HPP
