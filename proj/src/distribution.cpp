// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois/distribution.hpp"

#include <cmath>

#include "trdpois/errors.hpp"
#include "trdpois/special_numbers.hpp"

namespace trdpois {

namespace {

// Series terms t_k = (1)_{k,lambda} alpha^k / k!, advanced through the ratio
// t_{k+1}/t_k = alpha * (1 - k*lambda) / (k+1).  On the valid domain every
// term with k <= support end shares the sign of t_0 = 1.
struct TermIter {
    double alpha;
    double lam;
    std::int64_t k = 0;
    double value = 1.0;

    double ratio() const {
        return alpha * (1.0 - static_cast<double>(k) * lam) /
               static_cast<double>(k + 1);
    }
    void advance() {
        value *= ratio();
        ++k;
    }
};

TermIter term_at(double alpha, double lam, std::int64_t k0) {
    TermIter it{alpha, lam};
    while (it.k < k0 && it.value != 0.0) it.advance();
    if (it.k < k0) it.k = k0;  // underflowed to exact zero; stays zero
    return it;
}

double ipow(double base, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= base;
    return p;
}

}  // namespace

TruncatedDegenPoisson::TruncatedDegenPoisson(const DistributionParams& params)
    : params_(params), domain_(classify_domain(params)) {
    if (!domain_.valid()) {
        throw InvalidParamsError("invalid parameters: " + domain_.reason);
    }
    if (params_.r > kMaxSeriesOrder) {
        throw OverflowError(
            "truncation order r exceeds the double-precision limit " +
            std::to_string(kMaxSeriesOrder));
    }
    const double alpha = params_.alpha;
    const double lam = params_.lambda.value();
    const std::int64_t lo = support_min();
    const std::int64_t hi = domain_.kind == DomainKind::FiniteSupport
                                ? domain_.support_max
                                : std::numeric_limits<std::int64_t>::max();

    // Normalizer = sum_{k>r} t_k: same-sign tail series, no cancellation.
    TermIter it = term_at(alpha, lam, lo);
    first_mass_ = it.value;  // numerator of pmf(r+1); divided below
    double sum = 0.0;
    std::int64_t steps = 0;
    for (;;) {
        sum += it.value;
        if (it.k >= hi || it.value == 0.0) break;
        const double q = it.ratio();
        if (q > 0.0 && q < 1.0) {
            // Geometric tail bound: remaining mass <= t_k * q / (1 - q).
            if (it.value * q / (1.0 - q) < kNormalizerRelTail * sum) break;
        }
        it.advance();
        if (++steps > kMaxSeriesTerms) {
            throw ConvergenceError("normalizer series did not converge");
        }
    }
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw InvalidParamsError(
            "invalid parameters: normalizer is not a positive finite number");
    }
    normalizer_ = sum;
    first_mass_ /= sum;
}

std::optional<std::int64_t> TruncatedDegenPoisson::support_max() const {
    if (domain_.kind == DomainKind::FiniteSupport) return domain_.support_max;
    return std::nullopt;
}

double TruncatedDegenPoisson::pmf(std::int64_t k) const {
    if (k <= params_.r) return 0.0;
    if (domain_.kind == DomainKind::FiniteSupport && k > domain_.support_max) {
        return 0.0;
    }
    const TermIter it = term_at(params_.alpha, params_.lambda.value(), k);
    return it.value / normalizer_;
}

double TruncatedDegenPoisson::cdf(double x) const {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    const double fx = std::floor(x);
    if (fx < static_cast<double>(params_.r) + 1.0) return 0.0;
    if (domain_.kind == DomainKind::FiniteSupport &&
        fx >= static_cast<double>(domain_.support_max)) {
        return 1.0;
    }
    const std::int64_t kk =
        fx >= 9.0e18 ? std::numeric_limits<std::int64_t>::max()
                     : static_cast<std::int64_t>(fx);
    // Partial tail sum: equals (e_trunc_[x] - e_trunc_r)(alpha) / normalizer
    // but reuses the same-sign term recursion of the normalizer.
    TermIter it = term_at(params_.alpha, params_.lambda.value(), support_min());
    double sum = 0.0;
    while (it.k <= kk) {
        sum += it.value;
        if (it.value == 0.0 || it.k == kk) break;
        it.advance();
    }
    return sum / normalizer_;
}

// Truncation correction A = (alpha^{r+1}/r!) (1)_{r+1,lambda} / normalizer,
// shared by mean and variance.
static double truncation_correction(const DistributionParams& p,
                                    double normalizer) {
    double pw = p.alpha;  // alpha^{r+1}/r!
    for (int j = 1; j <= p.r; ++j) pw *= p.alpha / static_cast<double>(j);
    return pw * falling_factorial(1.0, p.r + 1, p.lambda) / normalizer;
}

double TruncatedDegenPoisson::mean() const {
    const double a = truncation_correction(params_, normalizer_);
    return (params_.alpha + a) / (1.0 + params_.alpha * params_.lambda.value());
}

double TruncatedDegenPoisson::variance() const {
    const double a = truncation_correction(params_, normalizer_);
    const double w = 1.0 + params_.alpha * params_.lambda.value();
    return (params_.alpha + a) * (1.0 - a) / (w * w) +
           static_cast<double>(params_.r) * a / w;
}

double TruncatedDegenPoisson::moment(int n) const {
    if (n < 0) {
        throw Error("moment: order must be >= 0");
    }
    if (n > kMaxSeriesOrder) {
        throw OverflowError("moment: order exceeds the double-precision limit " +
                            std::to_string(kMaxSeriesOrder));
    }
    if (n == 0) return 1.0;  // total probability
    const double alpha = params_.alpha;
    const DegenerateLambda lambda = params_.lambda;
    const double e = deg_exp(1.0, alpha, lambda);
    const double bell = degenerate_bell(n, alpha, lambda);
    // Head correction sum_{m=1}^{r} (alpha^m/m!) (1)_{m,lambda} m^n; the
    // m = 0 term vanishes for n >= 1.
    double head = 0.0;
    double t = 1.0;  // (alpha^m/m!) (1)_{m,lambda}
    for (int m = 1; m <= params_.r; ++m) {
        t *= alpha * (1.0 - static_cast<double>(m - 1) * lambda.value()) /
             static_cast<double>(m);
        head += t * ipow(static_cast<double>(m), n);
    }
    return e / normalizer_ * (bell - head / e);
}

double TruncatedDegenPoisson::pgf(double t) const {
    const double at = params_.alpha * t;
    const double lam = params_.lambda.value();
    const double one_plus = 1.0 + lam * at;
    const std::int64_t lo = support_min();
    const std::int64_t hi = domain_.kind == DomainKind::FiniteSupport
                                ? domain_.support_max
                                : std::numeric_limits<std::int64_t>::max();
    if (!(one_plus > 0.0) && std::abs(lam) >= kLambdaClassicalThreshold) {
        if (domain_.kind != DomainKind::FiniteSupport) {
            throw DomainError("pgf: requires 1 + lambda*alpha*t > 0");
        }
        // Polynomial continuation: at reciprocal lambda the degenerate
        // exponential is the integer power (1 + lambda*alpha*t)^m, defined
        // for any sign of the base.
        const double full =
            std::pow(one_plus, static_cast<double>(domain_.support_max));
        const double head = deg_exp_truncated(at, params_.r, params_.lambda);
        return (full - head) / normalizer_;
    }
    // Numerator sum_{k>r} (1)_{k,lambda} (alpha t)^k / k! through the same
    // term recursion as the normalizer.  Direct summation has no
    // cancellation for t >= 0 (same-sign terms) and is safe for t < 0 while
    // the terms decay from the first one; outside that regime the
    // difference of exponentials is the stable form because the tail is no
    // longer small against the full series.
    bool direct = at >= 0.0;
    if (!direct) {
        const double first_step =
            std::fabs(1.0 - static_cast<double>(lo) * lam) /
            static_cast<double>(lo + 1);
        const double limit_step = lam < 0.0 ? -lam : 0.0;
        direct = std::fabs(at) * std::max(first_step, limit_step) <= 0.9;
    }
    if (direct) {
        TermIter it = term_at(at, lam, lo);
        double sum = 0.0;
        std::int64_t steps = 0;
        for (;;) {
            sum += it.value;
            if (it.k >= hi || it.value == 0.0) break;
            const double q = std::fabs(it.ratio());
            if (q < 1.0 && std::fabs(it.value) * q / (1.0 - q) <
                               kNormalizerRelTail * std::fabs(sum)) {
                break;
            }
            it.advance();
            if (++steps > kMaxSeriesTerms) {
                throw ConvergenceError("pgf series did not converge");
            }
        }
        return sum / normalizer_;
    }
    const double full = deg_exp(1.0, at, params_.lambda);
    const double head = deg_exp_truncated(at, params_.r, params_.lambda);
    return (full - head) / normalizer_;
}

double SumDistribution::mass(std::int64_t n) const {
    if (n < first || n > n_max()) return 0.0;
    return masses[static_cast<size_t>(n - first)];
}

SumDistribution iid_sum_distribution(const DistributionParams& params, int k,
                                     std::int64_t n_max) {
    if (k < 1) {
        throw Error("iid_sum_distribution: k must be >= 1");
    }
    const TruncatedDegenPoisson dist(params);
    const std::int64_t first =
        static_cast<std::int64_t>(k) * (static_cast<std::int64_t>(params.r) + 1);
    if (n_max < first) {
        throw Error(
            "iid_sum_distribution: n_max is below the lowest support point "
            "k*(r+1)");
    }
    if (n_max > kMaxSeriesOrder) {
        throw OverflowError(
            "iid_sum_distribution: n_max exceeds the double-precision limit " +
            std::to_string(kMaxSeriesOrder));
    }
    const StirlingSequence st = stirling_r_truncated(
        params.lambda, params.r, k, static_cast<int>(n_max));

    double k_fact = 1.0;
    for (int i = 2; i <= k; ++i) k_fact *= static_cast<double>(i);
    const double norm_pow = ipow(dist.normalizer(), k);

    SumDistribution out;
    out.k = k;
    out.params = params;
    out.first = first;
    out.overflow_warning = st.overflow_warning;
    out.masses.assign(static_cast<size_t>(n_max - first) + 1, 0.0);
    double an = 1.0;  // alpha^n / n!
    for (std::int64_t n = 1; n <= n_max; ++n) {
        an *= params.alpha / static_cast<double>(n);
        if (n >= first) {
            out.masses[static_cast<size_t>(n - first)] =
                k_fact / norm_pow * an * st.values[static_cast<size_t>(n)];
        }
    }
    return out;
}

MomentReport moment_report(const TruncatedDegenPoisson& dist, int order) {
    if (order < 0) {
        throw Error("moment_report: order must be >= 0");
    }
    MomentReport rep;
    rep.order = order;
    rep.moments.reserve(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        rep.moments.push_back(dist.moment(n));
    }
    rep.mean = dist.mean();
    rep.variance = dist.variance();
    return rep;
}

}  // namespace trdpois
