// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_DEGENERATE_CORE_HPP
#define TRDPOIS_DEGENERATE_CORE_HPP

#include <cstdint>
#include <limits>
#include <string>

namespace trdpois {

/// Below this magnitude the degenerate parameter is treated as its classical
/// limit inside deg_exp: (1 + lambda*t)^(x/lambda) is replaced by exp(x*t).
inline constexpr double kLambdaClassicalThreshold = 1e-8;

/// A positive lambda counts as the reciprocal of the integer m = round(1/lambda)
/// when |lambda*m - 1| is at most this many ulps of 1.  The tolerance keeps
/// decimal inputs such as 0.3333333333333333 on the finite-support branch.
inline constexpr double kReciprocalUlps = 4.0;

/// Relative tolerances below this floor cannot be certified in double
/// precision; series routines refuse them with ConvergenceError.
inline constexpr double kMinRelativeTolerance =
    4.0 * std::numeric_limits<double>::epsilon();

/// Hard cap on series terms before a ConvergenceError is raised.
inline constexpr std::int64_t kMaxSeriesTerms = 1'000'000;

/// Largest order accepted by factorial-bearing formulas; 171! overflows a
/// double, so anything above is refused with OverflowError.
inline constexpr int kMaxSeriesOrder = 170;

/// Degenerate deformation parameter.  Zero selects the classical limit.
class DegenerateLambda {
public:
    DegenerateLambda() = default;
    explicit DegenerateLambda(double value);  // throws InvalidParamsError unless finite

    double value() const noexcept { return value_; }

private:
    double value_ = 0.0;
};

/// Parameter triple of the r-truncated distribution family.
struct DistributionParams {
    DegenerateLambda lambda;
    double alpha = 1.0;  ///< rate, must be > 0
    int r = 0;           ///< truncation order, must be >= 0
};

enum class DomainKind {
    InfiniteSupport,  ///< support {r+1, r+2, ...}
    FiniteSupport,    ///< lambda = 1/m, support {r+1, ..., m}
    Invalid,          ///< no valid probability distribution
};

/// Result of classify_domain.  `reason` names the violated condition when
/// the parameters are invalid; `support_max` holds m for finite support.
struct DomainClass {
    DomainKind kind = DomainKind::Invalid;
    std::int64_t support_max = -1;
    std::string reason;

    bool valid() const noexcept { return kind != DomainKind::Invalid; }
};

/// Generalized falling factorial (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda),
/// with (x)_{0,lambda} = 1.  Total for n >= 0.
double falling_factorial(double x, int n, DegenerateLambda lambda);

/// Degenerate exponential (1 + lambda*t)^(x/lambda), continued as exp(x*t)
/// when |lambda| < kLambdaClassicalThreshold.  Throws DomainError when
/// 1 + lambda*t <= 0 for a non-classical lambda.
double deg_exp(double x, double t, DegenerateLambda lambda);

/// Degree-r partial sum of the series of deg_exp(1, t, lambda):
/// sum_{k=0}^{r} (1)_{k,lambda} t^k / k!, evaluated Horner style.
double deg_exp_truncated(double t, int r, DegenerateLambda lambda);

/// Classifies a parameter triple.  Never throws: parameter problems are
/// reported as DomainKind::Invalid with a human-readable reason.
DomainClass classify_domain(const DistributionParams& params);

}  // namespace trdpois

#endif  // TRDPOIS_DEGENERATE_CORE_HPP
