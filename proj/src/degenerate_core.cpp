// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois/degenerate_core.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "trdpois/errors.hpp"

namespace trdpois {

namespace {

DomainClass invalid(std::string reason) {
    DomainClass c;
    c.kind = DomainKind::Invalid;
    c.support_max = -1;
    c.reason = std::move(reason);
    return c;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

DegenerateLambda::DegenerateLambda(double value) : value_(value) {
    if (!std::isfinite(value)) {
        throw InvalidParamsError("lambda must be a finite real, got " +
                                 fmt(value));
    }
}

double falling_factorial(double x, int n, DegenerateLambda lambda) {
    if (n < 0) {
        throw Error("falling_factorial: order must be >= 0, got " +
                    std::to_string(n));
    }
    const double lam = lambda.value();
    double prod = 1.0;
    for (int j = 0; j < n; ++j) {
        prod *= x - static_cast<double>(j) * lam;
    }
    return prod;
}

double deg_exp(double x, double t, DegenerateLambda lambda) {
    const double lam = lambda.value();
    if (std::abs(lam) < kLambdaClassicalThreshold) {
        return std::exp(x * t);
    }
    const double u = lam * t;
    if (1.0 + u <= 0.0) {
        throw DomainError("deg_exp: requires 1 + lambda*t > 0; lambda = " +
                          fmt(lam) + ", t = " + fmt(t));
    }
    // log1p keeps precision when lambda*t is small.
    return std::exp(x * std::log1p(u) / lam);
}

double deg_exp_truncated(double t, int r, DegenerateLambda lambda) {
    if (r < 0) {
        throw Error("deg_exp_truncated: truncation order must be >= 0, got " +
                    std::to_string(r));
    }
    const double lam = lambda.value();
    // a_k = (1)_{k,lambda} / k!, then Horner in t.
    std::vector<double> a(static_cast<size_t>(r) + 1);
    a[0] = 1.0;
    for (int k = 1; k <= r; ++k) {
        a[k] = a[k - 1] * (1.0 - static_cast<double>(k - 1) * lam) /
               static_cast<double>(k);
    }
    double s = a[static_cast<size_t>(r)];
    for (int k = r - 1; k >= 0; --k) {
        s = s * t + a[static_cast<size_t>(k)];
    }
    return s;
}

DomainClass classify_domain(const DistributionParams& params) {
    if (!std::isfinite(params.alpha) || params.alpha <= 0.0) {
        return invalid("alpha must be > 0; got alpha = " + fmt(params.alpha));
    }
    if (params.r < 0) {
        return invalid("r must be >= 0; got r = " + std::to_string(params.r));
    }
    const double lam = params.lambda.value();
    if (lam == 0.0) {
        return DomainClass{DomainKind::InfiniteSupport, -1, {}};
    }
    if (lam < 0.0) {
        const double bound = 1.0 / (-lam);
        if (params.alpha < bound) {
            return DomainClass{DomainKind::InfiniteSupport, -1, {}};
        }
        return invalid(
            "for negative lambda the normalizer series requires "
            "alpha < 1/|lambda| = " +
            fmt(bound) + "; got alpha = " + fmt(params.alpha));
    }
    // lam > 0: valid only as the reciprocal of an integer m >= r+1, where the
    // falling factorials vanish beyond m and the support is {r+1, ..., m}.
    const double inv = 1.0 / lam;
    if (inv >= 9.0e18) {
        return invalid(
            "positive lambda must equal 1/m for an integer m >= r+1; "
            "1/lambda exceeds the representable integer range");
    }
    const auto m = static_cast<std::int64_t>(std::llround(inv));
    const double ulps =
        kReciprocalUlps * std::numeric_limits<double>::epsilon();
    if (m >= 1 && std::abs(lam * static_cast<double>(m) - 1.0) <= ulps) {
        if (m >= static_cast<std::int64_t>(params.r) + 1) {
            return DomainClass{DomainKind::FiniteSupport, m, {}};
        }
        return invalid("support {r+1..m} is empty: lambda = 1/" +
                       std::to_string(m) + " but r + 1 = " +
                       std::to_string(params.r + 1) + " > m");
    }
    return invalid(
        "positive lambda = " + fmt(lam) +
        " is not the reciprocal of an integer m >= r+1; masses with "
        "k > 1 + 1/lambda would turn negative");
}

}  // namespace trdpois
