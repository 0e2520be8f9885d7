// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois/special_numbers.hpp"

#include <cmath>
#include <cstdlib>

#include "trdpois/errors.hpp"

namespace trdpois {

namespace {

// Integer power with the 0^0 = 1 convention used throughout the series.
double ipow(double base, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= base;
    return p;
}

}  // namespace

PascalTriangle::PascalTriangle(int n_max) : n_max_(n_max) {
    if (n_max < 0) {
        throw Error("PascalTriangle: n_max must be >= 0");
    }
    if (n_max > kMaxSeriesOrder) {
        throw OverflowError(
            "PascalTriangle: n_max exceeds the double-precision limit " +
            std::to_string(kMaxSeriesOrder));
    }
    rows_.resize(static_cast<size_t>(n_max + 1) * (n_max + 2) / 2);
    auto at = [this](int n, int j) -> double& {
        return rows_[static_cast<size_t>(n) * (n + 1) / 2 + j];
    };
    at(0, 0) = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        at(n, 0) = 1.0;
        at(n, n) = 1.0;
        for (int j = 1; j < n; ++j) {
            at(n, j) = at(n - 1, j - 1) + at(n - 1, j);
        }
    }
}

double PascalTriangle::binom(int n, int j) const {
    if (n < 0 || n > n_max_ || j < 0 || j > n) return 0.0;
    return rows_[static_cast<size_t>(n) * (n + 1) / 2 + j];
}

CoefficientSeries::CoefficientSeries(int order) {
    if (order < 0) {
        throw Error("CoefficientSeries: order must be >= 0");
    }
    coeffs_.assign(static_cast<size_t>(order) + 1, 0.0);
}

CoefficientSeries::CoefficientSeries(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error("CoefficientSeries: needs at least the order-0 coefficient");
    }
}

double CoefficientSeries::coeff(int n) const {
    if (n < 0 || n > order()) {
        throw Error("CoefficientSeries: index out of range");
    }
    return coeffs_[static_cast<size_t>(n)];
}

void CoefficientSeries::set_coeff(int n, double value) {
    if (n < 0 || n > order()) {
        throw Error("CoefficientSeries: index out of range");
    }
    coeffs_[static_cast<size_t>(n)] = value;
}

CoefficientSeries egf_product(const CoefficientSeries& f,
                              const CoefficientSeries& g,
                              const PascalTriangle& binom, bool* overflow) {
    const int order = std::min(f.order(), g.order());
    if (binom.n_max() < order) {
        throw Error("egf_product: Pascal triangle smaller than series order");
    }
    CoefficientSeries h(order);
    for (int n = 0; n <= order; ++n) {
        double acc = 0.0;
        for (int j = 0; j <= n; ++j) {
            acc += binom.binom(n, j) * f.coeff(j) * g.coeff(n - j);
        }
        if (overflow != nullptr &&
            (!std::isfinite(acc) || std::abs(acc) > kOverflowGuard)) {
            *overflow = true;
        }
        h.set_coeff(n, acc);
    }
    return h;
}

CoefficientSeries base_series(DegenerateLambda lambda, int r, int n_max) {
    if (r < 0 || n_max < 0) {
        throw Error("base_series: r and n_max must be >= 0");
    }
    const double lam = lambda.value();
    CoefficientSeries c(n_max);
    // Same multiplication sequence as falling_factorial(1, n, lambda), so
    // surviving entries agree with it bit for bit.
    double ff = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        ff *= 1.0 - static_cast<double>(n - 1) * lam;
        if (n > r) c.set_coeff(n, ff);
    }
    return c;
}

StirlingSequence stirling_r_truncated(DegenerateLambda lambda, int r, int k,
                                      int n_max) {
    if (k < 1) {
        throw Error("stirling_r_truncated: k must be >= 1");
    }
    if (r < 0 || n_max < 0) {
        throw Error("stirling_r_truncated: r and n_max must be >= 0");
    }
    if (n_max > kMaxSeriesOrder) {
        throw OverflowError(
            "stirling_r_truncated: n_max exceeds the double-precision limit " +
            std::to_string(kMaxSeriesOrder));
    }
    const PascalTriangle tri(n_max);
    const CoefficientSeries base = base_series(lambda, r, n_max);
    CoefficientSeries power = base;
    bool overflow = false;
    for (int i = 2; i <= k; ++i) {
        power = egf_product(power, base, tri, &overflow);
    }
    double k_fact = 1.0;
    for (int i = 2; i <= k; ++i) k_fact *= static_cast<double>(i);

    StirlingSequence out;
    out.values.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double v = power.coeff(n) / k_fact;
        if (!std::isfinite(v) || std::abs(v) > kOverflowGuard) overflow = true;
        out.values[static_cast<size_t>(n)] = v;
    }
    out.overflow_warning = overflow;
    return out;
}

StirlingTable::StirlingTable(DegenerateLambda lambda, int r, int n_max,
                             int k_max)
    : lambda_(lambda), r_(r), n_max_(n_max), k_max_(k_max) {
    if (k_max < 1) {
        throw Error("StirlingTable: k_max must be >= 1");
    }
    if (r < 0 || n_max < 0) {
        throw Error("StirlingTable: r and n_max must be >= 0");
    }
    if (n_max > kMaxSeriesOrder) {
        throw OverflowError(
            "StirlingTable: n_max exceeds the double-precision limit " +
            std::to_string(kMaxSeriesOrder));
    }
    values_.assign(static_cast<size_t>(n_max + 1) * k_max, 0.0);
    const PascalTriangle tri(n_max);
    const CoefficientSeries base = base_series(lambda, r, n_max);
    CoefficientSeries power = base;
    double k_fact = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            power = egf_product(power, base, tri, &overflow_warning_);
            k_fact *= static_cast<double>(k);
        }
        for (int n = 0; n <= n_max; ++n) {
            const double v = power.coeff(n) / k_fact;
            if (!std::isfinite(v) || std::abs(v) > kOverflowGuard) {
                overflow_warning_ = true;
            }
            values_[static_cast<size_t>(k - 1) * (n_max + 1) + n] = v;
        }
    }
}

double StirlingTable::value(int n, int k) const {
    if (k < 1 || k > k_max_ || n < 0 || n > n_max_) return 0.0;
    return values_[static_cast<size_t>(k - 1) * (n_max_ + 1) + n];
}

double degenerate_bell(int n, double x, DegenerateLambda lambda, double tol) {
    if (n < 0) {
        throw Error("degenerate_bell: order must be >= 0");
    }
    if (n > kMaxSeriesOrder) {
        throw OverflowError(
            "degenerate_bell: order exceeds the double-precision limit " +
            std::to_string(kMaxSeriesOrder));
    }
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("degenerate_bell: x must be > 0");
    }
    if (!(tol >= kMinRelativeTolerance)) {
        throw ConvergenceError(
            "degenerate_bell: relative tolerance below the double-precision "
            "floor cannot be certified");
    }
    const double lam = lambda.value();

    // The series terminates at m when lambda = 1/m; otherwise its terms must
    // shrink geometrically, which pins down the acceptable (lambda, x) range.
    std::int64_t terminate_at = -1;
    if (lam > 0.0) {
        const double inv = 1.0 / lam;
        const double ulps =
            kReciprocalUlps * std::numeric_limits<double>::epsilon();
        const auto m = inv < 9.0e18
                           ? static_cast<std::int64_t>(std::llround(inv))
                           : std::int64_t{0};
        if (m >= 1 && std::abs(lam * static_cast<double>(m) - 1.0) <= ulps) {
            terminate_at = m;
        } else if (lam * x >= 1.0) {
            throw DomainError(
                "degenerate_bell: series diverges, needs lambda*x < 1 for "
                "positive non-reciprocal lambda");
        }
    } else if (lam < 0.0) {
        if (1.0 + lam * x <= 0.0) {
            throw DomainError(
                "degenerate_bell: requires 1 + lambda*x > 0 for negative "
                "lambda");
        }
    }

    const double inv_e = 1.0 / deg_exp(1.0, x, lambda);
    double sum = (n == 0) ? 1.0 : 0.0;  // m = 0 term, 0^0 = 1
    double base_term = 1.0;             // (1)_{m,lambda} x^m / m!
    int consecutive_small = 0;
    for (std::int64_t m = 1;; ++m) {
        base_term *=
            x * (1.0 - static_cast<double>(m - 1) * lam) / static_cast<double>(m);
        const double term = base_term * ipow(static_cast<double>(m), n);
        sum += term;
        if (terminate_at > 0 && m >= terminate_at) break;
        if (std::abs(term) <
            tol * std::max(std::abs(sum), std::numeric_limits<double>::min())) {
            if (++consecutive_small >= 3) break;
        } else {
            consecutive_small = 0;
        }
        if (m >= kMaxSeriesTerms) {
            throw ConvergenceError(
                "degenerate_bell: series did not reach the tolerance within " +
                std::to_string(kMaxSeriesTerms) + " terms");
        }
    }
    return inv_e * sum;
}

}  // namespace trdpois
