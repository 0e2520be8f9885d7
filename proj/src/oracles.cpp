// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois/oracles.hpp"

#include <cmath>

#include "trdpois/errors.hpp"

namespace trdpois::oracle {

namespace {

double ipow(double base, int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= base;
    return p;
}

// Exact binomial triangle C(0..n_max, *).
std::vector<std::vector<BigInt>> exact_pascal(int n_max) {
    std::vector<std::vector<BigInt>> tri(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = tri[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, BigInt(1));
        for (int j = 1; j < n; ++j) {
            row[static_cast<size_t>(j)] =
                tri[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)] +
                tri[static_cast<size_t>(n - 1)][static_cast<size_t>(j)];
        }
    }
    return tri;
}

// Partial exponential sum sum_{l=0}^{j} z^l / l! via pow/tgamma; j < 0 -> 0.
double exp_partial(double z, int j) {
    double s = 0.0;
    for (int l = 0; l <= j; ++l) {
        s += std::pow(z, l) / std::tgamma(static_cast<double>(l) + 1.0);
    }
    return s;
}

// log-form Poisson weight alpha^k / k!.
double poisson_weight(double alpha, std::int64_t k) {
    return std::exp(static_cast<double>(k) * std::log(alpha) -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

double series_moment(const DistributionParams& params, int n, double tol) {
    if (n < 0) {
        throw Error("series_moment: order must be >= 0");
    }
    if (!(tol >= kMinRelativeTolerance)) {
        throw ConvergenceError(
            "series_moment: relative tolerance below the double-precision "
            "floor cannot be certified");
    }
    const DomainClass dom = classify_domain(params);
    if (!dom.valid()) {
        throw InvalidParamsError("invalid parameters: " + dom.reason);
    }
    const double alpha = params.alpha;
    const double lam = params.lambda.value();
    const std::int64_t lo = params.r + 1;
    const std::int64_t hi = dom.kind == DomainKind::FiniteSupport
                                ? dom.support_max
                                : std::numeric_limits<std::int64_t>::max();
    // t_k = (1)_{k,lambda} alpha^k / k!
    double t = 1.0;
    for (std::int64_t k = 0; k < lo; ++k) {
        t *= alpha * (1.0 - static_cast<double>(k) * lam) /
             static_cast<double>(k + 1);
    }
    double num = 0.0, den = 0.0;
    int consecutive_small = 0;
    for (std::int64_t k = lo;; ++k) {
        const double weighted = t * ipow(static_cast<double>(k), n);
        num += weighted;
        den += t;
        if (k >= hi || t == 0.0) break;
        if (std::abs(weighted) < tol * std::abs(num) && t < tol * den) {
            if (++consecutive_small >= 3) break;
        } else {
            consecutive_small = 0;
        }
        if (k - lo >= kMaxSeriesTerms) {
            throw ConvergenceError(
                "series_moment: series did not reach the tolerance within " +
                std::to_string(kMaxSeriesTerms) + " terms");
        }
        t *= alpha * (1.0 - static_cast<double>(k) * lam) /
             static_cast<double>(k + 1);
    }
    return num / den;
}

std::vector<BigRational> exact_stirling_r_truncated(const BigRational& lambda,
                                                    int r, int k, int n_max) {
    if (k < 1 || r < 0 || n_max < 0) {
        throw Error("exact_stirling_r_truncated: bad arguments");
    }
    // Exact base series: (1)_{n,lambda} above the truncation, zero below.
    std::vector<BigRational> base(static_cast<size_t>(n_max) + 1, BigRational(0));
    BigRational ff(1);
    for (int n = 1; n <= n_max; ++n) {
        ff *= BigRational(1) - BigRational(n - 1) * lambda;
        if (n > r) base[static_cast<size_t>(n)] = ff;
    }
    const auto tri = exact_pascal(n_max);
    std::vector<BigRational> power = base;
    for (int i = 2; i <= k; ++i) {
        std::vector<BigRational> next(static_cast<size_t>(n_max) + 1,
                                      BigRational(0));
        for (int n = 0; n <= n_max; ++n) {
            BigRational acc(0);
            for (int j = 0; j <= n; ++j) {
                acc += BigRational(tri[static_cast<size_t>(n)]
                                      [static_cast<size_t>(j)]) *
                       power[static_cast<size_t>(j)] *
                       base[static_cast<size_t>(n - j)];
            }
            next[static_cast<size_t>(n)] = acc;
        }
        power = std::move(next);
    }
    BigInt k_fact(1);
    for (int i = 2; i <= k; ++i) k_fact *= i;
    for (auto& v : power) v /= BigRational(k_fact);
    return power;
}

std::vector<std::vector<BigRational>> recurrence_stirling_table(
    const BigRational& lambda, int n_max, int k_max) {
    if (n_max < 0 || k_max < 0) {
        throw Error("recurrence_stirling_table: bad arguments");
    }
    std::vector<std::vector<BigRational>> table(
        static_cast<size_t>(n_max) + 1,
        std::vector<BigRational>(static_cast<size_t>(k_max) + 1,
                                 BigRational(0)));
    table[0][0] = 1;
    for (int n = 0; n < n_max; ++n) {
        for (int k = 0; k <= k_max; ++k) {
            BigRational v = (BigRational(k) - BigRational(n) * lambda) *
                            table[static_cast<size_t>(n)][static_cast<size_t>(k)];
            if (k >= 1) {
                v += table[static_cast<size_t>(n)][static_cast<size_t>(k - 1)];
            }
            table[static_cast<size_t>(n + 1)][static_cast<size_t>(k)] = v;
        }
    }
    return table;
}

std::vector<double> convolve_pmf(const TruncatedDegenPoisson& dist, int k,
                                 std::int64_t n_max) {
    if (k < 1 || n_max < 0) {
        throw Error("convolve_pmf: bad arguments");
    }
    const auto size = static_cast<size_t>(n_max) + 1;
    std::vector<double> single(size);
    for (std::int64_t i = 0; i <= n_max; ++i) {
        single[static_cast<size_t>(i)] = dist.pmf(i);
    }
    std::vector<double> acc = single;
    for (int fold = 2; fold <= k; ++fold) {
        std::vector<double> next(size, 0.0);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            double s = 0.0;
            for (std::int64_t j = 0; j <= n; ++j) {
                s += acc[static_cast<size_t>(j)] *
                     single[static_cast<size_t>(n - j)];
            }
            next[static_cast<size_t>(n)] = s;
        }
        acc = std::move(next);
    }
    return acc;
}

double classical_bell(int n, double x) {
    if (n < 0) {
        throw Error("classical_bell: order must be >= 0");
    }
    const auto table = recurrence_stirling_table(BigRational(0), n, n);
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        s += to_double(table[static_cast<size_t>(n)][static_cast<size_t>(k)]) *
             ipow(x, k);
    }
    return s;
}

double classical_normalizer(double alpha, int r) {
    return std::exp(alpha) - exp_partial(alpha, r);
}

double classical_pmf(double alpha, int r, std::int64_t k) {
    if (k <= r) return 0.0;
    return poisson_weight(alpha, k) / classical_normalizer(alpha, r);
}

double classical_cdf(double alpha, int r, double x) {
    const double fx = std::floor(x);
    if (fx < static_cast<double>(r) + 1.0) return 0.0;
    double s = 0.0;
    for (std::int64_t k = r + 1; static_cast<double>(k) <= fx; ++k) {
        const double w = poisson_weight(alpha, k);
        s += w;
        if (static_cast<double>(k) > alpha && w < 1e-22 * s) break;
    }
    return s / classical_normalizer(alpha, r);
}

double classical_mean(double alpha, int r) {
    // E[X] = alpha (e^alpha - exp_partial(alpha, r-1)) / normalizer,
    // from shifting the summation index once.
    return alpha * (std::exp(alpha) - exp_partial(alpha, r - 1)) /
           classical_normalizer(alpha, r);
}

double classical_variance(double alpha, int r) {
    // k^2 = k(k-1) + k gives two shifted exponential tails.
    const double n0 = classical_normalizer(alpha, r);
    const double e = std::exp(alpha);
    const double second =
        (alpha * alpha * (e - exp_partial(alpha, r - 2)) +
         alpha * (e - exp_partial(alpha, r - 1))) /
        n0;
    const double mean = classical_mean(alpha, r);
    return second - mean * mean;
}

double classical_moment(double alpha, int r, int n) {
    double num = 0.0, den = 0.0;
    int small = 0;
    for (std::int64_t k = r + 1;; ++k) {
        const double w = poisson_weight(alpha, k);
        num += ipow(static_cast<double>(k), n) * w;
        den += w;
        if (static_cast<double>(k) > alpha &&
            ipow(static_cast<double>(k), n) * w < 1e-17 * num) {
            if (++small >= 3) break;
        } else {
            small = 0;
        }
        if (k > kMaxSeriesTerms) {
            throw ConvergenceError("classical_moment: series did not converge");
        }
    }
    return num / den;
}

double classical_pgf(double alpha, int r, double t) {
    const double z = alpha * t;
    return (std::exp(z) - exp_partial(z, r)) / classical_normalizer(alpha, r);
}

}  // namespace trdpois::oracle
