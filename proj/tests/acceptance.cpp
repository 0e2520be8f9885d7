// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: nine numbered end-to-end checks, one PASS/FAIL line each,
// nonzero exit when any fail.  Tolerances are pinned here on purpose; see
// README.md for what each criterion covers.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "support/chisq.hpp"
#include "trdpois/distribution.hpp"
#include "trdpois/errors.hpp"
#include "trdpois/oracles.hpp"
#include "trdpois/rational.hpp"
#include "trdpois/sampling.hpp"
#include "trdpois/special_numbers.hpp"

using trdpois::BigRational;
using trdpois::DegenerateLambda;
using trdpois::DistributionParams;
using trdpois::TruncatedDegenPoisson;
namespace oracle = trdpois::oracle;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int index, std::string summary, double time_limit_s)
        : index_(index),
          summary_(std::move(summary)),
          limit_s_(time_limit_s),
          start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& detail) {
        ok_ = false;
        if (detail_.empty()) detail_ = detail;
    }

    void track(double deviation) {
        worst_ = std::max(worst_, deviation);
    }

    // Deviation against a bound; records and fails in one step.
    void expect(double deviation, double bound, const std::string& what) {
        track(deviation);
        if (!(deviation <= bound)) {
            std::ostringstream os;
            os << what << " deviated by " << deviation << " (bound " << bound
               << ")";
            fail(os.str());
        }
    }

    ~Criterion() {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_)
                .count();
        if (elapsed > limit_s_) {
            ok_ = false;
            if (detail_.empty()) {
                std::ostringstream os;
                os << "exceeded the " << limit_s_ << "s time limit";
                detail_ = os.str();
            }
        }
        std::printf("%s criterion %d: %s (worst deviation %.3g, %.2fs)%s%s\n",
                    ok_ ? "PASS" : "FAIL", index_, summary_.c_str(), worst_,
                    elapsed, detail_.empty() ? "" : " -- ",
                    detail_.c_str());
        std::fflush(stdout);
        if (!ok_) ++failures;
    }

private:
    int index_;
    std::string summary_;
    double limit_s_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    double worst_ = 0.0;
    std::string detail_;
};

DistributionParams params(double lambda, double alpha, int r) {
    DistributionParams p;
    p.lambda = DegenerateLambda(lambda);
    p.alpha = alpha;
    p.r = r;
    return p;
}

std::vector<DistributionParams> grid() {
    std::vector<DistributionParams> out;
    const double lambdas[] = {0.0, -0.2, -0.25, 0.2, 1.0 / 3.0};
    const double alphas[] = {0.5, 1.0, 3.0};
    const int rs[] = {0, 1, 2, 5};
    for (double lam : lambdas) {
        for (double alpha : alphas) {
            for (int r : rs) {
                const auto p = params(lam, alpha, r);
                if (trdpois::classify_domain(p).valid()) out.push_back(p);
            }
        }
    }
    return out;
}

std::string point_name(const DistributionParams& p) {
    std::ostringstream os;
    os << "(lambda=" << p.lambda.value() << ", alpha=" << p.alpha
       << ", r=" << p.r << ")";
    return os.str();
}

double rel_dev(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

}  // namespace

int main() {
    const auto all_params = grid();

    // 1: total probability mass.
    {
        Criterion c(1, "pmf sums to 1 within 1e-12 on the parameter grid",
                    1.0);
        for (const auto& p : all_params) {
            const TruncatedDegenPoisson d(p);
            double sum = 0.0;
            std::int64_t k = d.support_min();
            const std::int64_t hi =
                d.support_max().value_or(d.support_min() + 100000);
            for (; k <= hi; ++k) {
                const double mass = d.pmf(k);
                sum += mass;
                if (mass == 0.0 && k > d.support_min()) break;
            }
            c.expect(std::fabs(sum - 1.0), 1e-12,
                     "normalization at " + point_name(p));
        }
    }

    // 2: closed-form mean and variance.
    {
        Criterion c(2,
                    "closed-form mean/variance match the series route within "
                    "1e-10, worked point within 1e-14",
                    1.0);
        for (const auto& p : all_params) {
            const TruncatedDegenPoisson d(p);
            const double m1 = oracle::series_moment(p, 1, 1e-14);
            const double m2 = oracle::series_moment(p, 2, 1e-14);
            c.expect(rel_dev(d.mean(), m1), 1e-10,
                     "mean at " + point_name(p));
            // A single-point support makes the variance exactly zero, where
            // the series route only cancels to rounding level; the floored
            // scale turns the check absolute there (1e-14) and leaves it
            // relative everywhere the variance is of visible size.
            const double var_series = m2 - m1 * m1;
            c.expect(std::fabs(d.variance() - var_series) /
                         std::max(std::fabs(var_series), 1e-4),
                     1e-10, "variance at " + point_name(p));
        }
        const TruncatedDegenPoisson w(params(1.0 / 3.0, 3.0, 0));
        c.expect(rel_dev(w.normalizer(), 7.0), 1e-14, "worked normalizer");
        c.expect(rel_dev(w.mean(), 12.0 / 7.0), 1e-14, "worked mean");
        c.expect(rel_dev(w.variance(), 24.0 / 49.0), 1e-14,
                 "worked variance");
        c.expect(rel_dev(w.pmf(1), 3.0 / 7.0), 1e-14, "worked pmf(1)");
        c.expect(rel_dev(w.pmf(3), 1.0 / 7.0), 1e-14, "worked pmf(3)");
    }

    // 3: factorial-series moments.
    {
        Criterion c(3,
                    "Bell-route moments match the series route within 1e-9 "
                    "up to order 6; order 0 is exactly 1",
                    5.0);
        for (const auto& p : all_params) {
            const TruncatedDegenPoisson d(p);
            if (d.moment(0) != 1.0) {
                c.fail("moment(0) is not exactly 1 at " + point_name(p));
            }
            for (int n = 1; n <= 6; ++n) {
                const double series = oracle::series_moment(p, n, 1e-14);
                c.expect(rel_dev(d.moment(n), series), 1e-9,
                         "moment " + std::to_string(n) + " at " +
                             point_name(p));
            }
        }
    }

    // 4: cdf against cumulative pmf sums.
    {
        Criterion c(4,
                    "cdf matches cumulative pmf sums within 1e-13 through "
                    "coverage 1 - 1e-10",
                    5.0);
        for (const auto& p : all_params) {
            const TruncatedDegenPoisson d(p);
            double cum = 0.0;
            const std::int64_t hi =
                d.support_max().value_or(d.support_min() + 10000);
            for (std::int64_t k = d.support_min(); k <= hi; ++k) {
                cum += d.pmf(k);
                c.expect(std::fabs(d.cdf(static_cast<double>(k)) - cum),
                         1e-13, "cdf at k=" + std::to_string(k) + " " +
                                    point_name(p));
                if (cum >= 1.0 - 1e-10) break;
            }
        }
    }

    // 5: i.i.d. sums against brute-force convolution.
    {
        Criterion c(5,
                    "k-fold sum masses match convolution within 1e-10 for "
                    "k <= 4, n <= 30; lowest mass is pmf(r+1)^k within 1e-12",
                    10.0);
        for (const auto& p : all_params) {
            const TruncatedDegenPoisson d(p);
            for (int k = 2; k <= 4; ++k) {
                const std::int64_t n_max = 30;
                const std::int64_t first =
                    static_cast<std::int64_t>(k) * (p.r + 1);
                if (first > n_max) continue;
                const auto sum = trdpois::iid_sum_distribution(p, k, n_max);
                const auto conv = oracle::convolve_pmf(d, k, n_max);
                for (std::int64_t n = 0; n <= n_max; ++n) {
                    const double a = sum.mass(n);
                    const double b = conv[static_cast<size_t>(n)];
                    if (std::max(std::fabs(a), std::fabs(b)) < 1e-280) {
                        continue;
                    }
                    c.expect(std::fabs(a - b) /
                                 std::max(std::fabs(a), std::fabs(b)),
                             1e-10,
                             "sum mass n=" + std::to_string(n) + " k=" +
                                 std::to_string(k) + " at " + point_name(p));
                }
                c.expect(rel_dev(sum.mass(first),
                                 std::pow(d.pmf(p.r + 1), k)),
                         1e-12, "lowest sum mass at " + point_name(p));
            }
        }
    }

    // 6: special numbers against exact rational arithmetic.
    {
        Criterion c(6,
                    "floating-point Stirling numbers match exact rationals "
                    "within 1e-12 (n <= 25, k <= 6, r <= 3); the r = 0 "
                    "recurrence agrees exactly",
                    10.0);
        struct LambdaCase {
            BigRational exact;
            double approx;
        };
        const LambdaCase lambdas[] = {
            {BigRational(0), 0.0},
            {BigRational(1, 3), 1.0 / 3.0},
            {BigRational(-1, 4), -0.25},
            {BigRational(1, 5), 0.2},
        };
        for (const auto& lc : lambdas) {
            for (int r = 0; r <= 3; ++r) {
                for (int k = 1; k <= 6; ++k) {
                    const auto exact =
                        oracle::exact_stirling_r_truncated(lc.exact, r, k, 25);
                    const auto seq = trdpois::stirling_r_truncated(
                        DegenerateLambda(lc.approx), r, k, 25);
                    for (int n = 0; n <= 25; ++n) {
                        const double want =
                            trdpois::to_double(exact[static_cast<size_t>(n)]);
                        const double got =
                            seq.values[static_cast<size_t>(n)];
                        std::ostringstream what;
                        what << "stirling n=" << n << " k=" << k
                             << " r=" << r << " lambda=" << lc.approx;
                        if (want == 0.0) {
                            if (got != 0.0) c.fail(what.str() + " not zero");
                        } else {
                            c.expect(rel_dev(got, want), 1e-12, what.str());
                        }
                    }
                }
            }
            // r = 0: the triangle recurrence and the EGF construction agree
            // exactly in rational arithmetic.
            const auto table =
                oracle::recurrence_stirling_table(lc.exact, 20, 6);
            for (int k = 1; k <= 6; ++k) {
                const auto egf =
                    oracle::exact_stirling_r_truncated(lc.exact, 0, k, 20);
                for (int n = 0; n <= 20; ++n) {
                    if (egf[static_cast<size_t>(n)] !=
                        table[static_cast<size_t>(n)][static_cast<size_t>(k)]) {
                        std::ostringstream what;
                        what << "recurrence mismatch n=" << n << " k=" << k;
                        c.fail(what.str());
                    }
                }
            }
        }
    }

    // 7: near-classical regression.
    {
        Criterion c(7,
                    "lambda = 1e-9 stays within 1e-8 of the classical "
                    "r-truncated Poisson on the documented evaluation set",
                    5.0);
        const double kLam = 1e-9;
        for (double alpha : {0.5, 1.0, 3.0}) {
            for (int r : {0, 1, 2}) {
                const TruncatedDegenPoisson d(params(kLam, alpha, r));
                const std::string at = point_name(d.params());
                c.expect(rel_dev(d.normalizer(),
                                 oracle::classical_normalizer(alpha, r)),
                         1e-8, "normalizer at " + at);
                c.expect(rel_dev(d.mean(), oracle::classical_mean(alpha, r)),
                         1e-8, "mean at " + at);
                c.expect(rel_dev(d.variance(),
                                 oracle::classical_variance(alpha, r)),
                         1e-8, "variance at " + at);
                for (int n = 0; n <= 2; ++n) {
                    c.expect(rel_dev(d.moment(n),
                                     oracle::classical_moment(alpha, r, n)),
                             1e-8, "moment " + std::to_string(n) + " at " + at);
                }
                for (std::int64_t k = r + 1; k <= r + 3; ++k) {
                    c.expect(rel_dev(d.pmf(k),
                                     oracle::classical_pmf(alpha, r, k)),
                             1e-8, "pmf k=" + std::to_string(k) + " at " + at);
                }
                for (std::int64_t x : {static_cast<std::int64_t>(r + 1),
                                       static_cast<std::int64_t>(r + 3),
                                       static_cast<std::int64_t>(r + 5)}) {
                    c.expect(rel_dev(d.cdf(static_cast<double>(x)),
                                     oracle::classical_cdf(alpha, r, x)),
                             1e-8, "cdf x=" + std::to_string(x) + " at " + at);
                }
                for (double t : {0.25, 0.5, 0.9, 1.0}) {
                    c.expect(rel_dev(d.pgf(t),
                                     oracle::classical_pgf(alpha, r, t)),
                             1e-8, "pgf t=" + std::to_string(t) + " at " + at);
                }
            }
        }
    }

    // 8: sampling statistics.
    {
        Criterion c(8,
                    "one million draws pass the 99.9% chi-square test and "
                    "the 4-sigma mean check",
                    30.0);
        const TruncatedDegenPoisson d(params(1.0 / 3.0, 3.0, 0));
        trdpois::Sampler sampler(d, 424242);
        const std::int64_t n = 1000000;
        std::vector<std::int64_t> counts(4, 0);
        double sum = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t v = sampler.draw();
            if (v < 1 || v > 3) {
                c.fail("draw outside the support: " + std::to_string(v));
                break;
            }
            ++counts[static_cast<size_t>(v)];
            sum += static_cast<double>(v);
        }
        const double mean = sum / static_cast<double>(n);
        const double four_sigma =
            4.0 * std::sqrt(24.0 / 49.0 / static_cast<double>(n));
        c.expect(std::fabs(mean - 12.0 / 7.0), four_sigma, "sample mean");

        const std::vector<std::int64_t> observed(counts.begin() + 1,
                                                 counts.end());
        const std::vector<double> expected = {
            3.0 / 7.0 * static_cast<double>(n),
            3.0 / 7.0 * static_cast<double>(n),
            1.0 / 7.0 * static_cast<double>(n)};
        const auto gof = testsupport::chi_square_gof(observed, expected);
        const double threshold =
            testsupport::chi_square_quantile(0.999, gof.df);
        c.expect(gof.statistic, threshold, "chi-square statistic");
    }

    // 9: determinism.
    {
        Criterion c(9,
                    "recomputing the full battery twice is byte-identical, "
                    "including sampler replay",
                    10.0);
        const auto fingerprint = [&]() {
            std::ostringstream os;
            os.precision(17);
            for (const auto& p : all_params) {
                const TruncatedDegenPoisson d(p);
                os << d.normalizer() << ' ' << d.mean() << ' ' << d.variance()
                   << ' ';
                for (int n = 0; n <= 4; ++n) os << d.moment(n) << ' ';
                for (std::int64_t k = d.support_min();
                     k <= d.support_min() + 10; ++k) {
                    os << d.pmf(k) << ' '
                       << d.cdf(static_cast<double>(k)) << ' ';
                }
                os << d.pgf(0.5) << ' ';
                const auto seq = trdpois::stirling_r_truncated(
                    p.lambda, p.r, 3, 20);
                for (double v : seq.values) os << v << ' ';
                trdpois::Sampler s(d, 12345);
                const auto batch = s.draw_batch(1000);
                for (std::int64_t v : batch.values) os << v << ',';
                os << '\n';
            }
            return os.str();
        };
        const std::string first = fingerprint();
        const std::string second = fingerprint();
        if (first != second) {
            c.fail("fingerprints differ between passes");
        }
        if (first.empty()) {
            c.fail("empty fingerprint");
        }
    }

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
