// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois.h"

#include <cmath>
#include <cstring>
#include <new>

#include "trdpois/distribution.hpp"
#include "trdpois/errors.hpp"
#include "trdpois/oracles.hpp"
#include "trdpois/rational.hpp"
#include "trdpois/sampling.hpp"
#include "trdpois/special_numbers.hpp"

struct trdp_dist {
    trdpois::TruncatedDegenPoisson impl;
};

struct trdp_sampler {
    trdpois::Sampler impl;
};

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Funnels C++ exceptions into status codes at the library boundary.
template <typename Fn>
trdp_status guarded(Fn&& fn) {
    try {
        fn();
        return TRDP_OK;
    } catch (const trdpois::InvalidParamsError&) {
        return TRDP_ERR_INVALID_PARAMS;
    } catch (const trdpois::DomainError&) {
        return TRDP_ERR_DOMAIN;
    } catch (const trdpois::ConvergenceError&) {
        return TRDP_ERR_CONVERGENCE;
    } catch (const trdpois::OverflowError&) {
        return TRDP_ERR_OVERFLOW;
    } catch (const std::bad_alloc&) {
        return TRDP_ERR_ARGUMENT;
    } catch (const std::exception&) {
        return TRDP_ERR_ARGUMENT;
    }
}

trdpois::DistributionParams make_params(double lambda, double alpha,
                                        int32_t r) {
    trdpois::DistributionParams p;
    p.lambda = trdpois::DegenerateLambda(lambda);
    p.alpha = alpha;
    p.r = r;
    return p;
}

}  // namespace

extern "C" {

const char* trdp_version(void) { return "0.1.0"; }

const char* trdp_status_name(trdp_status status) {
    switch (status) {
        case TRDP_OK: return "ok";
        case TRDP_ERR_ARGUMENT: return "bad argument";
        case TRDP_ERR_INVALID_PARAMS: return "invalid parameters";
        case TRDP_ERR_DOMAIN: return "domain error";
        case TRDP_ERR_CONVERGENCE: return "convergence failure";
        case TRDP_ERR_OVERFLOW: return "overflow refused";
    }
    return "unknown status";
}

double trdp_falling_factorial(double x, int32_t n, double lambda) {
    if (n < 0 || !std::isfinite(lambda)) return kNan;
    return trdpois::falling_factorial(x, n, trdpois::DegenerateLambda(lambda));
}

trdp_status trdp_deg_exp(double x, double t, double lambda, double* out) {
    if (out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        *out = trdpois::deg_exp(x, t, trdpois::DegenerateLambda(lambda));
    });
}

trdp_status trdp_deg_exp_truncated(double t, int32_t r, double lambda,
                                   double* out) {
    if (out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        *out =
            trdpois::deg_exp_truncated(t, r, trdpois::DegenerateLambda(lambda));
    });
}

trdp_status trdp_classify_domain(double lambda, double alpha, int32_t r,
                                 trdp_domain* kind, int64_t* support_max,
                                 char* reason, size_t reason_size) {
    if (kind == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        const trdpois::DomainClass c =
            trdpois::classify_domain(make_params(lambda, alpha, r));
        switch (c.kind) {
            case trdpois::DomainKind::InfiniteSupport:
                *kind = TRDP_DOMAIN_INFINITE;
                break;
            case trdpois::DomainKind::FiniteSupport:
                *kind = TRDP_DOMAIN_FINITE;
                break;
            case trdpois::DomainKind::Invalid:
                *kind = TRDP_DOMAIN_INVALID;
                break;
        }
        if (support_max != nullptr) *support_max = c.support_max;
        if (reason != nullptr && reason_size > 0) {
            std::strncpy(reason, c.reason.c_str(), reason_size - 1);
            reason[reason_size - 1] = '\0';
        }
    });
}

trdp_status trdp_dist_create(double lambda, double alpha, int32_t r,
                             trdp_dist** out) {
    if (out == nullptr) return TRDP_ERR_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new trdp_dist{
            trdpois::TruncatedDegenPoisson(make_params(lambda, alpha, r))};
    });
}

void trdp_dist_free(trdp_dist* dist) { delete dist; }

double trdp_dist_lambda(const trdp_dist* dist) {
    return dist ? dist->impl.params().lambda.value() : kNan;
}

double trdp_dist_alpha(const trdp_dist* dist) {
    return dist ? dist->impl.params().alpha : kNan;
}

int32_t trdp_dist_r(const trdp_dist* dist) {
    return dist ? dist->impl.params().r : -1;
}

double trdp_dist_normalizer(const trdp_dist* dist) {
    return dist ? dist->impl.normalizer() : kNan;
}

trdp_domain trdp_dist_domain(const trdp_dist* dist) {
    if (dist == nullptr) return TRDP_DOMAIN_INVALID;
    return dist->impl.domain().kind == trdpois::DomainKind::FiniteSupport
               ? TRDP_DOMAIN_FINITE
               : TRDP_DOMAIN_INFINITE;
}

int64_t trdp_dist_support_min(const trdp_dist* dist) {
    return dist ? dist->impl.support_min() : -1;
}

int64_t trdp_dist_support_max(const trdp_dist* dist) {
    if (dist == nullptr) return -1;
    const auto m = dist->impl.support_max();
    return m ? *m : -1;
}

double trdp_dist_pmf(const trdp_dist* dist, int64_t k) {
    return dist ? dist->impl.pmf(k) : kNan;
}

double trdp_dist_cdf(const trdp_dist* dist, double x) {
    return dist ? dist->impl.cdf(x) : kNan;
}

double trdp_dist_mean(const trdp_dist* dist) {
    return dist ? dist->impl.mean() : kNan;
}

double trdp_dist_variance(const trdp_dist* dist) {
    return dist ? dist->impl.variance() : kNan;
}

trdp_status trdp_dist_moment(const trdp_dist* dist, int32_t n, double* out) {
    if (dist == nullptr || out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] { *out = dist->impl.moment(n); });
}

trdp_status trdp_dist_pgf(const trdp_dist* dist, double t, double* out) {
    if (dist == nullptr || out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] { *out = dist->impl.pgf(t); });
}

trdp_status trdp_dist_sum_pmf(const trdp_dist* dist, int32_t k, int64_t n_max,
                              double* out, int32_t* overflow_warning) {
    if (dist == nullptr || out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        const trdpois::SumDistribution sum =
            trdpois::iid_sum_distribution(dist->impl.params(), k, n_max);
        for (int64_t n = 0; n <= n_max; ++n) out[n] = sum.mass(n);
        if (overflow_warning != nullptr) {
            *overflow_warning = sum.overflow_warning ? 1 : 0;
        }
    });
}

trdp_status trdp_stirling_r_truncated(double lambda, int32_t r, int32_t k,
                                      int32_t n_max, double* out,
                                      int32_t* overflow_warning) {
    if (out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        const trdpois::StirlingSequence seq = trdpois::stirling_r_truncated(
            trdpois::DegenerateLambda(lambda), r, k, n_max);
        for (int32_t n = 0; n <= n_max; ++n) out[n] = seq.values[n];
        if (overflow_warning != nullptr) {
            *overflow_warning = seq.overflow_warning ? 1 : 0;
        }
    });
}

trdp_status trdp_degenerate_bell(int32_t n, double x, double lambda, double tol,
                                 double* out) {
    if (out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        *out = trdpois::degenerate_bell(n, x, trdpois::DegenerateLambda(lambda),
                                        tol);
    });
}

trdp_status trdp_sampler_create(const trdp_dist* dist, uint64_t seed,
                                trdp_sampler** out) {
    if (dist == nullptr || out == nullptr) return TRDP_ERR_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new trdp_sampler{trdpois::Sampler(dist->impl, seed)};
    });
}

void trdp_sampler_free(trdp_sampler* sampler) { delete sampler; }

int64_t trdp_sampler_draw(trdp_sampler* sampler) {
    return sampler ? sampler->impl.draw() : -1;
}

trdp_status trdp_sampler_draw_batch(trdp_sampler* sampler, int64_t count,
                                    int64_t* out) {
    if (sampler == nullptr || (out == nullptr && count > 0)) {
        return TRDP_ERR_ARGUMENT;
    }
    if (count < 0) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        const trdpois::SampleBatch batch = sampler->impl.draw_batch(count);
        for (int64_t i = 0; i < count; ++i) out[i] = batch.values[i];
    });
}

trdp_status trdp_oracle_series_moment(double lambda, double alpha, int32_t r,
                                      int32_t n, double tol, double* out) {
    if (out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        *out = trdpois::oracle::series_moment(make_params(lambda, alpha, r), n,
                                              tol);
    });
}

trdp_status trdp_oracle_convolve_pmf(const trdp_dist* dist, int32_t k,
                                     int64_t n_max, double* out) {
    if (dist == nullptr || out == nullptr) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        const std::vector<double> conv =
            trdpois::oracle::convolve_pmf(dist->impl, k, n_max);
        for (int64_t n = 0; n <= n_max; ++n) out[n] = conv[n];
    });
}

trdp_status trdp_oracle_stirling_recurrence(double lambda, int32_t n_max,
                                            int32_t k_max, double* out) {
    if (out == nullptr || n_max < 0 || k_max < 0) return TRDP_ERR_ARGUMENT;
    return guarded([&] {
        const auto table = trdpois::oracle::recurrence_stirling_table(
            trdpois::rational_from_double(lambda), n_max, k_max);
        for (int32_t n = 0; n <= n_max; ++n) {
            for (int32_t k = 0; k <= k_max; ++k) {
                out[static_cast<size_t>(n) * (k_max + 1) + k] =
                    trdpois::to_double(table[n][k]);
            }
        }
    });
}

trdp_status trdp_oracle_stirling_exact(const char* lambda, int32_t r, int32_t k,
                                       int32_t n_max, double* out) {
    if (lambda == nullptr || out == nullptr || n_max < 0) {
        return TRDP_ERR_ARGUMENT;
    }
    return guarded([&] {
        const trdpois::BigRational lam = trdpois::rational_from_string(lambda);
        const auto values =
            trdpois::oracle::exact_stirling_r_truncated(lam, r, k, n_max);
        for (int32_t n = 0; n <= n_max; ++n) {
            out[n] = trdpois::to_double(values[n]);
        }
    });
}

}  // extern "C"
