// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois/sampling.hpp"

#include "trdpois/errors.hpp"

namespace trdpois {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256StarStar::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256StarStar::next_uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::int64_t inverse_transform(const TruncatedDegenPoisson& dist, double u) {
    const DistributionParams& p = dist.params();
    const double lam = p.lambda.value();
    const auto hi = dist.support_max();
    std::int64_t k = dist.support_min();
    double mass = dist.first_mass_;  // pmf(r+1)
    double cum = mass;
    while (cum < u) {
        if (hi && k >= *hi) break;  // residual numerical mass goes to m
        mass *= p.alpha * (1.0 - static_cast<double>(k) * lam) /
                static_cast<double>(k + 1);
        ++k;
        cum += mass;
        if (mass <= 0.0) break;  // underflow exhausted the tail
    }
    return k;
}

Sampler::Sampler(const TruncatedDegenPoisson& dist, std::uint64_t seed)
    : dist_(dist), seed_(seed), rng_(seed) {}

std::int64_t Sampler::draw() {
    return inverse_transform(dist_, rng_.next_uniform01());
}

SampleBatch Sampler::draw_batch(std::int64_t count) {
    if (count < 0) {
        throw Error("draw_batch: count must be >= 0");
    }
    SampleBatch batch;
    batch.seed = seed_;
    batch.values.reserve(static_cast<size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        batch.values.push_back(draw());
    }
    return batch;
}

}  // namespace trdpois
