// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#ifndef TRDPOIS_SAMPLING_HPP
#define TRDPOIS_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "trdpois/distribution.hpp"

namespace trdpois {

/// xoshiro256** (Blackman & Vigna), state seeded with four splitmix64 steps.
/// Chosen over the standard-library engines because its output is specified
/// bit for bit, which makes sample replay portable across platforms.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform double in [0, 1) from the top 53 bits of one output word.
    double next_uniform01();

private:
    std::uint64_t s_[4];
};

/// One batch of draws together with its provenance.
struct SampleBatch {
    std::vector<std::int64_t> values;
    std::uint64_t seed = 0;

    std::int64_t count() const noexcept {
        return static_cast<std::int64_t>(values.size());
    }
};

/// Inverse-transform step shared by the sampler and its tests: the smallest
/// support point whose cumulative probability reaches u.  A finite support
/// absorbs any residual numerical mass at its endpoint m.
std::int64_t inverse_transform(const TruncatedDegenPoisson& dist, double u);

/// Sampler with single-owner mutable state; everything else in the library
/// is pure.  Identical (distribution, seed) pairs replay identical batches
/// bit for bit.
class Sampler {
public:
    Sampler(const TruncatedDegenPoisson& dist, std::uint64_t seed);

    std::int64_t draw();
    SampleBatch draw_batch(std::int64_t count);

    std::uint64_t seed() const noexcept { return seed_; }
    const TruncatedDegenPoisson& distribution() const noexcept { return dist_; }

private:
    TruncatedDegenPoisson dist_;
    std::uint64_t seed_;
    Xoshiro256StarStar rng_;
};

}  // namespace trdpois

#endif  // TRDPOIS_SAMPLING_HPP
