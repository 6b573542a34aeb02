#pragma once

#include "hlk/int_matrix.hpp"

#include <cstdint>

namespace hlk {

/// SplitMix64. Every random draw in the project goes through this so
/// that seeded runs are reproducible in any language:
///
///     state += 0x9e3779b97f4a7c15
///     z = state
///     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///     return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;

    // next() % bound; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

    // lo + next() % (hi - lo + 1)
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept;

private:
    std::uint64_t state_;
};

/// Product of `ops` random elementary row operations applied to the
/// size×size identity. See README for the exact draw sequence.
IntMatrix random_unimodular(std::size_t size, std::uint64_t seed, std::size_t ops);

// Same, but draws from an existing generator.
IntMatrix random_unimodular(std::size_t size, SplitMix64& rng, std::size_t ops);

// rows×cols matrix, entries uniform in [lo, hi], filled row-major.
IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi, SplitMix64& rng);

}  // namespace hlk
