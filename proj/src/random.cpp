#include "hlk/random.hpp"

#include <stdexcept>

namespace hlk {

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
}

namespace {

// Uniform index in [0, size) different from `i`; size must be >= 2.
std::size_t other_index(SplitMix64& rng, std::size_t size, std::size_t i) {
    return (i + 1 + rng.below(size - 1)) % size;
}

}  // namespace

IntMatrix random_unimodular(std::size_t size, SplitMix64& rng, std::size_t ops) {
    if (size == 0)
        throw std::invalid_argument("random_unimodular: size must be at least 1");
    IntMatrix m = IntMatrix::identity(size);
    for (std::size_t step = 0; step < ops; ++step) {
        const auto kind = rng.below(3);
        const auto i = static_cast<std::size_t>(rng.below(size));
        switch (kind) {
        case 0:  // swap
            if (size >= 2)
                m.swap_rows(i, other_index(rng, size, i));
            break;
        case 1:  // negate
            m.negate_row(i);
            break;
        default:  // row_j += k * row_i, k in [-3, 3]
            if (size >= 2) {
                const std::size_t j = other_index(rng, size, i);
                const long k = static_cast<long>(rng.uniform(-3, 3));
                m.add_row_multiple(i, j, k);
            }
            break;
        }
    }
    return m;
}

IntMatrix random_unimodular(std::size_t size, std::uint64_t seed, std::size_t ops) {
    SplitMix64 rng(seed);
    return random_unimodular(size, rng, ops);
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi, SplitMix64& rng) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<long>(rng.uniform(lo, hi));
    return m;
}

}  // namespace hlk
