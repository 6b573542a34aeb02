#pragma once

#include "hlk/smith.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hlk {

// Checks u * input * v == d entry-wise, |det u| == |det v| == 1 (Bareiss),
// d rectangular diagonal with the positive divisor chain on its leading
// diagonal, and divisors matching that diagonal. Returns the first
// violation, if any.
std::optional<std::string> verify_snf(const IntMatrix& input, const SNFResult& snf);

// Randomised checks of the SNF and invariant properties. One trial draws
// a matrix (1..6 × 1..6, entries in [-9, 9]) plus unimodular factors and
// slides from its own seed, then runs every check below on it.
struct TrialReport {
    std::uint64_t seed = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

TrialReport run_trial(std::uint64_t trial_seed);

struct SelftestSummary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<TrialReport> failed;
};

// Trial seeds are successive outputs of SplitMix64(seed). Trials are
// spread over up to `threads` workers; the summary does not depend on it.
SelftestSummary run_selftest(std::size_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace hlk
