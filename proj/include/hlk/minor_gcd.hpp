#pragma once

#include "hlk/int_matrix.hpp"

#include <vector>

namespace hlk {

// Brute-force determinantal divisors: entry k-1 is the gcd of |det| over
// every k×k minor (0 when they all vanish), for k = 1..min(m, n).
// Evaluates each minor by cofactor expansion. Test oracle only; throws
// std::length_error when min(m, n) > 6 or a minor count exceeds 10^6.
std::vector<Integer> minor_gcd_profile(const IntMatrix& m);

}  // namespace hlk
