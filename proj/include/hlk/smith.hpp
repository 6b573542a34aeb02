#pragma once

#include "hlk/int_matrix.hpp"

#include <vector>

namespace hlk {

/// Smith normal form with the basis changes that produce it:
/// u * input * v == d, u and v unimodular, d rectangular diagonal with
/// positive entries d[0][0] | d[1][1] | ... followed by zeros.
struct SNFResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<Integer> divisors;

    std::size_t rank() const noexcept { return divisors.size(); }
};

SNFResult smith_normal_form(const IntMatrix& m);

std::vector<Integer> elementary_divisors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

}  // namespace hlk
