#include "hlk/minor_gcd.hpp"

#include <algorithm>
#include <stdexcept>

// Deliberately self-contained: no elimination, no shared helpers with the
// SNF path. Every minor is a Laplace expansion along its first row.

namespace hlk {

namespace {

constexpr std::size_t kMaxOrder = 6;
constexpr unsigned long long kMaxMinors = 1'000'000;

unsigned long long binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    unsigned long long r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Integer cofactor_det(const IntMatrix& m, const std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1)
        return m(rows[0], cols[0]);

    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    Integer total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const Integer& entry = m(rows[0], cols[c]);
        if (sgn(entry) == 0)
            continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t x = 0; x < k; ++x)
            if (x != c)
                sub_cols.push_back(cols[x]);
        Integer minor = entry * cofactor_det(m, sub_rows, sub_cols);
        if (c % 2 == 0)
            total += minor;
        else
            total -= minor;
    }
    return total;
}

// Advances an ascending k-subset of {0..n-1}; false after the last one.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j)
                s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Integer> minor_gcd_profile(const IntMatrix& m) {
    const std::size_t order = std::min(m.rows(), m.cols());
    if (order > kMaxOrder)
        throw std::length_error("minor_gcd_profile: min(rows, cols) exceeds 6");
    for (std::size_t k = 1; k <= order; ++k)
        if (binomial(m.rows(), k) * binomial(m.cols(), k) > kMaxMinors)
            throw std::length_error("minor_gcd_profile: too many minors");

    std::vector<Integer> profile;
    profile.reserve(order);
    for (std::size_t k = 1; k <= order; ++k) {
        Integer g = 0;
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i)
            rows[i] = i;
        do {
            std::vector<std::size_t> cols(k);
            for (std::size_t j = 0; j < k; ++j)
                cols[j] = j;
            do {
                Integer d = cofactor_det(m, rows, cols);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            } while (next_subset(cols, m.cols()));
        } while (next_subset(rows, m.rows()));
        profile.push_back(g);
    }
    return profile;
}

}  // namespace hlk
