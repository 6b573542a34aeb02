#include "hlk/selftest.hpp"

#include "hlk/invariant.hpp"
#include "hlk/minor_gcd.hpp"
#include "hlk/random.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace hlk {

namespace {

std::string shape(const IntMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::string join(const std::vector<Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ", ";
        s += xs[i].get_str();
    }
    return s + "]";
}

bool same_snf(const SNFResult& a, const SNFResult& b) {
    return a.d == b.d && a.u == b.u && a.v == b.v && a.divisors == b.divisors;
}

}  // namespace

std::optional<std::string> verify_snf(const IntMatrix& input, const SNFResult& snf) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    if (snf.u.rows() != m || snf.u.cols() != m || snf.v.rows() != n || snf.v.cols() != n || snf.d.rows() != m ||
        snf.d.cols() != n)
        return "transform shapes do not match a " + shape(input) + " input";
    if (snf.u * input * snf.v != snf.d)
        return std::string("u * m * v != d");
    if (abs(determinant(snf.u)) != 1)
        return "u is not unimodular (det " + determinant(snf.u).get_str() + ")";
    if (abs(determinant(snf.v)) != 1)
        return "v is not unimodular (det " + determinant(snf.v).get_str() + ")";

    const std::size_t l = snf.divisors.size();
    if (l > std::min(m, n))
        return std::string("more divisors than min(rows, cols)");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& x = snf.d(i, j);
            if (i == j && i < l) {
                if (x != snf.divisors[i])
                    return "d[" + std::to_string(i) + "][" + std::to_string(i) + "] differs from divisor list";
            } else if (sgn(x) != 0) {
                return "d has a stray nonzero at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            }
        }
    for (std::size_t i = 0; i < l; ++i) {
        if (sgn(snf.divisors[i]) <= 0)
            return "non-positive divisor " + snf.divisors[i].get_str();
        if (i > 0 && !mpz_divisible_p(snf.divisors[i].get_mpz_t(), snf.divisors[i - 1].get_mpz_t()))
            return "divisor chain broken: " + join(snf.divisors);
    }
    return std::nullopt;
}

TrialReport run_trial(std::uint64_t trial_seed) {
    TrialReport report;
    report.seed = trial_seed;
    auto fail = [&](std::string what) { report.failures.push_back(std::move(what)); };

    SplitMix64 rng(trial_seed);
    const std::size_t m = 1 + rng.below(6);
    const std::size_t n = 1 + rng.below(6);
    const IntMatrix M = random_matrix(m, n, -9, 9, rng);
    const IntMatrix U = random_unimodular(m, rng, rng.below(21));
    const IntMatrix V = random_unimodular(n, rng, rng.below(21));

    const SNFResult snf = smith_normal_form(M);
    const auto& divisors = snf.divisors;
    if (auto err = verify_snf(M, snf))
        fail("snf exactness: " + *err);
    if (!same_snf(snf, smith_normal_form(M)))
        fail("snf is not deterministic");

    const IntMatrix UMV = U * M * V;
    const SNFResult moved = smith_normal_form(UMV);
    if (auto err = verify_snf(UMV, moved))
        fail("snf exactness on U*M*V: " + *err);
    if (moved.divisors != divisors)
        fail("unimodular invariance: " + join(divisors) + " vs " + join(moved.divisors));

    const auto profile = minor_gcd_profile(M);
    Integer prefix = 1;
    for (std::size_t k = 1; k <= profile.size(); ++k) {
        const Integer expected = k <= divisors.size() ? Integer(prefix *= divisors[k - 1]) : Integer(0);
        if (profile[k - 1] != expected) {
            fail("oracle: D_" + std::to_string(k) + " = " + profile[k - 1].get_str() + ", divisors give " +
                 expected.get_str());
            break;
        }
    }

    const IntMatrix Mt = transpose(M);
    const SNFResult snf_t = smith_normal_form(Mt);
    if (auto err = verify_snf(Mt, snf_t))
        fail("snf exactness on transpose: " + *err);
    if (snf_t.divisors != divisors)
        fail("transpose invariance: " + join(divisors) + " vs " + join(snf_t.divisors));

    IntMatrix slid = M;
    for (int s = 0; s < 10; ++s) {
        const bool by_row = rng.below(2) == 0;
        const std::size_t size = by_row ? m : n;
        if (size < 2)
            continue;
        const std::size_t src = rng.below(size);
        const std::size_t dst = (src + 1 + rng.below(size - 1)) % size;
        const int coeff = rng.below(2) == 0 ? 1 : -1;
        slid = apply_slide(slid, by_row ? SlideKind::Row : SlideKind::Column, src, dst, coeff);
    }
    const SNFResult snf_s = smith_normal_form(slid);
    if (auto err = verify_snf(slid, snf_s))
        fail("snf exactness after slides: " + *err);
    if (snf_s.divisors != divisors)
        fail("slide invariance: " + join(divisors) + " vs " + join(snf_s.divisors));

    const LkInvariant lk = handlebody_linking(M);
    if (lk != handlebody_linking(UMV))
        fail("Lk changed under unimodular change of basis");
    if (lk.is_zero() != divisors.empty())
        fail("zero marker does not match rank 0");
    const AbelianGroup a1 = quotient_group(M, Side::First);
    const AbelianGroup a2 = quotient_group(M, Side::Second);
    if (a1.torsion != a2.torsion)
        fail("Tor(A1) != Tor(A2)");
    if (static_cast<long>(a1.free_rank) - static_cast<long>(a2.free_rank) != static_cast<long>(m) - static_cast<long>(n))
        fail("free rank difference of A1 and A2 is not m - n");
    if (reconstruct_lk(a1, divisors.size()) != lk)
        fail("reconstruct_lk(A1, l) != Lk");

    return report;
}

SelftestSummary run_selftest(std::size_t trials, std::uint64_t seed, unsigned threads) {
    std::vector<std::uint64_t> seeds(trials);
    SplitMix64 rng(seed);
    for (auto& s : seeds)
        s = rng.next();

    std::vector<TrialReport> reports(trials);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < trials; t += threads)
                    reports[t] = run_trial(seeds[t]);
            });
    }

    SelftestSummary summary;
    summary.trials = trials;
    for (auto& r : reports) {
        if (r.passed())
            ++summary.passed;
        else
            summary.failed.push_back(std::move(r));
    }
    return summary;
}

}  // namespace hlk
