#include <doctest.h>

#include "hlk/minor_gcd.hpp"
#include "hlk/random.hpp"
#include "hlk/selftest.hpp"
#include "hlk/smith.hpp"

#include <vector>

using namespace hlk;

namespace {

const IntMatrix kPaper{{-1, -1, 0, 2}, {1, -3, -2, 0}, {0, 0, 2, -2}};

std::vector<Integer> ints(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

void check_exact(const IntMatrix& m, const SNFResult& snf) {
    const auto err = verify_snf(m, snf);
    CHECK_MESSAGE(!err, (err ? *err : ""));
}

}  // namespace

TEST_CASE("SplitMix64 reference stream") {
    // First outputs for seed 0 of the reference splitmix64.c.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("smith_normal_form: fixed examples") {
    SUBCASE("paper matrix") {
        const auto snf = smith_normal_form(kPaper);
        CHECK(snf.divisors == ints({1, 2, 4}));
        CHECK(snf.rank() == 3);
        check_exact(kPaper, snf);
    }
    SUBCASE("zero matrix") {
        const IntMatrix z(3, 4);
        const auto snf = smith_normal_form(z);
        CHECK(snf.divisors.empty());
        CHECK(snf.u == IntMatrix::identity(3));
        CHECK(snf.v == IntMatrix::identity(4));
        check_exact(z, snf);
    }
    SUBCASE("identity") {
        CHECK(elementary_divisors(IntMatrix::identity(3)) == ints({1, 1, 1}));
    }
    SUBCASE("coprime diagonal needs the chain repair") {
        const IntMatrix m{{2, 0}, {0, 3}};
        const auto snf = smith_normal_form(m);
        CHECK(snf.divisors == ints({1, 6}));
        check_exact(m, snf);
    }
    SUBCASE("negative entries normalise to positive divisors") {
        CHECK(elementary_divisors(IntMatrix{{-3}}) == ints({3}));
        CHECK(elementary_divisors(IntMatrix{{0, -4}, {-6, 0}}) == ints({2, 12}));
    }
    SUBCASE("repeated divisors") {
        CHECK(elementary_divisors(IntMatrix{{2, 0, 0}, {0, 2, 0}}) == ints({2, 2}));
        CHECK(elementary_divisors(IntMatrix{{4, 0, 0}, {0, 6, 0}, {0, 0, 10}}) == ints({2, 2, 60}));
    }
    SUBCASE("rank deficient") {
        const IntMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
        const auto snf = smith_normal_form(m);
        CHECK(snf.divisors == ints({1, 1}));
        check_exact(m, snf);
    }
}

TEST_CASE("smith_normal_form: empty shapes") {
    for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {2, 0}}) {
        const IntMatrix m(r, c);
        const auto snf = smith_normal_form(m);
        CHECK(snf.divisors.empty());
        CHECK(snf.u == IntMatrix::identity(r));
        CHECK(snf.v == IntMatrix::identity(c));
        CHECK(snf.d == m);
    }
}

TEST_CASE("smith_normal_form is deterministic") {
    SplitMix64 rng(99);
    for (int t = 0; t < 30; ++t) {
        const auto m = random_matrix(1 + rng.below(6), 1 + rng.below(6), -9, 9, rng);
        const auto a = smith_normal_form(m);
        const auto b = smith_normal_form(m);
        CHECK(a.u == b.u);
        CHECK(a.v == b.v);
        CHECK(a.d == b.d);
    }
}

TEST_CASE("minor_gcd_profile") {
    // [1, 2, 8]: gcds of all 12 entries, 18 2x2 minors and 4 3x3 minors,
    // computed independently by enumeration.
    CHECK(minor_gcd_profile(kPaper) == ints({1, 2, 8}));
    CHECK(minor_gcd_profile(IntMatrix::identity(2)) == ints({1, 1}));
    CHECK(minor_gcd_profile(IntMatrix(2, 3)) == ints({0, 0}));
    CHECK(minor_gcd_profile(IntMatrix{{2, 0}, {0, 3}}) == ints({1, 6}));
    CHECK(minor_gcd_profile(IntMatrix(0, 5)).empty());
    CHECK_THROWS_AS(minor_gcd_profile(IntMatrix(7, 7)), std::length_error);
    CHECK_NOTHROW(minor_gcd_profile(IntMatrix(6, 12)));
    // C(40, 6) = 3838380 six-column subsets exceed the budget
    CHECK_THROWS_AS(minor_gcd_profile(IntMatrix(6, 40)), std::length_error);
}

TEST_CASE("random_unimodular") {
    CHECK(random_unimodular(3, 1234, 0) == IntMatrix::identity(3));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto one = random_unimodular(1, seed, 10);
        CHECK((one == IntMatrix{{1}} || one == IntMatrix{{-1}}));
    }
    const auto u = random_unimodular(4, 42, 20);
    CHECK(abs(determinant(u)) == 1);
    CHECK(u != IntMatrix::identity(4));
    CHECK(random_unimodular(4, 42, 20) == u);
    CHECK_THROWS_AS(random_unimodular(0, 1, 1), std::invalid_argument);
}

TEST_CASE("property: U*M*V keeps the divisors, and SNF stays exact") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + rng.below(6);
        const std::size_t n = 1 + rng.below(6);
        const auto M = random_matrix(m, n, -9, 9, rng);
        const auto U = random_unimodular(m, rng, rng.below(21));
        const auto V = random_unimodular(n, rng, rng.below(21));
        const auto moved = U * M * V;
        const auto a = smith_normal_form(M);
        const auto b = smith_normal_form(moved);
        check_exact(M, a);
        check_exact(moved, b);
        CHECK(a.divisors == b.divisors);
        CHECK(elementary_divisors(transpose(M)) == a.divisors);
    }
}

TEST_CASE("property: divisor prefix products match determinantal divisors") {
    SplitMix64 rng(77);
    for (int t = 0; t < 500; ++t) {
        // low-rank products show up more often with small entries
        const auto M = random_matrix(1 + rng.below(5), 1 + rng.below(5), -3, 3, rng);
        const auto divisors = elementary_divisors(M);
        const auto profile = minor_gcd_profile(M);
        REQUIRE(profile.size() >= divisors.size());
        Integer prefix = 1;
        for (std::size_t k = 0; k < profile.size(); ++k) {
            if (k < divisors.size()) {
                prefix *= divisors[k];
                CHECK(profile[k] == prefix);
            } else {
                CHECK(profile[k] == 0);
            }
        }
    }
}

TEST_CASE("coefficient growth stays exact") {
    SplitMix64 rng(3);
    const auto M = random_matrix(12, 15, -1000, 1000, rng);
    const auto snf = smith_normal_form(M);
    check_exact(M, snf);
    CHECK(snf.rank() == 12);
}

TEST_CASE("verify_snf catches broken results") {
    auto snf = smith_normal_form(kPaper);
    REQUIRE(!verify_snf(kPaper, snf));

    auto bad = snf;
    bad.divisors = ints({1, 4, 2});
    CHECK(verify_snf(kPaper, bad));

    bad = snf;
    bad.u(0, 0) += 1;
    CHECK(verify_snf(kPaper, bad));

    // d = 2*I is consistent with u = 2*I but u is not unimodular
    const IntMatrix m = IntMatrix::identity(2);
    SNFResult fake{IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{2, 0}, {0, 2}}, IntMatrix::identity(2), ints({2, 2})};
    CHECK(verify_snf(m, fake));
}
