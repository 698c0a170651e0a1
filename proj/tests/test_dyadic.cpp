#include <catch2/catch_amalgamated.hpp>

#include <altinv/dyadic.hpp>

using namespace altinv;

namespace {

// truncated long division of 1 by (1+t)^{-n}, the series oracle for
// negative upper indices
std::vector<BigInt> inverse_binomial_series(int neg_n, int order) {
    std::vector<BigInt> den(neg_n + 1);
    for (int i = 0; i <= neg_n; ++i) den[i] = binomial(neg_n, i);
    std::vector<BigInt> q(order + 1, 0);
    q[0] = 1;
    for (int k = 1; k <= order; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= std::min(k, neg_n); ++i) acc += den[i] * q[k - i];
        q[k] = -acc;
    }
    return q;
}

} // namespace

TEST_CASE("diminished sum") {
    CHECK(diminished_sum(3, 6) == 7);
    CHECK(diminished_sum(0, 123) == 123);
    CHECK(diminished_sum(5, 5) == 5);

    // reconstruction: m*m' + sum over the intersection = m + m'
    for (std::uint64_t m = 0; m <= 1024; m += 7)
        for (std::uint64_t mp = 0; mp <= 1024; mp += 11) {
            std::uint64_t inter = m & mp;
            CHECK(diminished_sum(m, mp) + inter == m + mp);
            CHECK(diminished_sum(m, mp) == diminished_sum(mp, m));
            CHECK(diminished_sum(m, diminished_sum(mp, 77)) ==
                  diminished_sum(diminished_sum(m, mp), 77));
        }
}

TEST_CASE("overlap count and value") {
    CHECK(overlap_count(3, 6) == 1);
    CHECK(overlap_count(99, 0) == 0);
    CHECK(overlap_count(7, 7) == 3);
    CHECK(DyadicSupport::of(6).exponents() == std::vector<int>{1, 2});

    // the intersection as an integer: the e-exponent of the product rules
    CHECK(overlap_value(3, 6) == 2);
    CHECK(overlap_value(99, 0) == 0);
    CHECK(overlap_value(7, 7) == 7);
    for (std::uint64_t m = 0; m <= 256; ++m)
        for (std::uint64_t mp = 0; mp <= 256; mp += 3)
            CHECK(diminished_sum(m, mp) + overlap_value(m, mp) == m + mp);
}

TEST_CASE("trinomial parity against the exact oracle") {
    CHECK(trinomial_parity(1, 2, 4) == 1);
    CHECK(trinomial_exact(1, 2, 4) == 105);
    CHECK(trinomial_parity(1, 1, 0) == 0);
    CHECK(trinomial_exact(1, 1, 0) == 2);
    CHECK(trinomial_parity(0, 0, 0) == 1);

    for (std::uint64_t a = 0; a <= 24; ++a)
        for (std::uint64_t b = 0; b <= 24; ++b)
            for (std::uint64_t c = 0; c <= 24; ++c)
                CHECK(((trinomial_exact(a, b, c) % 2) == 1) == trinomial_is_odd(a, b, c));
}

TEST_CASE("signed binomial coefficients") {
    CHECK(signed_binomial(-5, 2) == 15);
    CHECK(signed_binomial(42, 0) == 1);
    CHECK(signed_binomial(-7, 0) == 1);
    CHECK(signed_binomial(-1, 3) == -1);
    CHECK(signed_binomial(6, 2) == 15);
    CHECK(signed_binomial(6, 7) == 0);

    // series oracle for all |n| <= 16, k <= 32
    for (int n = 1; n <= 16; ++n) {
        auto series = inverse_binomial_series(n, 32);
        for (int k = 0; k <= 32; ++k) CHECK(signed_binomial(-n, k) == series[k]);
    }
}
