#pragma once

// Dyadic (base-2) digit combinatorics: supports of integers, the diminished
// sum, parity of trinomial coefficients, and binomial coefficients with
// arbitrary (possibly negative) integer upper index.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace altinv {

using BigInt = boost::multiprecision::cpp_int;

/// Set of exponents appearing in the binary expansion of a natural number,
/// stored as a bitmask: bit a is set iff 2^a appears.
struct DyadicSupport {
    std::uint64_t bits = 0;

    static DyadicSupport of(std::uint64_t m) { return DyadicSupport{m}; }

    std::uint64_t value() const { return bits; }
    int size() const { return std::popcount(bits); }

    DyadicSupport united(DyadicSupport o) const { return DyadicSupport{bits | o.bits}; }
    DyadicSupport intersected(DyadicSupport o) const { return DyadicSupport{bits & o.bits}; }
    bool disjoint(DyadicSupport o) const { return (bits & o.bits) == 0; }

    std::vector<int> exponents() const {
        std::vector<int> out;
        for (int a = 0; a < 64; ++a)
            if (bits >> a & 1) out.push_back(a);
        return out;
    }
};

/// m • m' = value of the union of the dyadic supports of m and m'.
inline std::uint64_t diminished_sum(std::uint64_t m, std::uint64_t mp) {
    return m | mp;
}

/// Number of exponents common to the dyadic supports of m and m'.
inline int overlap_count(std::uint64_t m, std::uint64_t mp) {
    return std::popcount(m & mp);
}

/// Integer represented by the intersection of the dyadic supports; equals
/// m + m' - (m.m'). This value, not the cardinality, is the e-exponent in
/// the product rules.
inline std::uint64_t overlap_value(std::uint64_t m, std::uint64_t mp) {
    return m & mp;
}

/// Parity of (a+b+c)!/(a!b!c!): odd iff the three dyadic supports are
/// pairwise disjoint and the sum has no carries.
inline bool trinomial_is_odd(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    // Disjointness alone is not enough: a+b+c must also equal a|b|c
    // (no carries), which for three summands is exactly pairwise disjointness.
    if ((a & b) || (a & c) || (b & c)) return false;
    return true;
}

inline int trinomial_parity(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return trinomial_is_odd(a, b, c) ? 1 : 0;
}

/// Exact binomial coefficient for natural upper index.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

/// Binomial coefficient with integer upper index: for n < 0,
/// C(n,k) = (-1)^k C(-n+k-1, k), the coefficient of t^k in (1+t)^n.
inline BigInt signed_binomial(std::int64_t n, std::uint64_t k) {
    if (n >= 0) return binomial(static_cast<std::uint64_t>(n), k);
    BigInt r = binomial(static_cast<std::uint64_t>(-n) + k - 1, k);
    return (k % 2 == 0) ? r : -r;
}

/// Exact trinomial coefficient (a+b+c)!/(a!b!c!), the big-integer oracle
/// behind trinomial_parity.
inline BigInt trinomial_exact(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return binomial(a + b + c, a) * binomial(b + c, b);
}

} // namespace altinv
