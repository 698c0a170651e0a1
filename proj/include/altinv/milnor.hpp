#pragma once

// Exact arithmetic in the graded F2-algebra M(g) = F2[e, x1..xg]/(xi^2 = e*xi).
// Monomials are keyed by (e-exponent, generator subset); every homogeneous
// element z of degree d satisfies z^2 = e^d z, which drives all the
// symmetric-function and normal-form identities implemented below.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic.hpp"

namespace altinv {

struct MilnorMonomial {
    int epow = 0;
    std::uint32_t mask = 0; // bit i set <=> generator x_{i+1} present

    int degree() const { return epow + std::popcount(mask); }

    friend bool operator==(const MilnorMonomial&, const MilnorMonomial&) = default;
    friend bool operator<(const MilnorMonomial& a, const MilnorMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.epow != b.epow) return a.epow > b.epow; // e-heavy terms first
        return a.mask < b.mask;
    }
};

class MilnorElement {
public:
    MilnorElement() = default;
    explicit MilnorElement(int g) : g_(check_gens(g)) {}

    static MilnorElement zero(int g) { return MilnorElement(g); }

    static MilnorElement one(int g) {
        MilnorElement r(g);
        r.terms_ = {MilnorMonomial{0, 0}};
        return r;
    }

    static MilnorElement e(int g, int power = 1) {
        if (power < 0) throw std::invalid_argument("negative e-power");
        MilnorElement r(g);
        r.terms_ = {MilnorMonomial{power, 0}};
        return r;
    }

    /// Generator x_i, 1-based.
    static MilnorElement generator(int g, int i) {
        if (i < 1 || i > g) throw std::invalid_argument("generator index out of range");
        MilnorElement r(g);
        r.terms_ = {MilnorMonomial{0, std::uint32_t{1} << (i - 1)}};
        return r;
    }

    static MilnorElement from_monomials(int g, std::vector<MilnorMonomial> ms) {
        MilnorElement r(g);
        for (const auto& m : ms)
            if (m.mask >> g) throw std::invalid_argument("monomial uses generator beyond g");
        r.terms_ = std::move(ms);
        r.normalize();
        return r;
    }

    int generator_count() const { return g_; }
    const std::vector<MilnorMonomial>& monomials() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0] == MilnorMonomial{0, 0}; }
    bool constant_term() const {
        return !terms_.empty() && terms_.front() == MilnorMonomial{0, 0};
    }

    int max_degree() const {
        int d = 0;
        for (const auto& m : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// Degree if the element is homogeneous (zero counts as homogeneous of
    /// any degree and reports nullopt only when asked for a definite value).
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.front().degree();
        for (const auto& m : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    /// Graded component of degree d.
    MilnorElement component(int d) const {
        MilnorElement r(g_);
        for (const auto& m : terms_)
            if (m.degree() == d) r.terms_.push_back(m);
        return r;
    }

    friend MilnorElement operator+(const MilnorElement& a, const MilnorElement& b) {
        require_same_ring(a, b);
        MilnorElement r(a.g_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        r.terms_.insert(r.terms_.end(), a.terms_.begin(), a.terms_.end());
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        r.normalize();
        return r;
    }

    friend MilnorElement operator*(const MilnorElement& a, const MilnorElement& b) {
        require_same_ring(a, b);
        MilnorElement r(a.g_);
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ma : a.terms_)
            for (const auto& mb : b.terms_) {
                // x_S * x_T = e^{|S ∩ T|} x_{S ∪ T}
                int overlap = std::popcount(ma.mask & mb.mask);
                r.terms_.push_back(MilnorMonomial{ma.epow + mb.epow + overlap, ma.mask | mb.mask});
            }
        r.normalize();
        return r;
    }

    MilnorElement& operator+=(const MilnorElement& b) { return *this = *this + b; }
    MilnorElement& operator*=(const MilnorElement& b) { return *this = *this * b; }

    MilnorElement pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative power");
        MilnorElement r = one(g_), base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const MilnorElement& a, const MilnorElement& b) {
        return a.g_ == b.g_ && a.terms_ == b.terms_;
    }

    /// Algebra endomorphism fixing e: generator x_i (1-based) maps to
    /// images[i-1]; each image must be zero or homogeneous of degree 1.
    MilnorElement substitute(const std::vector<MilnorElement>& images) const {
        if (static_cast<int>(images.size()) != g_)
            throw std::invalid_argument("substitute: need one image per generator");
        for (const auto& im : images) {
            if (im.generator_count() != g_)
                throw std::invalid_argument("substitute: image in wrong ring");
            if (!im.is_zero() && im.homogeneous_degree() != 1)
                throw std::invalid_argument("substitute: image must be zero or homogeneous of degree 1");
        }
        MilnorElement out(g_);
        for (const auto& m : terms_) {
            MilnorElement t = e(g_, m.epow);
            for (int i = 0; i < g_ && !t.is_zero(); ++i)
                if (m.mask >> i & 1) t *= images[i];
            out += t;
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += monomial_string(terms_[i]);
        }
        return s;
    }

private:
    int g_ = 0;
    std::vector<MilnorMonomial> terms_; // sorted, distinct (F2 coefficients)

    static int check_gens(int g) {
        if (g < 0 || g > 32) throw std::invalid_argument("generator count must be in [0,32]");
        return g;
    }

    static void require_same_ring(const MilnorElement& a, const MilnorElement& b) {
        if (a.g_ != b.g_) throw std::invalid_argument("mismatched generator counts");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end());
        // cancel pairs mod 2
        std::vector<MilnorMonomial> out;
        out.reserve(terms_.size());
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t j = i;
            while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
            if ((j - i) % 2) out.push_back(terms_[i]);
            i = j;
        }
        terms_ = std::move(out);
    }

    static std::string monomial_string(const MilnorMonomial& m) {
        std::string s;
        if (m.epow == 1) s = "e";
        else if (m.epow > 1) s = "e^" + std::to_string(m.epow);
        for (int i = 0; i < 32; ++i)
            if (m.mask >> i & 1) {
                if (!s.empty()) s += "*";
                s += "x" + std::to_string(i + 1);
            }
        return s.empty() ? "1" : s;
    }
};

/// m-th elementary symmetric function of a family of homogeneous elements of
/// one common degree.
inline MilnorElement elementary_symmetric(const std::vector<MilnorElement>& ys, int m) {
    if (ys.empty()) throw std::invalid_argument("elementary_symmetric: empty family");
    int g = ys.front().generator_count();
    std::optional<int> d;
    for (const auto& y : ys) {
        if (y.generator_count() != g)
            throw std::invalid_argument("elementary_symmetric: mixed rings");
        auto dy = y.homogeneous_degree();
        if (!dy) throw std::invalid_argument("elementary_symmetric: non-homogeneous entry");
        if (!y.is_zero()) {
            if (d && *d != *dy) throw std::invalid_argument("elementary_symmetric: mixed degrees");
            d = *dy;
        }
    }
    if (m < 0) throw std::invalid_argument("elementary_symmetric: negative index");
    if (m == 0) return MilnorElement::one(g);
    const int n = static_cast<int>(ys.size());
    if (m > n) return MilnorElement::zero(g);
    // iterate over m-subsets
    MilnorElement sum = MilnorElement::zero(g);
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        MilnorElement prod = MilnorElement::one(g);
        for (int i : idx) prod *= ys[i];
        sum += prod;
        int k = m - 1;
        while (k >= 0 && idx[k] == n - m + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return sum;
}

/// Total Steenrod square of a homogeneous element: Sq(z) = (1+e)^d z.
inline MilnorElement steenrod_total(const MilnorElement& z) {
    auto d = z.homogeneous_degree();
    if (!d) throw std::invalid_argument("steenrod_total: non-homogeneous input");
    int g = z.generator_count();
    // (1+e)^d over F2: exponents are the submasks of d
    MilnorElement f = MilnorElement::zero(g);
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(*d); ++i)
        if ((i & static_cast<std::uint32_t>(*d)) == i) f += MilnorElement::e(g, static_cast<int>(i));
    return f * z;
}

/// Factorization x = prod_j (1 + a_j) with a_j homogeneous of degree 2^j.
struct PNormalForm {
    std::vector<MilnorElement> factors; // factors[j] has degree 2^j (or is zero)

    MilnorElement expand(int g) const {
        MilnorElement p = MilnorElement::one(g);
        for (std::size_t j = 0; j < factors.size(); ++j)
            p *= MilnorElement::one(g) + factors[j];
        return p;
    }
};

/// Attempts the normal form of an element with constant term 1. The degree
/// 2^j components force the candidate factors, so reconstruction decides
/// membership. Returns nullopt when x admits no such factorization.
inline std::optional<PNormalForm> p_factorize(const MilnorElement& x, int bound = -1) {
    if (!x.constant_term())
        throw std::invalid_argument("p_factorize: constant term must be 1");
    const int g = x.generator_count();
    const int maxdeg = x.max_degree();
    if (bound >= 0 && maxdeg > (1 << bound))
        throw std::invalid_argument("p_factorize: component above stated bound");
    PNormalForm nf;
    if (maxdeg == 0) return nf; // x == 1
    for (int j = 0; (1 << j) <= maxdeg; ++j)
        nf.factors.push_back(x.component(1 << j));
    if (nf.expand(g) == x) return nf;
    return std::nullopt;
}

/// Total Stiefel-Whitney class: an element with constant term 1 whose graded
/// components are the classes w_i.
struct SWClass {
    MilnorElement total;

    MilnorElement component(int i) const { return total.component(i); }
    int generator_count() const { return total.generator_count(); }

    friend bool operator==(const SWClass&, const SWClass&) = default;
};

/// prod_i (1 + alpha_i) for degree-1 square classes alpha_i (zero = trivial
/// class); component i is the i-th elementary symmetric function.
inline SWClass sw_total(const std::vector<MilnorElement>& alphas) {
    if (alphas.empty()) throw std::invalid_argument("sw_total: empty family");
    int g = alphas.front().generator_count();
    MilnorElement w = MilnorElement::one(g);
    for (const auto& a : alphas) {
        if (a.generator_count() != g) throw std::invalid_argument("sw_total: mixed rings");
        if (!a.is_zero() && a.homogeneous_degree() != 1)
            throw std::invalid_argument("sw_total: entries must be zero or degree 1");
        w *= MilnorElement::one(g) + a;
    }
    return SWClass{w};
}

/// Checks the two equivalent product expansions of w_m * w_m': the closed
/// form e^{m+m'-m.m'} w_{m.m'} and the trinomial sum filtered by parity of
/// its coefficients (only the index i = m+m'-m.m' survives).
inline bool sw_product_check(std::uint64_t m, std::uint64_t mp, const SWClass& w) {
    const int g = w.generator_count();
    const auto lhs = w.component(static_cast<int>(m)) * w.component(static_cast<int>(mp));

    const std::uint64_t ds = diminished_sum(m, mp);
    const auto ov = overlap_value(m, mp);
    const auto rhs_closed = MilnorElement::e(g, static_cast<int>(ov)) * w.component(static_cast<int>(ds));

    MilnorElement rhs_sum = MilnorElement::zero(g);
    for (std::uint64_t i = 0; i <= std::min(m, mp); ++i)
        if (trinomial_is_odd(i, m - i, mp - i))
            rhs_sum += MilnorElement::e(g, static_cast<int>(i)) * w.component(static_cast<int>(m + mp - i));

    return lhs == rhs_closed && lhs == rhs_sum;
}

/// Twist of a total SW class by a degree-1 parameter: w * (1 + two*w_1).
/// Componentwise this adds two*w_{i-1} to every even component.
inline SWClass w_gal_transform(const SWClass& w, const MilnorElement& two) {
    const int g = w.generator_count();
    if (two.generator_count() != g) throw std::invalid_argument("w_gal_transform: mixed rings");
    if (!two.is_zero() && two.homogeneous_degree() != 1)
        throw std::invalid_argument("w_gal_transform: parameter must be zero or degree 1");
    MilnorElement w1 = w.component(1);
    return SWClass{w.total * (MilnorElement::one(g) + two * w1)};
}

/// Truncated formal power series 1 + a_1 t + ... + a_N t^N with a_n a
/// degree-n element.
class TruncatedSeries {
public:
    static constexpr int kDefaultOrder = 64;

    TruncatedSeries(int g, int order = kDefaultOrder)
        : g_(g), coef_(static_cast<std::size_t>(order) + 1, MilnorElement::zero(g)) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        coef_[0] = MilnorElement::one(g);
    }

    int generator_count() const { return g_; }
    int order() const { return static_cast<int>(coef_.size()) - 1; }

    const MilnorElement& coefficient(int n) const { return coef_.at(n); }

    void set_coefficient(int n, MilnorElement a) {
        if (n == 0) throw std::invalid_argument("constant coefficient is fixed to 1");
        if (!a.is_zero() && a.homogeneous_degree() != n)
            throw std::invalid_argument("coefficient degree must match series index");
        coef_.at(n) = std::move(a);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.g_ != b.g_) throw std::invalid_argument("mixed rings");
        TruncatedSeries r(a.g_, std::min(a.order(), b.order()));
        for (int n = 1; n <= r.order(); ++n) {
            MilnorElement c = MilnorElement::zero(a.g_);
            for (int i = 0; i <= n; ++i) c += a.coef_[i] * b.coef_[n - i];
            r.coef_[n] = c;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    bool is_one() const {
        for (int n = 1; n <= order(); ++n)
            if (!coef_[n].is_zero()) return false;
        return true;
    }

    /// prod_j (1 + a_j t^{2^j}) truncated, for factors of a normal form.
    static TruncatedSeries from_factors(int g, int order, const std::vector<MilnorElement>& factors) {
        TruncatedSeries r(g, order);
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if ((1LL << j) > order) break;
            TruncatedSeries f(g, order);
            f.coef_[std::size_t{1} << j] = factors[j];
            r = r * f;
        }
        return r;
    }

private:
    int g_;
    std::vector<MilnorElement> coef_;
};

/// Multiplicative inverse up to the truncation order.
inline TruncatedSeries series_inverse(const TruncatedSeries& s) {
    TruncatedSeries r(s.generator_count(), s.order());
    for (int n = 1; n <= s.order(); ++n) {
        MilnorElement c = MilnorElement::zero(s.generator_count());
        for (int i = 1; i <= n; ++i) c += s.coefficient(i) * r.coefficient(n - i);
        r.set_coefficient(n, c); // char 2: -c == c
    }
    return r;
}

// --- textual element syntax -------------------------------------------------
//
// Sums of terms: "e^2*x1*x3 + x2 + 1".  A term repeating a generator is
// rejected (inputs must already be reduced).

inline MilnorElement parse_milnor(std::string_view text, int g) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad element syntax: " + why);
    };
    std::vector<MilnorMonomial> monomials;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_nat = [&]() -> long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stol(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (pos == text.size()) fail("empty input");
    bool expect_term = true;
    while (expect_term) {
        // one term: factors joined by '*'
        MilnorMonomial mono;
        bool saw_zero = false, saw_any = false;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos >= text.size()) fail("dangling operator");
            char c = text[pos];
            if (c == 'e') {
                ++pos;
                int k = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    k = static_cast<int>(parse_nat());
                }
                mono.epow += k;
            } else if (c == 'x') {
                ++pos;
                long i = parse_nat();
                if (i < 1 || i > g) fail("generator index out of range");
                std::uint32_t bit = std::uint32_t{1} << (i - 1);
                if (mono.mask & bit) fail("squared generator x" + std::to_string(i));
                mono.mask |= bit;
            } else if (c == '1') {
                ++pos;
            } else if (c == '0') {
                ++pos;
                saw_zero = true;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            saw_any = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_any) fail("empty term");
        if (saw_zero) {
            if (mono.epow != 0 || mono.mask != 0) fail("0 must stand alone in a term");
        } else {
            monomials.push_back(mono);
        }
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+') fail(std::string("unexpected character '") + text[pos] + "'");
            ++pos;
            expect_term = true;
        } else {
            expect_term = false;
        }
    }
    return MilnorElement::from_monomials(g, std::move(monomials));
}

} // namespace altinv
