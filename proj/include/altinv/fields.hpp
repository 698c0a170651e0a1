#pragma once

// Concrete base fields of characteristic != 2: a quadratically closed field,
// a real closed field (exact rational arithmetic, invariants depend only on
// signs), and finite fields F_{p^k} presented as F_p[T]/(modulus) with a
// deterministic irreducible modulus.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyadic.hpp"

namespace altinv {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { QuadraticallyClosed, RealClosed, Finite };

/// Element of a concrete field. Exactly one representation is active,
/// matching the field's kind: `rat` for the rational-backed fields, `ff`
/// (coefficients of 1, T, ..., T^{k-1}, each in [0,p)) for finite fields.
struct FieldElement {
    Rational rat = 0;
    std::vector<std::int64_t> ff;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Canonical square class: trivial or the fixed non-square class. For the
/// real closed field "nontrivial" means negative; for finite fields it means
/// the class of the least non-square u.
struct SquareClass {
    bool nontrivial = false;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    SquareClass operator*(SquareClass o) const { return SquareClass{nontrivial != o.nontrivial}; }
};

namespace detail {

inline bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace detail

class Field {
public:
    static Field quadratically_closed() { return Field(FieldKind::QuadraticallyClosed); }
    static Field real_closed() { return Field(FieldKind::RealClosed); }

    static Field finite(std::int64_t p, int k = 1);

    /// Accepts "qc", "real", "f:p" and "f:p^k".
    static Field parse(std::string_view spec);

    FieldKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FieldKind::Finite; }

    std::int64_t prime() const { return p_; }
    int extension_degree() const { return k_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    /// Number of elements (finite fields only).
    std::int64_t order() const {
        require_finite();
        std::int64_t q = 1;
        for (int i = 0; i < k_; ++i) q *= p_;
        return q;
    }

    std::string spec() const {
        switch (kind_) {
            case FieldKind::QuadraticallyClosed: return "qc";
            case FieldKind::RealClosed: return "real";
            case FieldKind::Finite:
                return k_ == 1 ? "f:" + std::to_string(p_)
                               : "f:" + std::to_string(p_) + "^" + std::to_string(k_);
        }
        return "";
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

    // --- element construction -----------------------------------------

    FieldElement zero() const { return from_int(0); }
    FieldElement one() const { return from_int(1); }

    FieldElement from_int(std::int64_t n) const {
        FieldElement x;
        if (is_finite()) {
            x.ff.assign(k_, 0);
            x.ff[0] = mod_p(n);
        } else {
            x.rat = n;
        }
        return x;
    }

    FieldElement from_rational(Rational r) const {
        if (is_finite()) throw std::invalid_argument("rational literal over a finite field");
        FieldElement x;
        x.rat = std::move(r);
        return x;
    }

    FieldElement from_coefficients(std::vector<std::int64_t> c) const {
        require_finite();
        c.resize(k_, 0);
        for (auto& v : c) v = mod_p(v);
        FieldElement x;
        x.ff = std::move(c);
        return x;
    }

    /// Enumerates the elements of a finite field: index i in [0, order())
    /// maps to the base-p digit vector of i.
    FieldElement element_by_index(std::int64_t i) const {
        require_finite();
        FieldElement x;
        x.ff.assign(k_, 0);
        for (int j = 0; j < k_; ++j) {
            x.ff[j] = i % p_;
            i /= p_;
        }
        return x;
    }

    // --- arithmetic ----------------------------------------------------

    bool is_zero(const FieldElement& a) const {
        if (is_finite()) {
            for (auto v : a.ff)
                if (v) return false;
            return true;
        }
        return a.rat == 0;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        FieldElement r;
        if (is_finite()) {
            r.ff.resize(k_);
            for (int i = 0; i < k_; ++i) r.ff[i] = mod_p(a.ff[i] + b.ff[i]);
        } else {
            r.rat = a.rat + b.rat;
        }
        return r;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

    FieldElement neg(const FieldElement& a) const {
        FieldElement r;
        if (is_finite()) {
            r.ff.resize(k_);
            for (int i = 0; i < k_; ++i) r.ff[i] = mod_p(-a.ff[i]);
        } else {
            r.rat = -a.rat;
        }
        return r;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        FieldElement r;
        if (is_finite()) {
            std::vector<std::int64_t> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i) {
                if (!a.ff[i]) continue;
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + a.ff[i] * b.ff[j]) % p_;
            }
            reduce_mod_modulus(prod);
            prod.resize(k_);
            r.ff = std::move(prod);
        } else {
            r.rat = a.rat * b.rat;
        }
        return r;
    }

    FieldElement scale(std::int64_t n, const FieldElement& a) const { return mul(from_int(n), a); }

    FieldElement pow(FieldElement base, BigInt exp) const {
        if (exp < 0) throw std::invalid_argument("negative exponent");
        FieldElement r = one();
        while (exp > 0) {
            if ((exp & 1) != 0) r = mul(r, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return r;
    }

    FieldElement inv(const FieldElement& a) const {
        if (is_zero(a)) throw std::invalid_argument("division by zero");
        if (is_finite()) return pow(a, BigInt(order()) - 2);
        FieldElement r;
        r.rat = 1 / a.rat;
        return r;
    }

    FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

    // --- square classes --------------------------------------------------

    bool is_square(const FieldElement& a) const {
        if (is_zero(a)) throw std::invalid_argument("square class of zero");
        switch (kind_) {
            case FieldKind::QuadraticallyClosed: return true;
            case FieldKind::RealClosed: return a.rat > 0;
            case FieldKind::Finite: {
                FieldElement t = pow(a, (BigInt(order()) - 1) / 2);
                return t == one();
            }
        }
        return true;
    }

    SquareClass square_class(const FieldElement& a) const { return SquareClass{!is_square(a)}; }

    /// Least non-square in the fixed enumeration order (finite fields), or
    /// -1 over the real closed field.
    FieldElement canonical_nonsquare() const {
        switch (kind_) {
            case FieldKind::QuadraticallyClosed:
                throw std::invalid_argument("no non-square in a quadratically closed field");
            case FieldKind::RealClosed: return from_int(-1);
            case FieldKind::Finite:
                for (std::int64_t i = 1; i < order(); ++i) {
                    FieldElement x = element_by_index(i);
                    if (!is_square(x)) return x;
                }
                throw std::logic_error("finite field without non-squares");
        }
        throw std::logic_error("unreachable");
    }

    FieldElement square_class_representative(SquareClass c) const {
        return c.nontrivial ? canonical_nonsquare() : one();
    }

    bool minus_one_is_square() const { return is_square(from_int(-1)); }

    /// First square root in enumeration order; input must be a square.
    FieldElement sqrt(const FieldElement& a) const {
        if (kind_ == FieldKind::RealClosed || kind_ == FieldKind::QuadraticallyClosed) {
            throw std::invalid_argument("sqrt is only enumerated over finite fields");
        }
        for (std::int64_t i = 0; i < order(); ++i) {
            FieldElement x = element_by_index(i);
            if (mul(x, x) == a) return x;
        }
        throw std::invalid_argument("sqrt: element is not a square");
    }

    // --- text ------------------------------------------------------------

    std::string to_string(const FieldElement& a) const {
        if (!is_finite()) {
            std::string s = a.rat.str();
            return s;
        }
        std::string s;
        for (int i = k_ - 1; i >= 0; --i) {
            if (!a.ff[i]) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(a.ff[i]);
            } else {
                if (a.ff[i] != 1) s += std::to_string(a.ff[i]) + "*";
                s += (i == 1) ? "T" : "T^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    /// Parses what to_string prints, plus the literal "u" (canonical
    /// non-square) and "-u".
    FieldElement parse_element(std::string_view text) const;

private:
    FieldKind kind_;
    std::int64_t p_ = 0;
    int k_ = 0;
    std::vector<std::int64_t> modulus_; // monic, coefficients of 1..T^k, size k+1

    explicit Field(FieldKind kind) : kind_(kind) {}

    void require_finite() const {
        if (!is_finite()) throw std::invalid_argument("operation requires a finite field");
    }

    std::int64_t mod_p(std::int64_t v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }

    void reduce_mod_modulus(std::vector<std::int64_t>& c) const {
        // modulus_ is monic of degree k_
        for (int d = static_cast<int>(c.size()) - 1; d >= k_; --d) {
            std::int64_t lead = c[d];
            if (!lead) continue;
            c[d] = 0;
            for (int i = 0; i < k_; ++i)
                c[d - k_ + i] = mod_p(c[d - k_ + i] - lead * modulus_[i]);
        }
        c.resize(k_);
    }
};

// --- polynomials over a field -------------------------------------------

/// Dense polynomial with coefficients in a concrete field; coefficient i of
/// X^i, trailing zeros trimmed.
struct Polynomial {
    std::vector<FieldElement> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

inline Polynomial poly_trim(const Field& F, Polynomial f) {
    while (!f.c.empty() && F.is_zero(f.c.back())) f.c.pop_back();
    return f;
}

inline Polynomial poly_from_ints(const Field& F, const std::vector<std::int64_t>& v) {
    Polynomial f;
    for (auto n : v) f.c.push_back(F.from_int(n));
    return poly_trim(F, f);
}

inline Polynomial poly_x(const Field& F) { return Polynomial{{F.zero(), F.one()}}; }

inline bool poly_is_monic(const Field& F, const Polynomial& f) {
    return !f.c.empty() && f.c.back() == F.one();
}

inline Polynomial poly_add(const Field& F, const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
    return poly_trim(F, r);
}

inline Polynomial poly_sub(const Field& F, const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
    return poly_trim(F, r);
}

inline Polynomial poly_mul(const Field& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    Polynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    return poly_trim(F, r);
}

inline Polynomial poly_mod(const Field& F, Polynomial a, const Polynomial& m) {
    if (m.is_zero()) throw std::invalid_argument("polynomial modulus is zero");
    FieldElement lead_inv = F.inv(m.c.back());
    while (a.degree() >= m.degree() && !a.is_zero()) {
        FieldElement q = F.mul(a.c.back(), lead_inv);
        int shift = a.degree() - m.degree();
        for (int i = 0; i <= m.degree(); ++i)
            a.c[i + shift] = F.sub(a.c[i + shift], F.mul(q, m.c[i]));
        a = poly_trim(F, a);
    }
    return a;
}

inline Polynomial poly_monic(const Field& F, Polynomial f) {
    if (f.is_zero()) return f;
    FieldElement s = F.inv(f.c.back());
    for (auto& x : f.c) x = F.mul(x, s);
    return f;
}

inline Polynomial poly_gcd(const Field& F, Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

inline Polynomial poly_powmod(const Field& F, Polynomial base, BigInt exp, const Polynomial& m) {
    Polynomial r{{F.one()}};
    base = poly_mod(F, base, m);
    while (exp > 0) {
        if ((exp & 1) != 0) r = poly_mod(F, poly_mul(F, r, base), m);
        base = poly_mod(F, poly_mul(F, base, base), m);
        exp >>= 1;
    }
    return r;
}

inline Polynomial poly_derivative(const Field& F, const Polynomial& f) {
    Polynomial r;
    for (int i = 1; i <= f.degree(); ++i) r.c.push_back(F.scale(i, f.c[i]));
    return poly_trim(F, r);
}

inline bool poly_is_separable(const Field& F, const Polynomial& f) {
    Polynomial g = poly_gcd(F, f, poly_derivative(F, f));
    return g.degree() == 0;
}

/// Irreducibility over the concrete field. Over a finite field of order q
/// this is the Frobenius criterion: X^{q^d} = X mod f, and X^{q^{d/r}} - X is
/// prime to f for every prime divisor r of d.
inline bool poly_is_irreducible(const Field& F, const Polynomial& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    switch (F.kind()) {
        case FieldKind::QuadraticallyClosed:
            return false; // every polynomial of degree >= 2 splits
        case FieldKind::RealClosed: {
            if (d != 2) return false;
            // monicize: X^2 + bX + c irreducible iff b^2 - 4c < 0
            FieldElement lead_inv = F.inv(f.c.back());
            FieldElement b = F.mul(f.c[1], lead_inv), cc = F.mul(f.c[0], lead_inv);
            Rational disc = b.rat * b.rat - 4 * cc.rat;
            return disc < 0;
        }
        case FieldKind::Finite: {
            BigInt q = F.order();
            const Polynomial x = poly_x(F);
            // t_i = X^{q^i} mod f, advanced by one Frobenius power per step
            Polynomial t = poly_powmod(F, x, q, f);
            std::vector<int> prime_divisors;
            int dd = d;
            for (int r = 2; r * r <= dd; ++r)
                while (dd % r == 0) {
                    if (prime_divisors.empty() || prime_divisors.back() != r)
                        prime_divisors.push_back(r);
                    dd /= r;
                }
            if (dd > 1) prime_divisors.push_back(dd);
            Polynomial ti = t;
            for (int i = 1; i <= d; ++i) {
                if (i > 1) ti = poly_powmod(F, ti, q, f);
                bool proper_divisor_step = false;
                for (int r : prime_divisors)
                    if (i == d / r) proper_divisor_step = true;
                if (proper_divisor_step) {
                    Polynomial g = poly_gcd(F, poly_sub(F, ti, x), f);
                    if (g.degree() != 0) return false;
                }
                if (i == d) {
                    if (!poly_sub(F, ti, x).is_zero()) return false;
                }
            }
            return true;
        }
    }
    return false;
}

/// Deterministic monic irreducible of degree d over F_p: coefficient vectors
/// are tried in base-p counter order, so the output is reproducible.
inline Polynomial find_irreducible(std::int64_t p, int d) {
    if (!detail::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    Field F = Field::finite(p, 1);
    for (std::int64_t n = 0;; ++n) {
        std::vector<std::int64_t> coeffs(d + 1, 0);
        std::int64_t v = n;
        for (int i = 0; i < d; ++i) {
            coeffs[i] = v % p;
            v /= p;
        }
        if (v) throw std::logic_error("no irreducible polynomial found"); // cannot happen
        coeffs[d] = 1;
        Polynomial f = poly_from_ints(F, coeffs);
        if (poly_is_irreducible(F, f)) return f;
    }
}

inline Field Field::finite(std::int64_t p, int k) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is excluded");
    if (!detail::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (k < 1 || k > 20) throw std::invalid_argument("extension degree out of range");
    BigInt q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > (BigInt(1) << 31)) throw std::invalid_argument("field too large for exact enumeration");
    Field F(FieldKind::Finite);
    F.p_ = p;
    F.k_ = k;
    if (k == 1) {
        F.modulus_ = {0, 1}; // T
    } else {
        Polynomial m = find_irreducible(p, k);
        F.modulus_.clear();
        for (const auto& c : m.c) F.modulus_.push_back(c.ff.empty() ? 0 : c.ff[0]);
    }
    return F;
}

inline Field Field::parse(std::string_view spec) {
    if (spec == "qc") return quadratically_closed();
    if (spec == "real") return real_closed();
    if (spec.substr(0, 2) == "f:") {
        std::string rest(spec.substr(2));
        std::size_t caret = rest.find('^');
        try {
            if (caret == std::string::npos) return finite(std::stoll(rest));
            return finite(std::stoll(rest.substr(0, caret)),
                          std::stoi(rest.substr(caret + 1)));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field spec: " + std::string(spec));
        }
    }
    throw std::invalid_argument("bad field spec: " + std::string(spec));
}

inline FieldElement Field::parse_element(std::string_view text) const {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty element literal");
    if (text == "u") return canonical_nonsquare();
    if (text == "-u") return neg(canonical_nonsquare());
    if (!is_finite()) {
        std::string s(text);
        std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return from_rational(Rational(BigInt(s)));
            BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return from_rational(Rational(num) / Rational(den));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("bad element literal: " + s);
        }
    }
    // finite field: sum of terms c, c*T^i, T^i, T, each optionally signed
    FieldElement acc = zero();
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::int64_t sign = 1;
        if (text[pos] == '+') { ++pos; }
        else if (text[pos] == '-') { sign = -1; ++pos; }
        else if (!first) throw std::invalid_argument("bad element literal");
        first = false;
        std::int64_t coef = 1;
        bool saw_coef = false;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos > start) {
            coef = std::stoll(std::string(text.substr(start, pos - start)));
            saw_coef = true;
        }
        int tpow = 0;
        if (pos < text.size() && (text[pos] == '*' || text[pos] == 'T')) {
            if (text[pos] == '*') ++pos;
            if (pos >= text.size() || text[pos] != 'T')
                throw std::invalid_argument("bad element literal");
            ++pos;
            tpow = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t s2 = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == s2) throw std::invalid_argument("bad element literal");
                tpow = std::stoi(std::string(text.substr(s2, pos - s2)));
            }
        } else if (!saw_coef) {
            throw std::invalid_argument("bad element literal");
        }
        if (tpow >= k_) throw std::invalid_argument("T-power exceeds extension degree");
        std::vector<std::int64_t> v(k_, 0);
        v[tpow] = sign * coef;
        acc = add(acc, from_coefficients(std::move(v)));
    }
    return acc;
}

// --- polynomial text (variable X) -----------------------------------------

inline std::string poly_to_string(const Field& F, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        if (F.is_zero(f.c[i])) continue;
        if (!s.empty()) s += "+";
        std::string cs = F.to_string(f.c[i]);
        bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (i == 0) {
            s += needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (cs != "1") s += (needs_parens ? "(" + cs + ")" : cs) + "*";
            s += (i == 1) ? "X" : "X^" + std::to_string(i);
        }
    }
    return s;
}

/// Parses "X^2-3", "X^3+u*X+1", "(T+1)*X^2+T" and the like; coefficients use
/// the field's element syntax, parenthesized when they contain +/-.
inline Polynomial parse_polynomial(const Field& F, std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("bad polynomial: " + std::string(text)); };
    std::vector<FieldElement> coeffs;
    auto bump = [&](int i, const FieldElement& v) {
        if (static_cast<int>(coeffs.size()) <= i) coeffs.resize(i + 1, F.zero());
        coeffs[i] = F.add(coeffs[i], v);
    };
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    bool first = true;
    skip_ws();
    if (pos == text.size()) fail();
    while (pos < text.size()) {
        skip_ws();
        std::int64_t sign = 1;
        if (text[pos] == '+') { ++pos; }
        else if (text[pos] == '-') { sign = -1; ++pos; }
        else if (!first) fail();
        first = false;
        skip_ws();
        if (pos >= text.size()) fail();
        // coefficient: parenthesized literal, or a literal running up to '*'/'X'
        FieldElement coef = F.one();
        bool saw_coef = false;
        if (text[pos] == '(') {
            std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) fail();
            coef = F.parse_element(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            saw_coef = true;
        } else if (text[pos] != 'X') {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != '*' && text[pos] != 'X' && text[pos] != '+' &&
                   text[pos] != '-')
                ++pos;
            if (pos == start) fail();
            coef = F.parse_element(text.substr(start, pos - start));
            saw_coef = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
        int xpow = 0;
        if (pos < text.size() && text[pos] == 'X') {
            ++pos;
            xpow = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t s2 = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == s2) fail();
                xpow = std::stoi(std::string(text.substr(s2, pos - s2)));
            }
        } else if (!saw_coef) {
            fail();
        }
        if (sign < 0) coef = F.neg(coef);
        bump(xpow, coef);
        skip_ws();
    }
    Polynomial f{std::move(coeffs)};
    return poly_trim(F, f);
}

} // namespace altinv
