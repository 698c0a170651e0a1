#pragma once

// Diagonal quadratic forms over the concrete fields, canonical Witt and
// Grothendieck-Witt classes, lambda-operations, Pfister forms, the filtration
// by the even-rank ideal, and divisibility by powers of (1+t).

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fields.hpp"
#include "milnor.hpp"

namespace altinv {

struct DiagonalForm {
    Field field;
    std::vector<FieldElement> entries; // all nonzero

    int rank() const { return static_cast<int>(entries.size()); }

    static DiagonalForm make(Field F, std::vector<FieldElement> entries) {
        for (const auto& a : entries)
            if (F.is_zero(a)) throw std::invalid_argument("diagonal form with zero entry");
        return DiagonalForm{std::move(F), std::move(entries)};
    }

    friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;
};

inline std::string form_to_string(const DiagonalForm& q) {
    std::string s = "<";
    for (std::size_t i = 0; i < q.entries.size(); ++i) {
        if (i) s += ",";
        s += q.field.to_string(q.entries[i]);
    }
    return s + ">";
}

/// Parses "<1,-1,u>"; entries use the field's element syntax.
inline DiagonalForm parse_form(const Field& F, std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw std::invalid_argument("form literal must be <...>");
    text = text.substr(1, text.size() - 2);
    std::vector<FieldElement> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = (comma == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, comma - pos);
        if (!tok.empty()) entries.push_back(F.parse_element(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return DiagonalForm::make(F, std::move(entries));
}

/// Square class of the product of the entries. Only triviality of this class
/// is consumed elsewhere.
inline SquareClass disc(const DiagonalForm& q) {
    SquareClass d{false};
    for (const auto& a : q.entries) d = d * q.field.square_class(a);
    return d;
}

namespace detail {

inline std::int64_t checked_int64(const BigInt& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value exceeds the supported exact range");
    return static_cast<std::int64_t>(n);
}

} // namespace detail

/// Canonical Witt class. The canonical datum depends on the field kind:
/// rank parity (quadratically closed), signature (real closed), or the
/// anisotropic representative of rank <= 2 as square-class bits (finite).
class WittClass {
public:
    explicit WittClass(Field F) : field_(std::move(F)) {}

    static WittClass zero(const Field& F) { return WittClass(F); }

    static WittClass of(const DiagonalForm& q) {
        WittClass w(q.field);
        switch (q.field.kind()) {
            case FieldKind::QuadraticallyClosed:
                w.qc_parity_ = q.rank() % 2;
                break;
            case FieldKind::RealClosed:
                for (const auto& a : q.entries) w.signature_ += (a.rat > 0) ? 1 : -1;
                break;
            case FieldKind::Finite: {
                std::vector<bool> cls;
                cls.reserve(q.entries.size());
                for (const auto& a : q.entries) cls.push_back(!q.field.is_square(a));
                w.aniso_ = canonicalize(q.field, std::move(cls));
                break;
            }
        }
        return w;
    }

    const Field& field() const { return field_; }

    bool is_zero() const {
        return qc_parity_ == 0 && signature_ == 0 && aniso_.empty();
    }

    int rank_parity() const {
        switch (field_.kind()) {
            case FieldKind::QuadraticallyClosed: return qc_parity_;
            case FieldKind::RealClosed: return static_cast<int>(((signature_ % 2) + 2) % 2);
            case FieldKind::Finite: return static_cast<int>(aniso_.size() % 2);
        }
        return 0;
    }

    std::int64_t signature() const {
        if (field_.kind() != FieldKind::RealClosed)
            throw std::invalid_argument("signature requires the real closed field");
        return signature_;
    }

    /// Entries of the canonical anisotropic representative (finite fields):
    /// false = trivial class, true = the non-square class.
    const std::vector<bool>& anisotropic_entries() const { return aniso_; }

    friend WittClass operator+(const WittClass& a, const WittClass& b) {
        require_same(a, b);
        WittClass r(a.field_);
        switch (a.field_.kind()) {
            case FieldKind::QuadraticallyClosed: r.qc_parity_ = a.qc_parity_ ^ b.qc_parity_; break;
            case FieldKind::RealClosed: r.signature_ = a.signature_ + b.signature_; break;
            case FieldKind::Finite: {
                std::vector<bool> cls(a.aniso_);
                cls.insert(cls.end(), b.aniso_.begin(), b.aniso_.end());
                r.aniso_ = canonicalize(a.field_, std::move(cls));
                break;
            }
        }
        return r;
    }

    WittClass operator-() const {
        WittClass r(field_);
        switch (field_.kind()) {
            case FieldKind::QuadraticallyClosed: r.qc_parity_ = qc_parity_; break;
            case FieldKind::RealClosed: r.signature_ = -signature_; break;
            case FieldKind::Finite: {
                const bool eneg = !field_.minus_one_is_square();
                std::vector<bool> cls;
                for (bool v : aniso_) cls.push_back(v != eneg);
                r.aniso_ = canonicalize(field_, std::move(cls));
                break;
            }
        }
        return r;
    }

    friend WittClass operator-(const WittClass& a, const WittClass& b) { return a + (-b); }

    friend WittClass operator*(const WittClass& a, const WittClass& b) {
        require_same(a, b);
        WittClass r(a.field_);
        switch (a.field_.kind()) {
            case FieldKind::QuadraticallyClosed: r.qc_parity_ = a.qc_parity_ & b.qc_parity_; break;
            case FieldKind::RealClosed: r.signature_ = a.signature_ * b.signature_; break;
            case FieldKind::Finite: {
                std::vector<bool> cls;
                for (bool x : a.aniso_)
                    for (bool y : b.aniso_) cls.push_back(x != y);
                r.aniso_ = canonicalize(a.field_, std::move(cls));
                break;
            }
        }
        return r;
    }

    WittClass scaled(const BigInt& n) const {
        if (n < 0) return (-*this).scaled(-n);
        WittClass r(field_);
        switch (field_.kind()) {
            case FieldKind::QuadraticallyClosed:
                r.qc_parity_ = qc_parity_ & static_cast<int>(n % 2);
                break;
            case FieldKind::RealClosed:
                r.signature_ = detail::checked_int64(n * signature_);
                break;
            case FieldKind::Finite: {
                // the additive group has exponent dividing 4
                int reps = static_cast<int>(n % 4);
                for (int i = 0; i < reps; ++i) r = r + *this;
                break;
            }
        }
        return r;
    }

    friend bool operator==(const WittClass&, const WittClass&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        switch (field_.kind()) {
            case FieldKind::QuadraticallyClosed: return "<1>";
            case FieldKind::RealClosed: return "sig(" + std::to_string(signature_) + ")";
            case FieldKind::Finite: {
                std::string s = "<";
                for (std::size_t i = 0; i < aniso_.size(); ++i) {
                    if (i) s += ",";
                    s += aniso_[i] ? "u" : "1";
                }
                return s + ">";
            }
        }
        return "";
    }

private:
    Field field_;
    int qc_parity_ = 0;
    std::int64_t signature_ = 0;
    std::vector<bool> aniso_;

    static void require_same(const WittClass& a, const WittClass& b) {
        if (!(a.field_ == b.field_)) throw std::invalid_argument("classes over different fields");
    }

    // Splits off hyperbolic planes until the anisotropic kernel remains.
    // Over a finite field every rank-3 subform is isotropic, so <a,b,c>
    // reduces to a hyperbolic plane plus <-abc>; the rank <= 2 remainder is
    // classified by its discriminant.
    static std::vector<bool> canonicalize(const Field& F, std::vector<bool> cls) {
        const bool eneg = !F.minus_one_is_square(); // class of -1
        while (cls.size() >= 3) {
            bool a = cls[cls.size() - 1] != cls[cls.size() - 2];
            a = (a != cls[cls.size() - 3]);
            a = (a != eneg); // class of -abc
            cls.resize(cls.size() - 3);
            cls.push_back(a);
        }
        if (cls.size() == 2) {
            bool d = cls[0] != cls[1]; // disc
            // hyperbolic iff -ab is a square
            if ((d != eneg) == false) return {};
            // anisotropic plane, unique up to isometry given its disc
            return eneg ? std::vector<bool>{false, false} : std::vector<bool>{false, true};
        }
        return cls;
    }
};

inline WittClass witt_class(const DiagonalForm& q) { return WittClass::of(q); }

/// Element of the Grothendieck-Witt ring, stored through the cartesian
/// square as (Witt class, exact rank) with rank matching the class parity.
struct GWClass {
    WittClass witt;
    std::int64_t rank = 0;

    GWClass(WittClass w, std::int64_t r) : witt(std::move(w)), rank(r) {
        if (((r % 2) + 2) % 2 != witt.rank_parity())
            throw std::invalid_argument("rank parity does not match the Witt class");
    }

    static GWClass zero(const Field& F) { return GWClass(WittClass::zero(F), 0); }

    static GWClass one(const Field& F) {
        return of_form(DiagonalForm::make(F, {F.one()}));
    }

    static GWClass of_form(const DiagonalForm& q) {
        return GWClass(WittClass::of(q), q.rank());
    }

    static GWClass from_int(const Field& F, const BigInt& n) {
        return one(F).scaled(n);
    }

    const Field& field() const { return witt.field(); }

    bool is_zero() const { return rank == 0 && witt.is_zero(); }

    friend GWClass operator+(const GWClass& a, const GWClass& b) {
        return GWClass(a.witt + b.witt, a.rank + b.rank);
    }
    friend GWClass operator-(const GWClass& a, const GWClass& b) {
        return GWClass(a.witt - b.witt, a.rank - b.rank);
    }
    GWClass operator-() const { return GWClass(-witt, -rank); }
    friend GWClass operator*(const GWClass& a, const GWClass& b) {
        return GWClass(a.witt * b.witt, a.rank * b.rank);
    }

    GWClass scaled(const BigInt& n) const {
        return GWClass(witt.scaled(n), detail::checked_int64(n * rank));
    }

    friend bool operator==(const GWClass&, const GWClass&) = default;

    std::string to_string() const {
        return "{rank=" + std::to_string(rank) + ", witt=" + witt.to_string() + "}";
    }
};

/// Polynomial in t with Grothendieck-Witt coefficients.
struct GWPolynomial {
    Field field;
    std::vector<GWClass> c; // c[i] is the coefficient of t^i

    explicit GWPolynomial(Field F) : field(std::move(F)) {}

    int degree() const { return static_cast<int>(c.size()) - 1; }

    GWClass coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return GWClass::zero(field);
        return c[i];
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    static GWPolynomial constant(const Field& F, GWClass a) {
        GWPolynomial f(F);
        f.c.push_back(std::move(a));
        f.trim();
        return f;
    }

    static GWPolynomial one_plus_t(const Field& F) {
        GWPolynomial f(F);
        f.c = {GWClass::one(F), GWClass::one(F)};
        return f;
    }

    friend GWPolynomial operator+(const GWPolynomial& a, const GWPolynomial& b) {
        GWPolynomial r(a.field);
        std::size_t n = std::max(a.c.size(), b.c.size());
        for (std::size_t i = 0; i < n; ++i)
            r.c.push_back(a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i)));
        r.trim();
        return r;
    }

    friend GWPolynomial operator*(const GWPolynomial& a, const GWPolynomial& b) {
        GWPolynomial r(a.field);
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, GWClass::zero(a.field));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    GWPolynomial pow(int n) const {
        GWPolynomial r = constant(field, GWClass::one(field));
        GWPolynomial base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    friend bool operator==(const GWPolynomial& a, const GWPolynomial& b) {
        if (!(a.field == b.field)) return false;
        int n = std::max(a.degree(), b.degree());
        for (int i = 0; i <= n; ++i)
            if (!(a.coefficient(i) == b.coefficient(i))) return false;
        return true;
    }
};

/// lambda_t(q) = prod_i (1 + <alpha_i> t); coefficient i is the class of the
/// i-th exterior power, the sum over i-subsets of entry products.
inline GWPolynomial lambda_poly(const DiagonalForm& q) {
    GWPolynomial f = GWPolynomial::constant(q.field, GWClass::one(q.field));
    for (const auto& a : q.entries) {
        GWPolynomial lin(q.field);
        lin.c = {GWClass::one(q.field), GWClass::of_form(DiagonalForm::make(q.field, {a}))};
        f = f * lin;
    }
    return f;
}

inline GWClass lambda_power(const DiagonalForm& q, int i) {
    if (i < 0) throw std::invalid_argument("negative exterior power");
    return lambda_poly(q).coefficient(i);
}

/// The 2-fold Pfister form <1,x,y,xy>.
inline DiagonalForm pfister2(const Field& F, const FieldElement& x, const FieldElement& y) {
    if (F.is_zero(x) || F.is_zero(y)) throw std::invalid_argument("pfister2: zero slot");
    return DiagonalForm::make(F, {F.one(), x, y, F.mul(x, y)});
}

/// Position in the filtration by powers of the even-rank ideal; nullopt means
/// infinity, which happens exactly for the zero class.
inline std::optional<int> filtration(const WittClass& w) {
    if (w.is_zero()) return std::nullopt;
    switch (w.field().kind()) {
        case FieldKind::QuadraticallyClosed:
            return 0; // the only nonzero class has odd rank
        case FieldKind::RealClosed: {
            std::int64_t s = w.signature();
            int v = 0;
            while (s % 2 == 0) {
                s /= 2;
                ++v;
            }
            return v;
        }
        case FieldKind::Finite:
            return w.rank_parity() == 1 ? 0 : 1; // the square of the even ideal vanishes
    }
    return 0;
}

/// (1+t)^N divides f iff all divided derivatives of order < N vanish at
/// t = -1; this avoids ring division, which is unavailable with zero
/// divisors in the coefficients.
inline bool divisible_by_one_plus_t(const GWPolynomial& f, int N) {
    for (int j = 0; j < N; ++j) {
        GWClass s = GWClass::zero(f.field);
        for (int i = j; i <= f.degree(); ++i) {
            BigInt coef = binomial(i, j);
            if ((i - j) % 2) coef = -coef;
            s = s + f.coefficient(i).scaled(coef);
        }
        if (!s.is_zero()) return false;
    }
    return true;
}

/// Total SW class of a diagonal form, computed in the universal model M(1):
/// the non-square class maps to x1 over a finite field and to e over the real
/// closed field (where (-1) is the non-square). No field-specific relations
/// beyond square classes are imposed.
inline SWClass sw_total_of_form(const DiagonalForm& q) {
    const int g = 1;
    std::vector<MilnorElement> alphas;
    for (const auto& a : q.entries) {
        SquareClass c = q.field.square_class(a);
        if (!c.nontrivial)
            alphas.push_back(MilnorElement::zero(g));
        else if (q.field.kind() == FieldKind::RealClosed)
            alphas.push_back(MilnorElement::e(g));
        else
            alphas.push_back(MilnorElement::generator(g, 1));
    }
    if (alphas.empty()) return SWClass{MilnorElement::one(g)};
    return sw_total(alphas);
}

} // namespace altinv
