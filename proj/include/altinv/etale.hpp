#pragma once

// Etale algebras over the concrete fields: products of simple extensions
// given by irreducible polynomials, plus four-dimensional biquadratic blocks
// kept in tensor form. Trace forms are assembled from power sums via
// Newton's identities and diagonalized by congruence.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cycle_types.hpp"
#include "fields.hpp"
#include "witt.hpp"

namespace altinv {

struct SymmetricMatrix {
    Field field;
    int n = 0;
    std::vector<FieldElement> a; // row-major

    const FieldElement& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    FieldElement& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

    static SymmetricMatrix zero(const Field& F, int n) {
        SymmetricMatrix m{F, n, {}};
        m.a.assign(static_cast<std::size_t>(n) * n, F.zero());
        return m;
    }
};

/// Biquadratic quartic algebra L_x (x) L_y in its regular 4-dimensional
/// basis; kept unfactored so it works whether or not the tensor splits.
struct BiquadraticBlock {
    FieldElement x, y;
};

using EtaleComponent = std::variant<Polynomial, BiquadraticBlock>;

struct EtaleAlgebra {
    Field field;
    std::vector<EtaleComponent> components;

    int dimension() const {
        int d = 0;
        for (const auto& comp : components) {
            if (std::holds_alternative<Polynomial>(comp))
                d += std::get<Polynomial>(comp).degree();
            else
                d += 4;
        }
        return d;
    }

    /// Product of simple extensions; every factor must be monic, irreducible
    /// and separable over the field.
    static EtaleAlgebra from_factors(Field F, std::vector<Polynomial> factors) {
        EtaleAlgebra L{std::move(F), {}};
        for (auto& f : factors) L.append_factor(std::move(f));
        return L;
    }

    void append_factor(Polynomial f) {
        if (!poly_is_monic(field, f))
            throw std::invalid_argument("etale factor must be monic");
        if (!poly_is_irreducible(field, f))
            throw std::invalid_argument("reducible factor: " + poly_to_string(field, f));
        if (!poly_is_separable(field, f))
            throw std::invalid_argument("inseparable factor: " + poly_to_string(field, f));
        components.push_back(std::move(f));
    }

    void append_biquadratic(FieldElement x, FieldElement y) {
        if (field.is_zero(x) || field.is_zero(y))
            throw std::invalid_argument("biquadratic block with zero parameter");
        components.push_back(BiquadraticBlock{std::move(x), std::move(y)});
    }
};

/// Power sums p_0..p_{count-1} of the roots of a monic polynomial, from its
/// coefficients by the Newton recurrences.
inline std::vector<FieldElement> power_sums(const Field& F, const Polynomial& f, int count) {
    if (!poly_is_monic(F, f)) throw std::invalid_argument("power_sums: polynomial must be monic");
    const int d = f.degree();
    std::vector<FieldElement> p(count, F.zero());
    if (count > 0) p[0] = F.from_int(d);
    for (int j = 1; j < count; ++j) {
        FieldElement s = F.zero();
        if (j <= d) {
            s = F.scale(j, f.c[d - j]);
            for (int i = 1; i < j; ++i) s = F.add(s, F.mul(f.c[d - i], p[j - i]));
        } else {
            for (int i = 1; i <= d; ++i) s = F.add(s, F.mul(f.c[d - i], p[j - i]));
        }
        p[j] = F.neg(s);
    }
    return p;
}

/// Block-diagonal Gram matrix of the trace form: block (i,j) entries are
/// Tr(b^{i+j}) for a simple factor, and the tensor product of the two
/// quadratic Grams for a biquadratic block.
inline SymmetricMatrix trace_gram(const EtaleAlgebra& L) {
    const Field& F = L.field;
    SymmetricMatrix M = SymmetricMatrix::zero(F, L.dimension());
    int off = 0;
    for (const auto& comp : L.components) {
        if (std::holds_alternative<Polynomial>(comp)) {
            const Polynomial& f = std::get<Polynomial>(comp);
            const int d = f.degree();
            auto p = power_sums(F, f, 2 * d - 1 > 0 ? 2 * d - 1 : 1);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) M.at(off + i, off + j) = p[i + j];
            off += d;
        } else {
            const auto& b = std::get<BiquadraticBlock>(comp);
            const FieldElement two = F.from_int(2);
            const FieldElement gx[2] = {two, F.mul(two, b.x)};
            const FieldElement gy[2] = {two, F.mul(two, b.y)};
            // tensor of the two quadratic Grams on the basis 1, sy, sx, sx*sy
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) M.at(off + 2 * i + j, off + 2 * i + j) = F.mul(gx[i], gy[j]);
            off += 4;
        }
    }
    return M;
}

/// Congruence diagonalization D = P^t M P of a nondegenerate symmetric
/// matrix (characteristic != 2).
inline DiagonalForm diagonalize_symmetric(const SymmetricMatrix& M0) {
    const Field& F = M0.field;
    SymmetricMatrix M = M0;
    const int n = M.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (!(M.at(i, j) == M.at(j, i)))
                throw std::invalid_argument("matrix is not symmetric");
    std::vector<FieldElement> diag;
    for (int i = 0; i < n; ++i) {
        if (F.is_zero(M.at(i, i))) {
            int j = -1;
            for (int k = i + 1; k < n; ++k)
                if (!F.is_zero(M.at(k, k))) { j = k; break; }
            if (j >= 0) {
                for (int k = 0; k < n; ++k) std::swap(M.at(i, k), M.at(j, k));
                for (int k = 0; k < n; ++k) std::swap(M.at(k, i), M.at(k, j));
            } else {
                for (int k = i + 1; k < n; ++k)
                    if (!F.is_zero(M.at(i, k))) { j = k; break; }
                if (j < 0) throw std::invalid_argument("degenerate matrix");
                // add row/column j into i; the new diagonal entry is 2*M[i][j]
                for (int k = 0; k < n; ++k) M.at(i, k) = F.add(M.at(i, k), M.at(j, k));
                for (int k = 0; k < n; ++k) M.at(k, i) = F.add(M.at(k, i), M.at(k, j));
            }
        }
        const FieldElement pivot = M.at(i, i);
        if (F.is_zero(pivot)) throw std::invalid_argument("degenerate matrix");
        for (int r = i + 1; r < n; ++r) {
            FieldElement factor = F.div(M.at(r, i), pivot);
            if (F.is_zero(factor)) continue;
            for (int k = 0; k < n; ++k) M.at(r, k) = F.sub(M.at(r, k), F.mul(factor, M.at(i, k)));
            for (int k = 0; k < n; ++k) M.at(k, r) = F.sub(M.at(k, r), F.mul(factor, M.at(k, i)));
        }
        diag.push_back(pivot);
    }
    return DiagonalForm::make(F, std::move(diag));
}

/// Diagonalized trace form; blocks are processed in order, so appending a
/// rank-1 factor appends a single entry.
inline DiagonalForm trace_form(const EtaleAlgebra& L) {
    const Field& F = L.field;
    std::vector<FieldElement> entries;
    int off = 0;
    SymmetricMatrix M = trace_gram(L);
    for (const auto& comp : L.components) {
        int d = std::holds_alternative<Polynomial>(comp) ? std::get<Polynomial>(comp).degree() : 4;
        SymmetricMatrix block = SymmetricMatrix::zero(F, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) block.at(i, j) = M.at(off + i, off + j);
        DiagonalForm part = diagonalize_symmetric(block);
        entries.insert(entries.end(), part.entries.begin(), part.entries.end());
        off += d;
    }
    return DiagonalForm::make(F, std::move(entries));
}

/// c copies of the base field plus one biquadratic quartic per (x,y) pair;
/// the trace form equals c<1> + sum of the 2-fold Pfister forms <1,x,y,xy>
/// in the Grothendieck-Witt ring.
inline EtaleAlgebra type_T_algebra(const Field& F, int c,
                                   const std::vector<std::pair<FieldElement, FieldElement>>& pairs) {
    if (c < 0) throw std::invalid_argument("negative number of trivial factors");
    EtaleAlgebra L{F, {}};
    for (int i = 0; i < c; ++i) L.append_factor(poly_x(F));
    for (const auto& [x, y] : pairs) L.append_biquadratic(x, y);
    return L;
}

/// The quadratic algebra F[X]/(X^2 - x) presented with irreducible factors:
/// one quadratic factor when x is a non-square, two linear factors otherwise.
inline EtaleAlgebra quadratic_algebra(const Field& F, const FieldElement& x) {
    if (F.is_zero(x)) throw std::invalid_argument("quadratic algebra needs a nonzero parameter");
    if (!F.is_finite())
        throw std::invalid_argument("quadratic_algebra is implemented over finite fields");
    EtaleAlgebra L{F, {}};
    if (!F.is_square(x)) {
        Polynomial f{{F.neg(x), F.zero(), F.one()}};
        L.append_factor(std::move(f));
    } else {
        FieldElement r = F.sqrt(x);
        L.append_factor(Polynomial{{F.neg(r), F.one()}});
        L.append_factor(Polynomial{{r, F.one()}});
    }
    return L;
}

// --- torsor enumeration -----------------------------------------------------

struct TorsorClass {
    CycleType type;
    int split_count; // 1 or 2
};

/// Torsor classes of the alternating group over F_p, identified with even
/// cycle types; split_count is 2 when the class splits in two.
inline std::vector<TorsorClass> enumerate_An_torsors(std::int64_t p, int n) {
    if (!detail::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (n < 1 || n > 14) throw std::invalid_argument("n out of the supported range [1,14]");
    std::vector<TorsorClass> out;
    for (const auto& ct : partitions_of(n))
        if (ct.is_even()) out.push_back(TorsorClass{ct, ct.splits() ? 2 : 1});
    return out;
}

/// Etale algebra with one deterministic irreducible factor of degree d per
/// part d of the cycle type.
inline EtaleAlgebra algebra_from_cycle_type(std::int64_t p, const CycleType& ct) {
    Field F = Field::finite(p);
    std::vector<Polynomial> factors;
    factors.reserve(ct.parts.size());
    for (int d : ct.parts) factors.push_back(find_irreducible(p, d));
    return EtaleAlgebra::from_factors(F, std::move(factors));
}

// --- polynomial discriminant (test oracle) --------------------------------

inline FieldElement poly_resultant(const Field& F, Polynomial f, Polynomial g) {
    FieldElement res = F.one();
    while (true) {
        if (g.is_zero()) return f.degree() == 0 ? res : F.zero();
        if (g.degree() == 0) return F.mul(res, F.pow(g.c[0], BigInt(f.degree())));
        Polynomial r = poly_mod(F, f, g);
        int dr = r.is_zero() ? 0 : r.degree();
        FieldElement lead = F.pow(g.c.back(), BigInt(f.degree() - dr));
        if ((f.degree() * g.degree()) % 2) lead = F.neg(lead);
        res = F.mul(res, lead);
        f = std::move(g);
        g = std::move(r);
    }
}

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') for monic f.
inline FieldElement poly_discriminant(const Field& F, const Polynomial& f) {
    if (!poly_is_monic(F, f)) throw std::invalid_argument("discriminant of a non-monic polynomial");
    FieldElement r = poly_resultant(F, f, poly_derivative(F, f));
    int d = f.degree();
    if ((static_cast<std::int64_t>(d) * (d - 1) / 2) % 2) r = F.neg(r);
    return r;
}

} // namespace altinv
