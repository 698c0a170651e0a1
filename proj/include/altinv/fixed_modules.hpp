#pragma once

// Fixed-point computations on both sides of the invariant theory: graded
// fixed submodules of the cohomology model M(r) under linear actions on the
// degree-1 generators, fixed permutation modules with their orbit-sum bases,
// and the symbolic Grothendieck-Witt ring on Pfister symbols with the
// lambda-polynomial expansion of a sum of Pfister forms.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "milnor.hpp"
#include "permutations.hpp"

namespace altinv {

/// Action on M(r) by ring endomorphisms fixing e, given by invertible F2
/// matrices on the span of the generators: gens[k][i] is the bitmask of the
/// image of x_{i+1} under the k-th generator.
struct LinearAction {
    int rank = 0;
    std::vector<std::vector<std::uint32_t>> gens;

    static LinearAction trivial(int r) { return LinearAction{r, {}}; }

    /// x -> y -> x+y -> x on two generators (the 3-cycle action).
    static LinearAction cyclic_three(int r = 2) {
        if (r != 2) throw std::invalid_argument("cyclic_three acts on two generators");
        return LinearAction{2, {{0b10, 0b11}}};
    }

    /// Full GL_2(F2) on two generators: the 3-cycle plus the swap.
    static LinearAction full_s3(int r = 2) {
        if (r != 2) throw std::invalid_argument("full_s3 acts on two generators");
        return LinearAction{2, {{0b10, 0b11}, {0b10, 0b01}}};
    }

    void validate() const {
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != rank)
                throw std::invalid_argument("action matrix has wrong size");
            // invertibility over F2
            std::vector<std::uint32_t> rows(g);
            int pivots = 0;
            for (int col = 0; col < rank; ++col) {
                int p = -1;
                for (int rr = pivots; rr < rank; ++rr)
                    if (rows[rr] >> col & 1) { p = rr; break; }
                if (p < 0) continue;
                std::swap(rows[pivots], rows[p]);
                for (int rr = 0; rr < rank; ++rr)
                    if (rr != pivots && (rows[rr] >> col & 1)) rows[rr] ^= rows[pivots];
                ++pivots;
            }
            if (pivots != rank) throw std::invalid_argument("action matrix is singular");
        }
    }

    /// Substitution images of x_1..x_r for one generator.
    std::vector<MilnorElement> images(std::size_t k) const {
        std::vector<MilnorElement> out;
        for (int i = 0; i < rank; ++i) {
            MilnorElement im = MilnorElement::zero(rank);
            for (int j = 0; j < rank; ++j)
                if (gens[k][i] >> j & 1) im += MilnorElement::generator(rank, j + 1);
            out.push_back(im);
        }
        return out;
    }
};

/// Graded report on a fixed submodule: per-degree F2-dimensions up to the
/// cutoff and minimal homogeneous generators over F2[e].
struct ModuleBasisReport {
    int cutoff = 0;
    std::vector<int> dims;                 // dims[d] = dim of the fixed space in degree d
    std::vector<MilnorElement> generators; // homogeneous, by ascending degree
};

namespace detail {

using BitRow = std::vector<std::uint64_t>;

inline bool bit_get(const BitRow& r, int i) { return r[i >> 6] >> (i & 63) & 1; }
inline void bit_flip(BitRow& r, int i) { r[i >> 6] ^= std::uint64_t{1} << (i & 63); }
inline void bit_xor(BitRow& a, const BitRow& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
inline bool bit_any(const BitRow& r) {
    for (auto w : r)
        if (w) return true;
    return false;
}
inline int bit_lowest(const BitRow& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i]) return static_cast<int>(i * 64) + std::countr_zero(r[i]);
    return -1;
}

/// Reduced row echelon basis, rows sorted by pivot position.
struct EchelonBasis {
    std::vector<BitRow> rows; // each with a distinct pivot (lowest set bit)

    /// Reduces v by the basis; returns the remainder.
    BitRow reduce(BitRow v) const {
        for (const auto& r : rows) {
            int p = bit_lowest(r);
            if (p >= 0 && bit_get(v, p)) bit_xor(v, r);
        }
        return v;
    }

    bool insert(BitRow v) {
        v = reduce(v);
        if (!bit_any(v)) return false;
        for (auto& r : rows)
            if (bit_get(r, bit_lowest(v))) bit_xor(r, v);
        rows.push_back(std::move(v));
        std::sort(rows.begin(), rows.end(),
                  [](const BitRow& a, const BitRow& b) { return bit_lowest(a) < bit_lowest(b); });
        return true;
    }
};

} // namespace detail

/// Solves the graded fixed-point systems of a linear action on M(r) degree
/// by degree, then extracts minimal F2[e]-module generators greedily by
/// degree, reducing modulo e-multiples of the part already generated.
inline ModuleBasisReport fixed_submodule_H(const LinearAction& action, int cutoff) {
    if (cutoff < 0 || cutoff > 12) throw std::invalid_argument("cutoff out of range [0,12]");
    action.validate();
    const int r = action.rank;

    std::vector<std::vector<MilnorElement>> images;
    for (std::size_t k = 0; k < action.gens.size(); ++k) images.push_back(action.images(k));

    ModuleBasisReport report;
    report.cutoff = cutoff;

    // rows of the running generated module, per current degree
    std::vector<detail::BitRow> module_rows_prev; // in the basis of degree d-1
    std::vector<MilnorMonomial> basis_prev;

    for (int d = 0; d <= cutoff; ++d) {
        // monomial basis of degree d
        std::vector<MilnorMonomial> basis;
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask)
            if (std::popcount(mask) <= d) basis.push_back(MilnorMonomial{d - std::popcount(mask), mask});
        std::sort(basis.begin(), basis.end());
        const int B = static_cast<int>(basis.size());
        const std::size_t words = static_cast<std::size_t>((B + 63) / 64);
        auto index_of = [&](const MilnorMonomial& m) {
            return static_cast<int>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
        };
        auto to_row = [&](const MilnorElement& z) {
            detail::BitRow row(words, 0);
            for (const auto& m : z.monomials()) detail::bit_flip(row, index_of(m));
            return row;
        };
        auto to_element = [&](const detail::BitRow& row) {
            std::vector<MilnorMonomial> ms;
            for (int i = 0; i < B; ++i)
                if (detail::bit_get(row, i)) ms.push_back(basis[i]);
            return MilnorElement::from_monomials(r, std::move(ms));
        };

        // constraint rows: coordinates of (g - id) b_m, one block per generator
        std::vector<detail::BitRow> constraint_rows(action.gens.size() * B,
                                                    detail::BitRow(words, 0));
        for (std::size_t k = 0; k < action.gens.size(); ++k) {
            for (int m = 0; m < B; ++m) {
                MilnorElement bm = MilnorElement::from_monomials(r, {basis[m]});
                MilnorElement diff = bm.substitute(images[k]) + bm;
                for (const auto& mono : diff.monomials())
                    detail::bit_flip(constraint_rows[k * B + index_of(mono)], m);
            }
        }
        detail::EchelonBasis sys;
        for (auto& row : constraint_rows) sys.insert(std::move(row));

        // nullspace of the constraint system
        std::vector<int> pivot_cols;
        for (const auto& row : sys.rows) pivot_cols.push_back(detail::bit_lowest(row));
        detail::EchelonBasis fixed_space;
        for (int free_col = 0; free_col < B; ++free_col) {
            if (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end())
                continue;
            detail::BitRow v(words, 0);
            detail::bit_flip(v, free_col);
            for (std::size_t rr = 0; rr < sys.rows.size(); ++rr)
                if (detail::bit_get(sys.rows[rr], free_col)) detail::bit_flip(v, pivot_cols[rr]);
            fixed_space.insert(std::move(v));
        }
        report.dims.push_back(static_cast<int>(fixed_space.rows.size()));

        // module span at degree d: e * (span at degree d-1)
        detail::EchelonBasis module_span;
        for (const auto& prev : module_rows_prev) {
            detail::BitRow lifted(words, 0);
            for (std::size_t i = 0; i < basis_prev.size(); ++i)
                if (detail::bit_get(prev, static_cast<int>(i))) {
                    MilnorMonomial m = basis_prev[i];
                    ++m.epow;
                    detail::bit_flip(lifted, index_of(m));
                }
            module_span.insert(std::move(lifted));
        }
        // new generators complete the fixed space over the span
        for (const auto& v : fixed_space.rows) {
            detail::BitRow rem = module_span.reduce(v);
            if (detail::bit_any(rem)) {
                module_span.insert(rem);
                report.generators.push_back(to_element(rem));
            }
        }
        module_rows_prev = module_span.rows;
        basis_prev = basis;
    }
    return report;
}

/// Orbits of {0..basis_size-1} under a permutation action; the orbit sums
/// form a basis of the fixed module of the free module on that basis.
inline std::vector<std::vector<int>> fixed_permutation_module_W(
    int basis_size, const std::vector<Permutation>& gens) {
    for (const auto& g : gens)
        if (g.degree() != basis_size) throw std::invalid_argument("generator degree mismatch");
    std::vector<bool> seen(basis_size, false);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < basis_size; ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit{s};
        seen[s] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const auto& g : gens) {
                int t = g(orbit[head]);
                if (!seen[t]) {
                    seen[t] = true;
                    orbit.push_back(t);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// --- symbolic Grothendieck-Witt ring on Pfister symbols ---------------------

/// Integer combination of squarefree monomials q_I in the symbols q_1..q_m.
/// All expressions arising here are multilinear, so a product with
/// overlapping supports is rejected rather than rewritten.
struct SymbolicGW {
    int symbols = 0;
    std::map<std::uint32_t, BigInt> c; // monomial mask -> coefficient, no zeros

    static SymbolicGW zero(int m) { return SymbolicGW{m, {}}; }

    static SymbolicGW unit(int m) {
        SymbolicGW s{m, {}};
        s.c[0] = 1;
        return s;
    }

    static SymbolicGW symbol(int m, int i) {
        if (i < 1 || i > m) throw std::invalid_argument("symbol index out of range");
        SymbolicGW s{m, {}};
        s.c[std::uint32_t{1} << (i - 1)] = 1;
        return s;
    }

    /// Sum of all q_I with |I| = d.
    static SymbolicGW orbit_sum(int m, int d) {
        SymbolicGW s{m, {}};
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
            if (std::popcount(mask) == d) s.c[mask] = 1;
        return s;
    }

    BigInt coefficient(std::uint32_t mask) const {
        auto it = c.find(mask);
        return it == c.end() ? BigInt(0) : it->second;
    }

    void prune() {
        for (auto it = c.begin(); it != c.end();)
            it = (it->second == 0) ? c.erase(it) : std::next(it);
    }

    friend SymbolicGW operator+(const SymbolicGW& a, const SymbolicGW& b) {
        require_same(a, b);
        SymbolicGW r = a;
        for (const auto& [mask, v] : b.c) r.c[mask] += v;
        r.prune();
        return r;
    }

    friend SymbolicGW operator-(const SymbolicGW& a, const SymbolicGW& b) {
        require_same(a, b);
        SymbolicGW r = a;
        for (const auto& [mask, v] : b.c) r.c[mask] -= v;
        r.prune();
        return r;
    }

    friend SymbolicGW operator*(const SymbolicGW& a, const SymbolicGW& b) {
        require_same(a, b);
        SymbolicGW r = zero(a.symbols);
        for (const auto& [ma, va] : a.c)
            for (const auto& [mb, vb] : b.c) {
                if (ma & mb)
                    throw std::invalid_argument("non-multilinear product of Pfister symbols");
                r.c[ma | mb] += va * vb;
            }
        r.prune();
        return r;
    }

    SymbolicGW scaled(const BigInt& n) const {
        SymbolicGW r = *this;
        for (auto& [mask, v] : r.c) v *= n;
        r.prune();
        return r;
    }

    bool is_zero() const { return c.empty(); }

    friend bool operator==(const SymbolicGW&, const SymbolicGW&) = default;

    std::string to_string() const {
        if (c.empty()) return "0";
        std::string s;
        for (const auto& [mask, v] : c) {
            std::string term;
            if (mask == 0) {
                term = v.str();
            } else {
                if (v != 1) term = v.str() + "*";
                bool first = true;
                for (int i = 0; i < symbols; ++i)
                    if (mask >> i & 1) {
                        if (!first) term += "*";
                        term += "q" + std::to_string(i + 1);
                        first = false;
                    }
            }
            s += s.empty() ? term : " + " + term;
        }
        return s;
    }

private:
    static void require_same(const SymbolicGW& a, const SymbolicGW& b) {
        if (a.symbols != b.symbols) throw std::invalid_argument("mixed symbol counts");
    }
};

struct SymbolicGWPoly {
    int symbols = 0;
    std::vector<SymbolicGW> c;

    static SymbolicGWPoly constant(int m, SymbolicGW a) {
        SymbolicGWPoly f{m, {std::move(a)}};
        f.trim();
        return f;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }

    SymbolicGW coefficient(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return SymbolicGW::zero(symbols);
        return c[i];
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    friend SymbolicGWPoly operator+(const SymbolicGWPoly& a, const SymbolicGWPoly& b) {
        SymbolicGWPoly r{a.symbols, {}};
        int n = std::max(a.degree(), b.degree());
        for (int i = 0; i <= n; ++i) r.c.push_back(a.coefficient(i) + b.coefficient(i));
        r.trim();
        return r;
    }

    friend SymbolicGWPoly operator*(const SymbolicGWPoly& a, const SymbolicGWPoly& b) {
        SymbolicGWPoly r{a.symbols, {}};
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, SymbolicGW::zero(a.symbols));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    friend bool operator==(const SymbolicGWPoly& a, const SymbolicGWPoly& b) {
        if (a.symbols != b.symbols) return false;
        int n = std::max(a.degree(), b.degree());
        for (int i = 0; i <= n; ++i)
            if (!(a.coefficient(i) == b.coefficient(i))) return false;
        return true;
    }
};

/// Polynomial with integer coefficients lifted into the symbolic ring:
/// (u + v t)^n with u, v integers.
inline SymbolicGWPoly int_binomial_poly(int m, int u, int v, int n) {
    SymbolicGWPoly f{m, {}};
    for (int i = 0; i <= n; ++i) {
        BigInt up = 1, vp = 1;
        for (int j = 0; j < n - i; ++j) up *= u;
        for (int j = 0; j < i; ++j) vp *= v;
        f.c.push_back(SymbolicGW::unit(m).scaled(binomial(n, i) * up * vp));
    }
    f.trim();
    return f;
}

/// lambda_t of the sum of m symbolic Pfister forms:
/// prod_i (1+t)^2 (1 + (q_i - 2)t + t^2).
inline SymbolicGWPoly pfister_sum_lambda_poly(int m) {
    SymbolicGWPoly f = SymbolicGWPoly::constant(m, SymbolicGW::unit(m));
    const SymbolicGWPoly one_plus_t_sq = int_binomial_poly(m, 1, 1, 2);
    for (int i = 1; i <= m; ++i) {
        SymbolicGWPoly quad{m, {SymbolicGW::unit(m),
                                SymbolicGW::symbol(m, i) - SymbolicGW::unit(m).scaled(2),
                                SymbolicGW::unit(m)}};
        f = f * one_plus_t_sq * quad;
    }
    return f;
}

/// The same polynomial expanded over the orbit-sum basis:
/// (1+t)^{2m} sum_d t^d (1-t)^{2m-2d} q(d).
inline SymbolicGWPoly pfister_sum_lambda_expansion(int m) {
    SymbolicGWPoly sum{m, {}};
    for (int d = 0; d <= m; ++d) {
        SymbolicGWPoly term = int_binomial_poly(m, 1, -1, 2 * m - 2 * d); // (1-t)^{2m-2d}
        // multiply by t^d q(d)
        SymbolicGWPoly shifted{m, {}};
        shifted.c.assign(d, SymbolicGW::zero(m));
        for (const auto& coef : term.c)
            shifted.c.push_back(coef * SymbolicGW::orbit_sum(m, d));
        shifted.trim();
        sum = sum + shifted;
    }
    return int_binomial_poly(m, 1, 1, 2 * m) * sum;
}

/// Verifies the two expansions agree as polynomials over the symbolic ring.
inline bool lambda_expansion_matches(int m) {
    if (m < 0 || m > 4) throw std::invalid_argument("m out of range [0,4]");
    return pfister_sum_lambda_poly(m) == pfister_sum_lambda_expansion(m);
}

/// Matrix expressing the restricted lambda-powers in the orbit-sum basis:
/// row d lists the coefficients of q(0), .., q(m) in the t^d coefficient of
/// the lambda polynomial. Unitriangular by construction of the expansion.
inline std::vector<std::vector<BigInt>> lambda_orbit_matrix(int m) {
    if (m < 0 || m > 4) throw std::invalid_argument("m out of range [0,4]");
    SymbolicGWPoly f = pfister_sum_lambda_poly(m);
    std::vector<std::vector<BigInt>> M(m + 1, std::vector<BigInt>(m + 1, 0));
    for (int d = 0; d <= m; ++d) {
        SymbolicGW coef = f.coefficient(d);
        SymbolicGW reconstructed = SymbolicGW::zero(m);
        for (int dp = 0; dp <= m; ++dp) {
            std::uint32_t mask = (dp == 0) ? 0 : ((1u << dp) - 1);
            M[d][dp] = coef.coefficient(mask);
            reconstructed = reconstructed + SymbolicGW::orbit_sum(m, dp).scaled(M[d][dp]);
        }
        if (!(reconstructed == coef))
            throw std::logic_error("lambda coefficient is not symmetric in the symbols");
    }
    return M;
}

/// Checks that the total SW class of the 4m square classes
/// (0, x_i, y_i, x_i + y_i) factors through the degree-2 classes of the m
/// blocks: sw_total = prod_i (1 + e x_i + e y_i + x_i y_i) in M(2m).
inline bool sw_block_product_matches(int m) {
    if (m < 0 || m > 3) throw std::invalid_argument("m out of range [0,3]");
    const int g = 2 * m;
    if (m == 0) return true;
    std::vector<MilnorElement> alphas;
    MilnorElement rhs = MilnorElement::one(g);
    for (int i = 0; i < m; ++i) {
        MilnorElement x = MilnorElement::generator(g, 2 * i + 1);
        MilnorElement y = MilnorElement::generator(g, 2 * i + 2);
        alphas.push_back(MilnorElement::zero(g));
        alphas.push_back(x);
        alphas.push_back(y);
        alphas.push_back(x + y);
        MilnorElement w2 = MilnorElement::e(g) * x + MilnorElement::e(g) * y + x * y;
        rhs *= MilnorElement::one(g) + w2;
    }
    return sw_total(alphas).total == rhs;
}

} // namespace altinv
