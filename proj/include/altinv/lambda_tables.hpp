#pragma once

// Integer relation tables expressing every lambda-power of a
// trivial-discriminant trace form in the basis lambda^0..lambda^m, the
// alternating-sum vanishing criterion, and exhaustive verification sweeps
// over torsor classes and test algebras.

#include <cstdint>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "etale.hpp"
#include "witt.hpp"

namespace altinv {

struct RelationTable {
    int n = 0;
    int m = 0; // n / 4
    int c = 0; // n - 4m
    std::vector<std::vector<BigInt>> z; // rows j = 0..n, columns i = 0..m

    std::string row_to_string(int j) const {
        std::string s = "lambda" + std::to_string(j) + " = ";
        bool first = true;
        for (int i = m; i >= 0; --i) {
            const BigInt& v = z[j][i];
            if (v == 0) continue;
            BigInt av = v < 0 ? -v : v;
            std::string body;
            if (i == 0) {
                body = av.str();
            } else {
                if (av != 1) body = av.str() + "*";
                body += "lambda" + std::to_string(i);
            }
            if (first) {
                s += (v < 0 ? "-" : "") + body;
                first = false;
            } else {
                s += (v < 0 ? " - " : " + ") + body;
            }
        }
        if (first) s += "0";
        return s;
    }
};

/// Builds the table for rank n: the series (1+t)^{-(2m+c)} lambda_t expresses
/// the palindromic factor's coefficients p_i in the lambda basis for i <= m,
/// palindromy extends them to all i, and recombining with (1+t)^{2m+c}
/// rewrites every lambda-power.
inline RelationTable lambda_relation_table(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("n out of the supported range [1,64]");
    RelationTable T;
    T.n = n;
    T.m = n / 4;
    T.c = n - 4 * T.m;
    const int N = 2 * T.m + T.c;

    // p_i in the basis lambda^0..lambda^m
    std::vector<std::vector<BigInt>> p(2 * T.m + 1, std::vector<BigInt>(T.m + 1, 0));
    for (int i = 0; i <= T.m; ++i)
        for (int j = 0; j <= i; ++j) p[i][j] = signed_binomial(-N, i - j);
    for (int i = T.m + 1; i <= 2 * T.m; ++i) p[i] = p[2 * T.m - i];

    T.z.assign(n + 1, std::vector<BigInt>(T.m + 1, 0));
    for (int J = 0; J <= n; ++J)
        for (int j = 0; j <= std::min(J, 2 * T.m); ++j) {
            BigInt w = binomial(N, J - j);
            if (w == 0) continue;
            for (int i = 0; i <= T.m; ++i) T.z[J][i] += w * p[j][i];
        }
    return T;
}

/// For every j < 2m+c the alternating binomial-weighted sum of the
/// lambda-powers vanishes in the Grothendieck-Witt ring.
inline bool taylor_vanishing_check(const DiagonalForm& q, int n) {
    if (q.rank() != n) throw std::invalid_argument("rank does not match n");
    if (disc(q).nontrivial) throw std::invalid_argument("form has nontrivial discriminant");
    const int m = n / 4, c = n - 4 * m;
    GWPolynomial lam = lambda_poly(q);
    for (int j = 0; j < 2 * m + c; ++j) {
        GWClass s = GWClass::zero(q.field);
        for (int i = j; i <= lam.degree(); ++i) {
            BigInt w = binomial(i, j);
            if (i % 2) w = -w;
            s = s + lam.coefficient(i).scaled(w);
        }
        if (!s.is_zero()) return false;
    }
    return true;
}

inline std::string square_class_string(const Field& F, SquareClass c) {
    if (!c.nontrivial) return "1";
    return F.kind() == FieldKind::RealClosed ? "-1" : "u";
}

struct SweepInstance {
    int n = 0;
    std::string label;
    int split_count = 0; // 0 for test-algebra rows
    int rank = 0;
    std::string disc_class;
    std::string witt;
    std::vector<std::string> lambdas;
    bool divisibility_ok = false;
    bool taylor_ok = false;
    bool table_ok = false;

    bool ok() const { return divisibility_ok && taylor_ok && table_ok; }
};

struct SweepReport {
    std::string field_spec;
    int n_max = 0;
    std::vector<SweepInstance> rows;

    bool all_ok() const {
        for (const auto& r : rows)
            if (!r.ok()) return false;
        return true;
    }

    const SweepInstance* first_failure() const {
        for (const auto& r : rows)
            if (!r.ok()) return &r;
        return nullptr;
    }
};

namespace detail {

inline SweepInstance sweep_one(const EtaleAlgebra& L, int n, std::string label, int split_count,
                               const RelationTable& T) {
    SweepInstance row;
    row.n = n;
    row.label = std::move(label);
    row.split_count = split_count;

    DiagonalForm q = trace_form(L);
    row.rank = q.rank();
    row.disc_class = square_class_string(L.field, disc(q));
    row.witt = witt_class(q).to_string();

    const int m = n / 4, c = n - 4 * m;
    GWPolynomial lam = lambda_poly(q);
    for (int i = 0; i <= n; ++i) row.lambdas.push_back(lam.coefficient(i).to_string());

    row.divisibility_ok = divisible_by_one_plus_t(lam, 2 * m + c);
    row.taylor_ok = taylor_vanishing_check(q, n);

    row.table_ok = true;
    for (int j = 0; j <= n && row.table_ok; ++j) {
        GWClass rhs = GWClass::zero(L.field);
        for (int i = 0; i <= m; ++i) rhs = rhs + lam.coefficient(i).scaled(T.z[j][i]);
        if (!(lam.coefficient(j) == rhs)) row.table_ok = false;
    }
    return row;
}

} // namespace detail

/// Sweeps every torsor class of the alternating groups of degree <= n_max
/// over F_p, plus a grid of test algebras (products of trivial factors and
/// biquadratic blocks over all square-class pairs), asserting divisibility,
/// the vanishing sums, and the relation table on each trace form.
inline SweepReport sweep_verify(std::int64_t p, int n_max) {
    if (n_max < 1 || n_max > 12) throw std::invalid_argument("n_max out of the supported range [1,12]");
    Field F = Field::finite(p);
    SweepReport report;
    report.field_spec = F.spec();
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        RelationTable T = lambda_relation_table(n);
        for (const auto& cls : enumerate_An_torsors(p, n)) {
            EtaleAlgebra L = algebra_from_cycle_type(p, cls.type);
            report.rows.push_back(
                detail::sweep_one(L, n, cls.type.to_string(), cls.split_count, T));
        }
        // test algebras: c trivial factors + mm biquadratic blocks
        const FieldElement reps[2] = {F.one(), F.canonical_nonsquare()};
        for (int mm = 0; mm <= n / 4; ++mm) {
            int c = n - 4 * mm;
            long combos = 1;
            for (int i = 0; i < mm; ++i) combos *= 4;
            for (long code = 0; code < combos; ++code) {
                std::vector<std::pair<FieldElement, FieldElement>> pairs;
                std::string label = "T:" + std::to_string(c) + "x<1>";
                long v = code;
                for (int i = 0; i < mm; ++i) {
                    const FieldElement& x = reps[v % 2];
                    const FieldElement& y = reps[(v / 2) % 2];
                    v /= 4;
                    pairs.emplace_back(x, y);
                    label += "+pf(" + F.to_string(x) + "," + F.to_string(y) + ")";
                }
                EtaleAlgebra L = type_T_algebra(F, c, pairs);
                report.rows.push_back(detail::sweep_one(L, n, label, 0, T));
            }
        }
    }
    return report;
}

/// The real closed analogue: trace forms a<1> + b<2,-2> of algebras with a
/// real places and b complex places, b even (trivial discriminant).
inline SweepReport sweep_verify_real(int max_dim) {
    if (max_dim < 1 || max_dim > 16) throw std::invalid_argument("max_dim out of range [1,16]");
    Field F = Field::real_closed();
    SweepReport report;
    report.field_spec = F.spec();
    report.n_max = max_dim;
    for (int b = 0; 2 * b <= max_dim; b += 2)
        for (int a = (b == 0 ? 1 : 0); a + 2 * b <= max_dim; ++a) {
            int n = a + 2 * b;
            RelationTable T = lambda_relation_table(n);
            EtaleAlgebra L{F, {}};
            for (int i = 0; i < a; ++i) L.append_factor(poly_x(F));
            for (int i = 0; i < b; ++i) L.append_factor(poly_from_ints(F, {1, 0, 1})); // X^2+1
            std::string label = std::to_string(a) + "x<1>+" + std::to_string(b) + "x<2,-2>";
            report.rows.push_back(detail::sweep_one(L, n, label, 0, T));
        }
    return report;
}

} // namespace altinv
