#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <altinv/etale.hpp>
#include <altinv/witt.hpp>

using namespace altinv;

namespace {

// --- brute-force Witt oracle (test-only) -----------------------------------
//
// Anisotropic rank by exhaustive isotropic-vector search and explicit
// hyperbolic-plane splitting; independent of the canonical classification.

FieldElement eval_form(const Field& F, const std::vector<FieldElement>& diag,
                       const std::vector<FieldElement>& v) {
    FieldElement s = F.zero();
    for (std::size_t i = 0; i < diag.size(); ++i)
        s = F.add(s, F.mul(diag[i], F.mul(v[i], v[i])));
    return s;
}

FieldElement bilinear(const Field& F, const std::vector<FieldElement>& diag,
                      const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    FieldElement s = F.zero();
    for (std::size_t i = 0; i < diag.size(); ++i)
        s = F.add(s, F.mul(diag[i], F.mul(a[i], b[i])));
    return s;
}

bool next_vector(const Field& F, std::vector<FieldElement>& v) {
    for (auto& x : v) {
        // iterate each coordinate through the field by index
        std::int64_t idx = 0;
        for (std::int64_t i = 0; i < F.order(); ++i)
            if (F.element_by_index(i) == x) { idx = i; break; }
        if (idx + 1 < F.order()) {
            x = F.element_by_index(idx + 1);
            return true;
        }
        x = F.element_by_index(0);
    }
    return false;
}

std::optional<std::vector<FieldElement>> find_isotropic(const Field& F,
                                                        const std::vector<FieldElement>& diag) {
    std::vector<FieldElement> v(diag.size(), F.zero());
    while (next_vector(F, v)) {
        if (F.is_zero(eval_form(F, diag, v))) return v;
    }
    return std::nullopt;
}

int brute_anisotropic_rank(const Field& F, std::vector<FieldElement> diag) {
    while (!diag.empty()) {
        auto v = find_isotropic(F, diag);
        if (!v) return static_cast<int>(diag.size());
        // find w with B(v,w) != 0 among the standard basis vectors
        const int n = static_cast<int>(diag.size());
        std::vector<FieldElement> w(n, F.zero());
        for (int i = 0; i < n; ++i) {
            std::vector<FieldElement> e(n, F.zero());
            e[i] = F.one();
            if (!F.is_zero(bilinear(F, diag, *v, e))) { w = e; break; }
        }
        // basis of the orthogonal complement of span{v, w}
        SymmetricMatrix gram = SymmetricMatrix::zero(F, n - 2);
        std::vector<std::vector<FieldElement>> basis;
        {
            // solve B(v,u) = B(w,u) = 0 by elimination on the two constraint rows
            std::vector<std::vector<FieldElement>> rows(2, std::vector<FieldElement>(n));
            for (int i = 0; i < n; ++i) {
                std::vector<FieldElement> e(n, F.zero());
                e[i] = F.one();
                rows[0][i] = bilinear(F, diag, *v, e);
                rows[1][i] = bilinear(F, diag, w, e);
            }
            std::vector<int> pivots;
            int prow = 0;
            for (int col = 0; col < n && prow < 2; ++col) {
                int sel = -1;
                for (int rr = prow; rr < 2; ++rr)
                    if (!F.is_zero(rows[rr][col])) { sel = rr; break; }
                if (sel < 0) continue;
                std::swap(rows[sel], rows[prow]);
                FieldElement inv = F.inv(rows[prow][col]);
                for (int k = 0; k < n; ++k) rows[prow][k] = F.mul(rows[prow][k], inv);
                for (int rr = 0; rr < 2; ++rr) {
                    if (rr == prow || F.is_zero(rows[rr][col])) continue;
                    FieldElement f = rows[rr][col];
                    for (int k = 0; k < n; ++k)
                        rows[rr][k] = F.sub(rows[rr][k], F.mul(f, rows[prow][k]));
                }
                pivots.push_back(col);
                ++prow;
            }
            for (int col = 0; col < n; ++col) {
                if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
                std::vector<FieldElement> u(n, F.zero());
                u[col] = F.one();
                for (std::size_t rr = 0; rr < pivots.size(); ++rr)
                    u[pivots[rr]] = F.neg(rows[rr][col]);
                basis.push_back(u);
            }
        }
        REQUIRE(static_cast<int>(basis.size()) == n - 2);
        for (int i = 0; i < n - 2; ++i)
            for (int j = 0; j < n - 2; ++j)
                gram.at(i, j) = bilinear(F, diag, basis[i], basis[j]);
        diag = diagonalize_symmetric(gram).entries;
    }
    return 0;
}

bool brute_witt_equivalent(const Field& F, const DiagonalForm& a, const DiagonalForm& b) {
    std::vector<FieldElement> sum = a.entries;
    for (const auto& x : b.entries) sum.push_back(F.neg(x));
    if (sum.empty()) return true;
    return brute_anisotropic_rank(F, sum) == 0;
}

DiagonalForm random_form(const Field& F, int rank, std::mt19937_64& rng) {
    std::vector<FieldElement> entries;
    for (int i = 0; i < rank; ++i) {
        FieldElement x;
        do {
            x = F.is_finite()
                    ? F.element_by_index(static_cast<std::int64_t>(rng() % F.order()))
                    : F.from_int(static_cast<std::int64_t>(rng() % 21) - 10);
        } while (F.is_zero(x));
        entries.push_back(x);
    }
    return DiagonalForm::make(F, std::move(entries));
}

GWClass lambda_by_subsets(const DiagonalForm& q, int k) {
    const Field& F = q.field;
    GWClass sum = GWClass::zero(F);
    const int n = q.rank();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        FieldElement prod = F.one();
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) prod = F.mul(prod, q.entries[i]);
        sum = sum + GWClass::of_form(DiagonalForm::make(F, {prod}));
    }
    return sum;
}

} // namespace

TEST_CASE("canonical Witt classes") {
    Field f5 = Field::finite(5);
    CHECK(witt_class(parse_form(f5, "<1,-1>")).is_zero());

    Field real = Field::real_closed();
    CHECK(witt_class(parse_form(real, "<1,1,-1>")).signature() == 1);

    Field f3 = Field::finite(3);
    WittClass w = witt_class(parse_form(f3, "<1,1>"));
    CHECK_FALSE(w.is_zero());
    CHECK(w.anisotropic_entries().size() == 2);
    // exhaustive search finds no zero of X^2 + Y^2 over F3
    CHECK(brute_anisotropic_rank(f3, {f3.one(), f3.one()}) == 2);
}

TEST_CASE("hyperbolic padding never changes the class") {
    std::mt19937_64 rng(31);
    for (const char* spec : {"f:3", "f:5", "f:7", "real", "qc"}) {
        Field F = Field::parse(spec);
        for (int inst = 0; inst < 30; ++inst) {
            DiagonalForm q = random_form(F, 1 + static_cast<int>(rng() % 4), rng);
            FieldElement a = q.entries[0];
            CHECK(witt_class(DiagonalForm::make(F, {a, F.neg(a)})).is_zero());
            DiagonalForm padded = q;
            padded.entries.push_back(a);
            padded.entries.push_back(F.neg(a));
            CHECK(witt_class(padded) == witt_class(q));
        }
    }
}

TEST_CASE("canonical classes agree with the brute-force oracle") {
    std::mt19937_64 rng(32);
    for (const char* spec : {"f:3", "f:5", "f:7"}) {
        Field F = Field::parse(spec);
        for (int inst = 0; inst < 40; ++inst) {
            DiagonalForm a = random_form(F, 1 + static_cast<int>(rng() % 3), rng);
            DiagonalForm b = random_form(F, 1 + static_cast<int>(rng() % 3), rng);
            bool canonical_equal = witt_class(a) == witt_class(b);
            CHECK(canonical_equal == brute_witt_equivalent(F, a, b));
        }
    }
}

TEST_CASE("Grothendieck-Witt arithmetic") {
    Field real = Field::real_closed();
    GWClass one_pos = GWClass::of_form(parse_form(real, "<1>"));
    GWClass one_neg = GWClass::of_form(parse_form(real, "<-1>"));
    GWClass s = one_pos + one_neg;
    CHECK(s.rank == 2);
    CHECK(s.witt.is_zero());
    CHECK(one_neg * one_neg == GWClass::one(real));

    std::mt19937_64 rng(33);
    for (const char* spec : {"f:3", "f:7", "real", "qc"}) {
        Field F = Field::parse(spec);
        for (int i = 0; i < 1000; ++i) {
            GWClass a = GWClass::of_form(random_form(F, 1 + static_cast<int>(rng() % 3), rng));
            GWClass b = GWClass::of_form(random_form(F, 1 + static_cast<int>(rng() % 3), rng));
            GWClass c = GWClass::of_form(random_form(F, 1 + static_cast<int>(rng() % 3), rng));
            if (rng() & 1) a = -a;
            CHECK(a * GWClass::one(F) == a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == GWClass::zero(F));
        }
    }

    CHECK_THROWS_AS(GWClass(WittClass::of(parse_form(real, "<1>")), 2), std::invalid_argument);
}

TEST_CASE("lambda operations") {
    Field f7 = Field::finite(7);
    FieldElement x = f7.from_int(3), y = f7.from_int(5);
    DiagonalForm q = pfister2(f7, x, y);
    GWClass qc = GWClass::of_form(q);
    GWClass two = GWClass::from_int(f7, 2);

    CHECK(lambda_power(q, 0) == GWClass::one(f7));
    CHECK(lambda_power(q, 2) == qc.scaled(2) - two);
    CHECK(lambda_power(q, 3) == qc);
    CHECK(lambda_power(q, 4) == GWClass::one(f7));
    CHECK(lambda_power(q, 5).is_zero());

    Field real = Field::real_closed();
    GWPolynomial lam = lambda_poly(parse_form(real, "<1>"));
    CHECK(lam.degree() == 1);
    CHECK(lam.coefficient(0) == GWClass::one(real));
    CHECK(lam.coefficient(1) == GWClass::one(real));

    GWPolynomial lam2 = lambda_poly(parse_form(real, "<1,1>"));
    CHECK(lam2.coefficient(1) == GWClass::from_int(real, 2));
    CHECK(lam2.coefficient(2) == GWClass::one(real));
}

TEST_CASE("lambda coefficients match subset sums and the sum rule") {
    std::mt19937_64 rng(34);
    for (const char* spec : {"f:3", "f:5", "real"}) {
        Field F = Field::parse(spec);
        for (int inst = 0; inst < 10; ++inst) {
            DiagonalForm u = random_form(F, 1 + static_cast<int>(rng() % 3), rng);
            DiagonalForm v = random_form(F, 1 + static_cast<int>(rng() % 2), rng);
            GWPolynomial lu = lambda_poly(u);
            for (int k = 0; k <= u.rank(); ++k)
                CHECK(lu.coefficient(k) == lambda_by_subsets(u, k));
            DiagonalForm sum = u;
            sum.entries.insert(sum.entries.end(), v.entries.begin(), v.entries.end());
            for (int k = 0; k <= sum.rank(); ++k) {
                GWClass rhs = GWClass::zero(F);
                for (int i = 0; i <= k; ++i)
                    rhs = rhs + lambda_by_subsets(u, i) * lambda_by_subsets(v, k - i);
                CHECK(lambda_by_subsets(sum, k) == rhs);
            }
        }
    }
}

TEST_CASE("Pfister forms") {
    Field f7 = Field::finite(7);
    CHECK(pfister2(f7, f7.one(), f7.one()) == parse_form(f7, "<1,1,1,1>"));
    CHECK_FALSE(disc(pfister2(f7, f7.from_int(3), f7.from_int(6))).nontrivial);

    Field real = Field::real_closed();
    DiagonalForm neg = pfister2(real, real.from_int(-1), real.from_int(-1));
    CHECK(witt_class(neg).signature() == 0);

    CHECK_THROWS_AS(pfister2(f7, f7.zero(), f7.one()), std::invalid_argument);
}

TEST_CASE("filtration by the even-rank ideal") {
    Field real = Field::real_closed();
    CHECK(filtration(witt_class(parse_form(real, "<1,1>"))) == 1);
    CHECK(filtration(witt_class(parse_form(real, "<1,1,1,1>"))) == 2);
    CHECK(filtration(witt_class(parse_form(real, "<1>"))) == 0);
    CHECK_FALSE(filtration(witt_class(parse_form(real, "<1,-1>"))).has_value());

    Field f5 = Field::finite(5);
    CHECK(filtration(witt_class(parse_form(f5, "<1>"))) == 0);
    CHECK(filtration(witt_class(parse_form(f5, "<1,u>"))) == 1);
    CHECK_FALSE(filtration(witt_class(parse_form(f5, "<1,-1>"))).has_value());

    // infinite filtration exactly at zero
    std::mt19937_64 rng(35);
    for (const char* spec : {"f:3", "f:7", "real", "qc"}) {
        Field F = Field::parse(spec);
        for (int inst = 0; inst < 50; ++inst) {
            WittClass w = witt_class(random_form(F, 1 + static_cast<int>(rng() % 4), rng));
            CHECK(filtration(w).has_value() == !w.is_zero());
        }
    }
}

TEST_CASE("divisibility by powers of 1+t") {
    Field f5 = Field::finite(5);
    DiagonalForm q = pfister2(f5, f5.from_int(2), f5.from_int(3));
    CHECK(divisible_by_one_plus_t(lambda_poly(q), 2));

    Field real = Field::real_closed();
    GWPolynomial cube = GWPolynomial::one_plus_t(real).pow(3);
    CHECK(divisible_by_one_plus_t(cube, 3));

    GWPolynomial f(real);
    f.c = {GWClass::one(real), GWClass::zero(real), GWClass::one(real)}; // 1 + t^2
    CHECK_FALSE(divisible_by_one_plus_t(f, 2));
    CHECK(divisible_by_one_plus_t(f, 0));
}

TEST_CASE("form literals round-trip") {
    std::mt19937_64 rng(36);
    for (const char* spec : {"f:5", "f:3^2", "real"}) {
        Field F = Field::parse(spec);
        for (int inst = 0; inst < 20; ++inst) {
            DiagonalForm q = random_form(F, 1 + static_cast<int>(rng() % 4), rng);
            CHECK(parse_form(F, form_to_string(q)) == q);
        }
    }
    Field f5 = Field::finite(5);
    DiagonalForm q = parse_form(f5, "<1,-1,u>");
    CHECK(q.entries == std::vector<FieldElement>{f5.from_int(1), f5.from_int(4), f5.from_int(2)});
    CHECK_THROWS_AS(parse_form(f5, "<1,0>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form(f5, "1,2"), std::invalid_argument);
}

TEST_CASE("SW classes of concrete forms") {
    Field real = Field::real_closed();
    SWClass w1 = sw_total_of_form(parse_form(real, "<1,-1>"));
    CHECK(w1.component(1) == MilnorElement::e(1));
    SWClass w2 = sw_total_of_form(parse_form(real, "<-1,-1>"));
    CHECK(w2.component(1).is_zero());
    CHECK(w2.component(2) == MilnorElement::e(1, 2));

    Field f5 = Field::finite(5);
    SWClass wf = sw_total_of_form(parse_form(f5, "<u,u>"));
    CHECK(wf.component(1).is_zero());
    CHECK(wf.component(2) == MilnorElement::generator(1, 1) * MilnorElement::generator(1, 1));
}
