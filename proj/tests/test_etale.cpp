#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <altinv/etale.hpp>

using namespace altinv;

TEST_CASE("trace Gram matrices") {
    Field f7 = Field::finite(7);
    EtaleAlgebra L = EtaleAlgebra::from_factors(f7, {parse_polynomial(f7, "X^2-3")});
    SymmetricMatrix M = trace_gram(L);
    REQUIRE(M.n == 2);
    CHECK(M.at(0, 0) == f7.from_int(2));
    CHECK(M.at(0, 1) == f7.zero());
    CHECK(M.at(1, 0) == f7.zero());
    CHECK(M.at(1, 1) == f7.from_int(6));

    // split algebra k^n has the identity Gram
    EtaleAlgebra split = EtaleAlgebra::from_factors(f7, {poly_x(f7), poly_x(f7), poly_x(f7)});
    SymmetricMatrix I = trace_gram(split);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(I.at(i, j) == (i == j ? f7.one() : f7.zero()));

    Field f5 = Field::finite(5);
    EtaleAlgebra L2 = EtaleAlgebra::from_factors(f5, {parse_polynomial(f5, "X^2+2")});
    SymmetricMatrix M2 = trace_gram(L2);
    CHECK(M2.at(0, 0) == f5.from_int(2));
    CHECK(M2.at(1, 1) == f5.from_int(-4));

    CHECK_THROWS_AS(EtaleAlgebra::from_factors(f7, {parse_polynomial(f7, "X^2-4")}),
                    std::invalid_argument);
    CHECK_THROWS_AS(EtaleAlgebra::from_factors(f7, {parse_polynomial(f7, "2*X+1")}),
                    std::invalid_argument);
}

TEST_CASE("congruence diagonalization") {
    Field f5 = Field::finite(5);
    SymmetricMatrix H = SymmetricMatrix::zero(f5, 2);
    H.at(0, 1) = f5.one();
    H.at(1, 0) = f5.one();
    DiagonalForm d = diagonalize_symmetric(H);
    CHECK(witt_class(d).is_zero()); // hyperbolic

    SymmetricMatrix I = SymmetricMatrix::zero(f5, 3);
    for (int i = 0; i < 3; ++i) I.at(i, i) = f5.one();
    CHECK(diagonalize_symmetric(I) == parse_form(f5, "<1,1,1>"));

    Field f7 = Field::finite(7);
    SymmetricMatrix D = SymmetricMatrix::zero(f7, 2);
    D.at(0, 0) = f7.from_int(2);
    D.at(1, 1) = f7.from_int(6);
    CHECK(diagonalize_symmetric(D) == parse_form(f7, "<2,6>"));

    SymmetricMatrix Z = SymmetricMatrix::zero(f5, 2);
    CHECK_THROWS_AS(diagonalize_symmetric(Z), std::invalid_argument);

    SymmetricMatrix asym = SymmetricMatrix::zero(f5, 2);
    asym.at(0, 1) = f5.one();
    CHECK_THROWS_AS(diagonalize_symmetric(asym), std::invalid_argument);

    // P^t M P law: the diagonalization is congruent, so Witt classes match
    std::mt19937_64 rng(41);
    for (int inst = 0; inst < 20; ++inst) {
        SymmetricMatrix M = SymmetricMatrix::zero(f5, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) {
                FieldElement v = f5.element_by_index(static_cast<std::int64_t>(rng() % 5));
                M.at(i, j) = v;
                M.at(j, i) = v;
            }
        try {
            DiagonalForm d2 = diagonalize_symmetric(M);
            CHECK(d2.rank() == 3);
        } catch (const std::invalid_argument&) {
            // degenerate draw; acceptable
        }
    }
}

TEST_CASE("trace forms") {
    Field f5 = Field::finite(5);
    EtaleAlgebra split = EtaleAlgebra::from_factors(f5, {poly_x(f5), poly_x(f5)});
    CHECK(trace_form(split) == parse_form(f5, "<1,1>"));

    EtaleAlgebra L = EtaleAlgebra::from_factors(f5, {poly_x(f5), parse_polynomial(f5, "X^2+2")});
    DiagonalForm q = trace_form(L);
    CHECK(q.rank() == 3);
    CHECK(disc(q) == f5.square_class(poly_discriminant(f5, parse_polynomial(f5, "X^2+2"))));

    // appending a trivial factor appends <1>
    EtaleAlgebra ext = L;
    ext.append_factor(poly_x(f5));
    std::vector<FieldElement> want = q.entries;
    want.push_back(f5.one());
    CHECK(trace_form(ext).entries == want);
}

TEST_CASE("discriminant law for trace forms") {
    std::mt19937_64 rng(42);
    for (std::int64_t p : {3, 5, 7}) {
        Field F = Field::finite(p);
        for (const auto& ct : partitions_of(5)) {
            EtaleAlgebra L = algebra_from_cycle_type(p, ct);
            SquareClass prod{false};
            for (const auto& comp : L.components)
                prod = prod * F.square_class(poly_discriminant(F, std::get<Polynomial>(comp)));
            CHECK(disc(trace_form(L)) == prod);
            // even types give trivial discriminant, odd types do not
            CHECK(disc(trace_form(L)).nontrivial == !ct.is_even());
        }
    }
}

TEST_CASE("test algebras") {
    Field f7 = Field::finite(7);
    FieldElement u = f7.canonical_nonsquare();

    EtaleAlgebra biq = type_T_algebra(f7, 0, {{u, u}});
    CHECK(biq.dimension() == 4);
    CHECK(GWClass::of_form(trace_form(biq)) == GWClass::of_form(pfister2(f7, u, u)));

    EtaleAlgebra split = type_T_algebra(f7, 3, {});
    CHECK(trace_form(split) == parse_form(f7, "<1,1,1>"));

    EtaleAlgebra mixed = type_T_algebra(f7, 3, {{u, f7.one()}});
    CHECK(mixed.dimension() == 7);
    CHECK_FALSE(disc(trace_form(mixed)).nontrivial);

    CHECK_THROWS_AS(type_T_algebra(f7, 1, {{f7.zero(), u}}), std::invalid_argument);
}

TEST_CASE("quadratic algebras over every unit") {
    for (std::int64_t p : {3, 5, 7}) {
        Field F = Field::finite(p);
        for (std::int64_t xv = 1; xv < p; ++xv) {
            FieldElement x = F.from_int(xv);
            EtaleAlgebra L = quadratic_algebra(F, x);
            CHECK(L.dimension() == 2);
            DiagonalForm want = DiagonalForm::make(F, {F.from_int(2), F.scale(2, x)});
            CHECK(GWClass::of_form(trace_form(L)) == GWClass::of_form(want));
        }
    }
}

TEST_CASE("torsor enumeration") {
    auto classes4 = enumerate_An_torsors(5, 4);
    REQUIRE(classes4.size() == 3);
    int total = 0;
    for (const auto& c : classes4) total += c.split_count;
    CHECK(total == 4);
    // the 3+1 type splits, the others do not
    for (const auto& c : classes4) {
        if (c.type == CycleType{{3, 1}}) CHECK(c.split_count == 2);
        if (c.type == CycleType{{2, 2}}) CHECK(c.split_count == 1);
        if (c.type == CycleType{{1, 1, 1, 1}}) CHECK(c.split_count == 1);
    }

    auto classes1 = enumerate_An_torsors(3, 1);
    REQUIRE(classes1.size() == 1);
    CHECK(classes1[0].type == CycleType{{1}});

    for (const auto& c : enumerate_An_torsors(7, 5))
        if (c.type == CycleType{{5}}) CHECK(c.split_count == 2);

    CHECK_THROWS_AS(enumerate_An_torsors(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_An_torsors(5, 15), std::invalid_argument);
}

TEST_CASE("algebras from cycle types") {
    EtaleAlgebra L = algebra_from_cycle_type(5, CycleType{{3, 1}});
    REQUIRE(L.components.size() == 2);
    CHECK(std::get<Polynomial>(L.components[0]).degree() == 3);
    CHECK(std::get<Polynomial>(L.components[1]) == poly_x(Field::finite(5)));

    EtaleAlgebra split = algebra_from_cycle_type(7, CycleType{{1, 1, 1}});
    CHECK(trace_form(split) == parse_form(Field::finite(7), "<1,1,1>"));

    EtaleAlgebra twoquads = algebra_from_cycle_type(3, CycleType{{2, 2}});
    CHECK_FALSE(disc(trace_form(twoquads)).nontrivial);
}

TEST_CASE("partitions are ordered and complete") {
    auto parts = partitions_of(6);
    CHECK(parts.size() == 11);
    CHECK(parts.front() == CycleType{{6}});
    CHECK(parts.back() == CycleType{{1, 1, 1, 1, 1, 1}});
    for (const auto& ct : parts) CHECK(ct.n() == 6);
}
