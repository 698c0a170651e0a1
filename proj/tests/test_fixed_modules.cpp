#include <catch2/catch_amalgamated.hpp>

#include <altinv/fixed_modules.hpp>

using namespace altinv;

namespace {

// dimension of the span of {e^{d - deg g} g : generators g of degree <= d},
// by Gaussian elimination on leading monomials
int generated_dimension(const std::vector<MilnorElement>& gens, int r, int d) {
    std::vector<MilnorElement> basis;
    for (const auto& g : gens) {
        int dg = g.max_degree();
        if (dg > d) continue;
        MilnorElement v = MilnorElement::e(r, d - dg) * g;
        bool reduced = true;
        while (reduced && !v.is_zero()) {
            reduced = false;
            for (const auto& b : basis)
                if (!v.is_zero() && b.monomials().front() == v.monomials().front()) {
                    v += b;
                    reduced = true;
                }
        }
        if (!v.is_zero()) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

} // namespace

TEST_CASE("fixed submodules of the cohomology model") {
    const int g = 2;
    MilnorElement x = MilnorElement::generator(g, 1), y = MilnorElement::generator(g, 2);
    MilnorElement quad = MilnorElement::e(g) * x + MilnorElement::e(g) * y + x * y;

    ModuleBasisReport a3 = fixed_submodule_H(LinearAction::cyclic_three(), 6);
    REQUIRE(a3.generators.size() == 2);
    CHECK(a3.generators[0] == MilnorElement::one(g));
    CHECK(a3.generators[1] == quad);

    ModuleBasisReport s3 = fixed_submodule_H(LinearAction::full_s3(), 6);
    CHECK(s3.generators == a3.generators);

    ModuleBasisReport triv = fixed_submodule_H(LinearAction::trivial(2), 4);
    REQUIRE(triv.generators.size() == 4);
    CHECK(triv.generators[0] == MilnorElement::one(g));
    CHECK(triv.generators[1] == x);
    CHECK(triv.generators[2] == y);
    CHECK(triv.generators[3] == x * y);

    // per-degree dimensions: 1, 1, then 2 from degree 2 on
    CHECK(a3.dims[0] == 1);
    CHECK(a3.dims[1] == 1);
    for (int d = 2; d <= 6; ++d) CHECK(a3.dims[d] == 2);

    // reported generators are fixed by every action generator
    for (const auto& action : {LinearAction::cyclic_three(), LinearAction::full_s3()}) {
        ModuleBasisReport rep = fixed_submodule_H(action, 6);
        for (std::size_t k = 0; k < action.gens.size(); ++k) {
            auto images = action.images(k);
            for (const auto& gen : rep.generators) CHECK(gen.substitute(images) == gen);
        }
    }

    // the generators reproduce each graded fixed space
    for (int d = 0; d <= 6; ++d) CHECK(generated_dimension(a3.generators, 2, d) == a3.dims[d]);

    CHECK_THROWS_AS(fixed_submodule_H(LinearAction{2, {{0b00, 0b01}}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(fixed_submodule_H(LinearAction::trivial(2), 20), std::invalid_argument);
}

TEST_CASE("two-block action: fixed module is free on 1, w(1), w(2)") {
    // M(4) with blocks (x1,x2) and (x3,x4); generators: the 3-cycle action
    // in each block and the block swap
    LinearAction action{4,
                        {{0b0010, 0b0011, 0b0100, 0b1000},
                         {0b0001, 0b0010, 0b1000, 0b1100},
                         {0b0100, 0b1000, 0b0001, 0b0010}}};
    ModuleBasisReport rep = fixed_submodule_H(action, 8);

    const int g = 4;
    auto w2 = [&](int a, int b) {
        MilnorElement xa = MilnorElement::generator(g, a), xb = MilnorElement::generator(g, b);
        return MilnorElement::e(g) * xa + MilnorElement::e(g) * xb + xa * xb;
    };
    MilnorElement w1sum = w2(1, 2) + w2(3, 4);
    MilnorElement wprod = w2(1, 2) * w2(3, 4);

    REQUIRE(rep.generators.size() == 3);
    CHECK(rep.generators[0] == MilnorElement::one(g));
    CHECK(rep.generators[1] == w1sum);
    CHECK(rep.generators[2] == wprod);

    for (int d = 0; d <= 8; ++d) {
        int want = 1 + (d >= 2 ? 1 : 0) + (d >= 4 ? 1 : 0);
        CHECK(rep.dims[d] == want);
        CHECK(generated_dimension(rep.generators, g, d) == want);
    }
}

TEST_CASE("fixed permutation modules") {
    auto orbits = fixed_permutation_module_W(4, {Permutation::from_cycles(4, {{2, 3, 4}})});
    CHECK(orbits == std::vector<std::vector<int>>{{0}, {1, 2, 3}});

    auto full = fixed_permutation_module_W(3, {});
    CHECK(full == std::vector<std::vector<int>>{{0}, {1}, {2}});

    // basis indexed by subsets of {1,2}: 0 = {}, 1 = {1}, 2 = {2}, 3 = {1,2};
    // swapping the two indices swaps positions 1 and 2
    auto subsets = fixed_permutation_module_W(4, {Permutation::from_cycles(4, {{2, 3}})});
    CHECK(subsets == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
}

TEST_CASE("symbolic Pfister ring") {
    SymbolicGW q1 = SymbolicGW::symbol(3, 1), q2 = SymbolicGW::symbol(3, 2);
    SymbolicGW prod = q1 * q2;
    CHECK(prod.coefficient(0b011) == 1);
    CHECK_THROWS_AS(q1 * q1, std::invalid_argument);

    SymbolicGW d2 = SymbolicGW::orbit_sum(3, 2);
    CHECK(d2.coefficient(0b011) == 1);
    CHECK(d2.coefficient(0b101) == 1);
    CHECK(d2.coefficient(0b110) == 1);
    CHECK(d2.coefficient(0b111) == 0);

    CHECK((q1 - q1).is_zero());
    CHECK(q1.scaled(3).coefficient(0b001) == 3);
}

TEST_CASE("lambda expansion of Pfister sums") {
    for (int m = 0; m <= 4; ++m) CHECK(lambda_expansion_matches(m));

    // the coefficient of t^2 for two blocks: q(2) + 2 q(1) - 4
    SymbolicGWPoly f = pfister_sum_lambda_poly(2);
    SymbolicGW c2 = f.coefficient(2);
    SymbolicGW want = SymbolicGW::orbit_sum(2, 2) + SymbolicGW::orbit_sum(2, 1).scaled(2) -
                      SymbolicGW::unit(2).scaled(4);
    CHECK(c2 == want);
}

TEST_CASE("orbit-basis change matrix") {
    auto M0 = lambda_orbit_matrix(0);
    CHECK(M0[0][0] == 1);

    auto M2 = lambda_orbit_matrix(2);
    CHECK(M2[0] == std::vector<BigInt>{1, 0, 0});
    CHECK(M2[1][1] == 1);
    CHECK(M2[2] == std::vector<BigInt>{-4, 2, 1});

    for (int m = 0; m <= 4; ++m) {
        auto M = lambda_orbit_matrix(m);
        for (int d = 0; d <= m; ++d) {
            CHECK(M[d][d] == 1);
            for (int dp = d + 1; dp <= m; ++dp) CHECK(M[d][dp] == 0);
        }
    }
}

TEST_CASE("SW classes of Pfister sums factor blockwise") {
    for (int m = 0; m <= 3; ++m) CHECK(sw_block_product_matches(m));
}
