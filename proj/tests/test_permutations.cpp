#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <altinv/permutations.hpp>

using namespace altinv;

TEST_CASE("permutation basics") {
    Permutation t = Permutation::from_cycles(4, {{1, 2}});
    CHECK(t.sign() == -1);
    Permutation bt = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    CHECK(bt.sign() == 1);
    CHECK(Permutation::identity(4).sign() == 1);

    CHECK(bt * bt == Permutation::identity(4));
    CHECK(bt.inverse() == bt);
    CHECK(bt.to_string() == "(1 2)(3 4)");
    CHECK(Permutation::identity(3).to_string() == "()");

    Permutation c = Permutation::from_cycles(5, {{1, 2, 3}});
    CHECK(c.cycle_type() == CycleType{{3, 1, 1}});
    CHECK(c.fixed_points() == std::vector<int>{4, 5});
    CHECK(Permutation::decode(5, c.encode()) == c);

    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("block bitransposition subgroup") {
    GeneratedSubgroup e10 = bitransposition_block_group(10);
    CHECK(e10.order() == 16);
    CHECK(e10.fixed_points() == std::vector<int>{9, 10});

    CHECK(bitransposition_block_group(4).order() == 4);

    GeneratedSubgroup e8 = bitransposition_block_group(8);
    CHECK(e8.order() == 16); // rank 4

    // elementary abelian: every nontrivial element is an involution, and the
    // two sibling bitranspositions with the same support are also members
    for (const auto& g : e8.elements()) {
        if (g.is_identity()) continue;
        CHECK(g * g == Permutation::identity(8));
        CycleType ct = g.cycle_type();
        if (ct == CycleType{{2, 2, 1, 1, 1, 1}}) {
            // support = the four moved points a < b < c < d; the two other
            // pairings of the same support must lie in the subgroup
            std::vector<int> sup;
            for (int i = 0; i < 8; ++i)
                if (g(i) != i) sup.push_back(i + 1);
            REQUIRE(sup.size() == 4);
            Permutation s1 = Permutation::from_cycles(8, {{sup[0], sup[2]}, {sup[1], sup[3]}});
            Permutation s2 = Permutation::from_cycles(8, {{sup[0], sup[3]}, {sup[1], sup[2]}});
            CHECK(e8.contains(s1));
            CHECK(e8.contains(s2));
        }
    }

    // commutativity
    for (const auto& a : e8.generators())
        for (const auto& b : e8.generators()) CHECK(a * b == b * a);

    CHECK_THROWS_AS(bitransposition_block_group(3), std::invalid_argument);
}

TEST_CASE("centralizer of the adjacent pairing") {
    CHECK(matching_centralizer(4).order() == 4);
    CHECK(matching_centralizer_index(4) == 3);

    GeneratedSubgroup d8 = matching_centralizer(8);
    CHECK(d8.order() == 192);
    CHECK(matching_centralizer_index(8) == 105);

    Permutation s = adjacent_pairing(8);
    for (const auto& g : d8.elements()) {
        CHECK(g.sign() == 1);
        CHECK(g * s == s * g);
    }

    // centralizer of (1 2)(3 4) inside the alternating group on 4 points is
    // the bitransposition subgroup
    GeneratedSubgroup d4 = matching_centralizer(4);
    GeneratedSubgroup e4 = bitransposition_block_group(4);
    CHECK(d4.elements() == e4.elements());

    for (int n : {4, 6, 8, 10, 12}) {
        BigInt idx = matching_centralizer_index(n);
        CHECK(idx == odd_product(n));
        CHECK(idx % 2 == 1);
    }

    CHECK_THROWS_AS(matching_centralizer(7), std::invalid_argument);
}

TEST_CASE("twisted embedding of the symmetric group") {
    TwistedEmbedding emb = twisted_embedding(6);

    // homomorphism on the whole of the symmetric group on 4 points
    std::vector<Permutation> s4;
    {
        std::vector<int> v(4);
        std::iota(v.begin(), v.end(), 0);
        do
            s4.push_back(Permutation::from_images(v));
        while (std::next_permutation(v.begin(), v.end()));
    }
    for (const auto& a : s4) {
        CHECK(emb.apply(a).sign() == 1);
        for (const auto& b : s4) CHECK(emb.apply(a * b) == emb.apply(a) * emb.apply(b));
    }

    GeneratedSubgroup img = emb.image();
    CHECK(img.order() == 24);
    CHECK(alternating_order(6) / BigInt(img.order()) == 15);

    TwistedEmbedding emb7 = twisted_embedding(7);
    GeneratedSubgroup img7 = emb7.image();
    CHECK(BigInt(img7.order()) == factorial(5));
    BigInt idx7 = alternating_order(7) / BigInt(img7.order());
    CHECK(idx7 == 21);
    CHECK(idx7 % 2 == 1);

    // fixed points of the embedded transposition cube versus the block group
    GeneratedSubgroup c6 = emb.transposition_cube_image();
    CHECK(c6.order() == 4);
    CHECK(c6.fixed_points().empty());
    CHECK(bitransposition_block_group(6).fixed_points().size() == 2);

    CHECK_THROWS_AS(twisted_embedding(8), std::invalid_argument);
    CHECK_THROWS_AS(twisted_embedding(9), std::invalid_argument);
}

TEST_CASE("conjugacy classes by orbit enumeration") {
    auto a4 = conjugacy_classes(4, true);
    int total4 = 0;
    for (const auto& c : a4) total4 += c.class_count;
    CHECK(total4 == 4);

    for (const auto& c : conjugacy_classes(5, true))
        if (c.type == CycleType{{5}}) CHECK(c.class_count == 2);

    // symmetric groups: one class per partition
    for (int n = 1; n <= 6; ++n) {
        auto classes = conjugacy_classes(n, false);
        CHECK(classes.size() == partitions_of(n).size());
        for (const auto& c : classes) CHECK(c.class_count == 1);
    }

    // split rule agreement for alternating groups
    for (int n = 3; n <= 8; ++n) {
        auto classes = conjugacy_classes(n, true);
        for (const auto& c : classes) {
            CHECK(c.type.is_even());
            CHECK(c.class_count == (c.type.splits() ? 2 : 1));
        }
    }

    CHECK_THROWS_AS(conjugacy_classes(11, true), std::invalid_argument);
}
