#pragma once

// Named verification suites. Each suite runs a family of exact checks and
// reports one pass/fail line per check; the CLI `verify` subcommand and the
// acceptance runner are both thin wrappers around these.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "etale.hpp"
#include "fields.hpp"
#include "fixed_modules.hpp"
#include "lambda_tables.hpp"
#include "milnor.hpp"
#include "permutations.hpp"
#include "witt.hpp"

namespace altinv {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name_, bool pass_, std::string detail_ = "") {
        checks.push_back(Check{std::move(name_), pass_, std::move(detail_)});
    }
};

namespace testgen {

/// Random nonzero homogeneous element of degree d in M(g) (a random nonempty
/// subset of the degree-d monomials).
inline MilnorElement random_homogeneous(int g, int d, std::mt19937_64& rng) {
    std::vector<MilnorMonomial> all;
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask)
        if (std::popcount(mask) <= d) all.push_back(MilnorMonomial{d - std::popcount(mask), mask});
    std::vector<MilnorMonomial> chosen;
    while (chosen.empty())
        for (const auto& m : all)
            if (rng() & 1) chosen.push_back(m);
    return MilnorElement::from_monomials(g, std::move(chosen));
}

/// Random element of a normal-form set: a product of (1 + a_j) with a_j
/// homogeneous of degree 2^j, j < levels.
inline MilnorElement random_normal_form_element(int g, int levels, std::mt19937_64& rng) {
    MilnorElement x = MilnorElement::one(g);
    for (int j = 0; j < levels; ++j) {
        MilnorElement a = (rng() % 4 == 0) ? MilnorElement::zero(g)
                                           : random_homogeneous(g, 1 << j, rng);
        x *= MilnorElement::one(g) + a;
    }
    return x;
}

inline std::vector<FieldElement> square_class_reps(const Field& F) {
    switch (F.kind()) {
        case FieldKind::QuadraticallyClosed: return {F.one()};
        default: return {F.one(), F.canonical_nonsquare()};
    }
}

} // namespace testgen

/// The printed relation tables for ranks 7 and 4.
inline SuiteResult suite_lambda_table() {
    SuiteResult suite{"lambda-table", {}};
    RelationTable T7 = lambda_relation_table(7);
    const std::vector<std::pair<int, std::string>> expected7 = {
        {2, "lambda2 = 5*lambda1 - 14"}, {3, "lambda3 = 10*lambda1 - 35"},
        {4, "lambda4 = 10*lambda1 - 35"}, {5, "lambda5 = 5*lambda1 - 14"},
        {6, "lambda6 = lambda1"},         {7, "lambda7 = 1"},
    };
    for (const auto& [j, want] : expected7) {
        std::string got = T7.row_to_string(j);
        suite.add("n=7 row " + std::to_string(j), got == want, got);
    }
    RelationTable T4 = lambda_relation_table(4);
    std::string got4 = T4.row_to_string(2);
    suite.add("n=4 row 2", got4 == "lambda2 = 2*lambda1 - 2", got4);
    return suite;
}

/// Symmetric-function factorization, closure of the normal-form sets under
/// products, and the closed coefficients of a rank-2 by rank-2 product.
inline SuiteResult suite_normal_form() {
    SuiteResult suite{"normal-form", {}};
    std::mt19937_64 rng(20240811);

    // prod (1 + y_i) = prod_j (1 + s_{2^j}) for random same-degree tuples
    bool factorization_ok = true;
    for (int g = 1; g <= 5 && factorization_ok; ++g)
        for (int d = 1; d <= 3 && factorization_ok; ++d) {
            std::vector<std::vector<MilnorElement>> tuples;
            if (d == 1) {
                std::vector<MilnorElement> gens;
                for (int i = 1; i <= g; ++i) gens.push_back(MilnorElement::generator(g, i));
                tuples.push_back(gens);
            }
            for (int inst = 0; inst < 8; ++inst) {
                std::vector<MilnorElement> ys;
                int count = 1 + static_cast<int>(rng() % 6);
                for (int i = 0; i < count; ++i) ys.push_back(testgen::random_homogeneous(g, d, rng));
                tuples.push_back(std::move(ys));
            }
            for (const auto& ys : tuples) {
                MilnorElement lhs = MilnorElement::one(g);
                for (const auto& y : ys) lhs *= MilnorElement::one(g) + y;
                MilnorElement rhs = MilnorElement::one(g);
                for (int j = 0; (1 << j) <= static_cast<int>(ys.size()); ++j)
                    rhs *= MilnorElement::one(g) + elementary_symmetric(ys, 1 << j);
                if (!(lhs == rhs)) factorization_ok = false;
            }
        }
    suite.add("symmetric-function factorization (g<=5, d<=3)", factorization_ok);

    // closure: products of random rank-2/rank-3 normal forms factor again
    int closure_pass = 0;
    const int closure_trials = 100;
    for (int t = 0; t < closure_trials; ++t) {
        int g = 1 + static_cast<int>(t % 4);
        MilnorElement x = testgen::random_normal_form_element(g, 2 + static_cast<int>(rng() % 2), rng);
        MilnorElement y = testgen::random_normal_form_element(g, 2 + static_cast<int>(rng() % 2), rng);
        if (p_factorize(x * y).has_value()) ++closure_pass;
    }
    suite.add("normal-form closure under products",
              closure_pass == closure_trials,
              std::to_string(closure_pass) + "/" + std::to_string(closure_trials));

    // closed product coefficients: (1+a0)(1+a1)(1+b0)(1+b1) = (1+c0)(1+c1)(1+c2)
    {
        const int g = 6;
        auto X = [&](int i) { return MilnorElement::generator(g, i); };
        bool coeffs_ok = true;
        std::vector<std::array<MilnorElement, 4>> cases;
        cases.push_back({X(1), X(3) * X(4), X(2), X(5) * X(6)});
        for (int t = 0; t < 10; ++t)
            cases.push_back({testgen::random_homogeneous(g, 1, rng),
                             testgen::random_homogeneous(g, 2, rng),
                             testgen::random_homogeneous(g, 1, rng),
                             testgen::random_homogeneous(g, 2, rng)});
        for (const auto& [a0, a1, b0, b1] : cases) {
            MilnorElement one = MilnorElement::one(g);
            MilnorElement prod = (one + a0) * (one + a1) * (one + b0) * (one + b1);
            auto nf = p_factorize(prod);
            if (!nf || nf->factors.size() > 3) { coeffs_ok = false; break; }
            MilnorElement c0 = a0 + b0;
            MilnorElement c1 = a1 + a0 * b0 + b1;
            MilnorElement c2 = a0 * a1 * b0 + a1 * b1 + a0 * b0 * b1;
            auto factor = [&](std::size_t j) {
                return j < nf->factors.size() ? nf->factors[j] : MilnorElement::zero(g);
            };
            if (!(factor(0) == c0 && factor(1) == c1 && factor(2) == c2)) coeffs_ok = false;
        }
        suite.add("rank-2 product coefficients (c0, c1, c2)", coeffs_ok);
    }
    return suite;
}

/// Product rules for elementary symmetric functions and SW classes, and the
/// integer-level equivalence of the trinomial expansion with the closed rule.
inline SuiteResult suite_product_rule() {
    SuiteResult suite{"product-rule", {}};
    std::mt19937_64 rng(771);
    const int g = 6;

    {
        std::vector<MilnorElement> gens;
        for (int i = 1; i <= g; ++i) gens.push_back(MilnorElement::generator(g, i));
        bool ok = true;
        std::vector<MilnorElement> s(13, MilnorElement::zero(g));
        for (int m = 0; m <= 12; ++m) s[m] = elementary_symmetric(gens, m);
        for (int m = 0; m <= 12 && ok; ++m)
            for (int mp = 0; mp <= 12 && ok; ++mp) {
                MilnorElement lhs = s[m] * s[mp];
                std::uint64_t ds = diminished_sum(m, mp);
                int ov = static_cast<int>(overlap_value(m, mp));
                MilnorElement rhs = ds <= 12 ? MilnorElement::e(g, ov) * s[ds]
                                             : MilnorElement::zero(g);
                if (!(lhs == rhs)) ok = false;
            }
        suite.add("s_m s_m' = e^{m+m'-m.m'} s_{m.m'} (degree 1, m,m' <= 12)", ok);
    }
    {
        // same rule in degree 2: the e-exponent doubles
        std::vector<MilnorElement> ys;
        for (int i = 1; i <= g; ++i)
            ys.push_back(MilnorElement::generator(g, i) * MilnorElement::generator(g, i % g + 1));
        bool ok = true;
        std::vector<MilnorElement> s(13, MilnorElement::zero(g));
        for (int m = 0; m <= 12; ++m) s[m] = elementary_symmetric(ys, m);
        for (int m = 0; m <= 12 && ok; ++m)
            for (int mp = 0; mp <= 12 && ok; ++mp) {
                MilnorElement lhs = s[m] * s[mp];
                std::uint64_t ds = diminished_sum(m, mp);
                int ov = static_cast<int>(overlap_value(m, mp));
                MilnorElement rhs = ds <= 12 ? MilnorElement::e(g, 2 * ov) * s[ds]
                                             : MilnorElement::zero(g);
                if (!(lhs == rhs)) ok = false;
            }
        suite.add("s_m s_m' = e^{2(m+m'-m.m')} s_{m.m'} (degree 2)", ok);
    }
    {
        // SW product rule on random degree-1 square classes
        bool ok = true;
        for (int inst = 0; inst < 4 && ok; ++inst) {
            std::vector<MilnorElement> alphas;
            for (int i = 0; i < g; ++i) alphas.push_back(testgen::random_homogeneous(g, 1, rng));
            SWClass w = sw_total(alphas);
            for (int m = 0; m <= 12 && ok; ++m)
                for (int mp = 0; mp <= 12 && ok; ++mp)
                    if (!sw_product_check(m, mp, w)) ok = false;
        }
        suite.add("w_m w_m' product rule, both expansions (m,m' <= 12)", ok);
    }
    {
        // trinomial filtering at the integer level, against the factorial
        // oracle: the only odd coefficient sits at i = m + m' - m.m'
        bool ok = true;
        std::vector<BigInt> fact(193);
        fact[0] = 1;
        for (int i = 1; i <= 192; ++i) fact[i] = fact[i - 1] * i;
        for (int m = 0; m <= 64 && ok; ++m)
            for (int mp = 0; mp <= 64 && ok; ++mp) {
                std::uint64_t istar = overlap_value(m, mp);
                for (std::uint64_t i = 0; i <= std::uint64_t(std::min(m, mp)); ++i) {
                    BigInt tri = fact[m + mp - i] / (fact[i] * fact[m - i] * fact[mp - i]);
                    bool odd_exact = (tri % 2) == 1;
                    if (odd_exact != trinomial_is_odd(i, m - i, mp - i)) ok = false;
                    if (odd_exact != (i == istar)) ok = false;
                }
            }
        suite.add("trinomial expansion reduces to the closed rule (m,m' <= 64)", ok);
    }
    return suite;
}

/// Pfister forms: the factored lambda polynomial over every implemented
/// field and square-class pair, and the symbolic degree-2 SW class.
inline SuiteResult suite_pfister() {
    SuiteResult suite{"pfister", {}};
    for (const std::string& spec : {"qc", "real", "f:3", "f:5", "f:7"}) {
        Field F = Field::parse(spec);
        bool ok = true;
        for (const auto& x : testgen::square_class_reps(F))
            for (const auto& y : testgen::square_class_reps(F)) {
                DiagonalForm q = pfister2(F, x, y);
                GWPolynomial lhs = lambda_poly(q);
                GWClass qc = GWClass::of_form(q);
                GWPolynomial quad(F);
                quad.c = {GWClass::one(F), qc - GWClass::from_int(F, 2), GWClass::one(F)};
                GWPolynomial rhs = GWPolynomial::one_plus_t(F).pow(2) * quad;
                if (!(lhs == rhs)) ok = false;
            }
        suite.add("lambda_t factored form over " + spec, ok);
    }
    {
        const int g = 2;
        MilnorElement x = MilnorElement::generator(g, 1), y = MilnorElement::generator(g, 2);
        SWClass w = sw_total({MilnorElement::zero(g), x, y, x + y});
        MilnorElement want = MilnorElement::e(g) * x + MilnorElement::e(g) * y + x * y;
        suite.add("w2 of <1,x,y,xy> = ex+ey+xy", w.component(2) == want,
                  w.component(2).to_string());
        bool odd_zero = w.component(1).is_zero() && w.component(3).is_zero();
        suite.add("odd SW components of the Pfister form vanish", odd_zero);
    }
    return suite;
}

/// Trace forms: quadratic algebras, biquadratic blocks against Pfister
/// forms, and the one-point restriction recursion.
inline SuiteResult suite_trace_form() {
    SuiteResult suite{"trace-form", {}};
    for (std::int64_t p : {3, 5, 7}) {
        Field F = Field::finite(p);
        bool ok = true;
        for (std::int64_t xv = 1; xv < p; ++xv) {
            FieldElement x = F.from_int(xv);
            DiagonalForm got = trace_form(quadratic_algebra(F, x));
            DiagonalForm want = DiagonalForm::make(F, {F.from_int(2), F.scale(2, x)});
            if (!(GWClass::of_form(got) == GWClass::of_form(want))) ok = false;
            if (!F.is_square(x) && !(got == want)) ok = false; // exact entries in the field case
        }
        suite.add("trace form of X^2-x is <2,2x> over f:" + std::to_string(p), ok);
    }
    for (std::int64_t p : {3, 5, 7}) {
        Field F = Field::finite(p);
        bool ok = true;
        for (const auto& x : testgen::square_class_reps(F))
            for (const auto& y : testgen::square_class_reps(F)) {
                EtaleAlgebra L = type_T_algebra(F, 0, {{x, y}});
                if (!(GWClass::of_form(trace_form(L)) == GWClass::of_form(pfister2(F, x, y))))
                    ok = false;
            }
        suite.add("biquadratic trace form is the Pfister form over f:" + std::to_string(p), ok);
    }
    {
        bool ok = true;
        for (std::int64_t p : {3, 5, 7}) {
            Field F = Field::finite(p);
            for (const auto& ct : {CycleType{{2, 1}}, CycleType{{3, 1}}, CycleType{{2, 2}}}) {
                EtaleAlgebra L = algebra_from_cycle_type(p, ct);
                DiagonalForm before = trace_form(L);
                EtaleAlgebra extended = L;
                extended.append_factor(poly_x(F));
                DiagonalForm after = trace_form(extended);
                std::vector<FieldElement> want = before.entries;
                want.push_back(F.one());
                if (!(after.entries == want)) ok = false;
            }
        }
        suite.add("trace form of L + k appends <1>", ok);
    }
    return suite;
}

/// Subgroup orders, indices and parities; generators and fixed points of the
/// block subgroup and the twisted embedding.
inline SuiteResult suite_groups() {
    SuiteResult suite{"groups", {}};
    {
        bool ok = true;
        std::string detail;
        for (int n = 4; n <= 12; n += 2) {
            BigInt idx = matching_centralizer_index(n);
            if (idx != odd_product(n) || idx % 2 == 0) ok = false;
            detail += std::to_string(n) + ":" + idx.str() + " ";
        }
        suite.add("centralizer index = product of odd i <= n (n = 4..12)", ok, detail);
    }
    {
        bool ok = true;
        for (int n : {4, 6, 8}) {
            GeneratedSubgroup D = matching_centralizer(n);
            Permutation s = adjacent_pairing(n);
            // independent enumeration: filter the alternating group directly
            std::vector<Permutation> brute;
            std::vector<int> v(n);
            std::iota(v.begin(), v.end(), 0);
            do {
                Permutation p = Permutation::from_images(v);
                if (p.sign() > 0 && p * s == s * p) brute.push_back(p);
            } while (std::next_permutation(v.begin(), v.end()));
            std::sort(brute.begin(), brute.end());
            if (!(brute == D.elements())) ok = false;
        }
        suite.add("centralizer matches brute-force enumeration (n = 4, 6, 8)", ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n : {6, 7, 10, 11}) {
            TwistedEmbedding emb = twisted_embedding(n);
            GeneratedSubgroup img = emb.image();
            if (BigInt(img.order()) != factorial(n - 2)) ok = false;
            BigInt idx = alternating_order(n) / BigInt(img.order());
            if (idx != BigInt(n) * (n - 1) / 2 || idx % 2 == 0) ok = false;
            detail += std::to_string(n) + ":" + idx.str() + " ";
        }
        suite.add("twisted embedding index n(n-1)/2 is odd (n = 6, 7, 10, 11)", ok, detail);
    }
    {
        GeneratedSubgroup E = bitransposition_block_group(10);
        std::vector<Permutation> want = {
            Permutation::from_cycles(10, {{1, 2}, {3, 4}}),
            Permutation::from_cycles(10, {{1, 3}, {2, 4}}),
            Permutation::from_cycles(10, {{5, 6}, {7, 8}}),
            Permutation::from_cycles(10, {{5, 7}, {6, 8}}),
        };
        suite.add("block subgroup generators for n = 10", E.generators() == want && E.order() == 16);
    }
    {
        GeneratedSubgroup E = bitransposition_block_group(6);
        GeneratedSubgroup C = twisted_embedding(6).transposition_cube_image();
        bool ok = E.fixed_points() == std::vector<int>{5, 6} && C.fixed_points().empty() &&
                  C.order() == 4;
        suite.add("fixed points: block subgroup has 2, twisted cube has 0 (n = 6)", ok);
    }
    return suite;
}

/// Fixed modules on both sides, the symbolic lambda expansion, and the
/// unitriangular change of basis.
inline SuiteResult suite_fixed_modules() {
    SuiteResult suite{"fixed-modules", {}};
    {
        const int g = 2;
        MilnorElement quad = MilnorElement::e(g) * MilnorElement::generator(g, 1) +
                             MilnorElement::e(g) * MilnorElement::generator(g, 2) +
                             MilnorElement::generator(g, 1) * MilnorElement::generator(g, 2);
        std::vector<MilnorElement> want = {MilnorElement::one(g), quad};
        ModuleBasisReport a3 = fixed_submodule_H(LinearAction::cyclic_three(), 8);
        ModuleBasisReport s3 = fixed_submodule_H(LinearAction::full_s3(), 8);
        suite.add("3-cycle fixed module basis {1, ex+ey+xy}", a3.generators == want);
        suite.add("full GL2 fixed module basis {1, ex+ey+xy}", s3.generators == want);
    }
    {
        auto orbits = fixed_permutation_module_W(
            4, {Permutation::from_cycles(4, {{2, 3, 4}})});
        bool ok = orbits == std::vector<std::vector<int>>{{0}, {1, 2, 3}};
        suite.add("orbit-sum basis {1, a_x + a_y + a_xy}", ok);
    }
    {
        bool ok = true;
        for (int m = 0; m <= 3; ++m)
            if (!lambda_expansion_matches(m)) ok = false;
        suite.add("lambda expansion of Pfister sums (m <= 3)", ok);
    }
    {
        bool ok = true;
        for (int m = 0; m <= 3; ++m)
            if (!sw_block_product_matches(m)) ok = false;
        suite.add("SW class of Pfister sums factors blockwise (m <= 3)", ok);
    }
    {
        bool ok = true;
        for (int m = 0; m <= 4; ++m) {
            auto M = lambda_orbit_matrix(m);
            for (int d = 0; d <= m; ++d) {
                if (M[d][d] != 1) ok = false;
                for (int dp = d + 1; dp <= m; ++dp)
                    if (M[d][dp] != 0) ok = false;
            }
        }
        suite.add("orbit-basis change matrix is unitriangular (m <= 4)", ok);
    }
    return suite;
}

/// The full sweep: every torsor class over three primes plus the real closed
/// family, with divisibility, vanishing sums, and the relation table.
inline SuiteResult suite_lambda_sweep() {
    SuiteResult suite{"lambda-sweep", {}};
    for (std::int64_t p : {3, 5, 7}) {
        SweepReport rep = sweep_verify(p, 10);
        std::string detail = std::to_string(rep.rows.size()) + " instances";
        if (const SweepInstance* fail = rep.first_failure())
            detail = "failed at n=" + std::to_string(fail->n) + " " + fail->label;
        suite.add("sweep over f:" + std::to_string(p) + ", n <= 10", rep.all_ok(), detail);
    }
    {
        SweepReport rep = sweep_verify_real(12);
        std::string detail = std::to_string(rep.rows.size()) + " instances";
        if (const SweepInstance* fail = rep.first_failure())
            detail = "failed at " + fail->label;
        suite.add("sweep over real closed forms, dim <= 12", rep.all_ok(), detail);
    }
    return suite;
}

/// Split-rule totals against brute-force conjugacy classes.
inline SuiteResult suite_torsor_count() {
    SuiteResult suite{"torsor-count", {}};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 10; ++n) {
        int rule_total = 0;
        for (const auto& cls : enumerate_An_torsors(3, n)) rule_total += cls.split_count;
        int brute_total = 0;
        for (const auto& cc : conjugacy_classes(n, true)) brute_total += cc.class_count;
        if (rule_total != brute_total) ok = false;
        detail += std::to_string(n) + ":" + std::to_string(rule_total) + " ";
    }
    suite.add("split-rule totals match brute-force class counts (n <= 10)", ok, detail);
    return suite;
}

/// Odd SW components of trivial-discriminant real forms vanish.
inline SuiteResult suite_odd_vanishing() {
    SuiteResult suite{"odd-vanishing", {}};
    Field F = Field::real_closed();
    bool ok = true;
    for (int rank = 1; rank <= 10 && ok; ++rank)
        for (std::uint32_t signs = 0; signs < (1u << rank); ++signs) {
            std::vector<FieldElement> entries;
            for (int i = 0; i < rank; ++i)
                entries.push_back(F.from_int(signs >> i & 1 ? -1 : 1));
            DiagonalForm q = DiagonalForm::make(F, std::move(entries));
            SWClass w = sw_total_of_form(q);
            bool trivial_disc = !disc(q).nontrivial;
            bool odd_all_zero = true;
            for (int i = 1; i <= rank; i += 2)
                if (!w.component(i).is_zero()) odd_all_zero = false;
            if (trivial_disc && !odd_all_zero) ok = false;
            if (!trivial_disc && w.component(1).is_zero()) ok = false;
        }
    suite.add("trivial-disc real forms have no odd SW components (rank <= 10)", ok);
    return suite;
}

inline std::vector<SuiteResult> run_suite(const std::string& name) {
    if (name == "lambda-table") return {suite_lambda_table()};
    if (name == "normal-form") return {suite_normal_form()};
    if (name == "product-rule") return {suite_product_rule()};
    if (name == "pfister") return {suite_pfister()};
    if (name == "trace-form") return {suite_trace_form()};
    if (name == "groups") return {suite_groups()};
    if (name == "fixed-modules") return {suite_fixed_modules()};
    if (name == "lambda-sweep") return {suite_lambda_sweep()};
    if (name == "torsor-count") return {suite_torsor_count()};
    if (name == "odd-vanishing") return {suite_odd_vanishing()};
    if (name == "all")
        return {suite_lambda_table(),  suite_normal_form(),  suite_product_rule(),
                suite_pfister(),       suite_trace_form(),   suite_groups(),
                suite_fixed_modules(), suite_lambda_sweep(), suite_torsor_count(),
                suite_odd_vanishing()};
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<std::string> suite_names() {
    return {"lambda-table", "normal-form", "product-rule", "pfister",      "trace-form",
            "groups",       "fixed-modules", "lambda-sweep", "torsor-count", "odd-vanishing"};
}

} // namespace altinv
