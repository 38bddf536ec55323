#include "gapsym/semimodule.h"

#include <gtest/gtest.h>

#include "gapsym/error.h"
#include "gapsym/oracle.h"
#include "test_util.h"

using namespace gapsym;
using gapsym_test::as_set;

TEST(semimodule, make_keeps_lean_order) {
    auto m = make_semimodule(make_semigroup({5, 7}), {0, 9, 11, 8});
    EXPECT_EQ(m.min_generators(), (std::vector<Int>{0, 9, 11, 8}));
    EXPECT_EQ(m.ed(), 4);
    EXPECT_TRUE(m.is_normalized());
}

TEST(semimodule, make_normalizes_and_minimalizes) {
    auto m = make_semimodule(make_semigroup({7, 8}), {3, 3, 10});
    EXPECT_EQ(m.min_generators(), (std::vector<Int>{0}));
    auto n = make_semimodule(make_semigroup({5, 8}), {0, 4, 6, 7});
    // Kept as a set; the stored order follows the lattice: 6=(2,3), 4=(4,2), 7=(5,1).
    EXPECT_EQ(as_set(n.min_generators()), (std::set<Int>{0, 4, 6, 7}));
    EXPECT_EQ(n.min_generators(), (std::vector<Int>{0, 6, 4, 7}));
    EXPECT_EQ(n.ed(), 4);
}

TEST(semimodule, is_lean) {
    auto s57 = make_semigroup({5, 7});
    EXPECT_TRUE(is_lean(s57, std::vector<Int>{0, 9, 11, 8}));
    EXPECT_FALSE(is_lean(s57, std::vector<Int>{0, 5}));
    EXPECT_TRUE(is_lean(make_semigroup({5, 8}), std::vector<Int>{0, 4, 6, 7}));
}

TEST(semimodule, invariants) {
    auto m = make_semimodule(make_semigroup({5, 7}), {0, 9, 11, 8});
    EXPECT_EQ(m.gap_list(), (std::vector<Int>{1, 2, 3, 4, 6}));
    EXPECT_EQ(sm_conductor(m), 7);
    EXPECT_EQ(sm_delta(m), 2);
    EXPECT_TRUE(member(m, 5));
    EXPECT_FALSE(member(m, 6));
    EXPECT_TRUE(member(m, 100));

    auto s = make_semigroup({7, 8});
    auto g = make_semimodule(s, {0});
    EXPECT_EQ(sm_conductor(g), s.conductor());
    EXPECT_EQ(sm_delta(g), delta_semigroup(s));

    auto n = make_semimodule(make_semigroup({5, 8}), {0, 4, 6, 7});
    EXPECT_EQ(sm_delta(n), 1);
    EXPECT_EQ(sm_conductor(n), 4);
}

TEST(semimodule, module_equal_to_naturals) {
    auto m = make_semimodule(make_semigroup({2, 3}), {0, 1});
    EXPECT_EQ(m.conductor(), 0);
    EXPECT_EQ(m.delta(), 0);
}

TEST(semimodule, dual_examples) {
    auto s57 = make_semigroup({5, 7});
    EXPECT_EQ(as_set(dual(make_semimodule(s57, {0, 1})).min_generators()), (std::set<Int>{14, 20}));
    EXPECT_EQ(dual(make_semimodule(s57, {0})).min_generators(), (std::vector<Int>{0}));

    auto s78 = make_semigroup({7, 8});
    auto d = dual(make_semimodule(s78, {0, 12}));
    EXPECT_EQ(as_set(d.min_generators()), (std::set<Int>{16, 28}));
    EXPECT_EQ(normalize(d).min_generators(), (std::vector<Int>{0, 12}));
    EXPECT_TRUE(is_selfdual(make_semimodule(s78, {0, 12})));
}

TEST(semimodule, dual_general_semigroup) {
    auto s = make_semigroup({4, 6, 13});
    auto m = make_semimodule(s, {0, 2, 7});
    auto d = dual(m);
    auto brute = oracle::brute_dual(s, m.min_generators(), {80});
    EXPECT_EQ(d.min_generators(), brute.minimal);
}

TEST(semimodule, syzygy_examples) {
    auto m = make_semimodule(make_semigroup({5, 7}), {0, 9, 11, 8});
    EXPECT_EQ(as_set(syzygy(m).min_generators()), (std::set<Int>{14, 15, 16, 18}));

    auto s = make_semigroup({4, 6, 13});
    EXPECT_EQ(syzygy(make_semimodule(s, {0, 11})).min_generators(), (std::vector<Int>{17, 19, 24}));

    EXPECT_THROW(syzygy(make_semimodule(s, {0})), Error);
}

TEST(semimodule, syzygy_of_two_element_sets) {
    for (auto [alpha, beta] : gapsym_test::pairs_up_to(15)) {
        TwoGenView t(alpha, beta);
        auto s = t.semigroup();
        for (const auto &g : lattice_gaps(t)) {
            auto z = syzygy(make_semimodule(s, {0, g.value}));
            EXPECT_EQ(as_set(z.min_generators()),
                      (std::set<Int>{alpha * beta - g.b * beta, alpha * beta - g.a * alpha}))
                << alpha << "," << beta << " g=" << g.value;
        }
    }
}

TEST(semimodule, lattice_path_example) {
    auto m = make_semimodule(make_semigroup({5, 7}), {0, 9, 11, 8});
    auto c = lattice_path(m);
    EXPECT_EQ(c.se_turns, (std::vector<Cell>{{0, 3}, {1, 2}, {2, 1}, {4, 0}}));
    EXPECT_EQ(c.syzygy_values, (std::vector<Int>{14, 16, 18, 15}));
    EXPECT_EQ(c.max_syzygy, 18);
    EXPECT_EQ(c.max_syzygy_point, (Cell{2, 1}));
    ASSERT_EQ(c.es_turns.size(), 3u);
    EXPECT_EQ(c.es_turns[0].cell(), (Cell{1, 3}));

    auto s = make_semigroup({8, 13});
    auto pair = lattice_path(make_semimodule(s, {0, 25}));
    EXPECT_EQ(pair.syzygy_values, (std::vector<Int>{104 - 3 * 13, 104 - 5 * 8}));

    try {
        lattice_path(make_semimodule(s, {0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::PrincipalModule);
    }
    try {
        lattice_path(make_semimodule(make_semigroup({4, 6, 13}), {0, 1}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotTwoGenerated);
    }
}

TEST(semimodule, conductor_formula_examples) {
    EXPECT_EQ(sm_conductor_formula(make_semimodule(make_semigroup({5, 7}), {0, 9, 11, 8})), 7);
    EXPECT_EQ(sm_conductor_formula(make_semimodule(make_semigroup({8, 13}), {0, 25})), 45);
    EXPECT_EQ(sm_conductor_formula(make_semimodule(make_semigroup({7, 8}), {0, 4})), 18);
    EXPECT_EQ(make_semimodule(make_semigroup({8, 13}), {0, 25}).conductor(), 45);
    EXPECT_EQ(make_semimodule(make_semigroup({7, 8}), {0, 4}).conductor(), 18);
}

TEST(semimodule, delta_formula_examples) {
    EXPECT_EQ(delta_formula(make_semimodule(make_semigroup({5, 7}), {0, 9, 11, 8})), 2);
    auto s78 = make_semigroup({7, 8});
    EXPECT_EQ(delta_formula(make_semimodule(s78, {0, 5})), 15);
    EXPECT_EQ(make_semimodule(s78, {0, 5}).delta(), 15);
    EXPECT_EQ(make_semimodule(s78, {0, 5}).conductor(), 26);
    EXPECT_EQ(delta_formula(make_semimodule(s78, {0})), 21);
}

TEST(semimodule, predicates) {
    auto m12 = make_semimodule(make_semigroup({7, 8}), {0, 12});
    EXPECT_TRUE(is_fixed_point(m12));
    EXPECT_TRUE(is_selfdual(m12));
    EXPECT_TRUE(is_symmetric_sm(m12));

    auto m58 = make_semimodule(make_semigroup({5, 8}), {0, 4, 6, 7});
    EXPECT_FALSE(is_fixed_point(m58));

    auto m9 = make_semimodule(make_semigroup({10, 14, 27}), {0, 9});
    EXPECT_FALSE(is_fixed_point(m9));
    EXPECT_FALSE(is_symmetric_sm(m9));
    EXPECT_EQ(as_set(syzygy(m9).min_generators()), (std::set<Int>{37, 50, 56, 69}));
    EXPECT_EQ(normalize(syzygy(m9)).min_generators(), (std::vector<Int>{0, 13, 19, 32}));

    EXPECT_THROW(is_fixed_point(make_semimodule(make_semigroup({7, 8}), {0})), Error);
}

TEST(semimodule, picard_orbits) {
    auto o1 = picard_orbit(make_semimodule(make_semigroup({7, 8}), {0, 12}), 10);
    EXPECT_EQ(o1.cycle_length, 1u);
    EXPECT_EQ(o1.cycle_start, 0u);

    auto s = make_semigroup({4, 6, 13});
    auto o2 = picard_orbit(make_semimodule(s, {0, 1}), 10);
    EXPECT_EQ(o2.cycle_length, 1u);
    EXPECT_EQ(as_set(syzygy(make_semimodule(s, {0, 1})).min_generators()), (std::set<Int>{13, 14}));

    auto o3 = picard_orbit(make_semimodule(s, {0, 11}), 10);
    ASSERT_GE(o3.lean_sets.size(), 2u);
    EXPECT_EQ(o3.lean_sets[1], (std::vector<Int>{0, 2, 7}));
    EXPECT_NE(o3.lean_sets[1], o3.lean_sets[0]);
}

// Lattice-path data, formulas and closed-form duals against the brute oracle for
// every lean set of the small pairs. The full alpha < beta <= 12 sweep is in
// the acceptance suite.
TEST(semimodule, formulas_match_oracle_small) {
    for (auto [alpha, beta] : gapsym_test::pairs_up_to(9)) {
        auto s = make_semigroup({alpha, beta});
        for (const auto &lean : oracle::enumerate_lean_sets(alpha, beta)) {
            auto m = make_semimodule(s, lean);
            ASSERT_EQ(m.ed(), static_cast<Int>(lean.size()));
            const Int top = lean.back();
            const auto bound = oracle::default_bound(s, top);
            const auto inv = oracle::brute_invariants(s, lean, bound);
            EXPECT_EQ(sm_conductor_formula(m), inv.conductor);
            EXPECT_EQ(delta_formula(m), inv.delta);
            EXPECT_EQ(m.conductor(), inv.conductor);
            EXPECT_EQ(m.delta(), inv.delta);
            EXPECT_EQ(as_set(dual(m).min_generators()), as_set(oracle::brute_dual(s, lean, bound).minimal));
            EXPECT_EQ(normalize(dual(dual(m))).min_generators(), m.min_generators());
            if (m.ed() < 2) {
                continue;
            }
            auto path = lattice_path(m);
            EXPECT_EQ(as_set(path.syzygy_values), as_set(oracle::brute_syzygy(s, lean, bound).minimal));
            EXPECT_EQ(as_set(path.syzygy_values), as_set(syzygy(m).min_generators()));
            for (std::size_t k = 0; k + 1 < path.se_turns.size(); ++k) {
                const auto &p = path.se_turns[k];
                const auto &q = path.se_turns[k + 1];
                EXPECT_TRUE(p.a <= q.a && p.b >= q.b);
            }
        }
    }
}

TEST(semimodule, three_predicates_agree_on_gaps) {
    for (auto [alpha, beta] : gapsym_test::pairs_up_to(20)) {
        TwoGenView t(alpha, beta);
        auto s = t.semigroup();
        for (Int g : s.gaps()) {
            auto m = make_semimodule(s, {0, g});
            const bool fixed = is_fixed_point(m);
            EXPECT_EQ(fixed, is_selfdual(m)) << alpha << "," << beta << " g=" << g;
            EXPECT_EQ(fixed, is_symmetric_sm(m)) << alpha << "," << beta << " g=" << g;
        }
    }
}
