#include "gapsym/semigroup.h"

#include <gtest/gtest.h>

#include "gapsym/error.h"
#include "test_util.h"

using namespace gapsym;
using gapsym_test::pairs_up_to;

namespace {

ErrorKind kind_of(void (*f)()) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(semigroup, seven_eight) {
    auto s = make_semigroup({7, 8});
    EXPECT_EQ(s.generators(), (std::vector<Int>{7, 8}));
    EXPECT_EQ(s.conductor(), 42);
    EXPECT_EQ(s.frobenius(), 41);
    EXPECT_EQ(s.genus(), 21);
    EXPECT_EQ(delta_semigroup(s), 21);
    EXPECT_TRUE(s.contains(0));
    EXPECT_FALSE(s.contains(41));
    EXPECT_TRUE(s.contains(42));
    EXPECT_TRUE(s.is_two_generated());
}

TEST(semigroup, four_six_thirteen) {
    auto s = make_semigroup({4, 6, 13});
    EXPECT_EQ(s.gaps(), (std::vector<Int>{1, 2, 3, 5, 7, 9, 11, 15}));
    EXPECT_FALSE(s.contains(15));
    EXPECT_EQ(s.conductor(), 16);
    EXPECT_EQ(s.embedding_dimension(), 3);
}

TEST(semigroup, redundant_generators_dropped) {
    auto s = make_semigroup({8, 12, 6, 4, 13});
    EXPECT_EQ(s.generators(), (std::vector<Int>{4, 6, 13}));
    // Removing any generator must change the semigroup.
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
        std::vector<Int> rest = s.generators();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        EXPECT_FALSE(gapsym_test::represented(rest, s.generators()[i]));
    }
}

TEST(semigroup, fig1_gaps) {
    auto s = make_semigroup({5, 7});
    EXPECT_EQ(s.gaps(), (std::vector<Int>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23}));
}

TEST(semigroup, three_generator_conductor) {
    auto s = make_semigroup({10, 14, 27});
    EXPECT_EQ(s.conductor(), 74);
    EXPECT_EQ(s.genus(), 37);
}

TEST(semigroup, naturals) {
    auto s = make_semigroup({1});
    EXPECT_EQ(s.conductor(), 0);
    EXPECT_EQ(s.frobenius(), -1);
    EXPECT_TRUE(s.gaps().empty());
    EXPECT_EQ(make_semigroup({2, 3, 1}).generators(), (std::vector<Int>{1}));
}

TEST(semigroup, errors) {
    EXPECT_EQ(kind_of([] { make_semigroup(std::vector<Int>{}); }), ErrorKind::EmptyInput);
    EXPECT_EQ(kind_of([] { make_semigroup({4, 6}); }), ErrorKind::GcdNotOne);
    EXPECT_EQ(kind_of([] { make_semigroup({0, 3}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { TwoGenView(4, 6); }), ErrorKind::GcdNotOne);
    EXPECT_EQ(kind_of([] { TwoGenView(5, 5); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { TwoGenView(1, 3); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { TwoGenView::of(make_semigroup({3, 4, 5})); }), ErrorKind::NotTwoGenerated);
    EXPECT_EQ(kind_of([] { gap_to_lattice(TwoGenView(5, 7), 5); }), ErrorKind::NotAGap);
    EXPECT_EQ(kind_of([] { lattice_to_gap(TwoGenView(7, 8), 6, 2); }), ErrorKind::OutOfTriangle);
    EXPECT_EQ(kind_of([] { lattice_to_gap(TwoGenView(7, 8), 0, 2); }), ErrorKind::OutOfTriangle);
}

TEST(semigroup, lattice_examples) {
    TwoGenView t(5, 7);
    EXPECT_EQ(gap_to_lattice(t, 23).cell(), (Cell{1, 1}));
    EXPECT_EQ(gap_to_lattice(t, 1).cell(), (Cell{4, 2}));
    EXPECT_EQ(gap_to_lattice(TwoGenView(8, 13), 25).cell(), (Cell{5, 3}));
    EXPECT_EQ(lattice_to_gap(t, 2, 2), 11);
    EXPECT_EQ(lattice_to_gap(TwoGenView(7, 8), 4, 3), 4);
}

TEST(semigroup, gap_order) {
    TwoGenView t(5, 7);
    auto e9 = gap_to_lattice(t, 9);
    auto e11 = gap_to_lattice(t, 11);
    EXPECT_TRUE(gap_order_leq(e9, e11));
    EXPECT_TRUE(gap_order_leq(e9, e9));
    EXPECT_FALSE(gap_order_leq(e11, e9));
}

TEST(semigroup, two_generator_sweep) {
    for (auto [alpha, beta] : pairs_up_to(40)) {
        TwoGenView t(alpha, beta);
        auto s = t.semigroup();
        const auto expected = gapsym_test::two_gen_gaps(alpha, beta);
        ASSERT_EQ(s.gaps(), expected) << alpha << "," << beta;
        EXPECT_EQ(s.conductor(), (alpha - 1) * (beta - 1));
        EXPECT_EQ(s.genus(), (alpha - 1) * (beta - 1) / 2);
        EXPECT_EQ(delta_semigroup(s), s.genus());

        auto lg = lattice_gaps(t);
        ASSERT_EQ(static_cast<Int>(lg.size()), s.genus());
        std::vector<Int> values;
        for (const auto &g : lg) {
            EXPECT_EQ(lattice_to_gap(t, g.a, g.b), g.value);
            EXPECT_EQ(gap_to_lattice(t, g.value), g);
            values.push_back(g.value);
        }
        std::sort(values.begin(), values.end());
        EXPECT_EQ(values, expected);
    }
}

TEST(semigroup, membership_matches_representations) {
    for (auto gens : std::vector<std::vector<Int>>{{4, 6, 13}, {10, 14, 27}, {5, 9, 21}, {6, 7, 8, 9, 10, 11}}) {
        auto s = make_semigroup(gens);
        for (Int x = 0; x <= s.conductor() + s.max_generator() + 5; ++x) {
            EXPECT_EQ(s.contains(x), gapsym_test::represented(gens, x)) << x;
        }
        if (!s.gaps().empty()) {
            EXPECT_EQ(s.gaps().back(), s.frobenius());
        }
    }
}

TEST(semigroup, lean_iff_staircase) {
    // On lean sets the order is total: b strictly decreases as a increases.
    TwoGenView t(5, 7);
    auto lg = lattice_gaps(t);
    for (const auto &x : lg) {
        for (const auto &y : lg) {
            const Int d = x.value > y.value ? x.value - y.value : y.value - x.value;
            const bool lean_pair = x == y || !t.semigroup().contains(d);
            const bool staircase = (x.a < y.a && x.b > y.b) || (y.a < x.a && y.b > x.b);
            if (!(x == y)) {
                EXPECT_EQ(lean_pair, staircase) << x.value << " " << y.value;
            }
        }
    }
}
