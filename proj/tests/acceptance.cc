// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gapsym/error.h"
#include "gapsym/fundamental.h"
#include "gapsym/oracle.h"
#include "gapsym/semimodule.h"
#include "gapsym/survey.h"
#include "gapsym/symmetry.h"
#include "gapsym/wilf.h"
#include "test_util.h"

using namespace gapsym;
using gapsym_test::as_set;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::set<Int> values_of(const TwoGenView &t, const Polyomino &p) {
    return as_set(polyomino_values(t, p));
}

Outcome seven_eight_regions() {
    Outcome o;
    TwoGenView t(7, 8);
    auto sg = supersymmetric_gaps(t);
    o.require(sg.side == TriangleSide::Right, "SG side is not T_r");
    o.require(values_of(t, sg.cells) == std::set<Int>{5, 6, 13}, "SG values differ from {5,6,13}");
    auto ssg = self_symmetric_gaps(t);
    o.require(values_of(t, ssg) == std::set<Int>{4, 12, 20}, "SSG values differ from {4,12,20}");
    auto p = gap_partition(t);
    const std::vector<std::size_t> sizes = {p.t_u.size(), p.s_alpha_t_u.size(), p.ssg.size(), p.t_r.size(),
                                            p.s_beta_t_r.size()};
    o.require(sizes == std::vector<std::size_t>{6, 6, 3, 3, 3}, "partition block sizes differ from 6,6,3,3,3");
    auto gaps = reconstruct_from_symmetric(7, 8, sg.side, sg.cells, ssg);
    o.require(gaps.size() == 21 && gaps == gapsym_test::two_gen_gaps(7, 8), "reconstruction is not the 21 gaps");
    o.detail = o.pass ? "SG=T_r {5,6,13}, SSG {4,12,20}, blocks 6,6,3,3,3, 21 gaps rebuilt" : o.detail;
    return o;
}

// Published cell labels of the <8,13> lattice: (a, b, gap, W).
const std::vector<std::tuple<Int, Int, Int, Int>> kEightThirteenLabels = {
    {1, 1, 83, -6},  {2, 1, 75, -9},   {3, 1, 67, -7},  {4, 1, 59, -5},  {5, 1, 51, -3},  {6, 1, 43, -1},
    {7, 1, 35, 1},   {8, 1, 27, 3},    {9, 1, 19, 5},   {10, 1, 11, 7},  {11, 1, 3, 9},   {1, 2, 70, -4},
    {2, 2, 62, -8},  {3, 2, 54, -12},  {4, 2, 46, -10}, {5, 2, 38, -6},  {6, 2, 30, -2},  {7, 2, 22, 2},
    {8, 2, 14, 6},   {9, 2, 6, 10},    {1, 3, 57, -2},  {2, 3, 49, -4},  {3, 3, 41, -6},  {4, 3, 33, -8},
    {5, 3, 25, -9},  {6, 3, 17, -3},   {7, 3, 9, 3},    {8, 3, 1, 9},    {1, 4, 44, 0},   {2, 4, 36, 0},
    {3, 4, 28, 0},   {4, 4, 20, 0},    {5, 4, 12, 0},   {6, 4, 4, 0},    {1, 5, 31, 2},   {2, 5, 23, 4},
    {3, 5, 15, 6},   {4, 5, 7, 8},     {1, 6, 18, 4},   {2, 6, 10, 8},   {3, 6, 2, 12},   {1, 7, 5, 6},
};

Outcome wilf_grid() {
    Outcome o;
    TwoGenView t(8, 13);
    const auto s = t.semigroup();
    std::set<Int> seen;
    for (auto [a, b, value, w] : kEightThirteenLabels) {
        const std::string where = "cell (" + std::to_string(a) + "," + std::to_string(b) + ")";
        o.require(t.value_at(a, b) == value, where + " has a different gap value");
        o.require(wilf_gap_formula(t, a, b).w == w, where + " closed-form W differs");
        o.require(wilf_gap(s, value) == w, where + " scanned W differs");
        seen.insert(value);
    }
    o.require(seen == as_set(gapsym_test::two_gen_gaps(8, 13)), "labels do not cover every gap");
    if (o.pass) {
        o.detail = "42 cells match (W(25)=-9, W(54)=-12, W(2)=12, W(5)=6, W(44)=0, W(3)=9, W(35)=1)";
    }
    return o;
}

Outcome eight_thirteen_fundamental() {
    Outcome o;
    TwoGenView t(8, 13);
    const auto s = t.semigroup();
    std::set<Int> shaded;
    for (Int b = 1; b <= 4; ++b) {
        for (Int a = 1; a <= (b <= 2 ? 6 : 4); ++a) {
            shaded.insert(t.value_at(a, b));
        }
    }
    const auto fg = as_set(fundamental_gaps(s).gaps);
    o.require(fg.size() == 20, "|FG| is not 20");
    o.require(fg == shaded, "FG differs from the shaded region");
    o.require(!fg.contains(25), "25 is in FG");
    o.require(s.contains(50), "2*25 is not in Gamma");
    o.require(wilf_gap(s, 25) <= 0, "W(25) > 0");
    const auto counts = compare_counts(t);
    o.require(counts.sg_ssg == 14 && counts.fg == 20 && counts.inequality_holds, "count comparison is not 14 <= 20");
    if (o.pass) {
        o.detail = "|FG|=20 = shaded region, 25 not in FG, 50 in Gamma, W(25)=-9, 14 <= 20";
    }
    return o;
}

Outcome five_seven_module() {
    Outcome o;
    const auto s = make_semigroup({5, 7});
    const std::vector<Int> gens = {0, 9, 11, 8};
    const auto m = make_semimodule(s, gens);
    const std::set<Int> expected = {14, 15, 16, 18};
    o.require(as_set(syzygy(m).min_generators()) == expected, "library syzygy differs");
    o.require(as_set(lattice_path(m).syzygy_values) == expected, "corner-rule syzygy differs");
    o.require(as_set(oracle::brute_syzygy(s, gens, {60}).minimal) == expected, "brute syzygy differs");
    const auto inv = oracle::brute_invariants(s, gens, {60});
    o.require(sm_conductor_formula(m) == 7 && inv.conductor == 7 && m.conductor() == 7, "conductor is not 7");
    o.require(delta_formula(m) == 2 && inv.delta == 2 && m.delta() == 2, "delta is not 2");
    if (o.pass) {
        o.detail = "syzygy {14,15,16,18}, c=7 and delta=2 by formula and scan";
    }
    return o;
}

Outcome table_four_six_thirteen() {
    Outcome o;
    const auto s = make_semigroup({4, 6, 13});
    struct Row {
        Int g;
        std::vector<Int> syz;
        std::vector<Int> normalized;
        Int w;
    };
    const std::vector<Row> rows = {
        {1, {13, 14}, {0, 1}, 0},         {2, {6, 8}, {0, 2}, 0},           {3, {13, 16}, {0, 3}, 0},
        {5, {13, 18}, {0, 5}, 0},         {7, {13, 20}, {0, 7}, 0},         {9, {13, 22}, {0, 9}, 0},
        {11, {17, 19, 24}, {0, 2, 7}, -2}, {15, {19, 21, 28}, {0, 2, 9}, -2},
    };
    for (const Row &r : rows) {
        const std::vector<Int> gens = {0, r.g};
        const auto m = make_semimodule(s, gens);
        const auto syz = syzygy(m);
        const std::string where = "row [0," + std::to_string(r.g) + "]";
        o.require(as_set(syz.min_generators()) == as_set(r.syz), where + " syzygy differs");
        o.require(as_set(oracle::brute_syzygy(s, gens, oracle::default_bound(s, r.g)).minimal) == as_set(r.syz),
                  where + " brute syzygy differs");
        o.require(as_set(normalize(syz).min_generators()) == as_set(r.normalized), where + " normalization differs");
        o.require(wilf_gap(s, r.g) == r.w, where + " W differs");
    }
    if (o.pass) {
        o.detail = "8 rows: syzygies, normalized syzygies and W = 0,0,0,0,0,0,-2,-2";
    }
    return o;
}

Outcome zero_wilf_counterexamples() {
    Outcome o;
    const auto m58 = make_semimodule(make_semigroup({5, 8}), {0, 4, 6, 7});
    o.require(wilf_semimodule(m58).w == 0, "<5,8> [0,4,6,7] has W != 0");
    o.require(!is_fixed_point(m58), "<5,8> [0,4,6,7] is a fixed point");
    const auto m1014 = make_semimodule(make_semigroup({10, 14, 27}), {0, 9});
    o.require(wilf_semimodule(m1014).w == 0, "<10,14,27> [0,9] has W != 0");
    o.require(!is_fixed_point(m1014) && !is_symmetric_sm(m1014), "<10,14,27> [0,9] is fixed or symmetric");
    const auto rows = zero_wilf_survey_general(make_semigroup({10, 14, 29}));
    o.require(!rows.empty(), "<10,14,29> has no zero-W gaps");
    for (const auto &r : rows) {
        o.require(r.fixed_point, "<10,14,29> gap " + std::to_string(r.gap) + " is not a fixed point");
    }
    if (o.pass) {
        o.detail = "<5,8> and <10,14,27> break the equivalence; all " + std::to_string(rows.size()) +
                   " zero-W gaps of <10,14,29> give fixed points";
    }
    return o;
}

Outcome property_sweeps() {
    Outcome o;
    SurveyOptions opt;
    opt.max_beta = 40;
    opt.checks = parse_survey_checks("all");
    const auto report = run_survey(opt);
    Int cases = 0;
    for (const auto &s : report.summaries) {
        cases += s.cases;
    }
    if (!report.ok()) {
        const auto &v = report.violations.front();
        o.require(false, std::to_string(report.violations.size()) + " violations, first " +
                             std::string(survey_check_name(v.check)) + " at <" + std::to_string(v.alpha) + "," +
                             std::to_string(v.beta) + ">: " + v.message);
    }
    if (o.pass) {
        o.detail = std::to_string(report.pairs_checked) + " pairs, " + std::to_string(cases) + " cases, " +
                   std::to_string(report.warnings.size()) + " warnings, 0 violations";
    }
    return o;
}

Outcome differential_oracles() {
    std::vector<std::pair<std::pair<Int, Int>, std::vector<Int>>> work;
    for (auto [alpha, beta] : gapsym_test::pairs_up_to(12)) {
        for (auto &set : oracle::enumerate_lean_sets(alpha, beta)) {
            work.push_back({{alpha, beta}, std::move(set)});
        }
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> mismatches{0};
    std::mutex first_lock;
    std::string first;
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            const auto &[pair, set] = work[i];
            const auto s = make_semigroup({pair.first, pair.second});
            const auto m = make_semimodule(s, set);
            const auto bound = oracle::default_bound(s, *std::max_element(set.begin(), set.end()));
            std::string bad;
            const auto inv = oracle::brute_invariants(s, set, bound);
            if (sm_conductor_formula(m) != inv.conductor) {
                bad = "conductor";
            } else if (delta_formula(m) != inv.delta) {
                bad = "delta";
            } else if (as_set(dual_generators_two_gen(m)) != as_set(oracle::brute_dual(s, set, bound).minimal)) {
                bad = "dual";
            } else if (set.size() >= 2 &&
                       as_set(lattice_path(m).syzygy_values) != as_set(oracle::brute_syzygy(s, set, bound).minimal)) {
                bad = "syzygy";
            }
            if (!bad.empty()) {
                ++mismatches;
                std::lock_guard<std::mutex> lock(first_lock);
                if (first.empty()) {
                    first = bad + " at <" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ">";
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < std::max(1u, std::thread::hardware_concurrency()); ++k) {
        threads.emplace_back(worker);
    }
    for (auto &th : threads) {
        th.join();
    }
    Outcome o;
    o.require(mismatches == 0, std::to_string(mismatches.load()) + " mismatches, first " + first);
    if (o.pass) {
        o.detail = std::to_string(work.size()) + " lean sets over beta <= 12, 0 mismatches";
    }
    return o;
}

Outcome small_fg_anchors() {
    Outcome o;
    TwoGenView t35(3, 5);
    TwoGenView t37(3, 7);
    o.require(fundamental_gaps(t35.semigroup()).gaps.size() == 2, "|FG(<3,5>)| != 2");
    o.require(fundamental_gaps(t37.semigroup()).gaps.size() == 3, "|FG(<3,7>)| != 3");
    o.require(triangle_u(t35).size() == 1 && triangle_r(t35).size() == 1, "<3,5> triangles are not (1,1)");
    o.require(triangle_u(t37).size() == 2 && triangle_r(t37).size() == 1, "<3,7> triangles are not (2,1)");
    for (Int beta = 3; beta <= 41; beta += 2) {
        const Int expected = (beta - 1) / 2 - (beta - 3 + 5) / 6;
        o.require(static_cast<Int>(fundamental_gaps(make_semigroup({2, beta})).gaps.size()) == expected,
                  "alpha=2 formula fails at beta=" + std::to_string(beta));
    }
    if (o.pass) {
        o.detail = "|FG| 2 and 3, triangles (1,1) and (2,1), alpha=2 formula holds for odd beta <= 41";
    }
    return o;
}

Outcome cardinality_report() {
    Outcome o;
    const auto r = card_formulas(TwoGenView(7, 8));
    o.require(r.t_u_direct == 6 && r.t_u_formula == 3, "<7,8> T_u counts are not 6 vs 3");
    o.require(!r.agree && !r.warnings.empty(), "<7,8> discrepancy is not flagged");
    Int pairs = 0;
    for (auto [alpha, beta] : gapsym_test::pairs_up_to(60)) {
        Int up = 0;
        Int right = 0;
        for (Int a = 1; a < beta; ++a) {
            for (Int b = 1; b < alpha; ++b) {
                if (a * alpha + b * beta >= alpha * beta) {
                    continue;
                }
                up += b > alpha / 2;
                right += a > beta / 2;
            }
        }
        const auto c = card_formulas(TwoGenView(alpha, beta));
        o.require(c.t_u_direct == up && c.t_r_direct == right,
                  "direct counts differ at <" + std::to_string(alpha) + "," + std::to_string(beta) + ">");
        ++pairs;
    }
    if (o.pass) {
        o.detail = "<7,8> |T_u| 6 vs printed sum 3 warned; direct counts match brute cells on " +
                   std::to_string(pairs) + " pairs";
    }
    return o;
}

Outcome h_determinacy() {
    const auto catalog = oracle::build_catalog(15);
    Outcome o;
    std::size_t checked = 0;
    for (const auto &s : oracle::enumerate_semigroups_by_genus(8)) {
        const auto &gaps = s.gaps();
        for (std::uint32_t mask = 1; mask < (1u << gaps.size()); ++mask) {
            std::vector<Int> xs;
            for (std::size_t i = 0; i < gaps.size(); ++i) {
                if (mask >> i & 1) {
                    xs.push_back(gaps[i]);
                }
            }
            std::optional<NumericalSemigroup> brute;
            try {
                brute = oracle::brute_h_determines(xs, catalog);
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::Ambiguous) {
                    throw;
                }
            }
            const bool maximal = brute.has_value() && brute->gaps() == gaps;
            o.require(h_determines(s, xs) == maximal, "mismatch for gaps of genus " + std::to_string(gaps.size()));
            ++checked;
        }
    }
    if (o.pass) {
        o.detail = std::to_string(checked) + " (semigroup, X) cases, 0 mismatches";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"<7,8> regions and reconstruction", seven_eight_regions},
        {"<8,13> Wilf grid", wilf_grid},
        {"<8,13> fundamental gaps", eight_thirteen_fundamental},
        {"<5,7> module [0,9,11,8]", five_seven_module},
        {"<4,6,13> syzygy table", table_four_six_thirteen},
        {"zero-Wilf counterexamples", zero_wilf_counterexamples},
        {"property sweeps to beta 40", property_sweeps},
        {"differential oracle suite", differential_oracles},
        {"small fundamental gap anchors", small_fg_anchors},
        {"cardinality discrepancy report", cardinality_report},
        {"H-determinacy", h_determinacy},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2zu: %s: %s (%lld ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), static_cast<long long>(ms));
        failed += !o.pass;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
