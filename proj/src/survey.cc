#include "gapsym/survey.h"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "gapsym/error.h"
#include "gapsym/fundamental.h"
#include "gapsym/semimodule.h"
#include "gapsym/symmetry.h"
#include "gapsym/wilf.h"

namespace gapsym {

namespace {

struct Tally {
    Int cases = 0;
    Int passed = 0;
    Int excluded = 0;
};

struct PairResult {
    std::map<SurveyCheck, Tally> tallies;
    std::vector<SurveyViolation> violations;
    std::vector<SurveyNote> excluded;
    std::vector<SurveyNote> warnings;
};

class PairRun {
   public:
    PairRun(const TwoGenView &t, PairResult &out) : t_(t), s_(t.semigroup()), out_(out) {
    }

    void expect(SurveyCheck check, bool ok, std::optional<Int> gap, const std::string &message) {
        Tally &tally = out_.tallies[check];
        ++tally.cases;
        if (ok) {
            ++tally.passed;
        } else {
            out_.violations.push_back({check, t_.alpha(), t_.beta(), gap, message});
        }
    }

    void note_excluded(SurveyCheck check, const std::string &message) {
        ++out_.tallies[check].excluded;
        out_.excluded.push_back({check, t_.alpha(), t_.beta(), message});
    }

    void warn(SurveyCheck check, const std::string &message) {
        out_.warnings.push_back({check, t_.alpha(), t_.beta(), message});
    }

    void run(SurveyCheck check) {
        try {
            switch (check) {
                case SurveyCheck::Partition:
                    partition();
                    break;
                case SurveyCheck::Reconstruct:
                    reconstruct();
                    break;
                case SurveyCheck::Equifix:
                    equifix();
                    break;
                case SurveyCheck::Red:
                    red();
                    break;
                case SurveyCheck::Uff:
                    uff();
                    break;
                case SurveyCheck::Cardinality:
                    cardinality();
                    break;
                case SurveyCheck::ConductorSym:
                    conductor_sym();
                    break;
            }
        } catch (const Error &e) {
            expect(check, false, std::nullopt, e.what());
        }
    }

   private:
    void partition() {
        bool ok = true;
        std::string message;
        try {
            gap_partition(t_);
        } catch (const Error &e) {
            ok = false;
            message = e.what();
        }
        expect(SurveyCheck::Partition, ok, std::nullopt, message);

        std::vector<Int> doubled;
        for (Int g : s_.gaps()) {
            if (s_.contains(2 * g)) {
                doubled.push_back(g);
            }
        }
        expect(SurveyCheck::Partition, polyomino_values(t_, half_rectangle(t_)) == doubled, std::nullopt,
               "half rectangle differs from the gaps g with 2g in Gamma");
    }

    void reconstruct() {
        const SupersymmetricGaps sg = supersymmetric_gaps(t_);
        std::vector<Int> gaps;
        std::string message = "reconstruction differs from the gap set";
        try {
            gaps = reconstruct_from_symmetric(t_.alpha(), t_.beta(), sg.side, sg.cells, self_symmetric_gaps(t_));
        } catch (const Error &e) {
            message = e.what();
        }
        expect(SurveyCheck::Reconstruct, gaps == s_.gaps(), std::nullopt, message);
    }

    void equifix() {
        for (const LatticeGap &e : lattice_gaps(t_)) {
            const ZeroWilfEquivalences z = zero_wilf_equivalences(t_, e.value);
            expect(SurveyCheck::Equifix, z.all_agree(), e.value,
                   "zero-Wilf conditions disagree (wilf_zero=" + std::to_string(z.wilf_zero) +
                       ", half=" + std::to_string(z.half_generator) + ", fixed=" + std::to_string(z.fixed_point) +
                       ", selfdual=" + std::to_string(z.selfdual) + ", symmetric=" + std::to_string(z.symmetric) +
                       ")");
            const Int direct = wilf_gap(s_, e.value);
            const Int formula = wilf_gap_formula(t_, e.a, e.b).w;
            expect(SurveyCheck::Equifix, direct == formula, e.value,
                   "W by scan " + std::to_string(direct) + " vs closed form " + std::to_string(formula));
        }
    }

    void red() {
        const std::vector<Int> fg = fundamental_gaps(s_).gaps;
        const Polyomino sg = supersymmetric_gaps(t_).cells;
        const Polyomino ssg = self_symmetric_gaps(t_);
        for (Int g : s_.gaps()) {
            const RedEquivalence r = red_equivalence(t_, g);
            expect(SurveyCheck::Red, r.all_agree(), g,
                   "2g in Gamma=" + std::to_string(r.twice_in_gamma) + ", rectangle=" +
                       std::to_string(r.in_rectangle) + ", W<=0=" + std::to_string(r.wilf_nonpositive));
        }
        for (Int g : fg) {
            const LatticeGap e = gap_to_lattice(t_, g);
            const Int w = wilf_gap_formula(t_, e.a, e.b).w;
            expect(SurveyCheck::Red, w <= 0, g, "fundamental gap with W=" + std::to_string(w));
            expect(SurveyCheck::Red, !sg.contains(e.cell()), g, "fundamental gap inside SG");
        }
        for (const Cell &c : ssg.cells) {
            const Int g = t_.value_at(c);
            expect(SurveyCheck::Red, s_.contains(2 * g), g, "self-symmetric gap with 2g not in Gamma");
        }
    }

    void uff() {
        const CountComparison cmp = compare_counts(t_);
        const std::string counts = "|SG u SSG|=" + std::to_string(cmp.sg_ssg) + ", |FG|=" + std::to_string(cmp.fg);
        if (t_.alpha() == 2 && t_.beta() != 3) {
            note_excluded(SurveyCheck::Uff, "excluded (alpha=2): " + counts);
            expect(SurveyCheck::Uff, cmp.alpha_two_fg == cmp.fg, std::nullopt,
                   "alpha=2 count formula gives " + std::to_string(cmp.alpha_two_fg.value_or(-1)) + ", " + counts);
            return;
        }
        expect(SurveyCheck::Uff, cmp.inequality_holds, std::nullopt, "inequality fails: " + counts);
    }

    void cardinality() {
        const CardinalityReport r = card_formulas(t_);
        expect(SurveyCheck::Cardinality, r.ssg_count == r.ssg_count_direct, std::nullopt,
               "|SSG| formula " + std::to_string(r.ssg_count) + " vs " + std::to_string(r.ssg_count_direct) +
                   " cells");
        for (const std::string &w : r.warnings) {
            warn(SurveyCheck::Cardinality, w);
        }
    }

    Int conductor_of(Cell c) const {
        return make_semimodule(s_, {0, t_.value_at(c)}).conductor();
    }

    void conductor_sym() {
        const Int c = s_.conductor();
        for (const Cell &cell : triangle_u(t_).cells) {
            const Cell mirror{cell.a, t_.alpha() - cell.b};
            const Int expected = c - cell.a * t_.alpha();
            const Int c0 = conductor_of(cell);
            const Int c1 = conductor_of(mirror);
            expect(SurveyCheck::ConductorSym, c0 == expected && c1 == expected, t_.value_at(cell),
                   "conductors " + std::to_string(c0) + ", " + std::to_string(c1) + ", expected " +
                       std::to_string(expected));
        }
        for (const Cell &cell : triangle_r(t_).cells) {
            const Cell mirror{t_.beta() - cell.a, cell.b};
            const Int expected = c - cell.b * t_.beta();
            const Int c0 = conductor_of(cell);
            const Int c1 = conductor_of(mirror);
            expect(SurveyCheck::ConductorSym, c0 == expected && c1 == expected, t_.value_at(cell),
                   "conductors " + std::to_string(c0) + ", " + std::to_string(c1) + ", expected " +
                       std::to_string(expected));
        }

        for (const GapClass &cls : gap_conductor_partition(s_)) {
            std::set<Int> paired;
            for (const auto &[g1, g2] : cls.pairs) {
                const Cell c1 = gap_to_lattice(t_, g1).cell();
                const Cell c2 = gap_to_lattice(t_, g2).cell();
                const bool alpha_pair = c1.a == c2.a && c1.b + c2.b == t_.alpha();
                const bool beta_pair = c1.b == c2.b && c1.a + c2.a == t_.beta();
                expect(SurveyCheck::ConductorSym, alpha_pair || beta_pair, g1,
                       "class pair (" + std::to_string(g1) + "," + std::to_string(g2) + ") is not a reflection pair");
                paired.insert(g1);
                paired.insert(g2);
            }
            std::vector<Int> unpaired;
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                if (!paired.count(cls.members[i])) {
                    unpaired.push_back(cls.members[i]);
                    expect(SurveyCheck::ConductorSym, cls.wilf[i] == 0, cls.members[i],
                           "unpaired class member with W=" + std::to_string(cls.wilf[i]));
                }
            }
            expect(SurveyCheck::ConductorSym, unpaired.size() == cls.members.size() % 2, std::nullopt,
                   "class at conductor " + std::to_string(cls.conductor) + " leaves " +
                       std::to_string(unpaired.size()) + " members unpaired");
        }
    }

    TwoGenView t_;
    NumericalSemigroup s_;
    PairResult &out_;
};

}  // namespace

const std::vector<SurveyCheck> &all_survey_checks() {
    static const std::vector<SurveyCheck> checks = {
        SurveyCheck::Partition, SurveyCheck::Reconstruct, SurveyCheck::Equifix,      SurveyCheck::Red,
        SurveyCheck::Uff,       SurveyCheck::Cardinality, SurveyCheck::ConductorSym,
    };
    return checks;
}

std::string_view survey_check_name(SurveyCheck check) {
    switch (check) {
        case SurveyCheck::Partition:
            return "partition";
        case SurveyCheck::Reconstruct:
            return "reconstruct";
        case SurveyCheck::Equifix:
            return "equifix";
        case SurveyCheck::Red:
            return "red";
        case SurveyCheck::Uff:
            return "uff";
        case SurveyCheck::Cardinality:
            return "cardinality";
        case SurveyCheck::ConductorSym:
            return "conductor-sym";
    }
    return "unknown";
}

std::set<SurveyCheck> parse_survey_checks(std::string_view comma_separated) {
    std::set<SurveyCheck> out;
    std::size_t pos = 0;
    while (pos <= comma_separated.size()) {
        std::size_t end = comma_separated.find(',', pos);
        if (end == std::string_view::npos) {
            end = comma_separated.size();
        }
        const std::string_view name = comma_separated.substr(pos, end - pos);
        if (name == "all") {
            out.insert(all_survey_checks().begin(), all_survey_checks().end());
        } else {
            const auto &checks = all_survey_checks();
            auto it = std::find_if(checks.begin(), checks.end(),
                                   [&](SurveyCheck c) { return survey_check_name(c) == name; });
            if (it == checks.end()) {
                throw Error(ErrorKind::InvalidArgument, "unknown check '" + std::string(name) + "'");
            }
            out.insert(*it);
        }
        pos = end + 1;
    }
    return out;
}

std::vector<std::pair<Int, Int>> coprime_pairs(Int max_beta) {
    std::vector<std::pair<Int, Int>> out;
    for (Int beta = 3; beta <= max_beta; ++beta) {
        for (Int alpha = 2; alpha < beta; ++alpha) {
            if (std::gcd(alpha, beta) == 1) {
                out.emplace_back(alpha, beta);
            }
        }
    }
    return out;
}

SurveyReport run_survey(const SurveyOptions &options) {
    const std::vector<std::pair<Int, Int>> pairs = coprime_pairs(options.max_beta);
    std::vector<PairResult> results(pairs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            const TwoGenView t(pairs[i].first, pairs[i].second);
            PairRun run(t, results[i]);
            for (SurveyCheck check : all_survey_checks()) {
                if (options.checks.count(check)) {
                    run.run(check);
                }
            }
        }
    };
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread &th : pool) {
        th.join();
    }

    SurveyReport report;
    report.max_beta = options.max_beta;
    report.pairs_checked = static_cast<Int>(pairs.size());
    for (SurveyCheck check : all_survey_checks()) {
        if (!options.checks.count(check)) {
            continue;
        }
        CheckSummary summary;
        summary.check = check;
        summary.pairs = static_cast<Int>(pairs.size());
        for (const PairResult &r : results) {
            auto it = r.tallies.find(check);
            if (it != r.tallies.end()) {
                summary.cases += it->second.cases;
                summary.passed += it->second.passed;
                summary.excluded += it->second.excluded;
            }
            summary.violations += std::count_if(r.violations.begin(), r.violations.end(),
                                                [&](const SurveyViolation &v) { return v.check == check; });
            summary.warnings += std::count_if(r.warnings.begin(), r.warnings.end(),
                                              [&](const SurveyNote &n) { return n.check == check; });
        }
        report.summaries.push_back(summary);
    }
    for (PairResult &r : results) {
        report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
        report.excluded.insert(report.excluded.end(), r.excluded.begin(), r.excluded.end());
        report.warnings.insert(report.warnings.end(), r.warnings.begin(), r.warnings.end());
    }
    auto note_key = [](const SurveyNote &n) { return std::tie(n.check, n.alpha, n.beta, n.message); };
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const SurveyViolation &x, const SurveyViolation &y) {
                         return std::tie(x.check, x.alpha, x.beta, x.gap, x.message) <
                                std::tie(y.check, y.alpha, y.beta, y.gap, y.message);
                     });
    std::stable_sort(report.excluded.begin(), report.excluded.end(),
                     [&](const SurveyNote &x, const SurveyNote &y) { return note_key(x) < note_key(y); });
    std::stable_sort(report.warnings.begin(), report.warnings.end(),
                     [&](const SurveyNote &x, const SurveyNote &y) { return note_key(x) < note_key(y); });
    return report;
}

}  // namespace gapsym
