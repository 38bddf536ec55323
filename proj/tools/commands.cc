#include "commands.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "gapsym/error.h"
#include "gapsym/fundamental.h"
#include "gapsym/semimodule.h"
#include "gapsym/survey.h"
#include "gapsym/symmetry.h"
#include "gapsym/wilf.h"
#include "svg.h"

using gapsym::Cell;
using gapsym::Error;
using gapsym::ErrorKind;
using gapsym::Int;
using json = nlohmann::ordered_json;

namespace gapsym_cli {

namespace {

// Raised for problems in user-supplied data (exit 3).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for bad command line values (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Svg, Text };

Format parse_format(const std::string &name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "svg") {
        return Format::Svg;
    }
    if (name == "text") {
        return Format::Text;
    }
    throw UsageError("unknown format '" + name + "'");
}

json cells_json(const gapsym::Polyomino &p) {
    json out = json::array();
    for (const Cell &c : p.cells) {
        out.push_back({c.a, c.b});
    }
    return out;
}

std::string join(const std::vector<Int> &xs, const char *sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string pair_text(Int alpha, Int beta) {
    return "<" + std::to_string(alpha) + "," + std::to_string(beta) + ">";
}

gapsym::NumericalSemigroup semigroup_arg(const std::vector<Int> &gens) {
    try {
        return gapsym::make_semigroup(gens);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

gapsym::TwoGenView pair_arg(Int alpha, Int beta) {
    try {
        return gapsym::TwoGenView(alpha, beta);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------- analyze

json analyze_json(const gapsym::TwoGenView &t) {
    const gapsym::NumericalSemigroup s = t.semigroup();
    const gapsym::SupersymmetricGaps sg = gapsym::supersymmetric_gaps(t);
    const gapsym::Polyomino ssg = gapsym::self_symmetric_gaps(t);
    const gapsym::GapPartition part = gapsym::gap_partition(t);
    const gapsym::FundamentalGapSet fg = gapsym::fundamental_gaps(s);
    const gapsym::CountComparison counts = gapsym::compare_counts(t);
    const gapsym::CardinalityReport card = gapsym::card_formulas(t);

    json lattice = json::array();
    for (const gapsym::LatticeGap &g : gapsym::lattice_gaps(t)) {
        lattice.push_back({{"a", g.a}, {"b", g.b}, {"value", g.value}, {"wilf", gapsym::wilf_gap_formula(t, g.a, g.b).w}});
    }

    json out;
    out["alpha"] = t.alpha();
    out["beta"] = t.beta();
    out["gaps"] = s.gaps();
    out["conductor"] = s.conductor();
    out["genus"] = s.genus();
    out["lattice"] = lattice;
    out["sg"] = {{"side", std::string(gapsym::side_name(sg.side))},
                 {"cells", cells_json(sg.cells)},
                 {"values", gapsym::polyomino_values(t, sg.cells)}};
    out["ssg"] = {{"cells", cells_json(ssg)}, {"values", gapsym::polyomino_values(t, ssg)}};
    out["partition"] = {{"t_u", part.t_u.size()},
                        {"s_alpha_t_u", part.s_alpha_t_u.size()},
                        {"ssg", part.ssg.size()},
                        {"t_r", part.t_r.size()},
                        {"s_beta_t_r", part.s_beta_t_r.size()}};
    out["fg"] = fg.gaps;
    out["counts"] = {{"sg_ssg", counts.sg_ssg}, {"fg", counts.fg}, {"inequality_holds", counts.inequality_holds}};
    out["cardinality"] = {{"ssg_count", card.ssg_count},
                          {"t_u_formula", card.t_u_formula},
                          {"t_u_direct", card.t_u_direct},
                          {"t_r_formula", card.t_r_formula},
                          {"t_r_direct", card.t_r_direct},
                          {"agree", card.agree},
                          {"warnings", card.warnings}};
    return out;
}

std::string analyze_text(const gapsym::TwoGenView &t) {
    const gapsym::NumericalSemigroup s = t.semigroup();
    const gapsym::SupersymmetricGaps sg = gapsym::supersymmetric_gaps(t);
    const gapsym::Polyomino ssg = gapsym::self_symmetric_gaps(t);
    const gapsym::GapPartition part = gapsym::gap_partition(t);
    const gapsym::FundamentalGapSet fg = gapsym::fundamental_gaps(s);

    std::ostringstream out;
    out << pair_text(t.alpha(), t.beta()) << ": genus " << s.genus() << ", conductor " << s.conductor() << "\n";
    out << "gaps: " << join(s.gaps()) << "\n";
    out << "SG (" << gapsym::side_name(sg.side) << "): " << join(gapsym::polyomino_values(t, sg.cells)) << "\n";
    out << "SSG: " << join(gapsym::polyomino_values(t, ssg)) << "\n";
    out << "FG: " << join(fg.gaps) << "\n";
    out << "partition: " << part.t_u.size() << " + " << part.s_alpha_t_u.size() << " + " << part.ssg.size()
        << " + " << part.t_r.size() << " + " << part.s_beta_t_r.size() << "\n";
    out << "cells (value/W), top row b=" << t.alpha() - 1 << ":\n";
    for (Int b = t.alpha() - 1; b >= 1; --b) {
        std::string row;
        for (Int a = 1; a < t.beta(); ++a) {
            if (!t.in_lattice({a, b})) {
                break;
            }
            std::string cell =
                std::to_string(t.value_at(a, b)) + "/" + std::to_string(gapsym::wilf_gap_formula(t, a, b).w);
            cell.resize(std::max<std::size_t>(cell.size() + 1, 9), ' ');
            row += cell;
        }
        while (!row.empty() && row.back() == ' ') {
            row.pop_back();
        }
        out << "  " << row << "\n";
    }
    return out.str();
}

// ------------------------------------------------------------- semimodule

std::vector<Int> checked_module(const gapsym::NumericalSemigroup &s, const std::vector<Int> &raw) {
    if (raw.empty()) {
        throw InputError("module needs at least one generator");
    }
    std::vector<Int> gens = raw;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() < 0) {
        throw InputError("module generators must be nonnegative");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!s.is_gap(gens[j] - gens[i])) {
                throw InputError("module generators " + std::to_string(gens[i]) + " and " + std::to_string(gens[j]) +
                                 " differ by " + std::to_string(gens[j] - gens[i]) + ", which is not a gap");
            }
        }
    }
    return gens;
}

json semimodule_json(const gapsym::NumericalSemigroup &s, const std::vector<Int> &input) {
    const gapsym::GammaSemimodule given = gapsym::GammaSemimodule::generated_by(s, input);
    const gapsym::GammaSemimodule m = gapsym::normalize(given);
    const gapsym::WilfReport w = gapsym::wilf_semimodule(m);

    json out;
    out["semigroup"] = s.generators();
    out["input"] = input;
    out["shift"] = given.min();
    out["lean"] = m.min_generators();
    out["min_generators"] = given.min_generators();
    if (m.ed() >= 2) {
        const gapsym::GammaSemimodule syz = gapsym::syzygy(m);
        std::vector<Int> syz_gens = syz.min_generators();
        if (s.is_two_generated()) {
            syz_gens = gapsym::lattice_path(m).syzygy_values;
        }
        out["syzygy_generators"] = syz_gens;
        out["normalized_syzygy"] = gapsym::normalize(syz).min_generators();
    } else {
        out["syzygy_generators"] = nullptr;
        out["normalized_syzygy"] = nullptr;
    }
    out["conductor"] = m.conductor();
    out["delta"] = m.delta();
    out["ed"] = m.ed();
    out["wilf"] = w.w;
    out["fixed_point"] = m.ed() >= 2 ? json(gapsym::is_fixed_point(m)) : json(nullptr);
    out["selfdual"] = gapsym::is_selfdual(m);
    out["symmetric"] = gapsym::is_symmetric_sm(m);
    out["dual_generators"] = gapsym::dual(m).min_generators();
    if (m.ed() >= 2) {
        const gapsym::PicardOrbit orbit = gapsym::picard_orbit(m, 64);
        out["orbit_cycle_length"] = orbit.cycle_length != 0 ? json(orbit.cycle_length) : json(nullptr);
    } else {
        out["orbit_cycle_length"] = nullptr;
    }
    if (s.is_two_generated() && m.ed() >= 2) {
        const gapsym::LeanCouple couple = gapsym::lattice_path(m);
        json es = json::array();
        for (const gapsym::LatticeGap &g : couple.es_turns) {
            es.push_back({g.a, g.b});
        }
        json se = json::array();
        for (const Cell &c : couple.se_turns) {
            se.push_back({c.a, c.b});
        }
        out["lattice_path"] = {{"es_turns", es},
                               {"se_turns", se},
                               {"max_syzygy", couple.max_syzygy},
                               {"max_point", {couple.max_syzygy_point.a, couple.max_syzygy_point.b}}};
        out["conductor_formula"] = gapsym::sm_conductor_formula(m);
        out["delta_formula"] = gapsym::delta_formula(m);
    }
    return out;
}

std::string flat_text(const json &j) {
    std::ostringstream out;
    for (const auto &[key, value] : j.items()) {
        out << key << ": ";
        if (value.is_array()) {
            std::vector<std::string> parts;
            for (const json &v : value) {
                parts.push_back(v.dump());
            }
            for (std::size_t i = 0; i < parts.size(); ++i) {
                out << (i ? " " : "") << parts[i];
            }
        } else {
            out << value.dump();
        }
        out << "\n";
    }
    return out.str();
}

// ------------------------------------------------------------ reconstruct

struct ReconstructInput {
    std::optional<Int> alpha;
    std::optional<Int> beta;
    std::optional<gapsym::TriangleSide> side;
    std::optional<std::vector<Cell>> sg_cells;
    std::optional<std::vector<Int>> sg_values;
    std::optional<std::vector<Cell>> ssg_cells;
    std::optional<std::vector<Int>> ssg_values;
};

Int json_int(const json &v, const std::string &what) {
    if (!v.is_number_integer()) {
        throw InputError(what + " must be an integer");
    }
    return v.get<Int>();
}

std::vector<Int> json_ints(const json &v, const std::string &what) {
    if (!v.is_array()) {
        throw InputError(what + " must be an array of integers");
    }
    std::vector<Int> out;
    for (const json &x : v) {
        out.push_back(json_int(x, what + " entry"));
    }
    return out;
}

std::vector<Cell> json_cells(const json &v, const std::string &what) {
    if (!v.is_array()) {
        throw InputError(what + " must be an array of [a,b] pairs");
    }
    std::vector<Cell> out;
    for (const json &x : v) {
        if (!x.is_array() || x.size() != 2) {
            throw InputError(what + " entries must be [a,b] pairs");
        }
        out.push_back({json_int(x[0], what + " coordinate"), json_int(x[1], what + " coordinate")});
    }
    return out;
}

ReconstructInput parse_reconstruct_input(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw InputError("input must be a JSON object");
    }
    static const std::set<std::string> known = {"alpha",    "beta",      "sg_side",   "sg_cells",
                                                "sg_values", "ssg_cells", "ssg_values"};
    for (const auto &[key, value] : j.items()) {
        if (!known.count(key)) {
            throw InputError("unknown key '" + key + "'");
        }
    }
    ReconstructInput in;
    if (j.contains("alpha")) {
        in.alpha = json_int(j["alpha"], "alpha");
    }
    if (j.contains("beta")) {
        in.beta = json_int(j["beta"], "beta");
    }
    if (in.alpha.has_value() != in.beta.has_value()) {
        throw InputError("alpha and beta must be given together");
    }
    if (j.contains("sg_side")) {
        if (!j["sg_side"].is_string()) {
            throw InputError("sg_side must be \"T_u\" or \"T_r\"");
        }
        in.side = gapsym::parse_side(j["sg_side"].get<std::string>());
        if (!in.side) {
            throw InputError("sg_side must be \"T_u\" or \"T_r\"");
        }
    }
    for (const char *prefix : {"sg", "ssg"}) {
        const std::string cells_key = std::string(prefix) + "_cells";
        const std::string values_key = std::string(prefix) + "_values";
        const bool has_cells = j.contains(cells_key);
        const bool has_values = j.contains(values_key);
        if (has_cells == has_values) {
            throw InputError("exactly one of " + cells_key + " and " + values_key + " is required");
        }
        auto &cells = std::string(prefix) == "sg" ? in.sg_cells : in.ssg_cells;
        auto &values = std::string(prefix) == "sg" ? in.sg_values : in.ssg_values;
        if (has_cells) {
            cells = json_cells(j[cells_key], cells_key);
        } else {
            values = json_ints(j[values_key], values_key);
        }
    }
    return in;
}

gapsym::Polyomino to_polyomino(const gapsym::TwoGenView &t, const std::optional<std::vector<Cell>> &cells,
                               const std::optional<std::vector<Int>> &values) {
    if (cells) {
        gapsym::Polyomino p;
        p.cells.insert(cells->begin(), cells->end());
        return p;
    }
    return gapsym::polyomino_from_values(t, *values);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Reconstruction {
    Int alpha = 0;
    Int beta = 0;
    bool inferred = false;
    gapsym::TriangleSide side = gapsym::TriangleSide::Upper;
    std::vector<Int> gaps;
};

Reconstruction reconstruct(const ReconstructInput &in, bool infer, std::optional<Int> max_beta) {
    Reconstruction r;
    if (infer) {
        if (in.sg_cells || in.ssg_cells) {
            if (!in.alpha) {
                throw InputError("inference works on gap values; cells need alpha and beta");
            }
        }
        std::vector<Int> values;
        if (in.sg_values && in.ssg_values) {
            values = *in.sg_values;
            values.insert(values.end(), in.ssg_values->begin(), in.ssg_values->end());
        } else {
            const gapsym::TwoGenView t(*in.alpha, *in.beta);
            for (const gapsym::Polyomino &p : {to_polyomino(t, in.sg_cells, in.sg_values),
                                               to_polyomino(t, in.ssg_cells, in.ssg_values)}) {
                for (const Cell &c : p.cells) {
                    values.push_back(t.value_at(c));
                }
            }
        }
        if (std::any_of(values.begin(), values.end(), [](Int v) { return v <= 0; })) {
            throw InputError("gap values must be positive");
        }
        const Int top = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
        const Int bound = max_beta.value_or(std::max<Int>(3, 4 * top));
        const auto found = gapsym::infer_semigroup(values, bound);
        if (!found) {
            throw InputError("no semigroup <alpha,beta> with beta <= " + std::to_string(bound) + " matches");
        }
        if (in.alpha && (found->first != *in.alpha || found->second != *in.beta)) {
            throw InputError("inferred " + pair_text(found->first, found->second) + " but the file names " +
                             pair_text(*in.alpha, *in.beta));
        }
        r.alpha = found->first;
        r.beta = found->second;
        r.inferred = true;
    } else {
        if (!in.alpha) {
            throw InputError("alpha and beta are required unless --infer is given");
        }
        r.alpha = *in.alpha;
        r.beta = *in.beta;
    }

    std::optional<gapsym::TwoGenView> maybe;
    try {
        maybe.emplace(r.alpha, r.beta);
    } catch (const Error &e) {
        throw InputError(e.what());
    }
    const gapsym::TwoGenView &t = *maybe;
    const gapsym::Polyomino sg = to_polyomino(t, in.sg_cells, in.sg_values);
    const gapsym::Polyomino ssg = to_polyomino(t, in.ssg_cells, in.ssg_values);

    std::vector<gapsym::TriangleSide> sides;
    if (in.side) {
        sides.push_back(*in.side);
    } else if (r.inferred) {
        sides.push_back(gapsym::supersymmetric_gaps(t).side);
    } else if (!sg.empty()) {
        const Cell c = *sg.cells.begin();
        sides.push_back(c.a > t.beta() / 2 ? gapsym::TriangleSide::Right : gapsym::TriangleSide::Upper);
    } else {
        sides = {gapsym::TriangleSide::Upper, gapsym::TriangleSide::Right};
    }
    std::optional<Error> last;
    for (gapsym::TriangleSide side : sides) {
        try {
            r.gaps = gapsym::reconstruct_from_symmetric(r.alpha, r.beta, side, sg, ssg);
            r.side = side;
            return r;
        } catch (const Error &e) {
            last = e;
        }
    }
    throw *last;
}

// ----------------------------------------------------------------- survey

json survey_json(const gapsym::SurveyReport &report) {
    json out;
    out["max_beta"] = report.max_beta;
    out["pairs_checked"] = report.pairs_checked;
    json checks = json::array();
    for (const gapsym::CheckSummary &s : report.summaries) {
        checks.push_back({{"name", std::string(gapsym::survey_check_name(s.check))},
                          {"pairs", s.pairs},
                          {"cases", s.cases},
                          {"passed", s.passed},
                          {"violations", s.violations},
                          {"excluded", s.excluded},
                          {"warnings", s.warnings}});
    }
    out["checks"] = checks;
    json violations = json::array();
    for (const gapsym::SurveyViolation &v : report.violations) {
        violations.push_back({{"check", std::string(gapsym::survey_check_name(v.check))},
                              {"alpha", v.alpha},
                              {"beta", v.beta},
                              {"gap", v.gap ? json(*v.gap) : json(nullptr)},
                              {"message", v.message}});
    }
    out["violations"] = violations;
    auto notes = [](const std::vector<gapsym::SurveyNote> &xs) {
        json arr = json::array();
        for (const gapsym::SurveyNote &n : xs) {
            arr.push_back({{"check", std::string(gapsym::survey_check_name(n.check))},
                           {"alpha", n.alpha},
                           {"beta", n.beta},
                           {"message", n.message}});
        }
        return arr;
    };
    out["excluded"] = notes(report.excluded);
    out["warnings"] = notes(report.warnings);
    out["ok"] = report.ok();
    return out;
}

std::string survey_text(const gapsym::SurveyReport &report) {
    std::ostringstream out;
    out << "survey up to beta=" << report.max_beta << ": " << report.pairs_checked << " coprime pairs\n";
    for (const gapsym::CheckSummary &s : report.summaries) {
        out << "  " << gapsym::survey_check_name(s.check) << ": " << s.passed << "/" << s.cases << " passed, "
            << s.violations << " violations";
        if (s.excluded) {
            out << ", " << s.excluded << " excluded";
        }
        if (s.warnings) {
            out << ", " << s.warnings << " warnings";
        }
        out << "\n";
    }
    for (const gapsym::SurveyNote &n : report.excluded) {
        out << "EXCLUDED " << gapsym::survey_check_name(n.check) << " " << pair_text(n.alpha, n.beta) << ": "
            << n.message << "\n";
    }
    for (const gapsym::SurveyNote &n : report.warnings) {
        out << "WARNING " << gapsym::survey_check_name(n.check) << " " << pair_text(n.alpha, n.beta) << ": "
            << n.message << "\n";
    }
    for (const gapsym::SurveyViolation &v : report.violations) {
        out << "VIOLATION " << gapsym::survey_check_name(v.check) << " " << pair_text(v.alpha, v.beta);
        if (v.gap) {
            out << " gap " << *v.gap;
        }
        out << ": " << v.message << "\n";
    }
    out << (report.ok() ? "OK" : "FAILED") << "\n";
    return out.str();
}

// ---------------------------------------------------------------- classes

json classes_json(const gapsym::NumericalSemigroup &s) {
    json out = json::array();
    for (const gapsym::GapClass &cls : gapsym::gap_conductor_partition(s)) {
        json pairs = json::array();
        for (const auto &[g1, g2] : cls.pairs) {
            pairs.push_back({g1, g2});
        }
        out.push_back({{"conductor", cls.conductor},
                       {"members", cls.members},
                       {"wilf", cls.wilf},
                       {"pairs", pairs},
                       {"self_symmetric", cls.self_symmetric ? json(*cls.self_symmetric) : json(nullptr)}});
    }
    return out;
}

std::string classes_text(const json &classes) {
    std::ostringstream out;
    for (const json &cls : classes) {
        out << "c=" << cls["conductor"].dump() << ": members " << cls["members"].dump() << ", pairs "
            << cls["pairs"].dump() << ", self-symmetric " << cls["self_symmetric"].dump() << "\n";
    }
    return out.str();
}

// ------------------------------------------------------------ fundamental

json fundamental_json(const gapsym::NumericalSemigroup &s, const std::optional<std::vector<Int>> &xs) {
    const gapsym::FundamentalGapSet fg = gapsym::fundamental_gaps(s);
    json out;
    out["semigroup"] = s.generators();
    out["gaps"] = s.gaps();
    out["fundamental_gaps"] = fg.gaps;
    out["divisor_closure"] = gapsym::divisor_closure(fg.gaps);
    const gapsym::NumericalSemigroup back = gapsym::semigroup_from_fg(fg.gaps);
    out["from_fg"] = back.generators();
    out["roundtrip"] = back == s;
    if (xs) {
        try {
            out["h_determines"] = gapsym::h_determines(s, *xs);
        } catch (const Error &e) {
            throw InputError(e.what());
        }
    }
    if (s.is_two_generated()) {
        const gapsym::CountComparison c = gapsym::compare_counts(gapsym::TwoGenView::of(s));
        out["counts"] = {{"sg_ssg", c.sg_ssg},
                         {"fg", c.fg},
                         {"inequality_holds", c.inequality_holds},
                         {"alpha_two_fg", c.alpha_two_fg ? json(*c.alpha_two_fg) : json(nullptr)}};
    }
    return out;
}

// ------------------------------------------------------------------ output

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write " + path);
    }
    file << text;
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gap symmetry of numerical semigroups", "gapsym"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "json, svg or text");
        sub->add_option("--out", out_path, "write the report to this file");
    };

    Int alpha = 0;
    Int beta = 0;
    std::string layers_text = "all";
    CLI::App *analyze = app.add_subcommand("analyze", "gap lattice, SG/SSG, partition and fundamental gaps");
    analyze->add_option("--alpha", alpha)->required();
    analyze->add_option("--beta", beta)->required();
    analyze->add_option("--layers", layers_text, "svg layers: sg,ssg,fg,rectangle,triangles, all or none");
    add_common(analyze);

    std::vector<Int> gens;
    std::vector<Int> module_gens;
    CLI::App *semimodule = app.add_subcommand("semimodule", "invariants of a semimodule");
    semimodule->add_option("--gens", gens)->delimiter(',')->required();
    semimodule->add_option("--module", module_gens)->delimiter(',')->required();
    add_common(semimodule);

    std::string input_path;
    bool infer = false;
    Int max_beta = 0;
    CLI::App *reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild the gaps from SG and SSG");
    reconstruct_cmd->add_option("input", input_path, "JSON input file")->required();
    reconstruct_cmd->add_flag("--infer", infer, "search for alpha and beta");
    CLI::Option *max_beta_opt = reconstruct_cmd->add_option("--max-beta", max_beta, "inference bound");
    add_common(reconstruct_cmd);

    Int survey_beta = 40;
    std::string checks_text = "all";
    unsigned threads = 0;
    CLI::App *survey = app.add_subcommand("survey", "verify the invariants over all coprime pairs");
    survey->add_option("--max-beta", survey_beta, "largest beta");
    survey->add_option("--checks", checks_text, "comma separated checks, or all");
    survey->add_option("--threads", threads, "worker threads (0 = all cores)");
    add_common(survey);

    CLI::App *classes = app.add_subcommand("classes", "gap conductor partition");
    classes->add_option("--gens", gens)->delimiter(',')->required();
    add_common(classes);

    std::vector<Int> x_values;
    CLI::App *fundamental = app.add_subcommand("fundamental", "fundamental gaps and H-determinacy");
    fundamental->add_option("--gens", gens)->delimiter(',')->required();
    CLI::Option *x_opt = fundamental->add_option("--x", x_values, "gap set to test")->delimiter(',');
    add_common(fundamental);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format fmt = parse_format(format);
        if (analyze->parsed()) {
            const gapsym::TwoGenView t = pair_arg(alpha, beta);
            if (fmt == Format::Svg) {
                const std::set<Layer> layers = [&] {
                    try {
                        return parse_layers(layers_text);
                    } catch (const Error &e) {
                        throw UsageError(e.what());
                    }
                }();
                std::ostringstream svg;
                write_lattice_svg(t, layers, svg);
                emit(svg.str(), out_path, out);
            } else {
                emit(fmt == Format::Json ? dump(analyze_json(t)) : analyze_text(t), out_path, out);
            }
            return kExitOk;
        }
        if (semimodule->parsed()) {
            const gapsym::NumericalSemigroup s = semigroup_arg(gens);
            if (fmt == Format::Svg) {
                throw UsageError("semimodule reports are json or text");
            }
            const json report = semimodule_json(s, checked_module(s, module_gens));
            emit(fmt == Format::Json ? dump(report) : flat_text(report), out_path, out);
            return kExitOk;
        }
        if (reconstruct_cmd->parsed()) {
            if (fmt == Format::Svg) {
                throw UsageError("reconstruct reports are json or text");
            }
            if (max_beta_opt->count() && max_beta < 3) {
                throw UsageError("--max-beta must be at least 3");
            }
            const ReconstructInput in = parse_reconstruct_input(read_file(input_path));
            const std::optional<Int> bound = max_beta_opt->count() ? std::optional<Int>(max_beta) : std::nullopt;
            const Reconstruction r = reconstruct(in, infer, bound);
            json report;
            report["alpha"] = r.alpha;
            report["beta"] = r.beta;
            report["inferred"] = r.inferred;
            report["sg_side"] = std::string(gapsym::side_name(r.side));
            report["genus"] = r.gaps.size();
            report["gaps"] = r.gaps;
            if (fmt == Format::Json) {
                emit(dump(report), out_path, out);
            } else {
                emit(pair_text(r.alpha, r.beta) + ": " + std::to_string(r.gaps.size()) + " gaps\n" + join(r.gaps) +
                         "\n",
                     out_path, out);
            }
            return kExitOk;
        }
        if (survey->parsed()) {
            if (fmt == Format::Svg) {
                throw UsageError("survey reports are json or text");
            }
            if (survey_beta < 3) {
                throw UsageError("--max-beta must be at least 3");
            }
            gapsym::SurveyOptions options;
            options.max_beta = survey_beta;
            options.threads = threads;
            try {
                options.checks = gapsym::parse_survey_checks(checks_text);
            } catch (const Error &e) {
                throw UsageError(e.what());
            }
            const gapsym::SurveyReport report = gapsym::run_survey(options);
            emit(fmt == Format::Json ? dump(survey_json(report)) : survey_text(report), out_path, out);
            for (const gapsym::SurveyViolation &v : report.violations) {
                err << "violation: " << gapsym::survey_check_name(v.check) << " " << pair_text(v.alpha, v.beta);
                if (v.gap) {
                    err << " gap " << *v.gap;
                }
                err << ": " << v.message << "\n";
            }
            return report.ok() ? kExitOk : kExitViolation;
        }
        if (classes->parsed()) {
            if (fmt == Format::Svg) {
                throw UsageError("classes reports are json or text");
            }
            const json report = classes_json(semigroup_arg(gens));
            emit(fmt == Format::Json ? dump(report) : classes_text(report), out_path, out);
            return kExitOk;
        }
        if (fundamental->parsed()) {
            if (fmt == Format::Svg) {
                throw UsageError("fundamental reports are json or text");
            }
            const gapsym::NumericalSemigroup s = semigroup_arg(gens);
            const std::optional<std::vector<Int>> xs =
                x_opt->count() ? std::optional<std::vector<Int>>(x_values) : std::nullopt;
            const json report = fundamental_json(s, xs);
            emit(fmt == Format::Json ? dump(report) : flat_text(report), out_path, out);
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Ambiguous ? kExitAmbiguous : kExitInvalidInput;
    }
    return kExitUsage;
}

}  // namespace gapsym_cli
