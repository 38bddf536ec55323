#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gapsym/error.h"
#include "gapsym/fundamental.h"
#include "gapsym/oracle.h"
#include "gapsym/semigroup.h"
#include "gapsym/semimodule.h"
#include "gapsym/survey.h"
#include "gapsym/symmetry.h"
#include "gapsym/wilf.h"

namespace py = pybind11;
using namespace gapsym;

namespace {

using CellList = std::vector<std::pair<Int, Int>>;

CellList cell_list(const Polyomino &p) {
    CellList out;
    for (const Cell &c : p.cells) {
        out.emplace_back(c.a, c.b);
    }
    return out;
}

Polyomino polyomino(const CellList &cells) {
    Polyomino p;
    for (auto [a, b] : cells) {
        p.cells.insert(Cell{a, b});
    }
    return p;
}

TriangleSide side_of(const std::string &name) {
    auto side = parse_side(name);
    if (!side) {
        throw Error(ErrorKind::InvalidArgument, "side must be \"T_u\" or \"T_r\"");
    }
    return *side;
}

py::dict region(const TwoGenView &t, const Polyomino &p) {
    py::dict d;
    d["cells"] = cell_list(p);
    d["values"] = polyomino_values(t, p);
    return d;
}

py::dict wilf_report(const WilfReport &r) {
    py::dict d;
    d["ed"] = r.ed;
    d["delta"] = r.delta;
    d["conductor"] = r.conductor;
    d["w"] = r.w;
    return d;
}

}  // namespace

PYBIND11_MODULE(gapsym, m) {
    m.doc() = "Numerical semigroups, semimodules, Wilf numbers and gap symmetries";

    static py::exception<Error> error(m, "GapsymError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            exc.attr("kind") = std::string(error_kind_name(e.kind()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
        .def(py::init([](const std::vector<Int> &gens) { return make_semigroup(gens); }), py::arg("generators"))
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("gaps", &NumericalSemigroup::gaps)
        .def_property_readonly("conductor", &NumericalSemigroup::conductor)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def("__contains__", &NumericalSemigroup::contains)
        .def("is_gap", &NumericalSemigroup::is_gap)
        .def("__repr__", [](const NumericalSemigroup &s) {
            std::string out = "NumericalSemigroup(<";
            for (std::size_t i = 0; i < s.generators().size(); ++i) {
                out += (i ? "," : "") + std::to_string(s.generators()[i]);
            }
            return out + ">)";
        });

    py::class_<GammaSemimodule>(m, "Semimodule")
        .def(py::init([](const NumericalSemigroup &s, const std::vector<Int> &gens) { return make_semimodule(s, gens); }),
             py::arg("semigroup"), py::arg("generators"))
        .def_property_readonly("min_generators", &GammaSemimodule::min_generators)
        .def_property_readonly("conductor", &GammaSemimodule::conductor)
        .def_property_readonly("delta", &GammaSemimodule::delta)
        .def_property_readonly("ed", &GammaSemimodule::ed)
        .def("__contains__", &GammaSemimodule::contains)
        .def("syzygy", [](const GammaSemimodule &x) { return syzygy(x); })
        .def("dual", [](const GammaSemimodule &x) { return dual(x); })
        .def("normalize", [](const GammaSemimodule &x) { return normalize(x); })
        .def("wilf", [](const GammaSemimodule &x) { return wilf_semimodule(x).w; })
        .def("is_fixed_point", [](const GammaSemimodule &x) { return is_fixed_point(x); })
        .def("is_selfdual", [](const GammaSemimodule &x) { return is_selfdual(x); })
        .def("is_symmetric", [](const GammaSemimodule &x) { return is_symmetric_sm(x); })
        .def("orbit_cycle_length",
             [](const GammaSemimodule &x, std::size_t max_steps) { return picard_orbit(x, max_steps).cycle_length; },
             py::arg("max_steps") = 64);

    m.def("is_lean", [](const NumericalSemigroup &s, const std::vector<Int> &set) { return is_lean(s, set); });
    m.def("gap_to_lattice", [](Int alpha, Int beta, Int g) {
        const LatticeGap e = gap_to_lattice(TwoGenView(alpha, beta), g);
        return std::pair<Int, Int>{e.a, e.b};
    });
    m.def("lattice_to_gap", [](Int alpha, Int beta, Int a, Int b) { return lattice_to_gap(TwoGenView(alpha, beta), a, b); });

    m.def("wilf_gap", &wilf_gap, py::arg("semigroup"), py::arg("gap"));
    m.def("wilf_gap_formula",
          [](Int alpha, Int beta, Int a, Int b) { return wilf_report(wilf_gap_formula(TwoGenView(alpha, beta), a, b)); });
    m.def("zero_wilf_survey", [](const NumericalSemigroup &s) {
        py::list rows;
        for (const ZeroWilfRow &r : zero_wilf_survey_general(s)) {
            py::dict d;
            d["gap"] = r.gap;
            d["fixed_point"] = r.fixed_point;
            d["selfdual"] = r.selfdual;
            d["symmetric"] = r.symmetric;
            rows.append(d);
        }
        return rows;
    });

    m.def("supersymmetric_gaps", [](Int alpha, Int beta) {
        TwoGenView t(alpha, beta);
        const SupersymmetricGaps sg = supersymmetric_gaps(t);
        py::dict d = region(t, sg.cells);
        d["side"] = std::string(side_name(sg.side));
        return d;
    });
    m.def("self_symmetric_gaps", [](Int alpha, Int beta) {
        TwoGenView t(alpha, beta);
        return region(t, self_symmetric_gaps(t));
    });
    m.def("gap_partition", [](Int alpha, Int beta) {
        TwoGenView t(alpha, beta);
        const GapPartition p = gap_partition(t);
        py::dict d;
        d["t_u"] = region(t, p.t_u);
        d["s_alpha_t_u"] = region(t, p.s_alpha_t_u);
        d["ssg"] = region(t, p.ssg);
        d["t_r"] = region(t, p.t_r);
        d["s_beta_t_r"] = region(t, p.s_beta_t_r);
        return d;
    });
    m.def(
        "reconstruct",
        [](Int alpha, Int beta, const std::string &side, const CellList &sg, const CellList &ssg) {
            return reconstruct_from_symmetric(alpha, beta, side_of(side), polyomino(sg), polyomino(ssg));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("side"), py::arg("sg_cells"), py::arg("ssg_cells"));
    m.def("infer_semigroup", [](const std::vector<Int> &values, Int max_beta) { return infer_semigroup(values, max_beta); },
          py::arg("values"), py::arg("max_beta"));
    m.def("gap_conductor_partition", [](const NumericalSemigroup &s) {
        py::list out;
        for (const GapClass &c : gap_conductor_partition(s)) {
            py::dict d;
            d["conductor"] = c.conductor;
            d["members"] = c.members;
            d["wilf"] = c.wilf;
            d["pairs"] = c.pairs;
            d["self_symmetric"] = c.self_symmetric;
            out.append(d);
        }
        return out;
    });
    m.def("card_formulas", [](Int alpha, Int beta) {
        const CardinalityReport r = card_formulas(TwoGenView(alpha, beta));
        py::dict d;
        d["ssg_count"] = r.ssg_count;
        d["t_u_formula"] = r.t_u_formula;
        d["t_u_direct"] = r.t_u_direct;
        d["t_r_formula"] = r.t_r_formula;
        d["t_r_direct"] = r.t_r_direct;
        d["agree"] = r.agree;
        d["warnings"] = r.warnings;
        return d;
    });

    m.def("fundamental_gaps", [](const NumericalSemigroup &s) { return fundamental_gaps(s).gaps; });
    m.def("divisor_closure", [](const std::vector<Int> &xs) { return divisor_closure(xs); });
    m.def("semigroup_from_fg", [](const std::vector<Int> &fg) { return semigroup_from_fg(fg); });
    m.def("h_determines", [](const NumericalSemigroup &s, const std::vector<Int> &xs) { return h_determines(s, xs); });
    m.def("compare_counts", [](Int alpha, Int beta) {
        const CountComparison c = compare_counts(TwoGenView(alpha, beta));
        py::dict d;
        d["sg_ssg"] = c.sg_ssg;
        d["fg"] = c.fg;
        d["inequality_holds"] = c.inequality_holds;
        d["alpha_two_fg"] = c.alpha_two_fg;
        return d;
    });

    m.def("brute_syzygy", [](const NumericalSemigroup &s, const std::vector<Int> &gens, Int limit) {
        return oracle::brute_syzygy(s, gens, {limit}).minimal;
    });
    m.def("enumerate_lean_sets", &oracle::enumerate_lean_sets, py::arg("alpha"), py::arg("beta"),
          py::arg("max_ed") = 0);
    m.def("brute_h_determines", [](const std::vector<Int> &xs, Int gmax) { return oracle::brute_h_determines(xs, gmax); });

    m.def(
        "run_survey",
        [](Int max_beta, const std::string &checks, unsigned threads) {
            SurveyOptions opt;
            opt.max_beta = max_beta;
            opt.checks = parse_survey_checks(checks);
            opt.threads = threads;
            SurveyReport report;
            {
                py::gil_scoped_release release;
                report = run_survey(opt);
            }
            py::dict d;
            d["pairs_checked"] = report.pairs_checked;
            d["ok"] = report.ok();
            d["violations"] = report.violations.size();
            d["warnings"] = report.warnings.size();
            d["excluded"] = report.excluded.size();
            return d;
        },
        py::arg("max_beta") = 40, py::arg("checks") = "all", py::arg("threads") = 0);
}
