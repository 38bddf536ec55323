#include "gapsym/wilf.h"

#include <algorithm>
#include <cassert>
#include <string>

#include "gapsym/error.h"

namespace gapsym {

WilfReport wilf_semimodule(const GammaSemimodule &m) {
    WilfReport r;
    r.ed = m.ed();
    r.delta = m.delta();
    r.conductor = m.conductor();
    r.w = r.ed * r.delta - r.conductor;
    return r;
}

Int wilf_gap(const NumericalSemigroup &s, Int g) {
    if (!s.is_gap(g)) {
        throw Error(ErrorKind::NotAGap, std::to_string(g) + " is not a gap");
    }
    const GammaSemimodule m = make_semimodule(s, {0, g});
    return 2 * m.delta() - m.conductor();
}

WilfReport wilf_gap_formula(const TwoGenView &t, Int a, Int b) {
    lattice_to_gap(t, a, b);
    const Int alpha = t.alpha();
    const Int beta = t.beta();
    const Int h0 = alpha * beta - b * beta;
    const Int h1 = alpha * beta - a * alpha;
    // h0 == h1 would need beta | a with 0 < a < beta.
    assert(h0 != h1);

    WilfReport r;
    r.a = a;
    r.b = b;
    r.ed = 2;
    r.conductor = std::max(h0, h1) - alpha - beta + 1;
    r.delta = r.conductor - t.genus() + a * b;
    if (h0 < h1) {
        r.min_branch = MinBranch::RowSide;
        r.w = -(a * alpha - 2 * a * b);
    } else {
        r.min_branch = MinBranch::ColumnSide;
        r.w = -(b * beta - 2 * a * b);
    }
    return r;
}

ZeroWilfEquivalences zero_wilf_equivalences(const TwoGenView &t, Int g) {
    const LatticeGap e = gap_to_lattice(t, g);
    const NumericalSemigroup s = t.semigroup();
    const GammaSemimodule m = make_semimodule(s, {0, g});

    ZeroWilfEquivalences out;
    out.wilf_zero = 2 * m.delta() - m.conductor() == 0;
    out.half_generator = t.alpha() == 2 * e.b || t.beta() == 2 * e.a;
    out.fixed_point = is_fixed_point(m);
    out.selfdual = is_selfdual(m);
    out.symmetric = is_symmetric_sm(m);
    return out;
}

std::vector<ZeroWilfRow> zero_wilf_survey_general(const NumericalSemigroup &s) {
    std::vector<ZeroWilfRow> rows;
    for (Int g : s.gaps()) {
        const GammaSemimodule m = make_semimodule(s, {0, g});
        const Int w = 2 * m.delta() - m.conductor();
        if (w != 0) {
            continue;
        }
        rows.push_back({g, w, is_fixed_point(m), is_selfdual(m), is_symmetric_sm(m)});
    }
    return rows;
}

}  // namespace gapsym
