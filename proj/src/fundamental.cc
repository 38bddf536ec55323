#include "gapsym/fundamental.h"

#include <algorithm>
#include <set>
#include <string>

#include "gapsym/error.h"
#include "gapsym/symmetry.h"
#include "gapsym/wilf.h"

namespace gapsym {

FundamentalGapSet fundamental_gaps(const NumericalSemigroup &s) {
    FundamentalGapSet out{{}, s};
    for (Int g : s.gaps()) {
        if (s.contains(2 * g) && s.contains(3 * g)) {
            out.gaps.push_back(g);
        }
    }
    return out;
}

std::vector<Int> divisor_closure(std::span<const Int> xs) {
    std::set<Int> out;
    for (Int x : xs) {
        if (x <= 0) {
            throw Error(ErrorKind::InvalidArgument, "divisor closure of non-positive " + std::to_string(x));
        }
        for (Int d = 1; d * d <= x; ++d) {
            if (x % d == 0) {
                out.insert(d);
                out.insert(x / d);
            }
        }
    }
    return {out.begin(), out.end()};
}

NumericalSemigroup semigroup_from_fg(std::span<const Int> fg) {
    const std::vector<Int> d = divisor_closure(fg);
    if (d.empty()) {
        return make_semigroup({1});
    }
    const Int top = d.back();
    std::vector<bool> excluded(static_cast<std::size_t>(top + 1), false);
    for (Int x : d) {
        excluded[static_cast<std::size_t>(x)] = true;
    }
    std::vector<Int> members;
    for (Int x = 1; x <= top; ++x) {
        if (!excluded[static_cast<std::size_t>(x)]) {
            members.push_back(x);
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i; j < members.size() && members[i] + members[j] <= top; ++j) {
            const Int sum = members[i] + members[j];
            if (excluded[static_cast<std::size_t>(sum)]) {
                throw Error(ErrorKind::NotASemigroup, std::to_string(members[i]) + " + " +
                                                          std::to_string(members[j]) + " = " + std::to_string(sum) +
                                                          " falls in the divisor closure");
            }
        }
    }
    std::vector<Int> gens = members;
    for (Int x = top + 1; x <= 2 * (top + 1); ++x) {
        gens.push_back(x);
    }
    NumericalSemigroup s = make_semigroup(gens);
    if (s.gaps() != d) {
        throw Error(ErrorKind::NotASemigroup, "complement of the divisor closure is not a numerical semigroup");
    }
    return s;
}

bool h_determines(const NumericalSemigroup &s, std::span<const Int> xs) {
    const std::set<Int> x(xs.begin(), xs.end());
    for (Int v : x) {
        if (!s.is_gap(v)) {
            throw Error(ErrorKind::XNotInGaps, std::to_string(v) + " is not a gap");
        }
    }
    const FundamentalGapSet fg = fundamental_gaps(s);
    return std::all_of(fg.gaps.begin(), fg.gaps.end(), [&](Int g) { return x.count(g) != 0; });
}

RedEquivalence red_equivalence(const TwoGenView &t, Int g) {
    const LatticeGap lg = gap_to_lattice(t, g);
    RedEquivalence r;
    r.twice_in_gamma = !t.is_gap(2 * g);
    r.in_rectangle = 2 * lg.a <= t.beta() && 2 * lg.b <= t.alpha();
    r.wilf_nonpositive = wilf_gap(t.semigroup(), g) <= 0;
    return r;
}

CountComparison compare_counts(const TwoGenView &t) {
    CountComparison r;
    r.sg_ssg = static_cast<Int>(supersymmetric_gaps(t).cells.size() + self_symmetric_gaps(t).size());
    r.fg = static_cast<Int>(fundamental_gaps(t.semigroup()).gaps.size());
    r.inequality_holds = r.sg_ssg <= r.fg;
    if (t.alpha() == 2) {
        const Int beta = t.beta();
        r.alpha_two_fg = (beta - 1) / 2 - (beta - 3 + 5) / 6;
    }
    return r;
}

}  // namespace gapsym
