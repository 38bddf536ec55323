#include "gapsym/semimodule.h"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "gapsym/error.h"

namespace gapsym {

namespace {

// Minimal generators of the semimodule whose membership below `limit` is
// `in`, with everything at or above `limit` a member. x is minimal iff no
// x - n is a member for a minimal generator n of the base.
std::vector<Int> minimal_generators_of(const NumericalSemigroup &base, const std::vector<bool> &in, Int limit) {
    auto has = [&](Int x) { return x >= limit || (x >= 0 && in[static_cast<std::size_t>(x)]); };
    std::vector<Int> out;
    for (Int x = 0; x < limit + base.multiplicity(); ++x) {
        if (!has(x)) {
            continue;
        }
        bool minimal = true;
        for (Int n : base.generators()) {
            if (x - n >= 0 && has(x - n)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(x);
        }
    }
    return out;
}

void sort_generators(const NumericalSemigroup &base, std::vector<Int> &gens) {
    std::sort(gens.begin(), gens.end());
    if (!base.is_two_generated() || gens.empty() || gens.front() != 0) {
        return;
    }
    const TwoGenView t = TwoGenView::of(base);
    // Normalized minimal generating sets are lean, so every nonzero entry is a
    // gap and the lattice order is total on them.
    std::sort(gens.begin() + 1, gens.end(),
              [&](Int x, Int y) { return gap_to_lattice(t, x).a < gap_to_lattice(t, y).a; });
}

void require_two_gen(const GammaSemimodule &m) {
    if (!m.base().is_two_generated()) {
        throw Error(ErrorKind::NotTwoGenerated, "operation needs a two-generator semigroup");
    }
}

void require_non_principal(const GammaSemimodule &m) {
    if (m.ed() < 2) {
        throw Error(ErrorKind::PrincipalModule, "module is principal (ed = 1)");
    }
}

}  // namespace

GammaSemimodule GammaSemimodule::generated_by(const NumericalSemigroup &base, std::span<const Int> gens) {
    if (gens.empty()) {
        throw Error(ErrorKind::EmptyInput, "semimodule needs at least one generator");
    }
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 0) {
        throw Error(ErrorKind::InvalidArgument, "semimodule generators must be nonnegative");
    }

    GammaSemimodule m(base);
    m.min_ = sorted.front();
    for (Int g : sorted) {
        const bool redundant = std::any_of(sorted.begin(), sorted.end(),
                                           [&](Int h) { return h < g && base.contains(g - h); });
        if (!redundant) {
            m.min_generators_.push_back(g);
        }
    }
    sort_generators(base, m.min_generators_);

    // Everything from min + c(Gamma) on is a member.
    const Int limit = m.min_ + base.conductor();
    std::vector<bool> member(static_cast<std::size_t>(limit), false);
    for (Int x = 0; x < limit; ++x) {
        for (Int g : m.min_generators_) {
            if (g <= x && base.contains(x - g)) {
                member[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    Int conductor = limit;
    while (conductor > 0 && member[static_cast<std::size_t>(conductor - 1)]) {
        --conductor;
    }
    member.resize(static_cast<std::size_t>(conductor));
    m.conductor_ = conductor;
    for (Int x = 0; x < conductor; ++x) {
        if (member[static_cast<std::size_t>(x)]) {
            ++m.delta_;
        } else {
            m.gap_list_.push_back(x);
        }
    }
    m.member_ = std::move(member);
    return m;
}

GammaSemimodule make_semimodule(const NumericalSemigroup &s, std::span<const Int> gens) {
    if (gens.empty()) {
        throw Error(ErrorKind::EmptyInput, "semimodule needs at least one generator");
    }
    const Int lo = *std::min_element(gens.begin(), gens.end());
    std::vector<Int> shifted;
    shifted.reserve(gens.size());
    for (Int g : gens) {
        shifted.push_back(g - lo);
    }
    return GammaSemimodule::generated_by(s, shifted);
}

GammaSemimodule make_semimodule(const NumericalSemigroup &s, std::initializer_list<Int> gens) {
    return make_semimodule(s, std::span<const Int>(gens.begin(), gens.size()));
}

GammaSemimodule normalize(const GammaSemimodule &m) {
    if (m.is_normalized()) {
        return m;
    }
    return make_semimodule(m.base(), m.min_generators());
}

bool is_lean(const NumericalSemigroup &s, std::span<const Int> set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const Int d = set[i] > set[j] ? set[i] - set[j] : set[j] - set[i];
            if (s.contains(d)) {
                return false;
            }
        }
    }
    return true;
}

bool member(const GammaSemimodule &m, Int x) {
    return m.contains(x);
}

Int sm_conductor(const GammaSemimodule &m) {
    return m.conductor();
}

Int sm_delta(const GammaSemimodule &m) {
    return m.delta();
}

Int sm_ed(const GammaSemimodule &m) {
    return m.ed();
}

std::vector<Int> dual_generators_two_gen(const GammaSemimodule &m) {
    require_two_gen(m);
    if (!m.is_normalized()) {
        throw Error(ErrorKind::InvalidArgument, "closed dual formula needs a normalized module");
    }
    const TwoGenView t = TwoGenView::of(m.base());
    const auto &gens = m.min_generators();
    if (gens.size() == 1) {
        return {0};
    }
    std::vector<LatticeGap> pts;
    for (std::size_t k = 1; k < gens.size(); ++k) {
        pts.push_back(gap_to_lattice(t, gens[k]));
    }
    // The closed form indexes the points with a decreasing; ours run the other way.
    std::reverse(pts.begin(), pts.end());
    std::vector<Int> out;
    out.push_back(pts.front().a * t.alpha());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        out.push_back(pts[k + 1].a * t.alpha() + pts[k].b * t.beta());
    }
    out.push_back(pts.back().b * t.beta());
    return out;
}

GammaSemimodule dual_by_definition(const GammaSemimodule &m) {
    const NumericalSemigroup &base = m.base();
    const Int limit = base.conductor();
    std::vector<bool> in(static_cast<std::size_t>(limit), false);
    for (Int x = 0; x < limit; ++x) {
        in[static_cast<std::size_t>(x)] = std::all_of(m.min_generators().begin(), m.min_generators().end(),
                                                      [&](Int g) { return base.contains(x + g); });
    }
    const std::vector<Int> gens = minimal_generators_of(base, in, limit);
    return GammaSemimodule::generated_by(base, gens);
}

GammaSemimodule dual(const GammaSemimodule &m) {
    if (m.base().is_two_generated() && m.is_normalized()) {
        return GammaSemimodule::generated_by(m.base(), dual_generators_two_gen(m));
    }
    return dual_by_definition(m);
}

GammaSemimodule syzygy(const GammaSemimodule &m) {
    require_non_principal(m);
    const NumericalSemigroup &base = m.base();
    const auto &gens = m.min_generators();
    const Int limit = *std::max_element(gens.begin(), gens.end()) + base.conductor();
    std::vector<bool> in(static_cast<std::size_t>(limit), false);
    for (Int x = 0; x < limit; ++x) {
        int hits = 0;
        for (Int g : gens) {
            if (g <= x && base.contains(x - g) && ++hits == 2) {
                break;
            }
        }
        in[static_cast<std::size_t>(x)] = hits >= 2;
    }
    return GammaSemimodule::generated_by(base, minimal_generators_of(base, in, limit));
}

LeanCouple lattice_path(const GammaSemimodule &m) {
    require_two_gen(m);
    require_non_principal(m);
    const GammaSemimodule norm = normalize(m);
    const TwoGenView t = TwoGenView::of(norm.base());
    const auto &gens = norm.min_generators();

    LeanCouple out;
    for (std::size_t k = 1; k < gens.size(); ++k) {
        out.es_turns.push_back(gap_to_lattice(t, gens[k]));
    }
    Int prev_a = 0;
    for (const LatticeGap &g : out.es_turns) {
        out.se_turns.push_back({prev_a, g.b});
        prev_a = g.a;
    }
    out.se_turns.push_back({prev_a, 0});

    for (const Cell &c : out.se_turns) {
        out.syzygy_values.push_back(t.value_at(c));
    }
    const auto it = std::max_element(out.syzygy_values.begin(), out.syzygy_values.end());
    out.max_syzygy = *it;
    out.max_syzygy_point = out.se_turns[static_cast<std::size_t>(it - out.syzygy_values.begin())];
    return out;
}

Int sm_conductor_formula(const GammaSemimodule &m) {
    require_two_gen(m);
    const TwoGenView t = TwoGenView::of(m.base());
    if (m.ed() < 2) {
        return m.min() + t.conductor();
    }
    const LeanCouple couple = lattice_path(m);
    assert(couple.max_syzygy - t.alpha() - t.beta() + 1 ==
           t.conductor() - couple.max_syzygy_point.a * t.alpha() - couple.max_syzygy_point.b * t.beta());
    return m.min() + couple.max_syzygy - t.alpha() - t.beta() + 1;
}

Int delta_formula(const GammaSemimodule &m) {
    require_two_gen(m);
    const TwoGenView t = TwoGenView::of(m.base());
    const GammaSemimodule norm = normalize(m);
    std::vector<Cell> pts;
    pts.push_back({0, 0});
    for (std::size_t k = 1; k < norm.min_generators().size(); ++k) {
        pts.push_back(gap_to_lattice(t, norm.min_generators()[k]).cell());
    }
    pts.push_back({t.beta(), 0});
    Int area = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        area += (pts[i + 1].a - pts[i].a) * pts[i + 1].b;
    }
    return sm_conductor_formula(norm) - t.genus() + area;
}

bool is_fixed_point(const GammaSemimodule &m) {
    require_non_principal(m);
    const GammaSemimodule syz = normalize(syzygy(m));
    const GammaSemimodule own = normalize(m);
    return std::set<Int>(syz.min_generators().begin(), syz.min_generators().end()) ==
           std::set<Int>(own.min_generators().begin(), own.min_generators().end());
}

bool is_selfdual(const GammaSemimodule &m) {
    const GammaSemimodule d = normalize(dual(m));
    const GammaSemimodule own = normalize(m);
    return std::set<Int>(d.min_generators().begin(), d.min_generators().end()) ==
           std::set<Int>(own.min_generators().begin(), own.min_generators().end());
}

bool is_symmetric_sm(const GammaSemimodule &m) {
    const Int c = m.conductor();
    for (Int x = 0; x < c; ++x) {
        if (m.contains(x) == m.contains(c - 1 - x)) {
            return false;
        }
    }
    return true;
}

PicardOrbit picard_orbit(const GammaSemimodule &m, std::size_t max_steps) {
    require_non_principal(m);
    PicardOrbit orbit;
    GammaSemimodule current = normalize(m);
    orbit.lean_sets.push_back(current.min_generators());
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (current.ed() < 2) {
            orbit.reached_principal = true;
            break;
        }
        current = normalize(syzygy(current));
        const auto &next = current.min_generators();
        const auto seen = std::find(orbit.lean_sets.begin(), orbit.lean_sets.end(), next);
        if (seen != orbit.lean_sets.end()) {
            orbit.cycle_start = static_cast<std::size_t>(seen - orbit.lean_sets.begin());
            orbit.cycle_length = orbit.lean_sets.size() - orbit.cycle_start;
            break;
        }
        orbit.lean_sets.push_back(next);
    }
    return orbit;
}

}  // namespace gapsym
