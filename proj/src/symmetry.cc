#include "gapsym/symmetry.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "gapsym/error.h"
#include "gapsym/semimodule.h"

namespace gapsym {

namespace {

template <typename Map>
Polyomino map_cells(const Polyomino &p, Map f) {
    Polyomino out;
    for (const Cell &c : p.cells) {
        out.cells.insert(f(c));
    }
    return out;
}

template <typename Pred>
Polyomino lattice_filter(const TwoGenView &t, Pred keep) {
    Polyomino out;
    for (const LatticeGap &g : lattice_gaps(t)) {
        if (keep(g.cell())) {
            out.cells.insert(g.cell());
        }
    }
    return out;
}

bool in_upper_region(const TwoGenView &t, Cell c) {
    return t.in_lattice(c) && c.b > t.alpha() / 2;
}

bool in_right_region(const TwoGenView &t, Cell c) {
    return t.in_lattice(c) && c.a > t.beta() / 2;
}

bool on_half_line(const TwoGenView &t, Cell c) {
    return t.alpha() == 2 * c.b || t.beta() == 2 * c.a;
}

std::string pair_name(Int alpha, Int beta) {
    return "<" + std::to_string(alpha) + "," + std::to_string(beta) + ">";
}

}  // namespace

Polyomino polyomino_union(const Polyomino &x, const Polyomino &y) {
    Polyomino out = x;
    out.cells.insert(y.cells.begin(), y.cells.end());
    return out;
}

Polyomino polyomino_difference(const Polyomino &x, const Polyomino &y) {
    Polyomino out;
    for (const Cell &c : x.cells) {
        if (!y.contains(c)) {
            out.cells.insert(c);
        }
    }
    return out;
}

bool polyomino_disjoint(const Polyomino &x, const Polyomino &y) {
    return std::none_of(x.cells.begin(), x.cells.end(), [&](const Cell &c) { return y.contains(c); });
}

std::vector<Int> polyomino_values(const TwoGenView &t, const Polyomino &p) {
    std::vector<Int> out;
    out.reserve(p.size());
    for (const Cell &c : p.cells) {
        out.push_back(t.value_at(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polyomino polyomino_from_values(const TwoGenView &t, std::span<const Int> values) {
    Polyomino out;
    for (Int v : values) {
        out.cells.insert(gap_to_lattice(t, v).cell());
    }
    return out;
}

std::string_view side_name(TriangleSide side) {
    return side == TriangleSide::Upper ? "T_u" : "T_r";
}

std::optional<TriangleSide> parse_side(std::string_view name) {
    if (name == "T_u") {
        return TriangleSide::Upper;
    }
    if (name == "T_r") {
        return TriangleSide::Right;
    }
    return std::nullopt;
}

Polyomino triangle_u(const TwoGenView &t) {
    return lattice_filter(t, [&](Cell c) { return c.b > t.alpha() / 2; });
}

Polyomino triangle_r(const TwoGenView &t) {
    return lattice_filter(t, [&](Cell c) { return c.a > t.beta() / 2; });
}

SupersymmetricGaps supersymmetric_gaps(const TwoGenView &t) {
    Polyomino up = triangle_u(t);
    Polyomino right = triangle_r(t);
    if (right.size() < up.size()) {
        return {TriangleSide::Right, std::move(right)};
    }
    return {TriangleSide::Upper, std::move(up)};
}

Polyomino self_symmetric_gaps(const TwoGenView &t) {
    return lattice_filter(t, [&](Cell c) { return on_half_line(t, c); });
}

Polyomino reflect_alpha(const TwoGenView &t, const Polyomino &p) {
    return map_cells(p, [&](Cell c) { return Cell{c.a, t.alpha() - c.b}; });
}

Polyomino reflect_beta(const TwoGenView &t, const Polyomino &p) {
    return map_cells(p, [&](Cell c) { return Cell{t.beta() - c.a, c.b}; });
}

Polyomino translate_tau(const Polyomino &p, Int step) {
    return map_cells(p, [&](Cell c) { return Cell{c.a + step, c.b}; });
}

Polyomino right_border(const Polyomino &p, const TwoGenView &t) {
    Polyomino out;
    for (const Cell &c : p.cells) {
        if (!t.in_lattice({c.a + 1, c.b})) {
            out.cells.insert(c);
        }
    }
    return out;
}

Polyomino full_border(const Polyomino &p, const TwoGenView &t) {
    Polyomino out;
    for (const Cell &c : p.cells) {
        if (!t.in_lattice({c.a + 1, c.b}) || !t.in_lattice({c.a, c.b + 1})) {
            out.cells.insert(c);
        }
    }
    return out;
}

Polyomino half_rectangle(const TwoGenView &t) {
    Polyomino out;
    for (Int b = 1; b <= t.alpha() / 2; ++b) {
        for (Int a = 1; a <= t.beta() / 2; ++a) {
            out.cells.insert({a, b});
        }
    }
    return out;
}

GapPartition gap_partition(const TwoGenView &t) {
    GapPartition p;
    p.t_u = triangle_u(t);
    p.t_r = triangle_r(t);
    p.ssg = self_symmetric_gaps(t);
    p.s_alpha_t_u = reflect_alpha(t, p.t_u);
    p.s_beta_t_r = reflect_beta(t, p.t_r);

    const std::vector<const Polyomino *> blocks = {&p.t_u, &p.s_alpha_t_u, &p.ssg, &p.t_r, &p.s_beta_t_r};
    Polyomino covered;
    std::size_t total = 0;
    for (const Polyomino *block : blocks) {
        total += block->size();
        covered = polyomino_union(covered, *block);
    }
    Polyomino lattice;
    for (const LatticeGap &g : lattice_gaps(t)) {
        lattice.cells.insert(g.cell());
    }
    const std::string name = pair_name(t.alpha(), t.beta());
    if (total != covered.size()) {
        throw Error(ErrorKind::PartitionViolation, "blocks overlap for " + name);
    }
    if (covered != lattice) {
        throw Error(ErrorKind::PartitionViolation, "blocks do not cover the gaps of " + name);
    }
    const Polyomino lower = polyomino_union(polyomino_union(p.s_alpha_t_u, p.ssg), p.s_beta_t_r);
    if (lower != half_rectangle(t)) {
        throw Error(ErrorKind::PartitionViolation, "reflected blocks do not tile the half rectangle of " + name);
    }
    return p;
}

std::vector<Int> reconstruct_from_symmetric(Int alpha, Int beta, TriangleSide side, const Polyomino &sg,
                                            const Polyomino &ssg) {
    std::optional<TwoGenView> maybe;
    try {
        maybe.emplace(alpha, beta);
    } catch (const Error &e) {
        throw Error(ErrorKind::InconsistentInput, e.what());
    }
    const TwoGenView &t = *maybe;
    const std::string name = pair_name(alpha, beta);

    for (const Cell &c : sg.cells) {
        const bool ok = side == TriangleSide::Upper ? in_upper_region(t, c) : in_right_region(t, c);
        if (!ok) {
            throw Error(ErrorKind::InconsistentInput, "SG cell (" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                                          ") is outside " + std::string(side_name(side)) + " of " +
                                                          name);
        }
    }
    for (const Cell &c : ssg.cells) {
        if (!t.in_lattice(c) || !on_half_line(t, c)) {
            throw Error(ErrorKind::InconsistentInput, "SSG cell (" + std::to_string(c.a) + "," +
                                                          std::to_string(c.b) + ") is not self-symmetric in " + name);
        }
    }

    // Mirror SG into the half rectangle; what SSG and the mirror leave free is
    // the mirror image of the other triangle.
    const Polyomino rect = half_rectangle(t);
    const Polyomino mirror = side == TriangleSide::Upper ? reflect_alpha(t, sg) : reflect_beta(t, sg);
    const Polyomino placed = polyomino_union(mirror, ssg);
    if (!polyomino_disjoint(mirror, ssg) || polyomino_difference(placed, rect).size() != 0) {
        throw Error(ErrorKind::InconsistentInput, "mirrored SG and SSG do not fit the half rectangle of " + name);
    }
    const Polyomino complement = polyomino_difference(rect, placed);
    const Polyomino other = side == TriangleSide::Upper ? reflect_beta(t, complement) : reflect_alpha(t, complement);

    const std::vector<const Polyomino *> pieces = {&sg, &mirror, &ssg, &complement, &other};
    Polyomino all;
    std::size_t total = 0;
    for (const Polyomino *piece : pieces) {
        total += piece->size();
        all = polyomino_union(all, *piece);
    }
    for (const Cell &c : all.cells) {
        if (!t.in_lattice(c)) {
            throw Error(ErrorKind::InconsistentInput, "reconstruction leaves the gap triangle of " + name);
        }
    }
    if (total != all.size() || static_cast<Int>(all.size()) != t.genus()) {
        throw Error(ErrorKind::InconsistentInput, "reconstruction yields " + std::to_string(all.size()) +
                                                      " gaps, expected " + std::to_string(t.genus()) + " for " +
                                                      name);
    }
    return polyomino_values(t, all);
}

std::vector<std::pair<Int, Int>> matching_semigroups(std::span<const Int> values, Int max_beta) {
    std::vector<Int> target(values.begin(), values.end());
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());

    std::vector<std::pair<Int, Int>> found;
    for (Int beta = 3; beta <= max_beta; ++beta) {
        for (Int alpha = 2; alpha < beta; ++alpha) {
            if (std::gcd(alpha, beta) != 1) {
                continue;
            }
            // Every gap is below alpha*beta.
            if (!target.empty() && target.back() >= alpha * beta) {
                continue;
            }
            const TwoGenView t(alpha, beta);
            const Polyomino cells = polyomino_union(supersymmetric_gaps(t).cells, self_symmetric_gaps(t));
            if (cells.size() == target.size() && polyomino_values(t, cells) == target) {
                found.emplace_back(alpha, beta);
            }
        }
    }
    return found;
}

std::optional<std::pair<Int, Int>> infer_semigroup(std::span<const Int> values, Int max_beta) {
    const auto found = matching_semigroups(values, max_beta);
    if (found.empty()) {
        return std::nullopt;
    }
    if (found.size() > 1) {
        std::string list;
        for (const auto &[alpha, beta] : found) {
            list += " " + pair_name(alpha, beta);
        }
        throw Error(ErrorKind::Ambiguous, "several semigroups match:" + list);
    }
    return found.front();
}

CardinalityReport card_formulas(const TwoGenView &t) {
    const Int alpha = t.alpha();
    const Int beta = t.beta();
    CardinalityReport r;
    if (alpha % 2 == 0) {
        r.ssg_count = (beta - 1) / 2;
    } else if (beta % 2 == 0) {
        r.ssg_count = (alpha - 1) / 2;
    }
    r.ssg_count_direct = static_cast<Int>(self_symmetric_gaps(t).size());

    for (Int j = 1; j <= alpha / 2 - 1; ++j) {
        r.t_u_formula += j * beta / alpha;
    }
    const Int h = alpha % 2 == 0 ? alpha / 2 + 1 : alpha / 2;
    for (Int j = h; j <= alpha - 1; ++j) {
        r.t_r_formula += std::max<Int>(0, j * beta / alpha - beta / 2);
    }
    r.t_u_direct = static_cast<Int>(triangle_u(t).size());
    r.t_r_direct = static_cast<Int>(triangle_r(t).size());

    r.sg_side = r.t_r_direct < r.t_u_direct ? TriangleSide::Right : TriangleSide::Upper;
    r.sg_count_direct = r.sg_side == TriangleSide::Upper ? r.t_u_direct : r.t_r_direct;
    r.sg_count_formula = r.sg_side == TriangleSide::Upper ? r.t_u_formula : r.t_r_formula;
    r.agree = r.t_u_formula == r.t_u_direct && r.t_r_formula == r.t_r_direct;

    const std::string name = pair_name(alpha, beta);
    if (r.t_u_formula != r.t_u_direct) {
        r.warnings.push_back("T_u sum gives " + std::to_string(r.t_u_formula) + " but " + name + " has " +
                             std::to_string(r.t_u_direct) + " cells");
    }
    if (r.t_r_formula != r.t_r_direct) {
        r.warnings.push_back("T_r sum gives " + std::to_string(r.t_r_formula) + " but " + name + " has " +
                             std::to_string(r.t_r_direct) + " cells");
    }
    return r;
}

std::vector<GapClass> gap_conductor_partition(const NumericalSemigroup &s) {
    std::map<Int, GapClass> by_conductor;
    for (Int g : s.gaps()) {
        const GammaSemimodule m = make_semimodule(s, {0, g});
        GapClass &cls = by_conductor[m.conductor()];
        cls.conductor = m.conductor();
        cls.members.push_back(g);
        cls.wilf.push_back(2 * m.delta() - m.conductor());
    }

    std::vector<GapClass> out;
    for (auto &[conductor, cls] : by_conductor) {
        std::vector<bool> paired(cls.members.size(), false);
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
                if (std::abs(cls.wilf[i]) == std::abs(cls.wilf[j])) {
                    cls.pairs.emplace_back(cls.members[i], cls.members[j]);
                    paired[i] = paired[j] = true;
                }
            }
        }
        if (cls.members.size() == 1) {
            cls.self_symmetric = cls.members.front();
        } else {
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                if (!paired[i] && cls.wilf[i] == 0) {
                    cls.self_symmetric = cls.members[i];
                }
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace gapsym
