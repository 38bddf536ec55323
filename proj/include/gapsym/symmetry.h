#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapsym/semigroup.h"

namespace gapsym {

/// A finite set of lattice cells. Connectivity is not required.
struct Polyomino {
    std::set<Cell> cells;

    std::size_t size() const {
        return cells.size();
    }
    bool empty() const {
        return cells.empty();
    }
    bool contains(Cell c) const {
        return cells.count(c) != 0;
    }
    friend bool operator==(const Polyomino &, const Polyomino &) = default;
};

Polyomino polyomino_union(const Polyomino &x, const Polyomino &y);
Polyomino polyomino_difference(const Polyomino &x, const Polyomino &y);
bool polyomino_disjoint(const Polyomino &x, const Polyomino &y);

/// Gap values of the cells, ascending.
std::vector<Int> polyomino_values(const TwoGenView &t, const Polyomino &p);
/// Cells of the given gaps. Throws NotAGap.
Polyomino polyomino_from_values(const TwoGenView &t, std::span<const Int> values);

enum class TriangleSide { Upper, Right };

/// "T_u" or "T_r".
std::string_view side_name(TriangleSide side);
std::optional<TriangleSide> parse_side(std::string_view name);

/// Cells of LG strictly above the row floor(alpha/2).
Polyomino triangle_u(const TwoGenView &t);
/// Cells of LG strictly right of the column floor(beta/2).
Polyomino triangle_r(const TwoGenView &t);

struct SupersymmetricGaps {
    TriangleSide side = TriangleSide::Upper;
    Polyomino cells;
};

/// The strictly smaller triangle; T_u on a tie.
SupersymmetricGaps supersymmetric_gaps(const TwoGenView &t);
/// Cells with alpha = 2b or beta = 2a, i.e. the gaps of Wilf number zero.
Polyomino self_symmetric_gaps(const TwoGenView &t);

/// (a, b) -> (a, alpha - b)
Polyomino reflect_alpha(const TwoGenView &t, const Polyomino &p);
/// (a, b) -> (beta - a, b)
Polyomino reflect_beta(const TwoGenView &t, const Polyomino &p);
/// (a, b) -> (a + step, b)
Polyomino translate_tau(const Polyomino &p, Int step);

/// Cells whose right neighbour leaves LG.
Polyomino right_border(const Polyomino &p, const TwoGenView &t);
/// Cells whose right or upper neighbour leaves LG.
Polyomino full_border(const Polyomino &p, const TwoGenView &t);

/// {1..floor(beta/2)} x {1..floor(alpha/2)}: the gaps x with 2x in Gamma.
Polyomino half_rectangle(const TwoGenView &t);

struct GapPartition {
    Polyomino t_u;
    Polyomino s_alpha_t_u;
    Polyomino ssg;
    Polyomino t_r;
    Polyomino s_beta_t_r;
};

/// The five-block decomposition of LG. Throws PartitionViolation if the blocks
/// overlap or fail to cover LG, or if the reflected blocks and SSG do not tile
/// the half rectangle.
GapPartition gap_partition(const TwoGenView &t);

/// Runs the reflect/complement game from SG and SSG and returns the gap values,
/// ascending. Throws InconsistentInput when the input cannot be the SG/SSG of
/// <alpha, beta>.
std::vector<Int> reconstruct_from_symmetric(Int alpha, Int beta, TriangleSide side, const Polyomino &sg,
                                            const Polyomino &ssg);

/// Searches coprime 2 <= alpha < beta <= max_beta for the pair whose SG and
/// SSG values together equal `values`. Throws Ambiguous when several match.
std::optional<std::pair<Int, Int>> infer_semigroup(std::span<const Int> values, Int max_beta);

/// Every pair within the bound whose SG and SSG values equal `values`.
std::vector<std::pair<Int, Int>> matching_semigroups(std::span<const Int> values, Int max_beta);

struct CardinalityReport {
    Int ssg_count = 0;         // case formula
    Int ssg_count_direct = 0;  // cell count
    TriangleSide sg_side = TriangleSide::Upper;
    Int sg_count_formula = 0;
    Int sg_count_direct = 0;
    Int t_u_formula = 0;  // sum_{j=1}^{floor(alpha/2)-1} floor(j beta / alpha)
    Int t_u_direct = 0;
    Int t_r_formula = 0;  // sum_{j=h}^{alpha-1} max(0, floor(j beta / alpha) - floor(beta/2))
    Int t_r_direct = 0;
    /// Both triangle sums match their direct counts.
    bool agree = false;
    std::vector<std::string> warnings;
};

CardinalityReport card_formulas(const TwoGenView &t);

struct GapClass {
    /// Shared conductor of the modules [0, g].
    Int conductor = 0;
    std::vector<Int> members;
    /// Wilf numbers, parallel to members.
    std::vector<Int> wilf;
    /// Unordered pairs of distinct members with equal |W|.
    std::vector<std::pair<Int, Int>> pairs;
    /// The member of a singleton class, or the unpaired member with W = 0.
    std::optional<Int> self_symmetric;
};

/// Groups the gaps by c(Delta_[0, g]), ascending by conductor.
std::vector<GapClass> gap_conductor_partition(const NumericalSemigroup &s);

}  // namespace gapsym
