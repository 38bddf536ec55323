#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gapsym/semigroup.h"

namespace gapsym {

/// Gaps g with 2g and 3g in the semigroup.
struct FundamentalGapSet {
    std::vector<Int> gaps;
    NumericalSemigroup source;
};

FundamentalGapSet fundamental_gaps(const NumericalSemigroup &s);

/// All positive divisors of the elements of `xs`, ascending.
std::vector<Int> divisor_closure(std::span<const Int> xs);

/// N minus the divisor closure of `fg`. Throws NotASemigroup when that set is
/// not closed under addition.
NumericalSemigroup semigroup_from_fg(std::span<const Int> fg);

/// True iff S is the largest semigroup avoiding X, i.e. FG(S) is a subset of X.
/// Throws XNotInGaps unless X is a set of gaps of S.
bool h_determines(const NumericalSemigroup &s, std::span<const Int> xs);

struct RedEquivalence {
    bool twice_in_gamma = false;  // 2g in Gamma
    bool in_rectangle = false;    // 2a <= beta and 2b <= alpha
    bool wilf_nonpositive = false;

    bool all_agree() const {
        return twice_in_gamma == in_rectangle && twice_in_gamma == wilf_nonpositive;
    }
};

/// Evaluates the three conditions separately; W by direct scan. Throws NotAGap.
RedEquivalence red_equivalence(const TwoGenView &t, Int g);

struct CountComparison {
    Int sg_ssg = 0;
    Int fg = 0;
    bool inequality_holds = false;
    /// (beta - 1)/2 - ceil((beta - 3)/6), reported for alpha = 2 only.
    std::optional<Int> alpha_two_fg;
};

CountComparison compare_counts(const TwoGenView &t);

}  // namespace gapsym
