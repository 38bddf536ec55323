#pragma once

#include <optional>
#include <vector>

#include "gapsym/semigroup.h"
#include "gapsym/semimodule.h"

namespace gapsym {

/// Which syzygy generator of [0, g] is the smaller one.
enum class MinBranch {
    /// min{h_0, h_1} = alpha*beta - b*beta; then -W = a*alpha - 2ab.
    RowSide,
    /// min{h_0, h_1} = alpha*beta - a*alpha; then -W = b*beta - 2ab.
    ColumnSide,
};

struct WilfReport {
    Int w = 0;
    Int ed = 0;
    Int delta = 0;
    Int conductor = 0;
    // Set for two-generator gaps only.
    std::optional<Int> a;
    std::optional<Int> b;
    std::optional<MinBranch> min_branch;
};

/// W = ed * delta - c, all three read off the module directly.
WilfReport wilf_semimodule(const GammaSemimodule &m);

/// W(g) = 2 delta - c of the module [0, g]; any embedding dimension. Throws NotAGap.
Int wilf_gap(const NumericalSemigroup &s, Int g);

/// Closed form over <alpha, beta>. Throws OutOfTriangle.
WilfReport wilf_gap_formula(const TwoGenView &t, Int a, Int b);

struct ZeroWilfEquivalences {
    bool wilf_zero = false;
    bool half_generator = false;  // alpha = 2b or beta = 2a
    bool fixed_point = false;
    bool selfdual = false;
    bool symmetric = false;

    bool all_agree() const {
        return wilf_zero == half_generator && wilf_zero == fixed_point && wilf_zero == selfdual &&
               wilf_zero == symmetric;
    }
};

/// Evaluates each of the five conditions independently. Throws NotAGap.
ZeroWilfEquivalences zero_wilf_equivalences(const TwoGenView &t, Int g);

struct ZeroWilfRow {
    Int gap = 0;
    Int w = 0;
    bool fixed_point = false;
    bool selfdual = false;
    bool symmetric = false;
};

/// One row per gap g with W(g) = 0.
std::vector<ZeroWilfRow> zero_wilf_survey_general(const NumericalSemigroup &s);

}  // namespace gapsym
