#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gapsym/semigroup.h"

namespace gapsym {

/// A Gamma-semimodule: the union of the translates Gamma + g over its minimal
/// generators g.
///
/// Minimal generators are kept sorted by the lattice order when the module is
/// normalized over a two-generator semigroup (0 first, then increasing a), and
/// by value otherwise.
class GammaSemimodule {
   public:
    /// The module generated by `gens` as given (no normalization). Throws
    /// EmptyInput or InvalidArgument for negative entries.
    static GammaSemimodule generated_by(const NumericalSemigroup &base, std::span<const Int> gens);

    const NumericalSemigroup &base() const {
        return base_;
    }
    const std::vector<Int> &min_generators() const {
        return min_generators_;
    }
    Int min() const {
        return min_;
    }
    bool is_normalized() const {
        return min_ == 0;
    }
    Int conductor() const {
        return conductor_;
    }
    Int delta() const {
        return delta_;
    }
    Int ed() const {
        return static_cast<Int>(min_generators_.size());
    }
    /// Naturals below the conductor that are not in the module.
    const std::vector<Int> &gap_list() const {
        return gap_list_;
    }
    bool contains(Int x) const {
        if (x < 0) {
            return false;
        }
        if (x >= conductor_) {
            return true;
        }
        return member_[static_cast<std::size_t>(x)];
    }

   private:
    explicit GammaSemimodule(NumericalSemigroup base) : base_(std::move(base)) {
    }

    NumericalSemigroup base_;
    std::vector<Int> min_generators_;
    std::vector<bool> member_;
    std::vector<Int> gap_list_;
    Int min_ = 0;
    Int conductor_ = 0;
    Int delta_ = 0;
};

/// Normalizes `gens` (subtracting the minimum), then minimalizes.
GammaSemimodule make_semimodule(const NumericalSemigroup &s, std::span<const Int> gens);
GammaSemimodule make_semimodule(const NumericalSemigroup &s, std::initializer_list<Int> gens);
GammaSemimodule normalize(const GammaSemimodule &m);

/// True iff every pairwise absolute difference is a gap of `s`.
bool is_lean(const NumericalSemigroup &s, std::span<const Int> set);

bool member(const GammaSemimodule &m, Int x);
Int sm_conductor(const GammaSemimodule &m);
Int sm_delta(const GammaSemimodule &m);
Int sm_ed(const GammaSemimodule &m);

/// Hom(Delta, Gamma) = {x : x + Delta in Gamma}. Uses the closed generator
/// formula for normalized modules over two generators, the definition otherwise.
GammaSemimodule dual(const GammaSemimodule &m);
/// Always evaluates the definition by scanning.
GammaSemimodule dual_by_definition(const GammaSemimodule &m);
/// Closed-form generators of the dual of a normalized module over <alpha,beta>:
/// [a_1*alpha, a_2*alpha + b_1*beta, ..., b_n*beta] with the nonzero
/// generators indexed by decreasing a. Throws NotTwoGenerated.
std::vector<Int> dual_generators_two_gen(const GammaSemimodule &m);

/// Union of pairwise intersections of the translates. Throws PrincipalModule
/// when ed < 2.
GammaSemimodule syzygy(const GammaSemimodule &m);

/// ES-turns (the generators) and SE-turns (the syzygy generators) of the
/// lattice path of a module over <alpha, beta>.
struct LeanCouple {
    /// Generators g_1..g_n in lattice order; g_0 = 0 sits at (0, alpha).
    std::vector<LatticeGap> es_turns;
    /// Corners (a_k, b_{k+1}) for k < n and (a_n, 0); a_0 = 0.
    std::vector<Cell> se_turns;
    /// h_k = alpha*beta - a*alpha - b*beta at each SE-turn, in path order.
    std::vector<Int> syzygy_values;
    Int max_syzygy = 0;
    Cell max_syzygy_point;
};

/// Throws NotTwoGenerated or PrincipalModule.
LeanCouple lattice_path(const GammaSemimodule &m);

/// c = M - alpha - beta + 1 from the largest SE-turn value (c(Gamma) when ed = 1).
Int sm_conductor_formula(const GammaSemimodule &m);
/// c - delta(Gamma) + sum (a_{i+1} - a_i) b_{i+1}, with (a_{n+1}, b_{n+1}) = (beta, 0).
Int delta_formula(const GammaSemimodule &m);

/// normalize(Syz) has the same minimal generators. Throws PrincipalModule.
bool is_fixed_point(const GammaSemimodule &m);
/// The dual is isomorphic to the module (equal after normalization).
bool is_selfdual(const GammaSemimodule &m);
/// x in Delta iff c - 1 - x not in Delta, for all 0 <= x < c.
bool is_symmetric_sm(const GammaSemimodule &m);

struct PicardOrbit {
    /// Normalized lean sets visited, starting with the input.
    std::vector<std::vector<Int>> lean_sets;
    /// 0 when no repeat was found within the step budget.
    std::size_t cycle_length = 0;
    std::size_t cycle_start = 0;
    /// The iteration reached a principal module, where the syzygy is undefined.
    bool reached_principal = false;
};

/// Iterates normalize(syzygy(.)) until a lean set repeats or `max_steps`
/// syzygies were taken. Throws PrincipalModule when the input has ed < 2.
PicardOrbit picard_orbit(const GammaSemimodule &m, std::size_t max_steps);

}  // namespace gapsym
