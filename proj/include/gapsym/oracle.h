#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gapsym/semigroup.h"

namespace gapsym::oracle {

// Slow reference implementations. Nothing here calls into the semimodule,
// wilf, symmetry or fundamental code; membership is re-sieved from the
// generators on every call.

/// Every brute scan enumerates [0, limit].
struct ScanBound {
    Int limit = 0;
};

/// A scan bound large enough for modules over `s` whose generators are at most
/// `max_generator`: c + max generator + alpha*beta (or + 2 max generator).
ScanBound default_bound(const NumericalSemigroup &s, Int max_generator);

struct BruteModule {
    /// Members in [0, limit], ascending.
    std::vector<Int> members;
    std::vector<Int> minimal;
};

/// Union of the pairwise intersections (Gamma + i) & (Gamma + j). Throws
/// InvalidArgument for fewer than two generators and BoundTooSmall when the
/// scan ends before the module becomes cofinite or a generator lands within
/// the multiplicity of the bound.
BruteModule brute_syzygy(const NumericalSemigroup &s, std::span<const Int> gens, ScanBound bound);

/// {x : x + d in Gamma for every d in Delta}.
BruteModule brute_dual(const NumericalSemigroup &s, std::span<const Int> gens, ScanBound bound);

/// Smallest c with [c, limit] inside the module generated by `gens`, and the
/// number of members below it. Throws BoundTooSmall.
struct BruteInvariants {
    Int conductor = 0;
    Int delta = 0;
};
BruteInvariants brute_invariants(const NumericalSemigroup &s, std::span<const Int> gens, ScanBound bound);

/// Lean sets of <alpha, beta> containing 0 with at most `max_ed` elements
/// (0 means no limit), each ascending. Staircases of lattice cells.
std::vector<std::vector<Int>> enumerate_lean_sets(Int alpha, Int beta, std::size_t max_ed = 0);

/// All numerical semigroups of genus <= gmax, by genus and then in tree order.
std::vector<NumericalSemigroup> enumerate_semigroups_by_genus(Int gmax);

/// The semigroups of genus <= max_genus with their gap sets as bit masks
/// (bit x set iff x is a gap). max_genus is capped at 20.
struct SemigroupCatalog {
    Int max_genus = 0;
    std::vector<NumericalSemigroup> semigroups;
    std::vector<std::uint64_t> gap_masks;
};
SemigroupCatalog build_catalog(Int max_genus);

/// The largest semigroup of genus <= gmax avoiding X, if one exists. Throws
/// Ambiguous when several are maximal, BoundTooSmall when X forces a genus
/// above gmax. The answer is exact once gmax >= max(X).
std::optional<NumericalSemigroup> brute_h_determines(std::span<const Int> xs, Int gmax);
std::optional<NumericalSemigroup> brute_h_determines(std::span<const Int> xs, const SemigroupCatalog &catalog);

}  // namespace gapsym::oracle
