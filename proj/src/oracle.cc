#include "gapsym/oracle.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "gapsym/error.h"

namespace gapsym::oracle {

namespace {

constexpr Int kCatalogGenusCap = 20;

std::vector<bool> sieve(const NumericalSemigroup &s, Int limit) {
    std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
    member[0] = true;
    for (Int x = 1; x <= limit; ++x) {
        for (Int g : s.generators()) {
            if (g <= x && member[static_cast<std::size_t>(x - g)]) {
                member[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return member;
}

std::vector<Int> distinct(std::span<const Int> gens) {
    std::vector<Int> out(gens.begin(), gens.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Members of the module generated by `gens`, over [0, limit].
std::vector<bool> module_members(const std::vector<bool> &gamma, const std::vector<Int> &gens, Int limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
    for (Int x = 0; x <= limit; ++x) {
        for (Int g : gens) {
            if (g <= x && gamma[static_cast<std::size_t>(x - g)]) {
                in[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return in;
}

// x is a minimal generator iff no x - s with s a nonzero element of Gamma is
// in the set.
std::vector<Int> minimal_elements(const std::vector<bool> &gamma, const std::vector<bool> &in) {
    std::vector<Int> out;
    const Int limit = static_cast<Int>(in.size()) - 1;
    for (Int x = 0; x <= limit; ++x) {
        if (!in[static_cast<std::size_t>(x)]) {
            continue;
        }
        bool minimal = true;
        for (Int s = 1; s <= x; ++s) {
            if (gamma[static_cast<std::size_t>(s)] && in[static_cast<std::size_t>(x - s)]) {
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

std::vector<Int> listed(const std::vector<bool> &in) {
    std::vector<Int> out;
    for (std::size_t x = 0; x < in.size(); ++x) {
        if (in[x]) {
            out.push_back(static_cast<Int>(x));
        }
    }
    return out;
}

// A module containing m consecutive integers contains everything after them.
bool ends_cofinite(const std::vector<bool> &in, Int m) {
    const Int limit = static_cast<Int>(in.size()) - 1;
    if (limit + 1 < m) {
        return false;
    }
    for (Int x = limit - m + 1; x <= limit; ++x) {
        if (!in[static_cast<std::size_t>(x)]) {
            return false;
        }
    }
    return true;
}

Int gamma_conductor(const std::vector<bool> &gamma, Int m) {
    const Int limit = static_cast<Int>(gamma.size()) - 1;
    Int run = 0;
    for (Int x = 0; x <= limit; ++x) {
        run = gamma[static_cast<std::size_t>(x)] ? run + 1 : 0;
        if (run == m) {
            return x - m + 1;
        }
    }
    throw Error(ErrorKind::BoundTooSmall, "scan ends before the conductor of the semigroup");
}

void require_bound(ScanBound bound) {
    if (bound.limit < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative scan bound");
    }
}

}  // namespace

ScanBound default_bound(const NumericalSemigroup &s, Int max_generator) {
    if (s.is_two_generated()) {
        return {s.conductor() + max_generator + s.multiplicity() * s.max_generator()};
    }
    return {s.conductor() + 2 * max_generator + s.max_generator()};
}

BruteModule brute_syzygy(const NumericalSemigroup &s, std::span<const Int> gens, ScanBound bound) {
    require_bound(bound);
    const std::vector<Int> g = distinct(gens);
    if (g.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "syzygy needs at least two generators");
    }
    const std::vector<bool> gamma = sieve(s, bound.limit);
    std::vector<bool> in(static_cast<std::size_t>(bound.limit + 1), false);
    for (Int x = 0; x <= bound.limit; ++x) {
        int hits = 0;
        for (Int gi : g) {
            if (gi <= x && gamma[static_cast<std::size_t>(x - gi)]) {
                ++hits;
            }
        }
        in[static_cast<std::size_t>(x)] = hits >= 2;
    }
    BruteModule out{listed(in), minimal_elements(gamma, in)};
    const Int m = s.multiplicity();
    if (!ends_cofinite(in, m) || (!out.minimal.empty() && out.minimal.back() > bound.limit - m)) {
        throw Error(ErrorKind::BoundTooSmall, "syzygy scan to " + std::to_string(bound.limit) + " is too short");
    }
    return out;
}

BruteModule brute_dual(const NumericalSemigroup &s, std::span<const Int> gens, ScanBound bound) {
    require_bound(bound);
    const std::vector<Int> g = distinct(gens);
    const Int m = s.multiplicity();
    const Int scan = std::max(bound.limit, s.max_generator() * m + m);
    const std::vector<bool> gamma = sieve(s, scan);
    const Int c = gamma_conductor(gamma, m);
    const std::vector<bool> delta = module_members(gamma, g, std::min(scan, c));

    std::vector<bool> in(static_cast<std::size_t>(bound.limit + 1), false);
    for (Int x = 0; x <= bound.limit; ++x) {
        bool ok = true;
        for (Int d = 0; x + d < c; ++d) {
            if (delta[static_cast<std::size_t>(d)] && !gamma[static_cast<std::size_t>(x + d)]) {
                ok = false;
                break;
            }
        }
        in[static_cast<std::size_t>(x)] = ok;
    }
    std::vector<bool> gamma_in_range(gamma.begin(), gamma.begin() + bound.limit + 1);
    return {listed(in), minimal_elements(gamma_in_range, in)};
}

BruteInvariants brute_invariants(const NumericalSemigroup &s, std::span<const Int> gens, ScanBound bound) {
    require_bound(bound);
    const std::vector<Int> g = distinct(gens);
    const std::vector<bool> gamma = sieve(s, bound.limit);
    const std::vector<bool> in = module_members(gamma, g, bound.limit);
    Int c = bound.limit + 1;
    while (c > 0 && in[static_cast<std::size_t>(c - 1)]) {
        --c;
    }
    if (bound.limit + 1 - c < s.multiplicity()) {
        throw Error(ErrorKind::BoundTooSmall, "module is not cofinite within the scan");
    }
    BruteInvariants r;
    r.conductor = c;
    for (Int x = 0; x < c; ++x) {
        r.delta += in[static_cast<std::size_t>(x)] ? 1 : 0;
    }
    return r;
}

namespace {

// Staircase extension: the next cell lies strictly right of and strictly below
// the previous one, and carries a positive value alpha*beta - a*alpha - b*beta.
void extend_staircase(Int alpha, Int beta, Int min_a, Int max_b, std::size_t max_ed, std::vector<Int> &current,
                      std::vector<std::vector<Int>> &out) {
    std::vector<Int> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    if (max_ed != 0 && current.size() >= max_ed) {
        return;
    }
    for (Int a = min_a; a < beta; ++a) {
        for (Int b = max_b; b >= 1; --b) {
            const Int value = alpha * beta - a * alpha - b * beta;
            if (value <= 0) {
                continue;
            }
            current.push_back(value);
            extend_staircase(alpha, beta, a + 1, b - 1, max_ed, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<Int>> enumerate_lean_sets(Int alpha, Int beta, std::size_t max_ed) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> current = {0};
    extend_staircase(alpha, beta, 1, alpha - 1, max_ed, current, out);
    return out;
}

namespace {

struct Node {
    std::vector<Int> gaps;  // ascending
    Int frobenius = -1;
};

bool node_contains(const Node &n, Int x) {
    return x >= 0 && !std::binary_search(n.gaps.begin(), n.gaps.end(), x);
}

Int node_multiplicity(const Node &n) {
    Int m = 1;
    while (!node_contains(n, m)) {
        ++m;
    }
    return m;
}

// Minimal generators lie in [m, frobenius + m].
std::vector<Int> node_generators(const Node &n) {
    const Int m = node_multiplicity(n);
    std::vector<Int> gens;
    // Generators are at most F + m; the max covers N, where F = -1.
    for (Int x = m; x <= std::max<Int>(n.frobenius, 0) + m; ++x) {
        if (!node_contains(n, x)) {
            continue;
        }
        bool decomposable = false;
        for (Int y = m; y <= x - m; ++y) {
            if (node_contains(n, y) && node_contains(n, x - y)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) {
            gens.push_back(x);
        }
    }
    return gens;
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_semigroups_by_genus(Int gmax) {
    std::vector<NumericalSemigroup> out;
    if (gmax < 0) {
        return out;
    }
    std::vector<Node> level = {Node{}};
    for (Int genus = 0; genus <= gmax; ++genus) {
        std::vector<Node> next;
        for (const Node &n : level) {
            const std::vector<Int> gens = node_generators(n);
            out.push_back(make_semigroup(gens));
            if (genus == gmax) {
                continue;
            }
            for (Int x : gens) {
                if (x <= n.frobenius) {
                    continue;
                }
                Node child;
                child.gaps = n.gaps;
                child.gaps.push_back(x);
                child.frobenius = x;
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return out;
}

SemigroupCatalog build_catalog(Int max_genus) {
    if (max_genus > kCatalogGenusCap) {
        throw Error(ErrorKind::InvalidArgument, "catalog genus is capped at " + std::to_string(kCatalogGenusCap));
    }
    SemigroupCatalog cat;
    cat.max_genus = max_genus;
    cat.semigroups = enumerate_semigroups_by_genus(max_genus);
    for (const NumericalSemigroup &s : cat.semigroups) {
        std::uint64_t mask = 0;
        for (Int g : s.gaps()) {
            mask |= std::uint64_t{1} << g;
        }
        cat.gap_masks.push_back(mask);
    }
    return cat;
}

std::optional<NumericalSemigroup> brute_h_determines(std::span<const Int> xs, const SemigroupCatalog &catalog) {
    if (xs.empty()) {
        throw Error(ErrorKind::EmptyInput, "X must be nonempty");
    }
    const Int max_x = *std::max_element(xs.begin(), xs.end());
    if (*std::min_element(xs.begin(), xs.end()) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "X must contain positive integers");
    }
    // A gap x forces at least ceil((x + 1) / 2) gaps: x and one of each pair y, x - y.
    if ((max_x + 2) / 2 > catalog.max_genus) {
        throw Error(ErrorKind::BoundTooSmall,
                    "gap " + std::to_string(max_x) + " needs genus above " + std::to_string(catalog.max_genus));
    }
    std::uint64_t x_mask = 0;
    for (Int x : xs) {
        x_mask |= std::uint64_t{1} << x;
    }
    // In a finite poset a unique maximal element is a maximum, so the largest
    // semigroup avoiding X exists iff the intersection of all candidate gap
    // sets is itself a candidate.
    std::uint64_t meet = ~std::uint64_t{0};
    bool any = false;
    for (std::uint64_t mask : catalog.gap_masks) {
        if ((mask & x_mask) == x_mask) {
            meet &= mask;
            any = true;
        }
    }
    if (!any) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < catalog.gap_masks.size(); ++i) {
        if (catalog.gap_masks[i] == meet) {
            return catalog.semigroups[i];
        }
    }
    throw Error(ErrorKind::Ambiguous, "several maximal semigroups avoid X");
}

std::optional<NumericalSemigroup> brute_h_determines(std::span<const Int> xs, Int gmax) {
    return brute_h_determines(xs, build_catalog(gmax));
}

}  // namespace gapsym::oracle
