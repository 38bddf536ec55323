#include "gapsym/semigroup.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "gapsym/error.h"

namespace gapsym {

NumericalSemigroup NumericalSemigroup::generated_by(std::span<const Int> gens) {
    if (gens.empty()) {
        throw Error(ErrorKind::EmptyInput, "no generators given");
    }
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() <= 0) {
        throw Error(ErrorKind::InvalidArgument, "generators must be positive");
    }
    Int g = 0;
    for (Int x : sorted) {
        g = std::gcd(g, x);
    }
    if (g != 1) {
        throw Error(ErrorKind::GcdNotOne, "generators not coprime (gcd " + std::to_string(g) + ")");
    }

    // Sieve until a run of `m` consecutive members appears; its start is the
    // conductor. The table is then extended to cover conductor + max generator.
    const Int m = sorted.front();
    const Int top = sorted.back();
    std::vector<bool> member;
    member.push_back(true);
    Int run = 1;
    Int run_start = 0;
    for (Int x = 1; run < m; ++x) {
        bool in = false;
        for (Int s : sorted) {
            if (s > x) {
                break;
            }
            if (member[static_cast<std::size_t>(x - s)]) {
                in = true;
                break;
            }
        }
        member.push_back(in);
        if (in) {
            ++run;
        } else {
            run = 0;
            run_start = x + 1;
        }
    }
    const Int conductor = run_start;
    const auto table_size = static_cast<std::size_t>(conductor + top + 1);
    if (member.size() < table_size) {
        member.resize(table_size, true);
    }

    auto data = std::make_shared<Data>();
    data->conductor = conductor;
    data->member = std::move(member);
    for (Int x = 1; x < conductor; ++x) {
        if (!data->member[static_cast<std::size_t>(x)]) {
            data->gaps.push_back(x);
        }
    }

    // x is a minimal generator iff it is a nonzero member that is not the sum of
    // two nonzero members. Every minimal generator is at most conductor + m (the
    // bound is reached only by N itself).
    auto in = [&](Int x) { return x >= conductor || data->member[static_cast<std::size_t>(x)]; };
    for (Int x = 1; x <= conductor + m; ++x) {
        if (!in(x)) {
            continue;
        }
        bool decomposable = false;
        for (Int y = 1; y <= x / 2; ++y) {
            if (in(y) && in(x - y)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) {
            data->generators.push_back(x);
        }
    }
    return NumericalSemigroup(std::move(data));
}

NumericalSemigroup make_semigroup(std::span<const Int> gens) {
    return NumericalSemigroup::generated_by(gens);
}

NumericalSemigroup make_semigroup(std::initializer_list<Int> gens) {
    return NumericalSemigroup::generated_by(std::span<const Int>(gens.begin(), gens.size()));
}

Int delta_semigroup(const NumericalSemigroup &s) {
    return s.delta();
}

TwoGenView::TwoGenView(Int alpha, Int beta) : alpha_(alpha), beta_(beta) {
    if (alpha < 2 || beta <= alpha) {
        throw Error(ErrorKind::InvalidArgument,
                    "need 2 <= alpha < beta, got alpha=" + std::to_string(alpha) +
                        " beta=" + std::to_string(beta));
    }
    if (std::gcd(alpha, beta) != 1) {
        throw Error(ErrorKind::GcdNotOne, "generators not coprime");
    }
}

TwoGenView TwoGenView::of(const NumericalSemigroup &s) {
    if (!s.is_two_generated()) {
        throw Error(ErrorKind::NotTwoGenerated,
                    "semigroup has " + std::to_string(s.embedding_dimension()) + " minimal generators");
    }
    return TwoGenView(s.generators()[0], s.generators()[1]);
}

bool TwoGenView::is_gap(Int x) const {
    if (x <= 0 || x >= conductor()) {
        return false;
    }
    // x is a member iff x - j*beta is a nonnegative multiple of alpha for some j < alpha.
    for (Int j = 0; j < alpha_ && j * beta_ <= x; ++j) {
        if ((x - j * beta_) % alpha_ == 0) {
            return false;
        }
    }
    return true;
}

NumericalSemigroup TwoGenView::semigroup() const {
    return make_semigroup({alpha_, beta_});
}

LatticeGap gap_to_lattice(const TwoGenView &t, Int g) {
    if (!t.is_gap(g)) {
        throw Error(ErrorKind::NotAGap, std::to_string(g) + " is not a gap of <" + std::to_string(t.alpha()) +
                                            "," + std::to_string(t.beta()) + ">");
    }
    const Int ab = t.alpha() * t.beta();
    for (Int b = 1; b <= t.alpha() - 1; ++b) {
        const Int rest = ab - g - b * t.beta();
        if (rest <= 0) {
            break;
        }
        if (rest % t.alpha() == 0) {
            return {rest / t.alpha(), b, g};
        }
    }
    throw Error(ErrorKind::NotAGap, "no lattice representation for " + std::to_string(g));
}

Int lattice_to_gap(const TwoGenView &t, Int a, Int b) {
    if (!t.in_lattice({a, b})) {
        throw Error(ErrorKind::OutOfTriangle, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                  ") has value " + std::to_string(t.value_at(a, b)) +
                                                  " or lies outside the box");
    }
    return t.value_at(a, b);
}

bool gap_order_leq(const LatticeGap &e1, const LatticeGap &e2) {
    return e1.a <= e2.a && e1.b >= e2.b;
}

std::vector<LatticeGap> lattice_gaps(const TwoGenView &t) {
    std::vector<LatticeGap> out;
    for (Int b = t.alpha() - 1; b >= 1; --b) {
        for (Int a = 1; a <= t.beta() - 1; ++a) {
            const Int v = t.value_at(a, b);
            if (v <= 0) {
                break;
            }
            out.push_back({a, b, v});
        }
    }
    return out;
}

}  // namespace gapsym
