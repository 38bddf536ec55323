#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace gapsym {

using Int = std::int64_t;

/// A numerical semigroup given by its minimal generating set.
///
/// Membership is sieved once, at construction, over [0, conductor + max
/// generator]; every later query is a table lookup. Instances are immutable and
/// cheap to copy (the tables are shared).
class NumericalSemigroup {
   public:
    /// Builds the semigroup generated by `gens`. Redundant generators are
    /// dropped. Throws EmptyInput, InvalidArgument (non-positive entry) or
    /// GcdNotOne.
    static NumericalSemigroup generated_by(std::span<const Int> gens);

    const std::vector<Int> &generators() const {
        return data_->generators;
    }
    const std::vector<Int> &gaps() const {
        return data_->gaps;
    }
    Int conductor() const {
        return data_->conductor;
    }
    /// -1 when the semigroup is all of N.
    Int frobenius() const {
        return data_->conductor - 1;
    }
    Int genus() const {
        return static_cast<Int>(data_->gaps.size());
    }
    Int multiplicity() const {
        return data_->generators.front();
    }
    Int max_generator() const {
        return data_->generators.back();
    }
    Int embedding_dimension() const {
        return static_cast<Int>(data_->generators.size());
    }
    bool is_two_generated() const {
        return data_->generators.size() == 2;
    }

    bool contains(Int x) const {
        if (x < 0) {
            return false;
        }
        if (x >= data_->conductor) {
            return true;
        }
        return data_->member[static_cast<std::size_t>(x)];
    }
    bool is_gap(Int x) const {
        return x > 0 && !contains(x);
    }

    /// Number of elements below the conductor.
    Int delta() const {
        return data_->conductor - genus();
    }

    friend bool operator==(const NumericalSemigroup &lhs, const NumericalSemigroup &rhs) {
        return lhs.generators() == rhs.generators();
    }

   private:
    struct Data {
        std::vector<Int> generators;
        std::vector<Int> gaps;
        std::vector<bool> member;
        Int conductor = 0;
    };

    explicit NumericalSemigroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {
    }

    std::shared_ptr<const Data> data_;
};

NumericalSemigroup make_semigroup(std::span<const Int> gens);
NumericalSemigroup make_semigroup(std::initializer_list<Int> gens);

Int delta_semigroup(const NumericalSemigroup &s);

/// A lattice point. Cells order row-major from the top of the gap triangle:
/// larger b first, then smaller a.
struct Cell {
    Int a = 0;
    Int b = 0;

    friend bool operator==(const Cell &, const Cell &) = default;
    friend bool operator<(const Cell &lhs, const Cell &rhs) {
        if (lhs.b != rhs.b) {
            return lhs.b > rhs.b;
        }
        return lhs.a < rhs.a;
    }
};

/// Gap of <alpha, beta> written as alpha*beta - a*alpha - b*beta.
struct LatticeGap {
    Int a = 0;
    Int b = 0;
    Int value = 0;

    Cell cell() const {
        return {a, b};
    }
    friend bool operator==(const LatticeGap &, const LatticeGap &) = default;
};

/// Coprime generators 2 <= alpha < beta.
class TwoGenView {
   public:
    /// Throws InvalidArgument unless 2 <= alpha < beta, GcdNotOne unless coprime.
    TwoGenView(Int alpha, Int beta);

    /// Throws NotTwoGenerated when `s` has embedding dimension other than 2.
    static TwoGenView of(const NumericalSemigroup &s);

    Int alpha() const {
        return alpha_;
    }
    Int beta() const {
        return beta_;
    }
    Int conductor() const {
        return (alpha_ - 1) * (beta_ - 1);
    }
    Int genus() const {
        return conductor() / 2;
    }
    /// alpha*beta - a*alpha - b*beta, without any range check.
    Int value_at(Int a, Int b) const {
        return alpha_ * beta_ - a * alpha_ - b * beta_;
    }
    Int value_at(Cell c) const {
        return value_at(c.a, c.b);
    }
    /// True iff (a, b) is in the box and carries a positive value (the set LG).
    bool in_lattice(Cell c) const {
        return c.a >= 1 && c.a <= beta_ - 1 && c.b >= 1 && c.b <= alpha_ - 1 && value_at(c) > 0;
    }
    bool is_gap(Int x) const;

    NumericalSemigroup semigroup() const;

    friend bool operator==(const TwoGenView &, const TwoGenView &) = default;

   private:
    Int alpha_;
    Int beta_;
};

/// Throws NotAGap.
LatticeGap gap_to_lattice(const TwoGenView &t, Int g);
/// Throws OutOfTriangle.
Int lattice_to_gap(const TwoGenView &t, Int a, Int b);
/// The partial order: a1 <= a2 and b1 >= b2.
bool gap_order_leq(const LatticeGap &e1, const LatticeGap &e2);

/// All cells of LG, row-major.
std::vector<LatticeGap> lattice_gaps(const TwoGenView &t);

}  // namespace gapsym
