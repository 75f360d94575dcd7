#pragma once

#include <compare>
#include <vector>

#include "hivebr/partition.hpp"
#include "hivebr/tableau.hpp"

namespace hivebr {

// Gelfand-Tsetlin pattern: triangular array with rows top down, row i
// (1-based) holding i nonnegative entries subject to the interleaving
// inequalities p(i+1,j) >= p(i,j) >= p(i+1,j+1). Equivalently a chain of
// partitions P_1 <= P_2 <= ... <= P_m with horizontal-strip quotients.
class GTPattern {
public:
    GTPattern() = default;

    static GTPattern make(std::vector<std::vector<Int>> rows_top_down);

    std::size_t size() const { return rows_.size(); } // m
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    // Entry p(i,j), 1-based; j > i reads as 0.
    Int at(std::size_t i, std::size_t j) const {
        return j <= i ? rows_[i - 1][j - 1] : 0;
    }

    // P_k as a canonical partition (1 <= k <= m).
    Partition row_partition(std::size_t k) const;

    auto operator<=>(const GTPattern&) const = default;

private:
    std::vector<std::vector<Int>> rows_;
};

// GT(R): row k is the shape of the subtableau of entries <= k, zero-padded
// to length k. Requires a straight tableau with entries <= m.
GTPattern gt_from_tableau(const SkewTableau& r, std::size_t m);

// T(P): the straight tableau whose entries-<=-k subshape is P_k.
SkewTableau tableau_from_gt(const GTPattern& p);

// C(P): the contretableau determined by the complementary chain
// k - rev(P_m) <= ... <= k - rev(P_1) <= (k)^m with k = p(m,1).
SkewTableau contretableau_from_gt(const GTPattern& p);

} // namespace hivebr
