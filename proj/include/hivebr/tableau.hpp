#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "hivebr/partition.hpp"

namespace hivebr {

// Semistandard skew tableau of shape outer/inner. Row i stores the entries
// filling columns inner_i+1 .. outer_i. A straight tableau has inner = ().
// Contretableaux (rectangular outer shape) are ordinary values of this type.
class SkewTableau {
public:
    SkewTableau() = default;

    // Validates shape containment, row lengths, weak rows, strict columns.
    static SkewTableau make(Partition outer, Partition inner,
                            std::vector<std::vector<int>> rows);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool is_straight() const { return inner_.empty(); }
    bool empty() const { return rows_.empty(); }
    std::size_t row_count() const { return rows_.size(); }
    Int cell_count() const { return outer_.weight() - inner_.weight(); }

    Content content() const;
    int max_entry() const; // 0 for the empty tableau

    auto operator<=>(const SkewTableau&) const = default;

private:
    Partition outer_, inner_;
    std::vector<std::vector<int>> rows_;
};

// Row bounds for flagged tableaux: weakly increasing, i <= bounds[i-1] <= m.
struct Flag {
    std::vector<int> bounds;

    Flag() = default;
    explicit Flag(std::vector<int> bs);

    std::size_t size() const { return bounds.size(); }
    auto operator<=>(const Flag&) const = default;
};

// Entries read right to left within each row, rows top to bottom. This is
// the reading used for all Yamanouchi and dominance tests.
Word reverse_row_word(const SkewTableau& t);

// Rows bottom to top, each left to right; the letterwise reverse of the
// reverse row word. This is the word consumed by Schensted insertion.
Word row_word(const SkewTableau& t);

// Schensted row insertion of the letters of w, left to right.
SkewTableau insert_word(const Word& w);

// The straight tableau plactically equivalent to t. Computed by insertion
// of row_word(t); agrees with jeu de taquin slides.
SkewTableau rectify(const SkewTableau& t);

// Row i filled with letter i.
SkewTableau superstandard(const Partition& mu);

// w(T_mu) * w(t) is Yamanouchi. Defined for skew t as well; the library
// applies it to contretableaux when checking hive symmetry.
bool is_dominant(const SkewTableau& t, const Partition& mu);

// content(t) = lambda and the reverse row word is Yamanouchi.
bool is_littlewood_richardson(const SkewTableau& t, const Partition& lambda);

// Companion tableau: row k lists the row indices of t containing entry k.
SkewTableau companion(const SkewTableau& t, bool check_lr = true);

// Inverse of the companion map: recovers the skew LR tableau of shape
// (mu + content(r)) / mu whose companion is r.
SkewTableau companion_inverse(const SkewTableau& r, const Partition& mu);

// Schutzenberger involution (evacuation) on the alphabet [1, k]: the
// insertion tableau of the complemented reverse row word. Shape-preserving,
// content-reversing involution.
SkewTableau schutzenberger(const SkewTableau& t, int k);

// Every odd entry 2i+1 occurs in row n+i or above.
bool satisfies_sundaram(const SkewTableau& t, int n);

// Entries in row i are at least 2i-1. Requires a straight shape of at most
// n rows.
bool satisfies_kwon(const SkewTableau& t, int n);

// All LR tableaux of shape nu/mu and content lambda, by backtracking in
// reverse reading order with Yamanouchi prefix pruning. Deterministic order.
std::vector<SkewTableau> enumerate_lr(const Partition& nu, const Partition& mu,
                                      const Partition& lambda);

// All straight semistandard tableaux of the given shape and content that are
// mu-dominant and, when a flag is given, row-bounded by it.
std::vector<SkewTableau> enumerate_dominant(const Partition& shape, const Content& weight,
                                            const Partition& mu,
                                            const std::optional<Flag>& flag = std::nullopt);

// All straight semistandard tableaux of the given shape with entries in
// [1, max_entry].
std::vector<SkewTableau> enumerate_ssyt(const Partition& shape, int max_entry);

} // namespace hivebr
