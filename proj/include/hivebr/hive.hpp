#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hivebr/gt_pattern.hpp"
#include "hivebr/partition.hpp"
#include "hivebr/tableau.hpp"

namespace hivebr {

// Triangular hive labelling. Rows are stored bottom up: row r (r = 0..m,
// r = 0 is the bottom edge) has m+1-r entries indexed c = 0..m-r; the apex
// is (m, 0). In apex-down 1-based coordinates, stored (r, c) is the node in
// row m+1-r, column c+1.
//
// Rhombus contents in stored coordinates (obtuse minus acute vertices):
//   NE(r,c) = h(r+1,c) + h(r,c+1) - h(r,c)   - h(r+1,c+1),  c <= m-r-2
//   SE(r,c) = h(r,c)   + h(r+1,c) - h(r,c+1) - h(r+1,c-1),  1 <= c <= m-r-1
//   V(r,c)  = h(r+1,c) + h(r+1,c+1) - h(r,c+1) - h(r+2,c),  c <= m-r-2
// NE,SE >= 0 iff the row-difference pattern P(h) is GT; NE,V >= 0 iff the
// northeast-difference pattern P-hat(h) is GT.
class Hive {
public:
    Hive() = default;

    static Hive make(std::vector<std::vector<Int>> rows_bottom_up);

    std::size_t m() const { return rows_.size() - 1; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    Int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    Int ne_content(std::size_t r, std::size_t c) const;
    Int se_content(std::size_t r, std::size_t c) const;
    Int v_content(std::size_t r, std::size_t c) const;

    auto operator<=>(const Hive&) const = default;

private:
    std::vector<std::vector<Int>> rows_;
};

// Boundary data for the hive polytope Hive(lambda, mu, nu): left edge
// carries the partial sums of lambda (apex downward), bottom edge
// |lambda| + partial sums of mu, right edge the partial sums of nu.
struct HiveTriple {
    Partition lambda, mu, nu;
    std::size_t m = 0;

    HiveTriple() = default;
    HiveTriple(Partition l, Partition mid, Partition n, std::size_t m_);
};

struct HiveValidation {
    bool ok = true;
    std::string first_violation; // empty when ok
};

// Checks the boundary against the triple and every rhombus content >= 0.
HiveValidation validate_hive(const Hive& h, const HiveTriple& triple);

// The embedding phi: partial sums along the rows of GT(R), each row then
// shifted by the matching partial sum of lambda (apex row gets 0). When R is
// lambda-dominant the result lies in Hive(lambda, shape(R), lambda+content).
Hive hive_embed(const SkewTableau& r, const Partition& lambda, std::size_t m);

// P(h): successive differences along the hive rows.
GTPattern gt_row_diff(const Hive& h);

// P-hat(h): differences along the SW-NE diagonals, apex end downward.
// GT row m-c is read from diagonal c.
GTPattern gt_ne_diff(const Hive& h);

// The flag (n + floor(k/2))_{k=1..2n} of the Sundaram branching condition.
Flag sundaram_flag(int n);

// True iff for every k the first m-phi_k northeast rhombi (counted from the
// bottom edge) in slanted column k have content exactly 0.
bool is_flagged(const Hive& h, const Flag& flag);

// All integral hives with the triple's boundary satisfying every rhombus
// inequality (and the flat-rhombus equalities of the flag, when given), by
// depth-first fill with constraint propagation. Canonically sorted.
std::vector<Hive> enumerate_hives(const HiveTriple& triple,
                                  const std::optional<Flag>& flag = std::nullopt);

} // namespace hivebr
