#include "hivebr/hive.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace hivebr {

Hive Hive::make(std::vector<std::vector<Int>> rows_bottom_up) {
    if (rows_bottom_up.empty())
        throw error(errc::invalid_argument, "a hive needs at least the apex row");
    std::size_t m = rows_bottom_up.size() - 1;
    for (std::size_t r = 0; r <= m; ++r)
        if (rows_bottom_up[r].size() != m + 1 - r)
            throw error(errc::invalid_argument,
                        "row " + std::to_string(r) + " must have " + std::to_string(m + 1 - r) +
                            " entries");
    Hive h;
    h.rows_ = std::move(rows_bottom_up);
    return h;
}

Int Hive::ne_content(std::size_t r, std::size_t c) const {
    return at(r + 1, c) + at(r, c + 1) - at(r, c) - at(r + 1, c + 1);
}

Int Hive::se_content(std::size_t r, std::size_t c) const {
    return at(r, c) + at(r + 1, c) - at(r, c + 1) - at(r + 1, c - 1);
}

Int Hive::v_content(std::size_t r, std::size_t c) const {
    return at(r + 1, c) + at(r + 1, c + 1) - at(r, c + 1) - at(r + 2, c);
}

HiveTriple::HiveTriple(Partition l, Partition mid, Partition n, std::size_t m_)
    : lambda(std::move(l)), mu(std::move(mid)), nu(std::move(n)), m(m_) {
    if (lambda.length() > m || mu.length() > m || nu.length() > m)
        throw error(errc::length_exceeded, "partition longer than the hive size m");
}

namespace {

std::string pos(std::size_t r, std::size_t c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

} // namespace

HiveValidation validate_hive(const Hive& h, const HiveTriple& triple) {
    if (h.m() != triple.m)
        return {false, "hive has m = " + std::to_string(h.m()) + ", triple has m = " +
                           std::to_string(triple.m)};
    std::size_t m = triple.m;
    auto lp = triple.lambda.partial_sums(m);
    auto mp = triple.mu.partial_sums(m);
    auto np = triple.nu.partial_sums(m);
    Int lw = triple.lambda.weight();
    for (std::size_t i = 0; i <= m; ++i)
        if (h.at(m - i, 0) != lp[i])
            return {false, "left boundary " + pos(m - i, 0) + " = " + std::to_string(h.at(m - i, 0)) +
                               ", expected " + std::to_string(lp[i])};
    for (std::size_t j = 0; j <= m; ++j)
        if (h.at(0, j) != lw + mp[j])
            return {false, "bottom boundary " + pos(0, j) + " = " + std::to_string(h.at(0, j)) +
                               ", expected " + std::to_string(lw + mp[j])};
    for (std::size_t r = 0; r <= m; ++r)
        if (h.at(r, m - r) != np[m - r])
            return {false, "right boundary " + pos(r, m - r) + " = " +
                               std::to_string(h.at(r, m - r)) + ", expected " +
                               std::to_string(np[m - r])};
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c + r + 2 <= m; ++c)
            if (h.ne_content(r, c) < 0)
                return {false, "NE" + pos(r, c) + " content " + std::to_string(h.ne_content(r, c))};
        for (std::size_t c = 1; c + r + 1 <= m; ++c)
            if (h.se_content(r, c) < 0)
                return {false, "SE" + pos(r, c) + " content " + std::to_string(h.se_content(r, c))};
        for (std::size_t c = 0; r + 2 <= m && c + r + 2 <= m; ++c)
            if (h.v_content(r, c) < 0)
                return {false, "V" + pos(r, c) + " content " + std::to_string(h.v_content(r, c))};
    }
    return {};
}

Hive hive_embed(const SkewTableau& r, const Partition& lambda, std::size_t m) {
    GTPattern gt = gt_from_tableau(r, m);
    auto lp = lambda.partial_sums(m);
    std::vector<std::vector<Int>> rows(m + 1);
    rows[m] = {0}; // apex
    for (std::size_t i = 1; i <= m; ++i) {
        auto& row = rows[m - i];
        row.assign(i + 1, lp[i]);
        Int sum = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            sum += gt.at(i, j);
            row[j] += sum;
        }
    }
    return Hive::make(std::move(rows));
}

GTPattern gt_row_diff(const Hive& h) {
    std::size_t m = h.m();
    std::vector<std::vector<Int>> rows(m);
    for (std::size_t i = 1; i <= m; ++i) {
        rows[i - 1].resize(i);
        for (std::size_t j = 1; j <= i; ++j)
            rows[i - 1][j - 1] = h.at(m - i, j) - h.at(m - i, j - 1);
    }
    return GTPattern::make(std::move(rows));
}

GTPattern gt_ne_diff(const Hive& h) {
    std::size_t m = h.m();
    std::vector<std::vector<Int>> rows(m);
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t c = m - i; // diagonal index feeding GT row i
        rows[i - 1].resize(i);
        for (std::size_t j = 1; j <= i; ++j)
            rows[i - 1][j - 1] = h.at(i - j, c) - h.at(i - j + 1, c);
    }
    return GTPattern::make(std::move(rows));
}

Flag sundaram_flag(int n) {
    if (n < 1) throw error(errc::invalid_argument, "n must be positive");
    std::vector<int> bounds(static_cast<std::size_t>(2 * n));
    for (int k = 1; k <= 2 * n; ++k) bounds[static_cast<std::size_t>(k) - 1] = n + k / 2;
    return Flag(std::move(bounds));
}

bool is_flagged(const Hive& h, const Flag& flag) {
    std::size_t m = h.m();
    if (flag.size() != m)
        throw error(errc::invalid_argument, "flag length must equal the hive size m");
    for (std::size_t k = 1; k <= m; ++k) {
        std::size_t c = k - 1;
        std::size_t count = m - static_cast<std::size_t>(flag.bounds[k - 1]);
        for (std::size_t r = 0; r < count; ++r)
            if (h.ne_content(r, c) != 0) return false;
    }
    return true;
}

namespace {

// One rhombus inequality sum(signs . cells) >= 0, optionally pinned to == 0
// by a flag. Cells are flattened indices.
struct Constraint {
    std::array<std::size_t, 4> cells;
    std::array<int, 4> signs;
    bool equality = false;
};

} // namespace

std::vector<Hive> enumerate_hives(const HiveTriple& triple, const std::optional<Flag>& flag) {
    std::vector<Hive> out;
    if (triple.lambda.weight() + triple.mu.weight() != triple.nu.weight()) return out;
    std::size_t m = triple.m;
    if (flag && flag->size() != m)
        throw error(errc::invalid_argument, "flag length must equal the hive size m");

    // Flattened grid indices row by row, bottom up.
    std::vector<std::size_t> row_offset(m + 1);
    std::size_t total = 0;
    for (std::size_t r = 0; r <= m; ++r) {
        row_offset[r] = total;
        total += m + 1 - r;
    }
    auto idx = [&](std::size_t r, std::size_t c) { return row_offset[r] + c; };

    std::vector<Int> grid(total, 0);
    std::vector<bool> fixed(total, false);
    auto lp = triple.lambda.partial_sums(m);
    auto mp = triple.mu.partial_sums(m);
    auto np = triple.nu.partial_sums(m);
    Int lw = triple.lambda.weight();
    for (std::size_t i = 0; i <= m; ++i) {
        grid[idx(m - i, 0)] = lp[i];
        fixed[idx(m - i, 0)] = true;
    }
    for (std::size_t j = 0; j <= m; ++j) {
        grid[idx(0, j)] = lw + mp[j];
        fixed[idx(0, j)] = true;
    }
    for (std::size_t r = 0; r <= m; ++r) {
        // Corners agree with the other two edges once the weights balance.
        grid[idx(r, m - r)] = np[m - r];
        fixed[idx(r, m - r)] = true;
    }

    // Interior cells in fill order: rows bottom up, left to right.
    std::vector<std::size_t> order;       // flattened indices of free cells
    std::vector<std::size_t> fill_pos(total, 0); // position in `order` + 1; 0 = fixed
    for (std::size_t r = 1; r + 1 <= m; ++r)
        for (std::size_t c = 1; c + r + 1 <= m; ++c) {
            fill_pos[idx(r, c)] = order.size() + 1;
            order.push_back(idx(r, c));
        }

    std::vector<Constraint> constraints;
    auto add = [&](std::size_t a, std::size_t b, std::size_t cc, std::size_t d, bool eq) {
        constraints.push_back({{a, b, cc, d}, {+1, +1, -1, -1}, eq});
    };
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c + r + 2 <= m; ++c) {
            bool eq = false;
            if (flag) {
                std::size_t k = c + 1;
                eq = r < m - static_cast<std::size_t>(flag->bounds[k - 1]);
            }
            add(idx(r + 1, c), idx(r, c + 1), idx(r, c), idx(r + 1, c + 1), eq); // NE
        }
        for (std::size_t c = 1; c + r + 1 <= m; ++c)
            add(idx(r, c), idx(r + 1, c), idx(r, c + 1), idx(r + 1, c - 1), false); // SE
        if (r + 2 <= m)
            for (std::size_t c = 0; c + r + 2 <= m; ++c)
                add(idx(r + 1, c), idx(r + 1, c + 1), idx(r, c + 1), idx(r + 2, c), false); // V
    }

    // Group each constraint under the last cell of the fill order it touches.
    std::vector<std::vector<const Constraint*>> groups(order.size());
    for (const auto& con : constraints) {
        std::size_t last = 0;
        for (std::size_t t = 0; t < 4; ++t) last = std::max(last, fill_pos[con.cells[t]]);
        if (last == 0) {
            // All four vertices on the boundary: check once.
            Int content = 0;
            for (std::size_t t = 0; t < 4; ++t) content += con.signs[t] * grid[con.cells[t]];
            if (content < 0 || (con.equality && content != 0)) return out;
        } else {
            groups[last - 1].push_back(&con);
        }
    }

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            std::vector<std::vector<Int>> rows(m + 1);
            for (std::size_t r = 0; r <= m; ++r)
                rows[r].assign(grid.begin() + static_cast<std::ptrdiff_t>(row_offset[r]),
                               grid.begin() + static_cast<std::ptrdiff_t>(row_offset[r] + m + 1 - r));
            out.push_back(Hive::make(std::move(rows)));
            return;
        }
        std::size_t cell = order[k];
        Int lo = std::numeric_limits<Int>::min();
        Int hi = std::numeric_limits<Int>::max();
        for (const Constraint* con : groups[k]) {
            Int rest = 0;
            int sign = 0;
            for (std::size_t t = 0; t < 4; ++t) {
                if (con->cells[t] == cell)
                    sign = con->signs[t];
                else
                    rest += con->signs[t] * grid[con->cells[t]];
            }
            // content = sign * x + rest; required >= 0, and == 0 if pinned.
            if (sign > 0) {
                lo = std::max(lo, -rest);
                if (con->equality) hi = std::min(hi, -rest);
            } else {
                hi = std::min(hi, rest);
                if (con->equality) lo = std::max(lo, rest);
            }
        }
        if (lo == std::numeric_limits<Int>::min() || hi == std::numeric_limits<Int>::max())
            throw error(errc::internal, "unbounded hive cell in fill order");
        for (Int v = lo; v <= hi; ++v) {
            grid[cell] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hivebr
