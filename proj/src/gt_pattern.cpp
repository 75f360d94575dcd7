#include "hivebr/gt_pattern.hpp"

#include <algorithm>
#include <string>

namespace hivebr {

GTPattern GTPattern::make(std::vector<std::vector<Int>> rows_top_down) {
    std::size_t m = rows_top_down.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (rows_top_down[i].size() != i + 1)
            throw error(errc::invalid_gt, "row " + std::to_string(i + 1) + " must have " +
                                              std::to_string(i + 1) + " entries");
        for (Int v : rows_top_down[i])
            if (v < 0) throw error(errc::invalid_gt, "entries must be nonnegative");
    }
    // p(i+1,j) >= p(i,j) >= p(i+1,j+1); these also force each row to be
    // weakly decreasing.
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Int upper = rows_top_down[i - 1][j];
            if (rows_top_down[i][j] < upper || upper < rows_top_down[i][j + 1])
                throw error(errc::invalid_gt,
                            "interleaving fails at row " + std::to_string(i) + ", column " +
                                std::to_string(j + 1));
        }
    GTPattern p;
    p.rows_ = std::move(rows_top_down);
    return p;
}

Partition GTPattern::row_partition(std::size_t k) const {
    return Partition::from(rows_[k - 1]);
}

GTPattern gt_from_tableau(const SkewTableau& r, std::size_t m) {
    if (!r.is_straight())
        throw error(errc::invalid_argument, "GT patterns correspond to straight tableaux");
    if (r.max_entry() > static_cast<int>(m))
        throw error(errc::alphabet_exceeded, "entry " + std::to_string(r.max_entry()) +
                                                 " exceeds pattern size " + std::to_string(m));
    std::vector<std::vector<Int>> rows(m);
    for (std::size_t k = 1; k <= m; ++k) {
        rows[k - 1].assign(k, 0);
        for (std::size_t i = 0; i < r.row_count() && i < k; ++i) {
            const auto& row = r.rows()[i];
            rows[k - 1][i] = static_cast<Int>(
                std::upper_bound(row.begin(), row.end(), static_cast<int>(k)) - row.begin());
        }
    }
    return GTPattern::make(std::move(rows));
}

SkewTableau tableau_from_gt(const GTPattern& p) {
    std::size_t m = p.size();
    if (m == 0) return {};
    std::vector<Int> shape = p.rows().back();
    Partition outer = Partition::from(shape);
    std::vector<std::vector<int>> rows(outer.length());
    for (std::size_t i = 1; i <= outer.length(); ++i)
        for (std::size_t k = i; k <= m; ++k) {
            Int mult = p.at(k, i) - (k > 1 ? p.at(k - 1, i) : 0);
            rows[i - 1].insert(rows[i - 1].end(), static_cast<std::size_t>(mult),
                               static_cast<int>(k));
        }
    return SkewTableau::make(outer, {}, std::move(rows));
}

SkewTableau contretableau_from_gt(const GTPattern& p) {
    std::size_t m = p.size();
    if (m == 0) return {};
    Int k = p.at(m, 1);
    if (k == 0) return {};
    // Chain shapes S_t = k - rev(P_{m-t}), padded to m rows; S_m = (k)^m.
    auto chain_shape = [&](std::size_t t) {
        std::vector<Int> s(m);
        for (std::size_t r = 0; r < m; ++r) {
            std::size_t source = m - t; // P_{m-t}, zero for t = m
            Int part = source == 0 ? 0 : p.at(source, m - r);
            s[r] = k - part;
        }
        return s;
    };
    std::vector<Int> prev = chain_shape(0);
    std::vector<std::vector<int>> rows(m);
    for (std::size_t t = 1; t <= m; ++t) {
        std::vector<Int> next = chain_shape(t);
        for (std::size_t r = 0; r < m; ++r)
            rows[r].insert(rows[r].end(), static_cast<std::size_t>(next[r] - prev[r]),
                           static_cast<int>(t));
        prev = std::move(next);
    }
    std::vector<Int> outer(m, k);
    return SkewTableau::make(Partition::from(outer), Partition::from(chain_shape(0)),
                             std::move(rows));
}

} // namespace hivebr
