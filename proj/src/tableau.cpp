#include "hivebr/tableau.hpp"

#include <algorithm>
#include <string>

namespace hivebr {

namespace {

constexpr Int kMaxCells = 1'000'000;

void guard_cells(Int cells) {
    if (cells > kMaxCells)
        throw error(errc::invalid_argument,
                    "shape with " + std::to_string(cells) + " cells exceeds supported size");
}

} // namespace

SkewTableau SkewTableau::make(Partition outer, Partition inner,
                              std::vector<std::vector<int>> rows) {
    if (!outer.contains(inner))
        throw error(errc::shape_mismatch, "inner shape not contained in outer shape");
    if (rows.size() != outer.length())
        throw error(errc::shape_mismatch,
                    "expected " + std::to_string(outer.length()) + " rows, got " +
                        std::to_string(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Int want = outer.part(i) - inner.part(i);
        if (static_cast<Int>(rows[i].size()) != want)
            throw error(errc::shape_mismatch, "row " + std::to_string(i + 1) + " has " +
                                                  std::to_string(rows[i].size()) +
                                                  " entries, expected " + std::to_string(want));
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] < 1)
                throw error(errc::invalid_argument, "entries must be positive");
            if (j > 0 && rows[i][j - 1] > rows[i][j])
                throw error(errc::row_not_weakly_increasing,
                            "row " + std::to_string(i + 1) + " decreases");
        }
    }
    // Filled cells of a column form a contiguous range, so checking adjacent
    // rows over their overlapping columns covers all column constraints.
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        Int lo = inner.part(i), hi = outer.part(i + 1);
        for (Int c = lo; c < hi; ++c) {
            int above = rows[i][static_cast<std::size_t>(c - inner.part(i))];
            int below = rows[i + 1][static_cast<std::size_t>(c - inner.part(i + 1))];
            if (above >= below)
                throw error(errc::column_not_strictly_increasing,
                            "column " + std::to_string(c + 1) + " fails at row " +
                                std::to_string(i + 2));
        }
    }
    SkewTableau t;
    t.outer_ = std::move(outer);
    t.inner_ = std::move(inner);
    t.rows_ = std::move(rows);
    return t;
}

Content SkewTableau::content() const {
    Content counts;
    for (const auto& row : rows_)
        for (int e : row) {
            if (static_cast<std::size_t>(e) > counts.size())
                counts.resize(static_cast<std::size_t>(e), 0);
            ++counts[static_cast<std::size_t>(e) - 1];
        }
    return counts;
}

int SkewTableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        if (!row.empty()) m = std::max(m, row.back());
    return m;
}

Flag::Flag(std::vector<int> bs) : bounds(std::move(bs)) {
    int m = static_cast<int>(bounds.size());
    for (int i = 0; i < m; ++i) {
        if (bounds[i] < i + 1 || bounds[i] > m)
            throw error(errc::invalid_argument,
                        "flag entry " + std::to_string(bounds[i]) + " out of range at position " +
                            std::to_string(i + 1));
        if (i > 0 && bounds[i - 1] > bounds[i])
            throw error(errc::invalid_argument, "flag must be weakly increasing");
    }
}

Word reverse_row_word(const SkewTableau& t) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(t.cell_count()));
    for (const auto& row : t.rows())
        for (auto it = row.rbegin(); it != row.rend(); ++it) letters.push_back(*it);
    return Word(std::move(letters));
}

Word row_word(const SkewTableau& t) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(t.cell_count()));
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        letters.insert(letters.end(), it->begin(), it->end());
    return Word(std::move(letters));
}

SkewTableau insert_word(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (int x : w.letters) {
        int carry = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({carry});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), carry);
            if (it == rows[r].end()) {
                rows[r].push_back(carry);
                break;
            }
            std::swap(carry, *it);
        }
    }
    std::vector<Int> shape;
    shape.reserve(rows.size());
    for (const auto& row : rows) shape.push_back(static_cast<Int>(row.size()));
    return SkewTableau::make(Partition::from(shape), {}, std::move(rows));
}

SkewTableau rectify(const SkewTableau& t) {
    if (t.is_straight()) return t;
    return insert_word(row_word(t));
}

SkewTableau superstandard(const Partition& mu) {
    guard_cells(mu.weight());
    std::vector<std::vector<int>> rows(mu.length());
    for (std::size_t i = 0; i < mu.length(); ++i)
        rows[i].assign(static_cast<std::size_t>(mu.part(i)), static_cast<int>(i) + 1);
    return SkewTableau::make(mu, {}, std::move(rows));
}

bool is_dominant(const SkewTableau& t, const Partition& mu) {
    Word w = reverse_row_word(t);
    std::size_t width = std::max<std::size_t>(mu.length() + 1, 1);
    for (int x : w.letters) width = std::max(width, static_cast<std::size_t>(x));
    Content counts(width, 0);
    for (std::size_t i = 0; i < mu.length(); ++i) counts[i] = mu.part(i);
    for (int x : w.letters) {
        std::size_t i = static_cast<std::size_t>(x) - 1;
        ++counts[i];
        if (i > 0 && counts[i] > counts[i - 1]) return false;
    }
    return true;
}

bool is_littlewood_richardson(const SkewTableau& t, const Partition& lambda) {
    if (!content_equal(t.content(), lambda.parts())) return false;
    return is_yamanouchi(reverse_row_word(t));
}

SkewTableau companion(const SkewTableau& t, bool check_lr) {
    Content c = t.content();
    if (check_lr) {
        if (!is_partition_vector(c) || !is_yamanouchi(reverse_row_word(t)))
            throw error(errc::not_littlewood_richardson,
                        "tableau is not a Littlewood-Richardson tableau");
    }
    std::vector<std::vector<int>> rows(c.size());
    for (std::size_t i = 0; i < t.row_count(); ++i)
        for (int e : t.rows()[i]) rows[static_cast<std::size_t>(e) - 1].push_back(static_cast<int>(i) + 1);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<Int> shape;
    for (const auto& row : rows) shape.push_back(static_cast<Int>(row.size()));
    return SkewTableau::make(Partition::from(shape), {}, std::move(rows));
}

SkewTableau companion_inverse(const SkewTableau& r, const Partition& mu) {
    if (!r.is_straight())
        throw error(errc::invalid_argument, "companion_inverse expects a straight tableau");
    if (!is_dominant(r, mu))
        throw error(errc::not_dominant, "tableau is not dominant for the given inner shape");
    Content nu_vec = add_content(Content(mu.parts()), r.content());
    if (!is_partition_vector(nu_vec))
        throw error(errc::invalid_content, "mu + content is not a partition");
    Partition nu = Partition::from(nu_vec);
    guard_cells(nu.weight());
    std::vector<std::vector<int>> rows(nu.length());
    for (std::size_t k = 0; k < r.row_count(); ++k)
        for (int row_index : r.rows()[k])
            rows[static_cast<std::size_t>(row_index) - 1].push_back(static_cast<int>(k) + 1);
    return SkewTableau::make(nu, mu, std::move(rows));
}

SkewTableau schutzenberger(const SkewTableau& t, int k) {
    if (!t.is_straight())
        throw error(errc::invalid_argument, "schutzenberger expects a straight tableau");
    if (t.max_entry() > k)
        throw error(errc::alphabet_exceeded,
                    "entry " + std::to_string(t.max_entry()) + " exceeds alphabet bound " +
                        std::to_string(k));
    Word w = reverse_row_word(t);
    for (int& x : w.letters) x = k + 1 - x;
    return insert_word(w);
}

bool satisfies_sundaram(const SkewTableau& t, int n) {
    for (std::size_t i = 0; i < t.row_count(); ++i)
        for (int e : t.rows()[i])
            if (e % 2 == 1 && static_cast<int>(i) + 1 > n + (e - 1) / 2) return false;
    return true;
}

bool satisfies_kwon(const SkewTableau& t, int n) {
    if (!t.is_straight())
        throw error(errc::invalid_argument, "satisfies_kwon expects a straight tableau");
    if (t.row_count() > static_cast<std::size_t>(n))
        throw error(errc::shape_too_long, "shape has more than n rows");
    for (std::size_t i = 0; i < t.row_count(); ++i)
        for (int e : t.rows()[i])
            if (e < 2 * static_cast<int>(i) + 1) return false;
    return true;
}

namespace {

struct Cell {
    std::size_t row;
    Int col; // 0-based column in the full diagram
};

// Cells in reverse reading order: rows top to bottom, right to left.
std::vector<Cell> reading_cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(outer.weight() - inner.weight()));
    for (std::size_t i = 0; i < outer.length(); ++i)
        for (Int c = outer.part(i) - 1; c >= inner.part(i); --c) cells.push_back({i, c});
    return cells;
}

int cell_entry(const std::vector<std::vector<int>>& rows, const Partition& inner,
               std::size_t row, Int col) {
    return rows[row][static_cast<std::size_t>(col - inner.part(row))];
}

} // namespace

std::vector<SkewTableau> enumerate_lr(const Partition& nu, const Partition& mu,
                                      const Partition& lambda) {
    if (!nu.contains(mu))
        throw error(errc::shape_not_contained, "mu is not contained in nu");
    std::vector<SkewTableau> out;
    Int cells_total = nu.weight() - mu.weight();
    if (lambda.weight() != cells_total) return out;
    guard_cells(cells_total);

    auto cells = reading_cells(nu, mu);
    std::vector<std::vector<int>> rows(nu.length());
    for (std::size_t i = 0; i < nu.length(); ++i)
        rows[i].assign(static_cast<std::size_t>(nu.part(i) - mu.part(i)), 0);
    Content counts(lambda.length(), 0);
    int alphabet = static_cast<int>(lambda.length());

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(SkewTableau::make(nu, mu, rows));
            return;
        }
        auto [i, c] = cells[idx];
        int hi = alphabet;
        if (c + 1 < nu.part(i)) hi = std::min(hi, cell_entry(rows, mu, i, c + 1));
        int lo = 1;
        if (i > 0 && c >= mu.part(i - 1)) lo = cell_entry(rows, mu, i - 1, c) + 1;
        for (int e = lo; e <= hi; ++e) {
            std::size_t k = static_cast<std::size_t>(e) - 1;
            if (counts[k] + 1 > lambda.part(k)) continue;
            if (k > 0 && counts[k] + 1 > counts[k - 1]) continue; // Yamanouchi prefix
            ++counts[k];
            rows[i][static_cast<std::size_t>(c - mu.part(i))] = e;
            self(self, idx + 1);
            --counts[k];
        }
        rows[i][static_cast<std::size_t>(c - mu.part(i))] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<SkewTableau> enumerate_dominant(const Partition& shape, const Content& weight,
                                            const Partition& mu,
                                            const std::optional<Flag>& flag) {
    std::vector<SkewTableau> out;
    Int total = 0;
    for (Int w : weight) {
        if (w < 0) throw error(errc::invalid_content, "weight entries must be nonnegative");
        total += w;
    }
    if (total != shape.weight()) return out;
    guard_cells(shape.weight());
    if (flag && flag->size() < shape.length())
        throw error(errc::invalid_argument, "flag shorter than the shape");

    auto cells = reading_cells(shape, {});
    std::vector<std::vector<int>> rows(shape.length());
    for (std::size_t i = 0; i < shape.length(); ++i)
        rows[i].assign(static_cast<std::size_t>(shape.part(i)), 0);
    Content counts(weight.size(), 0);
    int alphabet = static_cast<int>(weight.size());

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(SkewTableau::make(shape, {}, rows));
            return;
        }
        auto [i, c] = cells[idx];
        int hi = alphabet;
        if (c + 1 < shape.part(i)) hi = std::min(hi, rows[i][static_cast<std::size_t>(c) + 1]);
        if (flag) hi = std::min(hi, flag->bounds[i]);
        int lo = 1;
        if (i > 0) lo = rows[i - 1][static_cast<std::size_t>(c)] + 1;
        for (int e = lo; e <= hi; ++e) {
            std::size_t k = static_cast<std::size_t>(e) - 1;
            if (counts[k] + 1 > weight[k]) continue;
            // mu-dominance prefix: mu + counts stays weakly decreasing.
            if (k > 0 && mu.part(k) + counts[k] + 1 > mu.part(k - 1) + counts[k - 1]) continue;
            ++counts[k];
            rows[i][static_cast<std::size_t>(c)] = e;
            self(self, idx + 1);
            --counts[k];
        }
        rows[i][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<SkewTableau> enumerate_ssyt(const Partition& shape, int max_entry) {
    std::vector<SkewTableau> out;
    guard_cells(shape.weight());
    if (shape.length() > static_cast<std::size_t>(std::max(max_entry, 0))) return out;

    auto cells = reading_cells(shape, {});
    std::vector<std::vector<int>> rows(shape.length());
    for (std::size_t i = 0; i < shape.length(); ++i)
        rows[i].assign(static_cast<std::size_t>(shape.part(i)), 0);

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(SkewTableau::make(shape, {}, rows));
            return;
        }
        auto [i, c] = cells[idx];
        int hi = max_entry;
        if (c + 1 < shape.part(i)) hi = std::min(hi, rows[i][static_cast<std::size_t>(c) + 1]);
        int lo = 1;
        if (i > 0) lo = rows[i - 1][static_cast<std::size_t>(c)] + 1;
        for (int e = lo; e <= hi; ++e) {
            rows[i][static_cast<std::size_t>(c)] = e;
            self(self, idx + 1);
        }
        rows[i][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
    return out;
}

} // namespace hivebr
