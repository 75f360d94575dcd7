#include "hivebr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hivebr {

Partition Partition::from(const std::vector<Int>& seq) {
    Int total = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0)
            throw error(errc::negative_part, "part " + std::to_string(seq[i]) + " is negative");
        if (i + 1 < seq.size() && seq[i] < seq[i + 1])
            throw error(errc::not_weakly_decreasing,
                        "parts increase at index " + std::to_string(i));
        total += seq[i];
        if (total > kMaxWeight)
            throw error(errc::invalid_argument, "partition weight exceeds supported bound");
    }
    Partition p;
    p.parts_ = seq;
    while (!p.parts_.empty() && p.parts_.back() == 0) p.parts_.pop_back();
    return p;
}

Int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<Int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (Int row : parts_)
        for (Int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
    Partition q;
    q.parts_ = std::move(cols);
    return q;
}

bool Partition::is_even() const {
    for (std::size_t i = 0; i < parts_.size(); i += 2)
        if (part(i) != part(i + 1)) return false;
    return true;
}

std::vector<Int> Partition::partial_sums(std::size_t m) const {
    if (length() > m)
        throw error(errc::length_exceeded, "partition has " + std::to_string(length()) +
                                               " parts, m = " + std::to_string(m));
    std::vector<Int> sums(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) sums[i + 1] = sums[i] + part(i);
    return sums;
}

Word::Word(std::vector<int> ls) : letters(std::move(ls)) {
    for (int x : letters)
        if (x < 1) throw error(errc::invalid_argument, "word letters must be >= 1");
}

Word word_from_digits(const std::string& digits) {
    std::vector<int> ls;
    ls.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '1' || ch > '9')
            throw error(errc::invalid_argument, std::string("bad digit '") + ch + "' in word");
        ls.push_back(ch - '0');
    }
    return Word(std::move(ls));
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

Content content_of(const Word& w) {
    Content counts;
    for (int x : w.letters) {
        if (static_cast<std::size_t>(x) > counts.size()) counts.resize(static_cast<std::size_t>(x), 0);
        ++counts[static_cast<std::size_t>(x) - 1];
    }
    return counts;
}

bool content_equal(const Content& a, const Content& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Int x = i < a.size() ? a[i] : 0;
        Int y = i < b.size() ? b[i] : 0;
        if (x != y) return false;
    }
    return true;
}

bool is_partition_vector(const Content& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    return c.empty() || c.back() >= 0;
}

Content add_content(const Content& a, const Content& b) {
    Content out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

bool is_yamanouchi(const Word& w) {
    Content counts;
    for (int x : w.letters) {
        std::size_t i = static_cast<std::size_t>(x);
        if (i > counts.size()) counts.resize(i, 0);
        ++counts[i - 1];
        if (i >= 2 && counts[i - 1] > counts[i - 2]) return false;
    }
    return true;
}

namespace {

void emit_partitions(Int remaining, Int max_part, std::size_t slots,
                     std::vector<Int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from(cur));
        return;
    }
    if (slots == 0) return;
    for (Int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_weight(Int weight, std::size_t max_length) {
    if (weight < 0) return {};
    std::vector<Partition> out;
    std::vector<Int> cur;
    emit_partitions(weight, weight, max_length, cur, out);
    return out;
}

std::vector<Partition> even_partitions(Int weight, std::size_t max_length) {
    if (weight < 0 || weight % 2 != 0) return {};
    std::vector<Partition> out;
    // Even partitions are exactly the doubled partitions (a1,a1,a2,a2,...).
    for (const Partition& a : partitions_of_weight(weight / 2, max_length / 2)) {
        std::vector<Int> doubled;
        doubled.reserve(2 * a.length());
        for (Int p : a.parts()) {
            doubled.push_back(p);
            doubled.push_back(p);
        }
        out.push_back(Partition::from(doubled));
    }
    return out;
}

std::vector<Partition> sub_partitions(const Partition& outer, std::size_t max_length) {
    std::vector<Partition> out;
    std::vector<Int> cur;
    std::size_t rows = std::min(max_length, outer.length());
    // Parts chosen high to low per row; choosing 0 terminates the partition.
    auto rec = [&](auto&& self, std::size_t row, Int cap) -> void {
        if (row >= rows) {
            out.push_back(Partition::from(cur));
            return;
        }
        for (Int p = std::min(cap, outer.part(row)); p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
        out.push_back(Partition::from(cur));
    };
    rec(rec, 0, outer.empty() ? 0 : outer.part(0));
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    os << ')';
    return os.str();
}

} // namespace hivebr
