#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hivebr/error.hpp"

namespace hivebr {

// Entry type for partition parts, Gelfand-Tsetlin entries and hive labels.
// All values handled by the library are bounded by the total weight of the
// input partitions; inputs are validated against kMaxWeight so that sums of
// up to a handful of labels can never overflow.
using Int = long long;

inline constexpr Int kMaxWeight = 1'000'000'000'000LL; // 1e12

// A partition stored canonically: weakly decreasing, no trailing zeros.
class Partition {
public:
    Partition() = default;

    // Canonicalizes a weakly decreasing sequence of nonnegative integers.
    static Partition from(const std::vector<Int>& seq);

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Int weight() const;

    // i is 0-based; parts beyond the length read as 0.
    Int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    // True iff p_1 = p_2, p_3 = p_4, ... (absent parts read as 0).
    bool is_even() const;

    // (0, p_1, p_1+p_2, ..., |p|) padded with |p| to length m+1.
    std::vector<Int> partial_sums(std::size_t m) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Int> parts_;
};

// Word over the alphabet {1, 2, ...}.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls);

    std::size_t size() const { return letters.size(); }
    auto operator<=>(const Word&) const = default;
};

// Parses "21123" into the word (2,1,1,2,3). Only single-digit letters.
Word word_from_digits(const std::string& digits);
Word concat(const Word& u, const Word& v);

// Multiplicity vector: counts[i] is the number of occurrences of letter i+1.
using Content = std::vector<Int>;

Content content_of(const Word& w);
bool content_equal(const Content& a, const Content& b); // ignores trailing zeros
bool is_partition_vector(const Content& c);             // weakly decreasing
Content add_content(const Content& a, const Content& b);

// Every prefix has weakly decreasing content.
bool is_yamanouchi(const Word& w);

// All partitions of exactly `weight` with at most `max_length` parts,
// in decreasing lexicographic order.
std::vector<Partition> partitions_of_weight(Int weight, std::size_t max_length);

// All even partitions of exactly `weight` with length <= max_length,
// in decreasing lexicographic order. Odd weight gives the empty list.
std::vector<Partition> even_partitions(Int weight, std::size_t max_length);

// All partitions contained in `outer` (any weight) with at most max_length
// parts, in decreasing lexicographic order.
std::vector<Partition> sub_partitions(const Partition& outer, std::size_t max_length);

std::string to_string(const Partition& p);

} // namespace hivebr
