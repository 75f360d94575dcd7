#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hivebr/partition.hpp"

using namespace hivebr;

namespace {

// Independent transpose: count, for each column index c, the rows covering c.
Partition conjugate_by_counting(const Partition& p) {
    std::vector<Int> cols;
    for (std::size_t i = 0; i < p.length(); ++i)
        for (Int c = 0; c < p.part(i); ++c) {
            if (static_cast<std::size_t>(c) >= cols.size()) cols.resize(static_cast<std::size_t>(c) + 1, 0);
            ++cols[static_cast<std::size_t>(c)];
        }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return Partition::from(cols);
}

std::vector<Partition> all_partitions_up_to(Int max_weight) {
    std::vector<Partition> out;
    for (Int w = 0; w <= max_weight; ++w)
        for (auto& p : partitions_of_weight(w, static_cast<std::size_t>(w)))
            out.push_back(std::move(p));
    return out;
}

} // namespace

TEST_CASE("normalize_partition") {
    CHECK(Partition::from({2, 1, 1, 0, 0, 0}).parts() == std::vector<Int>{2, 1, 1});
    CHECK(Partition::from({}).parts().empty());
    CHECK_THROWS_AS(Partition::from({1, 2}), error);
    CHECK_THROWS_AS(Partition::from({3, -1}), error);
    try {
        Partition::from({1, 2});
    } catch (const error& e) {
        CHECK(e.code() == errc::not_weakly_decreasing);
    }
}

TEST_CASE("conjugate") {
    CHECK(Partition::from({3, 1}).conjugate() == Partition::from({2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition::from({4, 4, 2, 1}).conjugate() == Partition::from({4, 3, 2, 2}));
}

TEST_CASE("conjugate is an involution and matches brute-force transpose") {
    for (const Partition& p : all_partitions_up_to(12)) {
        CHECK(p.conjugate() == conjugate_by_counting(p));
        CHECK(p.conjugate().conjugate() == p);
    }
}

TEST_CASE("is_even_partition") {
    CHECK(Partition::from({4, 4, 2, 2}).is_even());
    CHECK(Partition{}.is_even());
    CHECK_FALSE(Partition::from({4, 4, 2, 1}).is_even());
}

TEST_CASE("even iff conjugate has all even parts") {
    for (const Partition& p : all_partitions_up_to(12)) {
        Partition conj = p.conjugate();
        bool all_even_cols = true;
        for (Int c : conj.parts())
            if (c % 2 != 0) all_even_cols = false;
        CHECK(p.is_even() == all_even_cols);
    }
}

TEST_CASE("partial_sums") {
    CHECK(Partition::from({2, 1, 1}).partial_sums(6) ==
          std::vector<Int>{0, 2, 3, 4, 4, 4, 4});
    CHECK(Partition{}.partial_sums(3) == std::vector<Int>{0, 0, 0, 0});
    CHECK(Partition::from({4, 4, 2, 1}).partial_sums(6) ==
          std::vector<Int>{0, 4, 8, 10, 11, 11, 11});
    CHECK_THROWS_AS(Partition::from({1, 1, 1}).partial_sums(2), error);
}

TEST_CASE("partial_sums is weakly increasing and ends at the weight") {
    for (const Partition& p : all_partitions_up_to(10)) {
        auto s = p.partial_sums(p.length() + 2);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i] <= s[i + 1]);
        CHECK(s.back() == p.weight());
    }
}

TEST_CASE("content") {
    CHECK(content_of(word_from_digits("21123")) == Content{2, 2, 1});
    CHECK(content_of(Word{}).empty());
    CHECK(content_of(word_from_digits("111221123")) == Content{5, 3, 1});
}

TEST_CASE("content is additive under concatenation") {
    auto u = word_from_digits("3112");
    auto v = word_from_digits("221");
    CHECK(content_equal(content_of(concat(u, v)),
                        add_content(content_of(u), content_of(v))));
}

TEST_CASE("is_yamanouchi") {
    CHECK(is_yamanouchi(word_from_digits("111221123")));
    CHECK_FALSE(is_yamanouchi(word_from_digits("21")));
    CHECK(is_yamanouchi(word_from_digits("11213")));
    CHECK(is_yamanouchi(Word{}));
}

TEST_CASE("yamanouchi words are prefix-closed") {
    auto w = word_from_digits("111221123");
    for (std::size_t k = 0; k <= w.size(); ++k) {
        Word prefix(std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(k)));
        CHECK(is_yamanouchi(prefix));
    }
}

TEST_CASE("even_partitions") {
    auto got = even_partitions(4, 4);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == Partition::from({2, 2}));
    CHECK(got[1] == Partition::from({1, 1, 1, 1}));
    CHECK(even_partitions(0, 3) == std::vector<Partition>{Partition{}});
    CHECK(even_partitions(3, 6).empty());
}

TEST_CASE("even_partitions respects the length bound") {
    for (const auto& p : even_partitions(8, 4)) CHECK(p.length() <= 4);
    // (1^8) needs 8 rows, so it must be absent with max_length 4.
    auto got = even_partitions(8, 4);
    CHECK(std::find(got.begin(), got.end(), Partition::from({1, 1, 1, 1, 1, 1, 1, 1})) ==
          got.end());
}

TEST_CASE("sub_partitions enumerates exactly the contained partitions") {
    Partition outer = Partition::from({3, 2});
    auto subs = sub_partitions(outer, 2);
    for (const auto& p : subs) CHECK(outer.contains(p));
    // mu = (a,b) with a <= 3, b <= min(a,2): 1 + 2 + 3 + 3 = 9 choices.
    CHECK(subs.size() == 9);
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK(subs[i] != subs[j]);
}
