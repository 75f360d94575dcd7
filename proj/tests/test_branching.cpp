#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hivebr/branching.hpp"

using namespace hivebr;

namespace {

Partition P(std::vector<Int> v) { return Partition::from(std::move(v)); }

SkewTableau T(std::vector<Int> outer, std::vector<Int> inner,
              std::vector<std::vector<int>> rows) {
    return SkewTableau::make(P(std::move(outer)), P(std::move(inner)), std::move(rows));
}

SkewTableau closing_input() {
    return T({5, 4, 3, 3}, {2, 1, 1}, {{1, 1, 1}, {1, 2, 2}, {2, 3}, {2, 3, 4}});
}

BranchingInstance closing_instance() { return {3, P({5, 4, 3, 3}), P({2, 1, 1})}; }

} // namespace

TEST_CASE("BranchingInstance validation") {
    CHECK_NOTHROW(BranchingInstance(2, P({3, 2, 1}), P({2, 1})));
    CHECK_THROWS_AS(BranchingInstance(2, P({1, 1, 1, 1}), P({})), error); // l(nu) = 4 > 3
    CHECK_THROWS_AS(BranchingInstance(2, P({2}), P({1, 1, 1})), error);   // l(mu) > n
    CHECK_THROWS_AS(BranchingInstance(0, P({}), P({})), error);
}

TEST_CASE("lrs_set") {
    BranchingInstance lrex_inst(3, P({5, 3, 1}), P({3, 1}));
    CHECK(lrs_set(lrex_inst, P({3, 1, 1})).size() == 1);

    auto closing = lrs_set(closing_instance(), P({4, 4, 2, 1}));
    CHECK(std::find(closing.begin(), closing.end(), closing_input()) != closing.end());

    CHECK(lrs_set(lrex_inst, P({2, 1})).empty()); // weight mismatch
}

TEST_CASE("lrk_set") {
    auto closing = lrk_set(closing_instance(), P({4, 4, 2, 1}));
    SkewTableau expected = T({2, 1, 1}, {}, {{1, 4}, {3}, {4}});
    CHECK(std::find(closing.begin(), closing.end(), expected) != closing.end());

    BranchingInstance trivial(2, P({2, 1}), P({}));
    auto only_empty = lrk_set(trivial, P({2, 1}));
    REQUIRE(only_empty.size() == 1);
    CHECK(only_empty[0] == SkewTableau{});

    BranchingInstance lrex_inst(3, P({5, 3, 1}), P({3, 1}));
    CHECK(lrk_set(lrex_inst, P({3, 1, 1})).size() ==
          lrs_set(lrex_inst, P({3, 1, 1})).size());
}

TEST_CASE("branching_map reproduces the closing example end to end") {
    BijectionTrace trace =
        branching_map(closing_instance(), P({4, 4, 2, 1}), closing_input());
    CHECK(trace.companion ==
          T({4, 4, 2, 1}, {}, {{1, 1, 1, 2}, {2, 2, 3, 4}, {3, 4}, {4}}));
    CHECK(trace.hive == Hive::make({{4, 8, 12, 14, 15, 15, 15},
                                    {4, 8, 12, 14, 15, 15},
                                    {4, 8, 12, 14, 15},
                                    {4, 8, 11, 12},
                                    {3, 7, 9},
                                    {2, 5},
                                    {0}}));
    CHECK(trace.ne_pattern == GTPattern::make({{0},
                                               {0, 0},
                                               {2, 0, 0},
                                               {2, 1, 0, 0},
                                               {2, 1, 0, 0, 0},
                                               {2, 1, 1, 0, 0, 0}}));
    CHECK(trace.gt_tableau == T({2, 1, 1}, {}, {{3, 3}, {4}, {6}}));
    CHECK(trace.contretableau ==
          T({2, 2, 2, 2, 2, 2}, {2, 2, 2, 1, 1}, {{}, {}, {}, {1}, {3}, {4, 4}}));
    CHECK(trace.output == T({2, 1, 1}, {}, {{1, 4}, {3}, {4}}));
}

TEST_CASE("branching_map rejects tableaux outside the domain") {
    CHECK_THROWS_AS(branching_map(closing_instance(), P({4, 4, 2, 1}),
                                  T({5, 4, 3, 3}, {2, 1, 1},
                                    {{1, 1, 1}, {1, 2, 2}, {2, 3}, {3, 3, 4}})),
                    error);
}

TEST_CASE("branching_map on the shape nu/nu sends the empty filling to T_mu") {
    // All component maps are nontrivial here: the output is the unique
    // element of LRK for lambda = (), the superstandard tableau of shape mu.
    BranchingInstance inst(2, P({2, 1}), P({2, 1}));
    SkewTableau empty_filling = T({2, 1}, {2, 1}, {{}, {}});
    BijectionTrace trace = branching_map(inst, P({}), empty_filling);
    CHECK(trace.output == superstandard(P({2, 1})));
    auto lrk = lrk_set(inst, P({}));
    REQUIRE(lrk.size() == 1);
    CHECK(lrk[0] == trace.output);
}

TEST_CASE("branching_map golden membership for the uniqueness example") {
    BranchingInstance inst(3, P({5, 3, 1}), P({3, 1}));
    auto lrs = lrs_set(inst, P({3, 1, 1}));
    REQUIRE(lrs.size() == 1);
    BijectionTrace trace = branching_map(inst, P({3, 1, 1}), lrs[0]);
    auto lrk = lrk_set(inst, P({3, 1, 1}));
    CHECK(std::find(lrk.begin(), lrk.end(), trace.output) != lrk.end());
}

TEST_CASE("symmetry_U golden behaviour") {
    // phi example: swaps the roles of (2,1,1) and the shape (4,3,2,2).
    SkewTableau r = T({4, 3, 2, 2}, {}, {{1, 1, 1, 4}, {2, 2, 2}, {3, 3}, {4, 4}});
    SkewTableau u = symmetry_U(r, P({2, 1, 1}), 6);
    CHECK(u.outer() == P({2, 1, 1}));
    CHECK(is_dominant(u, P({4, 3, 2, 2})));
    CHECK(content_equal(u.content(), Content{1, 1, 1, 1})); // nu - shape(r)

    // Superstandard fixed point: T_lambda is lambda-dominant and U fixes it.
    SkewTableau ss = superstandard(P({2, 1}));
    CHECK(symmetry_U(ss, P({2, 1}), 4) == ss);

    // Empty-dominance direction: the target set LR^lambda_{lambda, ()} is
    // the empty tableau alone.
    CHECK(symmetry_U(ss, P({}), 4) == SkewTableau{});
    CHECK(symmetry_U(SkewTableau{}, P({}), 2) == SkewTableau{});

    CHECK_THROWS_AS(symmetry_U(T({2}, {}, {{2, 2}}), P({}), 3), error);
}

TEST_CASE("symmetry_U is a bijection between opposite LR sets") {
    for (Int w = 0; w <= 8; ++w)
        for (const Partition& nu : partitions_of_weight(w, 4))
            for (Int lw = 0; lw <= w; ++lw)
                for (const Partition& lambda : partitions_of_weight(lw, 4)) {
                    if (!nu.contains(lambda)) continue;
                    Content weight(nu.length(), 0);
                    for (std::size_t i = 0; i < nu.length(); ++i)
                        weight[i] = nu.part(i) - lambda.part(i);
                    for (const Partition& mu : partitions_of_weight(w - lw, 4)) {
                        Content mu_weight(nu.length(), 0);
                        bool ok = nu.contains(mu);
                        if (ok)
                            for (std::size_t i = 0; i < nu.length(); ++i)
                                mu_weight[i] = nu.part(i) - mu.part(i);
                        auto source = enumerate_dominant(mu, weight, lambda);
                        auto target = ok ? enumerate_dominant(lambda, mu_weight, mu)
                                         : std::vector<SkewTableau>{};
                        std::set<SkewTableau> images;
                        for (const SkewTableau& r : source) {
                            SkewTableau u = symmetry_U(r, lambda, 4);
                            CHECK(std::find(target.begin(), target.end(), u) != target.end());
                            images.insert(u);
                        }
                        CHECK(images.size() == source.size());
                        CHECK(source.size() == target.size());
                    }
                }
}

TEST_CASE("branching_coefficient known values") {
    BranchingInstance a(2, P({1}), P({1}));
    BranchingInstance b(2, P({1, 1}), P({}));
    BranchingInstance c(2, P({1, 1}), P({1, 1}));
    for (auto model : {BranchingModel::sundaram, BranchingModel::kwon,
                       BranchingModel::flagged_hive, BranchingModel::character}) {
        CHECK(branching_coefficient(a, model) == 1);
        CHECK(branching_coefficient(b, model) == 1);
        CHECK(branching_coefficient(c, model) == 1);
    }
}

TEST_CASE("character_decompose small cases") {
    auto defining = character_decompose(BranchingInstance(2, P({1}), P({})));
    REQUIRE(defining.size() == 1);
    CHECK(defining.at(P({1})) == 1);

    auto exterior_square = character_decompose(BranchingInstance(2, P({1, 1}), P({})));
    REQUIRE(exterior_square.size() == 2);
    CHECK(exterior_square.at(P({1, 1})) == 1);
    CHECK(exterior_square.at(P({})) == 1);
}

TEST_CASE("character model agrees with sundaram on the closing instance") {
    // |nu| - |mu| is odd here, so every model gives zero.
    BranchingInstance inst = closing_instance();
    CHECK(branching_coefficient(inst, BranchingModel::character) ==
          branching_coefficient(inst, BranchingModel::sundaram));
    CHECK(branching_coefficient(inst, BranchingModel::sundaram) == 0);
}

namespace {

// Weyl dimension formula for sp(2n): with l_i = mu_i + n - i + 1 and
// rho_i = n - i + 1,
//   dim = prod_{i<j} (l_i^2 - l_j^2) / (rho_i^2 - rho_j^2)
//         * prod_i l_i / rho_i.
Int sp_dimension(const Partition& mu, int n) {
    Int num = 1, den = 1;
    auto l = [&](int i) { return mu.part(static_cast<std::size_t>(i)) + n - i; };
    auto rho = [&](int i) { return static_cast<Int>(n - i); };
    for (int i = 0; i < n; ++i) {
        num *= l(i);
        den *= rho(i);
        for (int j = i + 1; j < n; ++j) {
            num *= (l(i) - l(j)) * (l(i) + l(j));
            den *= (rho(i) - rho(j)) * (rho(i) + rho(j));
        }
    }
    return num / den;
}

} // namespace

TEST_CASE("character_decompose matches dimension counts") {
    // Sum over mu of c^nu_mu * dim V^sigma(mu) equals dim V(nu), the number
    // of semistandard tableaux of shape nu on 2n letters.
    CHECK(sp_dimension(P({1}), 2) == 4);
    CHECK(sp_dimension(P({1, 1}), 2) == 5);
    for (Int w = 0; w <= 5; ++w)
        for (const Partition& nu : partitions_of_weight(w, 3)) {
            BranchingInstance inst(2, nu, P({}));
            Int total = 0;
            for (const auto& [mu, mult] : character_decompose(inst))
                total += mult * sp_dimension(mu, 2);
            CHECK(total == static_cast<Int>(enumerate_ssyt(nu, 4).size()));
        }
}

TEST_CASE("verify_instance") {
    InstanceReport r1 = verify_instance(BranchingInstance(2, P({2, 1}), P({1})));
    CHECK(r1.pass());
    InstanceReport r2 = verify_instance(BranchingInstance(3, P({5, 3, 1}), P({3, 1})));
    CHECK(r2.pass());
    CHECK(r2.sundaram == r2.kwon);
    CHECK_THROWS_AS(verify_instance(BranchingInstance(2, P({2}), P({1, 1, 1}))), error);
}

TEST_CASE("evacuation consistency of traces") {
    // schutzenberger(output, 2n) must equal the tableau reading T(P-hat).
    BranchingInstance inst = closing_instance();
    Partition lambda = P({4, 4, 2, 1});
    for (const SkewTableau& t : lrs_set(inst, lambda)) {
        BijectionTrace trace = branching_map(inst, lambda, t);
        CHECK(schutzenberger(trace.output, 6) == trace.gt_tableau);
    }
}
