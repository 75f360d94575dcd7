#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hivebr/branching.hpp"
#include "hivebr/json_io.hpp"
#include "hivebr/render.hpp"

namespace hivebr::cli {

namespace {

struct Runner {
    std::ostream& os;
    int failures = 0;

    template <typename T>
    void equal(const std::string& name, const T& got, const T& want) {
        if (got == want) {
            os << "ok " << name << "\n";
        } else {
            ++failures;
            os << "FAIL " << name << "\n";
            os << "  expected: " << printable(want) << "\n";
            os << "  actual:   " << printable(got) << "\n";
        }
    }

    void truth(const std::string& name, bool got) { equal(name, got, true); }

    template <typename T>
    static std::string printable(const T& v) {
        if constexpr (std::is_same_v<T, SkewTableau>) {
            return to_json(v).dump();
        } else if constexpr (std::is_same_v<T, GTPattern> || std::is_same_v<T, Hive>) {
            return to_json(v).dump();
        } else if constexpr (std::is_same_v<T, Partition>) {
            return to_string(v);
        } else {
            std::ostringstream ss;
            ss << v;
            return ss.str();
        }
    }
};

Partition P(std::vector<Int> v) { return Partition::from(std::move(v)); }

SkewTableau T(std::vector<Int> outer, std::vector<Int> inner,
              std::vector<std::vector<int>> rows) {
    return SkewTableau::make(P(std::move(outer)), P(std::move(inner)), std::move(rows));
}

std::string digits(const Word& w) {
    std::string s;
    for (int x : w.letters) s += static_cast<char>('0' + x);
    return s;
}

} // namespace

int run_selftest(std::ostream& os, unsigned seed) {
    Runner r{os};

    // Partitions and words.
    r.equal("normalize(2,1,1,0,0,0)", P({2, 1, 1, 0, 0, 0}), P({2, 1, 1}));
    r.equal<std::string>("partial_sums(2,1,1;6)", [&] {
        std::ostringstream ss;
        for (Int v : P({2, 1, 1}).partial_sums(6)) ss << v << ' ';
        return ss.str();
    }(), "0 2 3 4 4 4 4 ");
    r.truth("is_even(4,4,2,2)", P({4, 4, 2, 2}).is_even());
    r.truth("not is_even(4,4,2,1)", !P({4, 4, 2, 1}).is_even());
    r.truth("yamanouchi(111221123)", is_yamanouchi(word_from_digits("111221123")));

    // The unique LR tableau of shape (5,3,1)/(3,1), content (3,1,1).
    SkewTableau lrex = T({5, 3, 1}, {3, 1}, {{1, 1}, {1, 2}, {3}});
    SkewTableau lrex_companion = T({3, 1, 1}, {}, {{1, 1, 2}, {2}, {3}});
    r.equal("reverse_row_word(companion)", digits(reverse_row_word(lrex_companion)),
            std::string("21123"));
    r.equal("reverse_row_word(superstandard(3,1))",
            digits(reverse_row_word(superstandard(P({3, 1})))), std::string("1112"));
    r.equal("companion(lrex)", companion(lrex), lrex_companion);
    r.equal("companion_inverse(lrex)", companion_inverse(lrex_companion, P({3, 1})), lrex);
    r.equal("rectify(lrex)", rectify(lrex), superstandard(P({3, 1, 1})));
    r.truth("dominance of the companion", is_dominant(lrex_companion, P({3, 1})));
    r.equal<std::size_t>("unique LR filling",
                         enumerate_lr(P({5, 3, 1}), P({3, 1}), P({3, 1, 1})).size(), 1);
    r.truth("sundaram accepts lrex", satisfies_sundaram(lrex, 3));
    r.truth("sundaram rejects the 4-row variant",
            !satisfies_sundaram(T({5, 3, 2, 1}, {3, 1, 1}, {{1, 1}, {1, 2}, {3}, {1}}), 3));

    // Tableau and contretableau readings of a GT pattern.
    GTPattern tc = GTPattern::make({{1}, {3, 1}, {4, 3, 0}, {6, 3, 2, 0}});
    SkewTableau tc_t = T({6, 3, 2}, {}, {{1, 2, 2, 3, 4, 4}, {2, 3, 3}, {4, 4}});
    SkewTableau tc_c = T({6, 6, 6, 6}, {6, 4, 3}, {{}, {1, 1}, {2, 2, 3}, {1, 1, 2, 3, 3, 4}});
    r.equal("T(P) of the reading example", tableau_from_gt(tc), tc_t);
    r.equal("C(P) of the reading example", contretableau_from_gt(tc), tc_c);
    r.equal("GT(T(P)) roundtrip", gt_from_tableau(tc_t, 4), tc);
    r.equal("S(T(P)) = rect(C(P))", schutzenberger(tc_t, 4), rectify(tc_c));

    // The phi embedding example.
    SkewTableau phi_comp = T({4, 3, 2, 2}, {}, {{1, 1, 1, 4}, {2, 2, 2}, {3, 3}, {4, 4}});
    Hive phi_h = Hive::make({{4, 8, 11, 13, 15, 15, 15},
                             {4, 8, 11, 13, 15, 15},
                             {4, 8, 11, 13, 15},
                             {4, 7, 10, 12},
                             {3, 6, 9},
                             {2, 5},
                             {0}});
    r.equal("phi(companion) hive", hive_embed(phi_comp, P({2, 1, 1}), 6), phi_h);
    r.equal("P(phi(companion)) roundtrip", gt_row_diff(phi_h), gt_from_tableau(phi_comp, 6));

    // The closing example, every stage.
    BranchingInstance closing(3, P({5, 4, 3, 3}), P({2, 1, 1}));
    SkewTableau closing_t = T({5, 4, 3, 3}, {2, 1, 1}, {{1, 1, 1}, {1, 2, 2}, {2, 3}, {2, 3, 4}});
    BijectionTrace trace = branching_map(closing, P({4, 4, 2, 1}), closing_t);
    r.equal("closing companion", trace.companion,
            T({4, 4, 2, 1}, {}, {{1, 1, 1, 2}, {2, 2, 3, 4}, {3, 4}, {4}}));
    r.equal("closing hive", trace.hive,
            Hive::make({{4, 8, 12, 14, 15, 15, 15},
                        {4, 8, 12, 14, 15, 15},
                        {4, 8, 12, 14, 15},
                        {4, 8, 11, 12},
                        {3, 7, 9},
                        {2, 5},
                        {0}}));
    r.equal("closing ne pattern", trace.ne_pattern,
            GTPattern::make(
                {{0}, {0, 0}, {2, 0, 0}, {2, 1, 0, 0}, {2, 1, 0, 0, 0}, {2, 1, 1, 0, 0, 0}}));
    r.equal("closing T(P-hat)", trace.gt_tableau, T({2, 1, 1}, {}, {{3, 3}, {4}, {6}}));
    r.equal("closing C(P-hat)", trace.contretableau,
            T({2, 2, 2, 2, 2, 2}, {2, 2, 2, 1, 1}, {{}, {}, {}, {1}, {3}, {4, 4}}));
    r.equal("closing output", trace.output, T({2, 1, 1}, {}, {{1, 4}, {3}, {4}}));
    r.truth("closing hive is flagged",
            is_flagged(trace.hive, sundaram_flag(3)));
    r.truth("closing hive validates",
            validate_hive(trace.hive,
                          HiveTriple(P({2, 1, 1}), P({4, 4, 2, 1}), P({5, 4, 3, 3}), 6))
                .ok);
    r.truth("kwon accepts T(P-hat)", satisfies_kwon(trace.gt_tableau, 3));

    // Sundaram flags.
    r.equal<std::string>("sundaram_flag(3)", [&] {
        std::ostringstream ss;
        for (int b : sundaram_flag(3).bounds) ss << b << ' ';
        return ss.str();
    }(), "3 4 4 5 5 6 ");

    // Branching coefficients at rank 2.
    for (auto model : {BranchingModel::sundaram, BranchingModel::kwon,
                       BranchingModel::flagged_hive, BranchingModel::character}) {
        r.equal<Int>(std::string("c((1),(1)) via ") + to_string(model),
                     branching_coefficient(BranchingInstance(2, P({1}), P({1})), model), 1);
        r.equal<Int>(std::string("c((1,1),()) via ") + to_string(model),
                     branching_coefficient(BranchingInstance(2, P({1, 1}), P({})), model), 1);
        r.equal<Int>(std::string("c((1,1),(1,1)) via ") + to_string(model),
                     branching_coefficient(BranchingInstance(2, P({1, 1}), P({1, 1})), model),
                     1);
    }

    // Rendering goldens.
    r.equal<std::string>("ascii lrex", render(lrex, RenderFormat::ascii),
                         ". . . 1 1\n. 1 2\n3\n");

    // Random evacuation spot checks; the seed pins the sample.
    std::mt19937 rng(seed);
    std::vector<SkewTableau> pool = enumerate_ssyt(P({3, 2, 1}), 4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    bool involution_ok = true;
    for (int i = 0; i < 32; ++i) {
        const SkewTableau& t = pool[pick(rng)];
        if (schutzenberger(schutzenberger(t, 4), 4) != t) involution_ok = false;
    }
    r.truth("random evacuation involutions", involution_ok);

    // Rank-2 verification sweep.
    bool sweep_ok = true;
    for (const BranchingInstance& inst : sweep_instances(2, 8)) {
        InstanceReport rep = verify_instance(inst);
        if (!rep.pass()) {
            sweep_ok = false;
            os << "FAIL sweep instance n=2 nu=" << to_string(inst.nu)
               << " mu=" << to_string(inst.mu) << "\n";
            break;
        }
    }
    r.truth("rank-2 sweep (weight <= 8)", sweep_ok);

    os << (r.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return r.failures == 0 ? 0 : 3;
}

} // namespace hivebr::cli
