#include "hivebr/branching.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hivebr {

BranchingInstance::BranchingInstance(int n_, Partition nu_, Partition mu_)
    : n(n_), nu(std::move(nu_)), mu(std::move(mu_)) {
    if (n < 1) throw error(errc::instance_invalid, "rank n must be positive");
    if (nu.length() > static_cast<std::size_t>(2 * n - 1))
        throw error(errc::instance_invalid, "nu must have at most 2n-1 parts");
    if (mu.length() > static_cast<std::size_t>(n))
        throw error(errc::instance_invalid, "mu must have at most n parts");
}

const char* to_string(BranchingModel m) noexcept {
    switch (m) {
        case BranchingModel::sundaram: return "sundaram";
        case BranchingModel::kwon: return "kwon";
        case BranchingModel::flagged_hive: return "flagged_hive";
        case BranchingModel::character: return "character";
    }
    return "?";
}

std::vector<Partition> admissible_lambdas(const BranchingInstance& inst) {
    Int diff = inst.nu.weight() - inst.mu.weight();
    std::vector<Partition> out;
    for (Partition& l : even_partitions(diff, inst.m()))
        if (inst.nu.contains(l)) out.push_back(std::move(l));
    return out;
}

std::vector<SkewTableau> lrs_set(const BranchingInstance& inst, const Partition& lambda) {
    if (lambda.weight() != inst.nu.weight() - inst.mu.weight()) return {};
    std::vector<SkewTableau> out;
    for (SkewTableau& t : enumerate_lr(inst.nu, inst.mu, lambda))
        if (satisfies_sundaram(t, inst.n)) out.push_back(std::move(t));
    return out;
}

namespace {

// nu - lambda as a content vector; empty optional when lambda is not
// contained in nu.
std::optional<Content> weight_vector(const Partition& nu, const Partition& lambda) {
    if (!nu.contains(lambda)) return std::nullopt;
    Content w(nu.length());
    for (std::size_t i = 0; i < nu.length(); ++i) w[i] = nu.part(i) - lambda.part(i);
    return w;
}

} // namespace

std::vector<SkewTableau> lrk_set(const BranchingInstance& inst, const Partition& lambda) {
    if (lambda.weight() != inst.nu.weight() - inst.mu.weight()) return {};
    auto weight = weight_vector(inst.nu, lambda);
    if (!weight) return {};
    std::vector<SkewTableau> out;
    for (SkewTableau& t : enumerate_dominant(inst.mu, *weight, lambda))
        if (satisfies_kwon(schutzenberger(t, 2 * inst.n), inst.n)) out.push_back(std::move(t));
    return out;
}

BijectionTrace branching_map(const BranchingInstance& inst, const Partition& lambda,
                             const SkewTableau& t) {
    if (t.outer() != inst.nu || t.inner() != inst.mu)
        throw error(errc::not_in_domain, "tableau shape is not nu/mu");
    if (!is_littlewood_richardson(t, lambda))
        throw error(errc::not_in_domain, "tableau is not LR of content lambda");
    if (!satisfies_sundaram(t, inst.n))
        throw error(errc::not_in_domain, "tableau fails the Sundaram condition");
    BijectionTrace trace;
    trace.input = t;
    trace.companion = companion(t, /*check_lr=*/false);
    trace.hive = hive_embed(trace.companion, inst.mu, inst.m());
    trace.ne_pattern = gt_ne_diff(trace.hive);
    trace.gt_tableau = tableau_from_gt(trace.ne_pattern);
    trace.contretableau = contretableau_from_gt(trace.ne_pattern);
    trace.output = rectify(trace.contretableau);
    return trace;
}

SkewTableau symmetry_U(const SkewTableau& r, const Partition& lambda, std::size_t m) {
    if (!r.is_straight())
        throw error(errc::invalid_argument, "symmetry_U expects a straight tableau");
    if (!is_dominant(r, lambda))
        throw error(errc::not_dominant, "tableau is not lambda-dominant");
    return rectify(contretableau_from_gt(gt_ne_diff(hive_embed(r, lambda, m))));
}

namespace {

LaurentPolynomial det_difference(const std::vector<Int>& exps, std::size_t n) {
    // det( x_j^{a_i} - x_j^{-a_i} ): expand over permutations, each factor a
    // two-term binomial. Sizes here are tiny (n <= a few).
    LaurentPolynomial out(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LaurentPolynomial prod = LaurentPolynomial::monomial(std::vector<int>(n, 0),
                                                             inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPolynomial factor(n);
            std::vector<int> e(n, 0);
            e[perm[i]] = static_cast<int>(exps[i]);
            factor.add_term(e, 1);
            e[perm[i]] = -static_cast<int>(exps[i]);
            factor.add_term(e, -1);
            prod = prod * factor;
        }
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LaurentPolynomial weyl_denominator(std::size_t n) {
    std::vector<Int> exps(n);
    for (std::size_t i = 0; i < n; ++i) exps[i] = static_cast<Int>(n - i);
    return det_difference(exps, n);
}

LaurentPolynomial numerator_det(const Partition& mu, std::size_t n) {
    std::vector<Int> exps(n);
    for (std::size_t i = 0; i < n; ++i) exps[i] = mu.part(i) + static_cast<Int>(n - i);
    return det_difference(exps, n);
}

// s_nu evaluated at (x_1..x_n, x_1^{-1}..x_n^{-1}): dynamic programming over
// the chain of shapes, one letter of the alphabet [1, 2n] at a time; letter
// t <= n contributes x_t, letter n+t contributes x_t^{-1}.
LaurentPolynomial schur_symplectic_point(const Partition& nu, std::size_t n) {
    std::size_t letters = 2 * n;
    std::map<Partition, LaurentPolynomial> cur;
    cur.emplace(Partition{}, LaurentPolynomial::monomial(std::vector<int>(n, 0), 1));
    for (std::size_t t = 1; t <= letters; ++t) {
        std::size_t var = t <= n ? t - 1 : t - n - 1;
        int sign = t <= n ? 1 : -1;
        std::map<Partition, LaurentPolynomial> next;
        for (const auto& entry : cur) {
            const Partition& shape = entry.first;
            const LaurentPolynomial& poly = entry.second;
            // All horizontal-strip extensions inside nu with at most t rows.
            std::size_t max_rows = std::min(nu.length(), t);
            std::vector<Int> ext(max_rows, 0);
            auto emit = [&](auto&& self, std::size_t row, Int strip) -> void {
                if (row == max_rows) {
                    Partition grown = Partition::from(ext);
                    LaurentPolynomial weighted(n);
                    for (const auto& [e, c] : poly.terms()) {
                        std::vector<int> e2 = e;
                        e2[var] += sign * static_cast<int>(strip);
                        weighted.add_term(e2, c);
                    }
                    auto it = next.find(grown);
                    if (it == next.end())
                        next.emplace(std::move(grown), std::move(weighted));
                    else
                        it->second += weighted;
                    return;
                }
                Int low = shape.part(row);
                // Horizontal strip: new cells in row bounded by the previous
                // row of the old shape.
                Int high = std::min(nu.part(row), row == 0 ? nu.part(0) : shape.part(row - 1));
                for (Int v = low; v <= high; ++v) {
                    ext[row] = v;
                    self(self, row + 1, strip + (v - low));
                }
            };
            emit(emit, 0, 0);
        }
        cur = std::move(next);
    }
    auto it = cur.find(nu);
    if (it == cur.end()) return LaurentPolynomial(n);
    return it->second;
}

} // namespace

std::map<Partition, Int> character_decompose(const BranchingInstance& inst) {
    std::size_t n = static_cast<std::size_t>(inst.n);
    LaurentPolynomial f = schur_symplectic_point(inst.nu, n) * weyl_denominator(n);
    std::map<Partition, Int> result;
    std::size_t guard = f.term_count();
    for (std::size_t step = 0; !f.is_zero(); ++step) {
        if (step > guard)
            throw error(errc::internal, "character peeling exceeded the weight-support bound");
        // Copy: subtracting the determinant below erases this very node.
        const auto [exps, coeff] = *f.terms().rbegin();
        // The lex-greatest term must be the leading term of a numerator
        // determinant: strictly decreasing positive exponents, coefficient
        // counting a multiplicity.
        for (std::size_t i = 0; i < n; ++i) {
            if (exps[i] < 1 || (i + 1 < n && exps[i] <= exps[i + 1]))
                throw error(errc::internal, "unexpected leading term in character peeling");
        }
        if (coeff < 0)
            throw error(errc::internal, "negative multiplicity in character peeling");
        std::vector<Int> mu_parts(n);
        for (std::size_t i = 0; i < n; ++i) mu_parts[i] = exps[i] - static_cast<Int>(n - i);
        Partition mu = Partition::from(mu_parts);
        LaurentPolynomial num = numerator_det(mu, n);
        for (const auto& [e, c] : num.terms()) f.add_term(e, -coeff * c);
        result[mu] = coeff;
    }
    return result;
}

Int branching_coefficient(const BranchingInstance& inst, BranchingModel model) {
    if (model == BranchingModel::character) {
        auto full = character_decompose(inst);
        auto it = full.find(inst.mu);
        return it == full.end() ? 0 : it->second;
    }
    if (!inst.nu.contains(inst.mu)) return 0;
    Int total = 0;
    for (const Partition& lambda : admissible_lambdas(inst)) {
        switch (model) {
            case BranchingModel::sundaram:
                total += static_cast<Int>(lrs_set(inst, lambda).size());
                break;
            case BranchingModel::kwon:
                total += static_cast<Int>(lrk_set(inst, lambda).size());
                break;
            case BranchingModel::flagged_hive:
                total += static_cast<Int>(
                    enumerate_hives(HiveTriple(inst.mu, lambda, inst.nu, inst.m()),
                                    sundaram_flag(inst.n))
                        .size());
                break;
            case BranchingModel::character:
                break;
        }
    }
    return total;
}

InstanceReport verify_instance(const BranchingInstance& inst) {
    InstanceReport report;
    report.inst = inst;
    bool contained = inst.nu.contains(inst.mu);
    if (contained) {
        auto flag = sundaram_flag(inst.n);
        for (const Partition& lambda : admissible_lambdas(inst)) {
            LambdaReport lr;
            lr.lambda = lambda;
            auto lrs = lrs_set(inst, lambda);
            auto lrk = lrk_set(inst, lambda);
            lr.lrs = static_cast<Int>(lrs.size());
            lr.lrk = static_cast<Int>(lrk.size());
            lr.hives = static_cast<Int>(
                enumerate_hives(HiveTriple(inst.mu, lambda, inst.nu, inst.m()), flag).size());

            std::set<SkewTableau> lrk_index(lrk.begin(), lrk.end());
            std::set<SkewTableau> images;
            std::set<SkewTableau> companions;
            for (const SkewTableau& t : lrs) {
                BijectionTrace trace = branching_map(inst, lambda, t);
                if (!lrk_index.count(trace.output)) lr.image_in_lrk = false;
                if (!images.insert(trace.output).second) lr.injective = false;
                companions.insert(trace.companion);
                // Two routes to T(P-hat): evacuation of the output and the
                // tableau reading of the northeast pattern.
                if (schutzenberger(trace.output, 2 * inst.n) != trace.gt_tableau)
                    lr.evacuation_ok = false;
            }
            lr.counts_equal = lr.lrs == lr.lrk && lr.lrs == lr.hives;

            auto weight = weight_vector(inst.nu, inst.mu);
            auto flagged = enumerate_dominant(lambda, *weight, inst.mu, flag);
            std::set<SkewTableau> flagged_index(flagged.begin(), flagged.end());
            lr.flagged_set_equal = flagged_index == companions;

            // Image contained + injective + equal cardinalities pins the
            // image to be exactly lrk.
            report.bijection_ok = report.bijection_ok && lr.image_in_lrk && lr.injective &&
                                  lr.counts_equal && lr.flagged_set_equal && lr.evacuation_ok;
            report.sundaram += lr.lrs;
            report.kwon += lr.lrk;
            report.flagged_hive += lr.hives;
            report.per_lambda.push_back(std::move(lr));
        }
    }
    report.character = branching_coefficient(inst, BranchingModel::character);
    report.models_agree = report.sundaram == report.kwon &&
                          report.sundaram == report.flagged_hive &&
                          report.sundaram == report.character;
    return report;
}

std::vector<BranchingInstance> sweep_instances(int n, Int max_weight) {
    std::vector<BranchingInstance> out;
    for (Int w = 0; w <= max_weight; ++w)
        for (const Partition& nu : partitions_of_weight(w, static_cast<std::size_t>(2 * n - 1)))
            for (const Partition& mu : sub_partitions(nu, static_cast<std::size_t>(n)))
                out.emplace_back(n, nu, mu);
    return out;
}

} // namespace hivebr
