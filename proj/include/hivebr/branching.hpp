#pragma once

#include <map>
#include <string>
#include <vector>

#include "hivebr/gt_pattern.hpp"
#include "hivebr/hive.hpp"
#include "hivebr/laurent.hpp"
#include "hivebr/partition.hpp"
#include "hivebr/tableau.hpp"

namespace hivebr {

// Restriction problem sl(2n) -> sp(2n): nu indexes the sl(2n) module
// (at most 2n-1 parts), mu the sp(2n) module (at most n parts).
struct BranchingInstance {
    int n = 1;
    Partition nu, mu;

    BranchingInstance() = default;
    BranchingInstance(int n_, Partition nu_, Partition mu_);

    std::size_t m() const { return static_cast<std::size_t>(2 * n); }
};

// Every intermediate stage of rect . C . P-hat . phi . c applied to a
// tableau of the Sundaram model.
struct BijectionTrace {
    SkewTableau input;         // element of LRS(nu/mu, lambda)
    SkewTableau companion;     // c(input)
    Hive hive;                 // phi(companion) in Hive(mu, lambda, nu)
    GTPattern ne_pattern;      // P-hat of the hive
    SkewTableau gt_tableau;    // T(P-hat)
    SkewTableau contretableau; // C(P-hat)
    SkewTableau output;        // rect(C(P-hat)), element of LRK
};

enum class BranchingModel { sundaram, kwon, flagged_hive, character };

const char* to_string(BranchingModel m) noexcept;

// Even partitions lambda of weight |nu| - |mu| with at most 2n parts and
// lambda contained in nu: the summation range of all branching models.
std::vector<Partition> admissible_lambdas(const BranchingInstance& inst);

// LR tableaux of shape nu/mu and content lambda satisfying the Sundaram
// row condition.
std::vector<SkewTableau> lrs_set(const BranchingInstance& inst, const Partition& lambda);

// lambda-dominant tableaux of shape mu and content nu - lambda whose
// evacuation on the alphabet [1, 2n] satisfies the Kwon row condition.
std::vector<SkewTableau> lrk_set(const BranchingInstance& inst, const Partition& lambda);

// The branching bijection applied to one Sundaram-model tableau, with all
// intermediate objects.
BijectionTrace branching_map(const BranchingInstance& inst, const Partition& lambda,
                             const SkewTableau& t);

// The hive symmetry U = rect . C . P-hat . phi on lambda-dominant tableaux:
// sends the lambda-dominant tableau r of shape mu to a shape(r)-dominant
// tableau of shape lambda, inverting the roles of the two partitions.
SkewTableau symmetry_U(const SkewTableau& r, const Partition& lambda, std::size_t m);

// c^nu_mu by the requested model.
Int branching_coefficient(const BranchingInstance& inst, BranchingModel model);

// Full decomposition {mu -> c^nu_mu} through symplectic Weyl characters:
// s_nu(x, x^{-1}) times the Weyl denominator is peeled greedily into
// numerator determinants. Exact integer arithmetic throughout.
std::map<Partition, Int> character_decompose(const BranchingInstance& inst);

struct LambdaReport {
    Partition lambda;
    Int lrs = 0, lrk = 0, hives = 0;
    bool image_in_lrk = true;
    bool injective = true;
    bool counts_equal = true;
    bool flagged_set_equal = true;
    bool evacuation_ok = true;
};

struct InstanceReport {
    BranchingInstance inst;
    std::vector<LambdaReport> per_lambda;
    Int sundaram = 0, kwon = 0, flagged_hive = 0, character = 0;
    bool bijection_ok = true;
    bool models_agree = true;

    bool pass() const { return bijection_ok && models_agree; }
};

// Runs every per-lambda bijection check and compares all four models.
InstanceReport verify_instance(const BranchingInstance& inst);

// All instances (nu, mu) for the given rank with |nu| <= max_weight.
std::vector<BranchingInstance> sweep_instances(int n, Int max_weight);

} // namespace hivebr
