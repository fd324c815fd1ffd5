#pragma once

#include "bic/channel.hpp"

#include <optional>

namespace bic::dm {

enum class ConditionKind { Oblivious, Cognizant, Strong, VeryStrong };

ConditionKind condition_kind_from_name(const std::string& name);
std::string condition_kind_name(ConditionKind kind);

// A falsifying input law for the searched condition, with its gap in bits.
struct ConditionWitness {
    int nu1 = 1, nx1 = 1, nx2 = 1;
    std::vector<double> pU1X1;  // [u1][x1] joint (u1 trivial for the strength kinds)
    std::vector<double> pX2;    // [x2]
    double margin = 0.0;        // negative when the condition is violated
};

// Search outcome over the condition's quantified family. `violated == false`
// means not-falsified within the budget, the strongest positive verdict here.
struct ConditionVerdict {
    bool violated = false;
    double min_gap = 0.0;
    std::optional<ConditionWitness> witness;
};

// Multi-start projected descent on the defining gap; `budget` counts starts.
// Auxiliary cardinality for the partial-order kinds is |U1| = |X1|+1.
ConditionVerdict check_condition(ConditionKind kind, const DmBicChannel& ch, int budget,
                                 uint64_t seed = 1);

// The defining gap of the condition at one input law (used by the searcher and
// directly by tests).
double condition_gap(ConditionKind kind, const DmBicChannel& ch,
                     const std::vector<double>& pU1X1, int nu1,
                     const std::vector<double>& pX2);

}  // namespace bic::dm
