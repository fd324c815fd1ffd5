#pragma once

#include "bic/channel.hpp"
#include "bic/dexp.hpp"
#include "bic/linsys.hpp"

#include <optional>

namespace bic::dm {

// The four indicator substitutions used to dominate the extra extreme points:
// collapse an auxiliary to a constant, or tie the cloud center to X1.
enum class DominatingConstruction { U1Phi, U2Phi, U1PhiU2Phi, U1EqX1U2Phi };

SimpleInput derive_dominating_input(DominatingConstruction c, const SimpleInput& in);

struct EquivPointCheck {
    size_t input_index = 0;
    poly::RatePoint point;
    bool dominated = false;
    // single dominating point when one suffices; otherwise the hull did it
    std::optional<poly::RatePoint> witness;
};

struct EquivReport {
    std::vector<EquivPointCheck> checks;
    int failures = 0;
};

// For each input law P: every extreme point of the splitting region must be
// dominated (within tol) by the hull over the superposition-only extreme
// points of P and its four derived dominating inputs.
EquivReport verify_equivalence(int i, const DmBicChannel& ch,
                               const std::vector<SimpleInput>& inputs, double tol);

// Merged auxiliary law (U_Q, Q): branch alphabets concatenated, branch weights
// lambda and 1-lambda.
SimpleInput merge_timeshare(const SimpleInput& a, const SimpleInput& b, double lambda);

struct TimeshareCheck {
    poly::RatePoint point;
    bool contained = false;
};

struct TimeshareReport {
    std::vector<TimeshareCheck> checks;
    int failures = 0;
};

// Time-sharing closure: lambda-combinations of the two regions' extreme points
// land inside the region evaluated at the merged law.
TimeshareReport verify_timesharing_closure(int i, const DmBicChannel& ch,
                                           const SimpleInput& a, const SimpleInput& b,
                                           double lambda, double tol = 1e-9);

}  // namespace bic::dm
