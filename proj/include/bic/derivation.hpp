#pragma once

#include "bic/channel.hpp"
#include "bic/linsys.hpp"
#include "bic/oracle.hpp"

#include <optional>

namespace bic::dm {

// The raw split-rate constraint system: receiver 1/2/3 decoding bounds, the
// mutual-covering bound on the bin rates (kept as >=), the splitting
// identities tying R1,R2,R3 to the split rates, and nonnegativity.
poly::LinSystem appendix_raw_system(const DmBicChannel& ch, const FactoredInput& in);

// Same law with the private-message pair collapsed onto the cloud center
// (v1 = v2 = u1), the repair used when the covering margin is negative.
FactoredInput replacement_law(const FactoredInput& in);

struct DeriveReport {
    double eq11_margin = 0.0;
    bool eq11_holds = false;
    poly::LinSystem raw;
    poly::LinSystem projected;                    // split rates eliminated
    std::optional<poly::LinSystem> lemma;         // compact system, when eq11 holds
    std::optional<oracle::McCompareResult> compare;
    std::optional<poly::LinSystem> replacement;   // repair region otherwise
    bool projection_equal = false;
};

// Builds the raw system, eliminates all eight split rates exactly, and checks
// by Monte-Carlo sampling that the projection matches the compact system.
DeriveReport derive_theorem1(const DmBicChannel& ch, const FactoredInput& in, int samples,
                             double tol = 1e-9, uint64_t mc_seed = 7);

}  // namespace bic::dm
