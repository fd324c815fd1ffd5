#pragma once

#include "bic/channel.hpp"
#include "bic/linsys.hpp"
#include "bic/rng.hpp"

#include <optional>

namespace bic::oracle {

// Seed plus alphabet sizes plus a Dirichlet concentration; one spec, one
// instance, bit-for-bit.
struct InstanceSpec {
    uint64_t seed = 0;
    int nq = 1, nu1 = 2, nv1 = 2, nv2 = 2, nu2 = 2;
    int nx1 = 2, nx2 = 2, ny1 = 2, ny2 = 2, ny3 = 2;
    double density = 1.0;
};

dm::DmBicChannel random_channel(const InstanceSpec& spec);
dm::SimpleInput random_simple_input(const InstanceSpec& spec);
dm::FactoredInput random_factored_input(const InstanceSpec& spec);

// Receiver 2 a further-degraded receiver 1 given X2; implies the
// interference-cognizant ordering by construction.
std::pair<dm::DmBicChannel, dm::SimpleInput> random_cognizant_instance(const InstanceSpec& spec);
// Y2 = (Z,T) with Z from X1 and T from X2, Y1 a degraded Z; implies the
// interference-oblivious ordering by construction.
std::pair<dm::DmBicChannel, dm::SimpleInput> random_oblivious_instance(const InstanceSpec& spec);

// Exhaustive d-subset linear solves with full-system membership filtering.
// Double-precision pipeline, deliberately disjoint from the exact main path.
std::vector<poly::RatePoint> brute_vertices(const poly::LinSystem& sys);

struct McCompareResult {
    bool subset_ab = true;  // no sampled point fell in A and solidly outside B
    bool subset_ba = true;
    std::optional<poly::RatePoint> witness;
    int witness_in = 0;  // 1: point in A only, 2: point in B only
};

// Samples n points in a shared bounding box (per-variable maxima, inflated
// 10%); any point classified inside exactly one region becomes a witness.
McCompareResult mc_region_equal(const poly::LinSystem& a, const poly::LinSystem& b, int n,
                                double tol, uint64_t seed);

// max c.x over {rows, x >= 0 flags}; nullopt when unbounded.
// Small dense two-phase simplex used only inside this module.
std::optional<double> simplex_max(const poly::LinSystem& sys, const std::vector<double>& obj);

}  // namespace bic::oracle
