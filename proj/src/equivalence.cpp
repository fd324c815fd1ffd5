#include "bic/equivalence.hpp"

#include "bic/polyhedra.hpp"
#include "bic/regions.hpp"

#include <cmath>

namespace bic::dm {

namespace {

SimpleInput collapse_u1(const SimpleInput& in)
{
    SimpleInput out = in;
    out.nu1 = 1;
    out.pU1 = {1.0};
    out.pX1.assign(static_cast<size_t>(in.nx1), 0.0);
    for (int x1 = 0; x1 < in.nx1; ++x1) {
        double m = 0.0;
        for (int u1 = 0; u1 < in.nu1; ++u1)
            m += in.u1_at(u1) * in.x1_at(x1, u1);
        out.pX1[static_cast<size_t>(x1)] = m;
    }
    return out;
}

SimpleInput collapse_u2(const SimpleInput& in)
{
    SimpleInput out = in;
    out.nu2 = 1;
    out.pU2 = {1.0};
    out.pX2.assign(static_cast<size_t>(in.nx2), 0.0);
    for (int x2 = 0; x2 < in.nx2; ++x2) {
        double m = 0.0;
        for (int u2 = 0; u2 < in.nu2; ++u2)
            m += in.u2_at(u2) * in.x2_at(x2, u2);
        out.pX2[static_cast<size_t>(x2)] = m;
    }
    return out;
}

SimpleInput tie_u1_to_x1(const SimpleInput& in)
{
    SimpleInput out = in;
    out.nu1 = in.nx1;
    out.pU1.assign(static_cast<size_t>(in.nx1), 0.0);
    for (int x1 = 0; x1 < in.nx1; ++x1) {
        double m = 0.0;
        for (int u1 = 0; u1 < in.nu1; ++u1)
            m += in.u1_at(u1) * in.x1_at(x1, u1);
        out.pU1[static_cast<size_t>(x1)] = m;
    }
    out.pX1.assign(static_cast<size_t>(in.nx1 * in.nx1), 0.0);
    for (int x1 = 0; x1 < in.nx1; ++x1)
        out.pX1[static_cast<size_t>(x1 * in.nx1 + x1)] = 1.0;
    return out;
}

}  // namespace

SimpleInput derive_dominating_input(DominatingConstruction c, const SimpleInput& in)
{
    in.validate();
    switch (c) {
        case DominatingConstruction::U1Phi:
            return collapse_u1(in);
        case DominatingConstruction::U2Phi:
            return collapse_u2(in);
        case DominatingConstruction::U1PhiU2Phi:
            return collapse_u2(collapse_u1(in));
        case DominatingConstruction::U1EqX1U2Phi:
            return collapse_u2(tie_u1_to_x1(in));
    }
    throw ValidationError("unknown dominating construction");
}

EquivReport verify_equivalence(int i, const DmBicChannel& ch,
                               const std::vector<SimpleInput>& inputs, double tol)
{
    if (i != 1 && i != 2)
        throw ValidationError("receiver index must be 1 or 2");
    DexpKind split_kind = i == 1 ? DexpKind::L5 : DexpKind::L3;
    DexpKind super_kind = i == 1 ? DexpKind::L6 : DexpKind::L4;

    EquivReport report;
    for (size_t idx = 0; idx < inputs.size(); ++idx) {
        const SimpleInput& in = inputs[idx];
        auto targets = dexp_formula(split_kind, ch, in);

        std::vector<poly::RatePoint> pool = dexp_formula(super_kind, ch, in);
        for (auto c : {DominatingConstruction::U1Phi, DominatingConstruction::U2Phi,
                       DominatingConstruction::U1PhiU2Phi,
                       DominatingConstruction::U1EqX1U2Phi}) {
            auto pts = dexp_formula(super_kind, ch, derive_dominating_input(c, in));
            pool.insert(pool.end(), pts.begin(), pts.end());
        }

        for (const auto& t : targets) {
            EquivPointCheck check;
            check.input_index = idx;
            check.point = t;
            check.dominated = poly::dominated_by_hull(t, pool, tol);
            if (check.dominated) {
                for (const auto& s : pool) {
                    bool dom = true;
                    for (size_t j = 0; j < t.dim(); ++j)
                        if (s.coords[j] + tol < t.coords[j]) {
                            dom = false;
                            break;
                        }
                    if (dom) {
                        check.witness = s;
                        break;
                    }
                }
            } else {
                ++report.failures;
            }
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

SimpleInput merge_timeshare(const SimpleInput& a, const SimpleInput& b, double lambda)
{
    a.validate();
    b.validate();
    if (a.nx1 != b.nx1 || a.nx2 != b.nx2)
        throw ValidationError("time-shared inputs must share X alphabets");
    if (lambda < 0.0 || lambda > 1.0)
        throw ValidationError("lambda must lie in [0,1]");

    SimpleInput out;
    out.nx1 = a.nx1;
    out.nx2 = a.nx2;
    out.nu1 = a.nu1 + b.nu1;
    out.nu2 = a.nu2 + b.nu2;
    out.pU1.resize(static_cast<size_t>(out.nu1));
    out.pX1.assign(static_cast<size_t>(out.nx1 * out.nu1), 0.0);
    out.pU2.resize(static_cast<size_t>(out.nu2));
    out.pX2.assign(static_cast<size_t>(out.nx2 * out.nu2), 0.0);

    for (int u = 0; u < a.nu1; ++u) {
        out.pU1[static_cast<size_t>(u)] = lambda * a.u1_at(u);
        for (int x = 0; x < out.nx1; ++x)
            out.pX1[static_cast<size_t>(x * out.nu1 + u)] = a.x1_at(x, u);
    }
    for (int u = 0; u < b.nu1; ++u) {
        out.pU1[static_cast<size_t>(a.nu1 + u)] = (1.0 - lambda) * b.u1_at(u);
        for (int x = 0; x < out.nx1; ++x)
            out.pX1[static_cast<size_t>(x * out.nu1 + a.nu1 + u)] = b.x1_at(x, u);
    }
    for (int u = 0; u < a.nu2; ++u) {
        out.pU2[static_cast<size_t>(u)] = lambda * a.u2_at(u);
        for (int x = 0; x < out.nx2; ++x)
            out.pX2[static_cast<size_t>(x * out.nu2 + u)] = a.x2_at(x, u);
    }
    for (int u = 0; u < b.nu2; ++u) {
        out.pU2[static_cast<size_t>(a.nu2 + u)] = (1.0 - lambda) * b.u2_at(u);
        for (int x = 0; x < out.nx2; ++x)
            out.pX2[static_cast<size_t>(x * out.nu2 + a.nu2 + u)] = b.x2_at(x, u);
    }
    return out;
}

TimeshareReport verify_timesharing_closure(int i, const DmBicChannel& ch,
                                           const SimpleInput& a, const SimpleInput& b,
                                           double lambda, double tol)
{
    if (i != 1 && i != 2)
        throw ValidationError("receiver index must be 1 or 2");
    RegionKind region = i == 1 ? RegionKind::R1 : RegionKind::R2;
    DexpKind kind = i == 1 ? DexpKind::L5 : DexpKind::L3;

    SimpleInput merged = merge_timeshare(a, b, lambda);
    poly::LinSystem merged_sys = eval_dm_region(region, ch, merged).sys;
    auto pts_a = dexp_formula(kind, ch, a);
    auto pts_b = dexp_formula(kind, ch, b);

    TimeshareReport report;
    for (const auto& pa : pts_a)
        for (const auto& pb : pts_b) {
            TimeshareCheck check;
            check.point.coords.resize(3);
            for (size_t j = 0; j < 3; ++j)
                check.point.coords[j] = lambda * pa[j] + (1.0 - lambda) * pb[j];
            check.contained = poly::contains(merged_sys, check.point, tol);
            if (!check.contained)
                ++report.failures;
            report.checks.push_back(std::move(check));
        }
    return report;
}

}  // namespace bic::dm
