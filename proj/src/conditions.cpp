#include "bic/conditions.hpp"

#include "bic/rng.hpp"

#include <algorithm>
#include <cmath>

namespace bic::dm {

ConditionKind condition_kind_from_name(const std::string& name)
{
    if (name == "oblivious") return ConditionKind::Oblivious;
    if (name == "cognizant") return ConditionKind::Cognizant;
    if (name == "strong") return ConditionKind::Strong;
    if (name == "very_strong") return ConditionKind::VeryStrong;
    throw ValidationError("unknown condition '" + name + "'");
}

std::string condition_kind_name(ConditionKind kind)
{
    switch (kind) {
        case ConditionKind::Oblivious: return "oblivious";
        case ConditionKind::Cognizant: return "cognizant";
        case ConditionKind::Strong: return "strong";
        case ConditionKind::VeryStrong: return "very_strong";
    }
    return "?";
}

namespace {

JointPmf law_joint(const DmBicChannel& ch, const std::vector<double>& pU1X1, int nu1,
                   const std::vector<double>& pX2)
{
    JointPmf joint({"U1", "X1", "X2", "Y1", "Y2", "Y3"},
                   {nu1, ch.nx1, ch.nx2, ch.ny1, ch.ny2, ch.ny3});
    std::vector<int> s(6);
    for (int u1 = 0; u1 < nu1; ++u1)
        for (int x1 = 0; x1 < ch.nx1; ++x1) {
            double w0 = pU1X1[static_cast<size_t>(u1 * ch.nx1 + x1)];
            if (w0 <= 0.0)
                continue;
            for (int x2 = 0; x2 < ch.nx2; ++x2) {
                double w1 = w0 * pX2[static_cast<size_t>(x2)];
                if (w1 <= 0.0)
                    continue;
                for (int y1 = 0; y1 < ch.ny1; ++y1)
                    for (int y2 = 0; y2 < ch.ny2; ++y2)
                        for (int y3 = 0; y3 < ch.ny3; ++y3) {
                            double w = w1 * ch.at1(y1, x1) * ch.at2(y2, x1, x2) *
                                       ch.at3(y3, x2);
                            if (w <= 0.0)
                                continue;
                            s = {u1, x1, x2, y1, y2, y3};
                            joint.p[joint.flat(s)] += w;
                        }
            }
        }
    return joint;
}

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& x, size_t begin, size_t count)
{
    std::vector<double> u(x.begin() + static_cast<long>(begin),
                          x.begin() + static_cast<long>(begin + count));
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0.0, theta = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        css += u[i];
        double t = (css - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0)
            theta = t;
    }
    for (size_t i = 0; i < count; ++i)
        x[begin + i] = std::max(x[begin + i] - theta, 0.0);
}

}  // namespace

double condition_gap(ConditionKind kind, const DmBicChannel& ch,
                     const std::vector<double>& pU1X1, int nu1,
                     const std::vector<double>& pX2)
{
    JointPmf joint = law_joint(ch, pU1X1, nu1, pX2);
    switch (kind) {
        case ConditionKind::Oblivious:
            return mutual_info(joint, {"U1"}, {"Y2"}) - mutual_info(joint, {"U1"}, {"Y1"});
        case ConditionKind::Cognizant:
            return mutual_info(joint, {"U1"}, {"Y1"}) -
                   mutual_info(joint, {"U1"}, {"Y2"}, {"X2"});
        case ConditionKind::Strong:
            return mutual_info(joint, {"X2"}, {"Y2"}, {"X1"}) -
                   mutual_info(joint, {"X2"}, {"Y3"});
        case ConditionKind::VeryStrong:
            return mutual_info(joint, {"X2"}, {"Y2"}) - mutual_info(joint, {"X2"}, {"Y3"});
    }
    return 0.0;
}

ConditionVerdict check_condition(ConditionKind kind, const DmBicChannel& ch, int budget,
                                 uint64_t seed)
{
    if (budget < 1)
        throw ValidationError("budget must be >= 1");
    ch.validate();

    bool joint_family = kind == ConditionKind::Oblivious || kind == ConditionKind::Cognizant;
    int nu1 = joint_family ? ch.nx1 + 1 : 1;
    size_t na = static_cast<size_t>(nu1 * ch.nx1);
    size_t nb = static_cast<size_t>(ch.nx2);

    auto gap_of = [&](const std::vector<double>& theta) {
        std::vector<double> a(theta.begin(), theta.begin() + static_cast<long>(na));
        std::vector<double> b(theta.begin() + static_cast<long>(na), theta.end());
        return condition_gap(kind, ch, a, nu1, b);
    };

    std::vector<double> best_theta;
    double best_gap = 0.0;
    bool have_best = false;

    for (int start = 0; start < budget; ++start) {
        Rng rng(seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(start));
        std::vector<double> theta(na + nb);
        if (start == 0) {
            // identity-style corner: U1 follows X1 uniformly
            std::fill(theta.begin(), theta.end(), 0.0);
            for (int x1 = 0; x1 < ch.nx1; ++x1)
                theta[static_cast<size_t>(x1 * ch.nx1 + x1)] = 1.0 / ch.nx1;
            for (size_t i = 0; i < nb; ++i)
                theta[na + i] = 1.0 / static_cast<double>(nb);
        } else if (start == 1) {
            std::fill(theta.begin(), theta.begin() + static_cast<long>(na),
                      1.0 / static_cast<double>(na));
            for (size_t i = 0; i < nb; ++i)
                theta[na + i] = 1.0 / static_cast<double>(nb);
        } else {
            auto a = rng.simplex(na);
            auto b = rng.simplex(nb);
            std::copy(a.begin(), a.end(), theta.begin());
            std::copy(b.begin(), b.end(), theta.begin() + static_cast<long>(na));
        }

        double f = gap_of(theta);
        double eta = 0.25;
        for (int iter = 0; iter < 120; ++iter) {
            std::vector<double> grad(theta.size());
            const double h = 1e-6;
            for (size_t j = 0; j < theta.size(); ++j) {
                std::vector<double> lo = theta, hi = theta;
                hi[j] += h;
                lo[j] = std::max(lo[j] - h, 0.0);
                double span = hi[j] - lo[j];
                grad[j] = span > 0.0 ? (gap_of(hi) - gap_of(lo)) / span : 0.0;
            }
            bool improved = false;
            for (int bt = 0; bt < 12; ++bt) {
                std::vector<double> cand = theta;
                for (size_t j = 0; j < cand.size(); ++j)
                    cand[j] -= eta * grad[j];
                project_simplex(cand, 0, na);
                project_simplex(cand, na, nb);
                double fc = gap_of(cand);
                if (fc < f - 1e-14) {
                    theta = std::move(cand);
                    f = fc;
                    eta *= 1.3;
                    improved = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!improved)
                break;
        }
        if (!have_best || f < best_gap) {
            best_gap = f;
            best_theta = theta;
            have_best = true;
        }
        if (best_gap < -1e-6)
            break;  // solidly falsified; no need to burn the rest of the budget
    }

    ConditionVerdict verdict;
    verdict.min_gap = best_gap;
    verdict.violated = best_gap < -1e-10;
    if (verdict.violated) {
        ConditionWitness w;
        w.nu1 = nu1;
        w.nx1 = ch.nx1;
        w.nx2 = ch.nx2;
        w.pU1X1.assign(best_theta.begin(), best_theta.begin() + static_cast<long>(na));
        w.pX2.assign(best_theta.begin() + static_cast<long>(na), best_theta.end());
        w.margin = best_gap;
        verdict.witness = std::move(w);
    }
    return verdict;
}

}  // namespace bic::dm
