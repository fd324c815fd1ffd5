#include "bic/dexp.hpp"

#include <algorithm>
#include <cmath>

namespace bic::dm {

DexpKind dexp_kind_from_name(const std::string& name)
{
    if (name == "L3") return DexpKind::L3;
    if (name == "L4") return DexpKind::L4;
    if (name == "L5") return DexpKind::L5;
    if (name == "L6") return DexpKind::L6;
    throw ValidationError("unknown dexp kind '" + name + "'");
}

namespace {

double pos(double x) { return std::max(x, 0.0); }

std::vector<poly::RatePoint> dedupe(std::vector<poly::RatePoint> pts)
{
    std::vector<poly::RatePoint> out;
    for (auto& p : pts) {
        bool dup = false;
        for (const auto& q : out) {
            double err = 0.0;
            for (size_t j = 0; j < p.dim(); ++j)
                err = std::max(err, std::abs(p[j] - q[j]));
            if (err <= 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup)
            out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<poly::RatePoint> dexp_formula(DexpKind kind, const JointPmf& joint)
{
    auto I = [&](const VarSet& a, const VarSet& b, const VarSet& c = {}) {
        return mutual_info(joint, a, b, c);
    };
    std::vector<poly::RatePoint> pts;

    if (kind == DexpKind::L3 || kind == DexpKind::L4) {
        double x1y1_u1 = I({"X1"}, {"Y1"}, {"U1"});
        double u1y2_u2 = I({"U1"}, {"Y2"}, {"U2"});
        double x2y3 = I({"X2"}, {"Y3"});
        double u2y2 = I({"U2"}, {"Y2"});
        double x2y3_u2 = I({"X2"}, {"Y3"}, {"U2"});
        double u1u2y2 = I({"U1", "U2"}, {"Y2"});
        double u2y3 = I({"U2"}, {"Y3"});

        poly::RatePoint A{x1y1_u1, u1y2_u2, std::min(x2y3, u2y2 + x2y3_u2)};
        poly::RatePoint B{x1y1_u1, std::min(u1y2_u2, pos(u1u2y2 - u2y3)),
                          x2y3_u2 + std::min(u2y3, u1u2y2)};
        pts.push_back(A);
        pts.push_back(B);
        if (kind == DexpKind::L3) {
            poly::RatePoint C{x1y1_u1 + std::min(u1y2_u2, pos(u1u2y2 - u2y3)), 0.0,
                              x2y3_u2 + std::min(u2y3, u1u2y2)};
            poly::RatePoint D{x1y1_u1 + u1y2_u2, 0.0, std::min(x2y3, u2y2 + x2y3_u2)};
            pts.push_back(C);
            pts.push_back(D);
        }
    } else {
        double u1y1 = I({"U1"}, {"Y1"});
        double x1y2_u1u2 = I({"X1"}, {"Y2"}, {"U1", "U2"});
        double u2y2_u1 = I({"U2"}, {"Y2"}, {"U1"});
        double x1u2y2_u1 = I({"X1", "U2"}, {"Y2"}, {"U1"});
        double x2y3 = I({"X2"}, {"Y3"});
        double x2y3_u2 = I({"X2"}, {"Y3"}, {"U2"});
        double u2y3 = I({"U2"}, {"Y3"});

        poly::RatePoint E{u1y1, x1y2_u1u2, std::min(x2y3, u2y2_u1 + x2y3_u2)};
        poly::RatePoint F{u1y1, std::min(x1y2_u1u2, pos(x1u2y2_u1 - u2y3)),
                          x2y3_u2 + std::min(u2y3, x1u2y2_u1)};
        pts.push_back(E);
        pts.push_back(F);
        if (kind == DexpKind::L5) {
            poly::RatePoint G{0.0, u1y1 + x1y2_u1u2, std::min(x2y3, u2y2_u1 + x2y3_u2)};
            pts.push_back(G);
            if (u2y3 <= u1y1 + x1u2y2_u1) {
                poly::RatePoint H{0.0, u1y1 + x1y2_u1u2 + std::min(0.0, u2y2_u1 - u2y3),
                                  x2y3};
                poly::RatePoint Ipt{u1y1 + std::min(0.0, x1u2y2_u1 - u2y3),
                                    pos(x1y2_u1u2 + std::min(0.0, u2y2_u1 - u2y3)), x2y3};
                pts.push_back(H);
                pts.push_back(Ipt);
            } else {
                poly::RatePoint J{0.0, 0.0, u1y1 + x1u2y2_u1 + x2y3_u2};
                pts.push_back(J);
            }
        }
    }
    return dedupe(std::move(pts));
}

std::vector<poly::RatePoint> dexp_formula(DexpKind kind, const DmBicChannel& ch,
                                          const SimpleInput& in)
{
    return dexp_formula(kind, joint_from_factored(ch, in));
}

}  // namespace bic::dm
