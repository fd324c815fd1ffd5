#include "bic/regions.hpp"

#include <algorithm>
#include <sstream>

namespace bic::dm {

RegionKind region_kind_from_name(const std::string& name)
{
    if (name == "THM1") return RegionKind::Thm1;
    if (name == "LEM1") return RegionKind::Lem1;
    if (name == "R1") return RegionKind::R1;
    if (name == "R2") return RegionKind::R2;
    if (name == "R1P") return RegionKind::R1P;
    if (name == "R2P") return RegionKind::R2P;
    if (name == "CAP_STRONG") return RegionKind::CapStrong;
    if (name == "CAP_VSTRONG") return RegionKind::CapVeryStrong;
    throw ValidationError("unknown region kind '" + name + "'");
}

std::string region_kind_name(RegionKind kind)
{
    switch (kind) {
        case RegionKind::Thm1: return "THM1";
        case RegionKind::Lem1: return "LEM1";
        case RegionKind::R1: return "R1";
        case RegionKind::R2: return "R2";
        case RegionKind::R1P: return "R1P";
        case RegionKind::R2P: return "R2P";
        case RegionKind::CapStrong: return "CAP_STRONG";
        case RegionKind::CapVeryStrong: return "CAP_VSTRONG";
    }
    return "?";
}

void MiTerm::canonicalize()
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    if (b < a)
        std::swap(a, b);  // I(A;B|C) = I(B;A|C)
}

bool MiTerm::operator<(const MiTerm& o) const
{
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

std::string MiTerm::str() const
{
    auto join = [](const VarSet& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + v[i];
        return s;
    };
    std::string s = "I(" + join(a) + ";" + join(b);
    if (!c.empty())
        s += "|" + join(c);
    return s + ")";
}

void MiExpr::canonicalize()
{
    for (auto& [k, t] : terms)
        t.canonicalize();
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    std::vector<std::pair<int, MiTerm>> merged;
    for (auto& [k, t] : terms) {
        if (!merged.empty() && merged.back().second == t)
            merged.back().first += k;
        else
            merged.emplace_back(k, t);
    }
    terms.clear();
    for (auto& [k, t] : merged)
        if (k != 0)
            terms.emplace_back(k, t);
}

std::string MiExpr::str() const
{
    if (terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, t] : terms) {
        if (k >= 0 && !first)
            out << " + ";
        if (k < 0)
            out << (first ? "-" : " - ");
        if (std::abs(k) != 1)
            out << std::abs(k) << "*";
        out << t.str();
        first = false;
    }
    return out.str();
}

MiExpr mi(const VarSet& a, const VarSet& b, const VarSet& c)
{
    MiExpr e;
    MiTerm t{a, b, c};
    t.canonicalize();
    e.terms.emplace_back(1, t);
    return e;
}

MiExpr operator+(MiExpr lhs, const MiExpr& rhs)
{
    for (const auto& t : rhs.terms)
        lhs.terms.push_back(t);
    lhs.canonicalize();
    return lhs;
}

MiExpr operator-(MiExpr lhs, const MiExpr& rhs)
{
    for (const auto& t : rhs.terms)
        lhs.terms.emplace_back(-t.first, t.second);
    lhs.canonicalize();
    return lhs;
}

namespace {

SymbolicIneq row(int r1, int r2, int r3, MiExpr rhs)
{
    SymbolicIneq s;
    s.r1 = r1;
    s.r2 = r2;
    s.r3 = r3;
    rhs.canonicalize();
    s.rhs = std::move(rhs);
    return s;
}

}  // namespace

SymbolicRegion region_spec(RegionKind kind)
{
    SymbolicRegion reg;
    switch (kind) {
        case RegionKind::Thm1:
        case RegionKind::Lem1: {
            MiExpr cover = mi({"V1"}, {"V2"}, {"U1", "Q"});
            reg.rows.push_back(row(1, 0, 0, mi({"V1"}, {"Y1"}, {"Q"})));
            reg.rows.push_back(row(0, 1, 0, mi({"V2"}, {"Y2"}, {"U2", "Q"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"}, {"Q"})));
            reg.rows.push_back(row(1, 1, 0,
                                   mi({"V1"}, {"Y1"}, {"U1", "Q"}) +
                                       mi({"V2"}, {"Y2"}, {"U2", "Q"}) - cover));
            reg.rows.push_back(row(1, 1, 0,
                                   mi({"V1"}, {"Y1"}, {"Q"}) +
                                       mi({"V2"}, {"Y2"}, {"U1", "U2", "Q"}) - cover));
            reg.rows.push_back(row(0, 1, 1,
                                   mi({"V2", "U2"}, {"Y2"}, {"Q"}) +
                                       mi({"X2"}, {"Y3"}, {"U2", "Q"})));
            reg.rows.push_back(row(1, 1, 1,
                                   mi({"V1"}, {"Y1"}, {"U1", "Q"}) +
                                       mi({"V2", "U2"}, {"Y2"}, {"Q"}) +
                                       mi({"X2"}, {"Y3"}, {"U2", "Q"}) - cover));
            reg.rows.push_back(row(1, 1, 1,
                                   mi({"V1"}, {"Y1"}, {"Q"}) +
                                       mi({"V2", "U2"}, {"Y2"}, {"U1", "Q"}) +
                                       mi({"X2"}, {"Y3"}, {"U2", "Q"}) - cover));
            if (kind == RegionKind::Lem1) {
                reg.rows.push_back(row(0, 0, 1,
                                       mi({"V2", "U2"}, {"Y2"}, {"U1", "Q"}) +
                                           mi({"X2"}, {"Y3"}, {"U2", "Q"})));
                reg.rows.push_back(row(0, 0, 1,
                                       mi({"V1"}, {"Y1"}, {"U1", "Q"}) +
                                           mi({"V2", "U2"}, {"Y2"}, {"U1", "Q"}) +
                                           mi({"X2"}, {"Y3"}, {"U2", "Q"}) - cover));
            }
            break;
        }
        case RegionKind::R1:
            reg.rows.push_back(row(1, 0, 0, mi({"U1"}, {"Y1"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"})));
            reg.rows.push_back(row(1, 1, 0,
                                   mi({"U1"}, {"Y1"}) + mi({"X1"}, {"Y2"}, {"U1", "U2"})));
            reg.rows.push_back(row(1, 1, 1,
                                   mi({"U1"}, {"Y1"}) + mi({"X1", "U2"}, {"Y2"}, {"U1"}) +
                                       mi({"X2"}, {"Y3"}, {"U2"})));
            break;
        case RegionKind::R2:
            reg.rows.push_back(row(0, 1, 0, mi({"U1"}, {"Y2"}, {"U2"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"})));
            reg.rows.push_back(row(1, 1, 0,
                                   mi({"X1"}, {"Y1"}, {"U1"}) + mi({"U1"}, {"Y2"}, {"U2"})));
            reg.rows.push_back(row(0, 1, 1,
                                   mi({"U1", "U2"}, {"Y2"}) + mi({"X2"}, {"Y3"}, {"U2"})));
            reg.rows.push_back(row(1, 1, 1,
                                   mi({"X1"}, {"Y1"}, {"U1"}) + mi({"U1", "U2"}, {"Y2"}) +
                                       mi({"X2"}, {"Y3"}, {"U2"})));
            break;
        case RegionKind::R1P:
            reg.rows.push_back(row(1, 0, 0, mi({"U1"}, {"Y1"})));
            reg.rows.push_back(row(0, 1, 0, mi({"X1"}, {"Y2"}, {"U1", "U2"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"})));
            reg.rows.push_back(row(0, 1, 1,
                                   mi({"X1", "U2"}, {"Y2"}, {"U1"}) +
                                       mi({"X2"}, {"Y3"}, {"U2"})));
            break;
        case RegionKind::R2P:
            reg.rows.push_back(row(1, 0, 0, mi({"X1"}, {"Y1"}, {"U1"})));
            reg.rows.push_back(row(0, 1, 0, mi({"U1"}, {"Y2"}, {"U2"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"})));
            reg.rows.push_back(row(0, 1, 1,
                                   mi({"U1", "U2"}, {"Y2"}) + mi({"X2"}, {"Y3"}, {"U2"})));
            break;
        case RegionKind::CapStrong:
            reg.rows.push_back(row(1, 0, 0, mi({"U1"}, {"Y1"})));
            reg.rows.push_back(row(0, 1, 0, mi({"X1"}, {"Y2"}, {"U1", "X2"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"})));
            reg.rows.push_back(row(0, 1, 1, mi({"X1", "X2"}, {"Y2"}, {"U1"})));
            break;
        case RegionKind::CapVeryStrong:
            reg.rows.push_back(row(1, 0, 0, mi({"X1"}, {"Y1"}, {"U1"})));
            reg.rows.push_back(row(0, 1, 0, mi({"U1"}, {"Y2"}, {"X2"})));
            reg.rows.push_back(row(0, 0, 1, mi({"X2"}, {"Y3"})));
            break;
    }
    return reg;
}

namespace {

VarSet map_set(const VarSet& in, const std::set<std::string>& constants,
               const std::map<std::string, std::string>& renames)
{
    VarSet out;
    for (const auto& v : in) {
        std::string name = v;
        auto it = renames.find(name);
        if (it != renames.end())
            name = it->second;
        if (constants.count(name))
            continue;  // I(.;.|const) = I(.;.)
        if (std::find(out.begin(), out.end(), name) == out.end())
            out.push_back(name);
    }
    return out;
}

}  // namespace

SymbolicRegion reduce_region(const SymbolicRegion& region,
                             const std::set<std::string>& constants,
                             const std::map<std::string, std::string>& renames)
{
    SymbolicRegion out;
    for (const auto& r : region.rows) {
        SymbolicIneq nr;
        nr.r1 = r.r1;
        nr.r2 = r.r2;
        nr.r3 = r.r3;
        for (const auto& [k, t] : r.rhs.terms) {
            MiTerm nt;
            nt.a = map_set(t.a, constants, renames);
            nt.b = map_set(t.b, constants, renames);
            nt.c = map_set(t.c, constants, renames);
            if (nt.a.empty() || nt.b.empty())
                continue;  // I(const;.) = 0
            nr.rhs.terms.emplace_back(k, nt);
        }
        nr.rhs.canonicalize();
        out.rows.push_back(std::move(nr));
    }
    return out;
}

SymbolicRegion region_face(const SymbolicRegion& region, int rate)
{
    SymbolicRegion out;
    for (const auto& r : region.rows) {
        SymbolicIneq nr = r;
        if (rate == 1) nr.r1 = 0;
        if (rate == 2) nr.r2 = 0;
        if (rate == 3) nr.r3 = 0;
        if (nr.r1 == 0 && nr.r2 == 0 && nr.r3 == 0)
            continue;
        out.rows.push_back(std::move(nr));
    }
    return out;
}

bool same_region(const SymbolicRegion& a, const SymbolicRegion& b)
{
    auto keys = [](const SymbolicRegion& reg) {
        std::vector<std::string> out;
        for (auto r : reg.rows) {
            r.rhs.canonicalize();
            std::ostringstream key;
            key << r.r1 << '|' << r.r2 << '|' << r.r3 << '|' << r.rhs.str();
            out.push_back(key.str());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };
    return keys(a) == keys(b);
}

double eval_mi_expr(const JointPmf& joint, const MiExpr& expr)
{
    double v = 0.0;
    for (const auto& [k, t] : expr.terms)
        v += k * mutual_info(joint, t.a, t.b, t.c);
    return v;
}

namespace {

RegionEval eval_region_on_joint(RegionKind kind, const JointPmf& joint)
{
    SymbolicRegion spec = region_spec(kind);
    RegionEval out;
    out.sys = poly::LinSystem({"R1", "R2", "R3"});
    out.sys.set_nonneg("R1");
    out.sys.set_nonneg("R2");
    out.sys.set_nonneg("R3");
    for (const auto& r : spec.rows) {
        std::map<std::string, Rat> lhs;
        if (r.r1) lhs["R1"] = r.r1;
        if (r.r2) lhs["R2"] = r.r2;
        if (r.r3) lhs["R3"] = r.r3;
        out.sys.add(lhs, poly::Sense::Le, rat_from_double(eval_mi_expr(joint, r.rhs)));
    }
    if (kind == RegionKind::Lem1) {
        MiExpr margin = mi({"V1"}, {"Y1"}, {"U1", "Q"}) +
                        mi({"V2"}, {"Y2"}, {"U1", "U2", "Q"}) -
                        mi({"V1"}, {"V2"}, {"U1", "Q"});
        out.eq11_margin = eval_mi_expr(joint, margin);
        out.achievable_as_is = out.eq11_margin >= -1e-12;
    }
    return out;
}

}  // namespace

RegionEval eval_dm_region(RegionKind kind, const DmBicChannel& ch, const FactoredInput& in)
{
    if (kind != RegionKind::Thm1 && kind != RegionKind::Lem1)
        throw ValidationError(region_kind_name(kind) + " expects a superposition-only input");
    return eval_region_on_joint(kind, joint_from_factored(ch, in));
}

RegionEval eval_dm_region(RegionKind kind, const DmBicChannel& ch, const SimpleInput& in)
{
    if (kind == RegionKind::Thm1 || kind == RegionKind::Lem1)
        throw ValidationError(region_kind_name(kind) + " expects a factored input");
    return eval_region_on_joint(kind, joint_from_factored(ch, in));
}

}  // namespace bic::dm
