#pragma once

#include "bic/channel.hpp"
#include "bic/linsys.hpp"

#include <map>
#include <set>

namespace bic::dm {

enum class RegionKind {
    Thm1,           // splitting + superposition + binning
    Lem1,           // Thm1 plus the two extra R3 rows, gated by the covering margin
    R1,             // splitting + superposition, receiver 2 less noisy treating interference as noise
    R2,             // splitting + superposition, receiver 1 less noisy given the interference
    R1P,            // superposition only, cloud carries receiver 1
    R2P,            // superposition only, cloud carries receiver 2
    CapStrong,      // capacity form under strong interference
    CapVeryStrong,  // capacity form under very strong interference
};

RegionKind region_kind_from_name(const std::string& name);
std::string region_kind_name(RegionKind kind);

// One signed conditional mutual information atom I(a;b|c), canonicalized.
struct MiTerm {
    VarSet a, b, c;
    void canonicalize();
    bool operator==(const MiTerm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const MiTerm& o) const;
    std::string str() const;
};

struct MiExpr {
    std::vector<std::pair<int, MiTerm>> terms;
    void canonicalize();
    std::string str() const;
};

MiExpr mi(const VarSet& a, const VarSet& b, const VarSet& c = {});
MiExpr operator+(MiExpr lhs, const MiExpr& rhs);
MiExpr operator-(MiExpr lhs, const MiExpr& rhs);

struct SymbolicIneq {
    int r1 = 0, r2 = 0, r3 = 0;  // lhs rate coefficients
    MiExpr rhs;
};

struct SymbolicRegion {
    std::vector<SymbolicIneq> rows;
};

// The literal inequality list of the cited result.
SymbolicRegion region_spec(RegionKind kind);

// Symbolic substitution: listed variables become constants, renames identify
// variables. Atoms collapse by I(.;.|const)=I(.;.) and I(const;.)=0 only.
SymbolicRegion reduce_region(const SymbolicRegion& region,
                             const std::set<std::string>& constants,
                             const std::map<std::string, std::string>& renames);

// Intersection with {rate = 0}: that rate's coefficient is dropped; rows whose
// lhs becomes empty are removed.
SymbolicRegion region_face(const SymbolicRegion& region, int rate /*1..3*/);

// Equality as canonical row sets (after per-row canonicalization and dedupe).
bool same_region(const SymbolicRegion& a, const SymbolicRegion& b);

double eval_mi_expr(const JointPmf& joint, const MiExpr& expr);

struct RegionEval {
    poly::LinSystem sys;           // over R1,R2,R3, nonneg flagged
    double eq11_margin = 0.0;      // covering-bound margin, Lem1 only
    bool achievable_as_is = true;  // false when that margin is negative
};

RegionEval eval_dm_region(RegionKind kind, const DmBicChannel& ch, const FactoredInput& in);
RegionEval eval_dm_region(RegionKind kind, const DmBicChannel& ch, const SimpleInput& in);

}  // namespace bic::dm
