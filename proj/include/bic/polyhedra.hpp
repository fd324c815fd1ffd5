#pragma once

#include "bic/linsys.hpp"

#include <optional>
#include <vector>

namespace bic::poly {

// Orthogonal projection: removes `var`, preserving the feasible set over the
// remaining variables. Exact rational arithmetic; >=-rows participate as
// written. Nonneg flags on retained variables survive; the eliminated
// variable's flag joins the elimination as a lower bound.
LinSystem fme_eliminate(const LinSystem& sys, const std::string& var);

// Feasibility by eliminating every variable and checking the constant rows.
bool feasible(const LinSystem& sys);

struct Extremum {
    enum Kind { Finite, Unbounded, Infeasible } kind = Infeasible;
    Rat value;  // meaningful when Finite
};

// Exact sup of `objective . x` over the system (FME on an auxiliary variable).
Extremum maximize(const LinSystem& sys, const std::vector<Rat>& objective);
Extremum minimize(const LinSystem& sys, const std::vector<Rat>& objective);

// Same feasible set, no inequality implied by the others. Each removal is
// certified by an exact per-inequality optimization subproblem.
// Throws ValidationError on an infeasible system.
LinSystem remove_redundant(const LinSystem& sys);

// All extreme points of a bounded system of dimension <= 4: solutions of d x d
// active-constraint subsets that satisfy every inequality, deduplicated at
// 1e-9. Throws ValidationError naming an unbounded direction.
std::vector<RatePoint> enumerate_vertices(const LinSystem& sys);

// Subset with no element dominated (componentwise <=) by a distinct element;
// exact duplicates are kept once.
std::vector<RatePoint> pareto_filter(const std::vector<RatePoint>& pts);

// Every inequality (and nonneg flag) holds within additive tol.
bool contains(const LinSystem& sys, const RatePoint& p, double tol);
bool contains_exact(const LinSystem& sys, const std::vector<Rat>& p);

// Upper-right Pareto frontier of the convex hull of all points in `curves`,
// sorted by first coordinate. Input points must be 2-D.
std::vector<RatePoint> union_hull_2d(const std::vector<std::vector<RatePoint>>& curves);

// True when some convex combination of `pts` dominates `p` within tol
// (exact feasibility check over the combination weights).
bool dominated_by_hull(const RatePoint& p, const std::vector<RatePoint>& pts, double tol);

}  // namespace bic::poly
