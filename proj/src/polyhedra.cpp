#include "bic/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace bic::poly {

namespace {

// Rows in <=-form used by the elimination kernel.
struct Row {
    std::vector<Rat> coef;
    Rat rhs;
};

Row to_le(const LinIneq& in)
{
    Row r;
    r.coef = in.coef;
    r.rhs = in.rhs;
    if (in.sense == Sense::Ge) {
        for (auto& c : r.coef)
            c = -c;
        r.rhs = -r.rhs;
    }
    return r;
}

// Scale so entries are coprime integers; positive scaling keeps the sense.
void normalize(Row& r)
{
    Int lcm_den = 1;
    for (const auto& c : r.coef)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(r.rhs));
    Int gcd_num = 0;
    auto fold = [&](const Rat& c) {
        Int n = numerator(c) * (lcm_den / denominator(c));
        gcd_num = boost::multiprecision::gcd(gcd_num, abs(n));
    };
    for (const auto& c : r.coef)
        fold(c);
    fold(r.rhs);
    if (gcd_num == 0)
        gcd_num = 1;
    Rat scale(lcm_den, gcd_num);
    for (auto& c : r.coef)
        c *= scale;
    r.rhs *= scale;
}

std::string row_key(const Row& r)
{
    std::ostringstream key;
    for (const auto& c : r.coef)
        key << rat_str(c) << '|';
    key << '#' << rat_str(r.rhs);
    return key.str();
}

bool all_zero(const std::vector<Rat>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

std::vector<Row> gather_rows(const LinSystem& sys)
{
    std::vector<Row> rows;
    for (const auto& in : sys.ineqs())
        rows.push_back(to_le(in));
    for (size_t j = 0; j < sys.vars().size(); ++j) {
        if (!sys.nonneg()[j])
            continue;
        Row r;
        r.coef.assign(sys.vars().size(), Rat(0));
        r.coef[j] = -1;  // -x_j <= 0
        r.rhs = 0;
        rows.push_back(std::move(r));
    }
    return rows;
}

// Eliminates column k from <=-rows; emits rows over the remaining columns.
std::vector<Row> eliminate_column(const std::vector<Row>& rows, size_t k)
{
    std::vector<const Row*> uppers, lowers;
    std::vector<Row> out;
    std::set<std::string> seen;
    auto push = [&](Row r) {
        r.coef.erase(r.coef.begin() + static_cast<long>(k));
        if (all_zero(r.coef)) {
            if (r.rhs >= 0)
                return;          // vacuous
            r.rhs = -1;          // canonical infeasibility marker
        }
        normalize(r);
        if (seen.insert(row_key(r)).second)
            out.push_back(std::move(r));
    };

    for (const auto& r : rows) {
        if (r.coef[k] > 0)
            uppers.push_back(&r);
        else if (r.coef[k] < 0)
            lowers.push_back(&r);
        else
            push(r);
    }
    for (const Row* lo : lowers) {
        for (const Row* up : uppers) {
            Rat a = up->coef[k];  // > 0
            Rat b = -lo->coef[k]; // > 0
            Row combo;
            combo.coef.resize(rows.front().coef.size());
            for (size_t j = 0; j < combo.coef.size(); ++j)
                combo.coef[j] = b * up->coef[j] + a * lo->coef[j];
            combo.rhs = b * up->rhs + a * lo->rhs;
            push(std::move(combo));
        }
    }
    return out;
}

LinSystem rows_to_system(const std::vector<std::string>& vars, const std::vector<bool>& nonneg,
                         const std::vector<Row>& rows)
{
    LinSystem out(vars);
    for (size_t j = 0; j < vars.size(); ++j)
        if (nonneg[j])
            out.set_nonneg(vars[j]);
    for (const auto& r : rows) {
        LinIneq in;
        in.coef = r.coef;
        in.sense = Sense::Le;
        in.rhs = r.rhs;
        out.add_row(std::move(in));
    }
    return out;
}

// Greedy order: next column with the fewest lower*upper pairings.
size_t cheapest_column(const std::vector<Row>& rows, const std::vector<bool>& eligible)
{
    size_t best = eligible.size();
    long best_cost = -1;
    for (size_t k = 0; k < eligible.size(); ++k) {
        if (!eligible[k])
            continue;
        long lo = 0, up = 0;
        for (const auto& r : rows) {
            if (r.coef[k] > 0)
                ++up;
            else if (r.coef[k] < 0)
                ++lo;
        }
        long cost = lo * up - (lo + up);
        if (best == eligible.size() || cost < best_cost) {
            best = k;
            best_cost = cost;
        }
    }
    return best;
}

// Eliminates all flagged columns; returns surviving rows over kept columns.
std::vector<Row> eliminate_columns(std::vector<Row> rows, std::vector<bool> drop)
{
    size_t remaining = static_cast<size_t>(std::count(drop.begin(), drop.end(), true));
    while (remaining-- > 0) {
        size_t k = cheapest_column(rows, drop);
        rows = eliminate_column(rows, k);
        drop.erase(drop.begin() + static_cast<long>(k));
        if (rows.empty() && remaining > 0) {
            // no constraints left; remaining eliminations are trivial
            std::vector<Row> none;
            return none;
        }
    }
    return rows;
}

bool rows_consistent(const std::vector<Row>& rows)
{
    for (const auto& r : rows)
        if (all_zero(r.coef) && r.rhs < 0)
            return false;
    return true;
}

}  // namespace

LinSystem fme_eliminate(const LinSystem& sys, const std::string& var)
{
    int k = sys.var_index(var);
    if (k < 0)
        throw ValidationError("unknown variable '" + var + "'");
    auto rows = gather_rows(sys);
    auto out_rows = eliminate_column(rows, static_cast<size_t>(k));

    std::vector<std::string> kept_vars;
    std::vector<bool> kept_nonneg;
    for (size_t j = 0; j < sys.vars().size(); ++j) {
        if (static_cast<int>(j) == k)
            continue;
        kept_vars.push_back(sys.vars()[j]);
        kept_nonneg.push_back(sys.nonneg()[j]);
    }
    // nonneg rows of retained vars were materialized into `rows`; avoid
    // duplicating them next to the surviving flags
    std::vector<Row> filtered;
    for (auto& r : out_rows) {
        bool is_flagged_nonneg = false;
        int nz = -1;
        int count = 0;
        for (size_t j = 0; j < r.coef.size(); ++j)
            if (r.coef[j] != 0) {
                ++count;
                nz = static_cast<int>(j);
            }
        if (count == 1 && r.rhs == 0 && r.coef[static_cast<size_t>(nz)] < 0 &&
            kept_nonneg[static_cast<size_t>(nz)])
            is_flagged_nonneg = true;
        if (!is_flagged_nonneg)
            filtered.push_back(std::move(r));
    }
    return rows_to_system(kept_vars, kept_nonneg, filtered);
}

bool feasible(const LinSystem& sys)
{
    auto rows = gather_rows(sys);
    std::vector<bool> drop(sys.vars().size(), true);
    auto left = eliminate_columns(std::move(rows), std::move(drop));
    return rows_consistent(left);
}

Extremum maximize(const LinSystem& sys, const std::vector<Rat>& objective)
{
    if (objective.size() != sys.vars().size())
        throw ValidationError("objective width does not match variable count");
    auto rows = gather_rows(sys);
    size_t n = sys.vars().size();
    // append column for t, constrain t == objective . x
    for (auto& r : rows)
        r.coef.push_back(Rat(0));
    Row up, lo;
    up.coef.assign(n + 1, Rat(0));
    for (size_t j = 0; j < n; ++j)
        up.coef[j] = -objective[j];
    up.coef[n] = 1;
    up.rhs = 0;          //  t - obj.x <= 0
    lo.coef = up.coef;
    for (auto& c : lo.coef)
        c = -c;
    lo.rhs = 0;          // -t + obj.x <= 0
    rows.push_back(up);
    rows.push_back(lo);

    std::vector<bool> drop(n + 1, true);
    drop[n] = false;
    auto left = eliminate_columns(std::move(rows), std::move(drop));
    if (!rows_consistent(left))
        return {Extremum::Infeasible, Rat(0)};

    bool has_upper = false;
    Rat best;
    for (const auto& r : left) {
        if (r.coef[0] <= 0)
            continue;  // lower bound on t or constant
        Rat bound = r.rhs / r.coef[0];
        if (!has_upper || bound < best) {
            best = bound;
            has_upper = true;
        }
    }
    if (!has_upper)
        return {Extremum::Unbounded, Rat(0)};
    return {Extremum::Finite, best};
}

Extremum minimize(const LinSystem& sys, const std::vector<Rat>& objective)
{
    std::vector<Rat> neg(objective.size());
    for (size_t j = 0; j < objective.size(); ++j)
        neg[j] = -objective[j];
    Extremum m = maximize(sys, neg);
    if (m.kind == Extremum::Finite)
        m.value = -m.value;
    return m;
}

LinSystem remove_redundant(const LinSystem& sys)
{
    if (!feasible(sys))
        throw ValidationError("infeasible system");
    LinSystem out(sys.vars());
    for (size_t j = 0; j < sys.vars().size(); ++j)
        if (sys.nonneg()[j])
            out.set_nonneg(sys.vars()[j]);

    std::vector<LinIneq> kept = sys.ineqs();
    for (size_t i = 0; i < kept.size();) {
        LinSystem context(sys.vars());
        for (size_t j = 0; j < sys.vars().size(); ++j)
            if (sys.nonneg()[j])
                context.set_nonneg(sys.vars()[j]);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i)
                context.add_row(kept[j]);

        const LinIneq& row = kept[i];
        bool redundant = false;
        if (row.sense == Sense::Le) {
            Extremum m = maximize(context, row.coef);
            redundant = m.kind == Extremum::Finite && m.value <= row.rhs;
        } else {
            Extremum m = minimize(context, row.coef);
            redundant = m.kind == Extremum::Finite && m.value >= row.rhs;
        }
        if (redundant)
            kept.erase(kept.begin() + static_cast<long>(i));
        else
            ++i;
    }
    for (auto& row : kept)
        out.add_row(std::move(row));
    return out;
}

namespace {

// Exact solve of the d x d system given by `active` rows taken with equality.
// Returns nullopt when singular.
std::optional<std::vector<Rat>> solve_active(const std::vector<Row>& rows,
                                             const std::vector<size_t>& active)
{
    size_t d = active.size();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j)
            m[i][j] = rows[active[i]].coef[j];
        m[i][d] = rows[active[i]].rhs;
    }
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        while (piv < d && m[piv][col] == 0)
            ++piv;
        if (piv == d)
            return std::nullopt;
        std::swap(m[col], m[piv]);
        for (size_t i = 0; i < d; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            Rat f = m[i][col] / m[col][col];
            for (size_t j = col; j <= d; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> x(d);
    for (size_t i = 0; i < d; ++i)
        x[i] = m[i][d] / m[i][i];
    return x;
}

}  // namespace

std::vector<RatePoint> enumerate_vertices(const LinSystem& sys)
{
    size_t d = sys.vars().size();
    if (d == 0 || d > 4)
        throw ValidationError("vertex enumeration supports dimensions 1..4");

    for (size_t j = 0; j < d; ++j) {
        std::vector<Rat> e(d, Rat(0));
        e[j] = 1;
        if (maximize(sys, e).kind == Extremum::Unbounded)
            throw ValidationError("unbounded direction: +" + sys.vars()[j]);
        if (minimize(sys, e).kind == Extremum::Unbounded)
            throw ValidationError("unbounded direction: -" + sys.vars()[j]);
    }

    auto rows = gather_rows(sys);
    size_t m = rows.size();
    std::vector<RatePoint> found;
    std::vector<size_t> idx(d);
    auto consider = [&](const std::vector<size_t>& active) {
        auto x = solve_active(rows, active);
        if (!x)
            return;
        for (const auto& r : rows) {
            Rat lhs = 0;
            for (size_t j = 0; j < d; ++j)
                lhs += r.coef[j] * (*x)[j];
            if (lhs > r.rhs)
                return;
        }
        RatePoint p;
        p.coords.resize(d);
        for (size_t j = 0; j < d; ++j)
            p.coords[j] = rat_to_double((*x)[j]);
        for (const auto& q : found) {
            double err = 0;
            for (size_t j = 0; j < d; ++j)
                err = std::max(err, std::abs(q.coords[j] - p.coords[j]));
            if (err <= 1e-9)
                return;
        }
        found.push_back(std::move(p));
    };

    // iterate over all d-subsets of rows
    std::vector<size_t> comb(d);
    auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
        if (depth == d) {
            consider(comb);
            return;
        }
        for (size_t i = start; i + (d - depth) <= m; ++i) {
            comb[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    if (m >= d)
        rec(rec, 0, 0);
    return found;
}

std::vector<RatePoint> pareto_filter(const std::vector<RatePoint>& pts)
{
    if (pts.empty())
        return {};
    size_t d = pts.front().dim();
    for (const auto& p : pts)
        if (p.dim() != d)
            throw ValidationError("mixed point dimensions");

    std::vector<RatePoint> unique;
    for (const auto& p : pts)
        if (std::find(unique.begin(), unique.end(), p) == unique.end())
            unique.push_back(p);

    std::vector<RatePoint> out;
    for (const auto& p : unique) {
        bool dominated = false;
        for (const auto& q : unique) {
            if (&p == &q || p == q)
                continue;
            bool le = true;
            for (size_t j = 0; j < d; ++j)
                if (p.coords[j] > q.coords[j]) {
                    le = false;
                    break;
                }
            if (le) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

bool contains(const LinSystem& sys, const RatePoint& p, double tol)
{
    if (p.dim() != sys.vars().size())
        throw ValidationError("point dimension does not match system");
    for (size_t j = 0; j < p.dim(); ++j)
        if (sys.nonneg()[j] && p.coords[j] < -tol)
            return false;
    for (const auto& row : sys.ineqs()) {
        double lhs = 0;
        for (size_t j = 0; j < p.dim(); ++j)
            lhs += rat_to_double(row.coef[j]) * p.coords[j];
        double rhs = rat_to_double(row.rhs);
        if (row.sense == Sense::Le ? lhs > rhs + tol : lhs < rhs - tol)
            return false;
    }
    return true;
}

bool contains_exact(const LinSystem& sys, const std::vector<Rat>& p)
{
    if (p.size() != sys.vars().size())
        throw ValidationError("point dimension does not match system");
    for (size_t j = 0; j < p.size(); ++j)
        if (sys.nonneg()[j] && p[j] < 0)
            return false;
    for (const auto& row : sys.ineqs()) {
        Rat lhs = 0;
        for (size_t j = 0; j < p.size(); ++j)
            lhs += row.coef[j] * p[j];
        if (row.sense == Sense::Le ? lhs > row.rhs : lhs < row.rhs)
            return false;
    }
    return true;
}

std::vector<RatePoint> union_hull_2d(const std::vector<std::vector<RatePoint>>& curves)
{
    std::vector<RatePoint> pts;
    for (const auto& c : curves)
        for (const auto& p : c) {
            if (p.dim() != 2)
                throw ValidationError("union_hull_2d expects 2-D points");
            pts.push_back(p);
        }
    if (pts.empty())
        throw ValidationError("union_hull_2d on empty input");

    std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // upper hull, left to right; collinear interior points dropped
    auto cross = [](const RatePoint& o, const RatePoint& a, const RatePoint& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<RatePoint> upper;
    for (const auto& p : pts) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), p) >= 0)
            upper.pop_back();
        upper.push_back(p);
    }

    // Pareto-maximal arc: from the last highest vertex to the rightmost
    size_t start = 0;
    for (size_t i = 1; i < upper.size(); ++i)
        if (upper[i][1] >= upper[start][1])
            start = i;
    return std::vector<RatePoint>(upper.begin() + static_cast<long>(start), upper.end());
}

bool dominated_by_hull(const RatePoint& p, const std::vector<RatePoint>& pts, double tol)
{
    if (pts.empty())
        return false;
    size_t d = p.dim();
    auto cands = pareto_filter(pts);
    for (const auto& s : cands) {
        bool dom = true;
        for (size_t j = 0; j < d; ++j)
            if (s.coords[j] + tol < p.coords[j]) {
                dom = false;
                break;
            }
        if (dom)
            return true;
    }

    // weights lam_i >= 0, sum lam = 1, sum lam_i s_i >= p - tol
    std::vector<std::string> names;
    for (size_t i = 0; i < cands.size(); ++i)
        names.push_back("l" + std::to_string(i));
    LinSystem lp(names);
    for (const auto& n : names)
        lp.set_nonneg(n);
    std::map<std::string, Rat> ones;
    for (const auto& n : names)
        ones[n] = 1;
    lp.add(ones, Sense::Le, Rat(1));
    lp.add(ones, Sense::Ge, Rat(1));
    for (size_t j = 0; j < d; ++j) {
        std::map<std::string, Rat> row;
        for (size_t i = 0; i < cands.size(); ++i)
            row[names[i]] = rat_from_double(cands[i].coords[j]);
        lp.add(row, Sense::Ge, rat_from_double(p.coords[j] - tol));
    }
    return feasible(lp);
}

}  // namespace bic::poly
