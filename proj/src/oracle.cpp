#include "bic/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace bic::oracle {

namespace {

constexpr double kEps = 1e-9;

// Dense two-phase primal simplex on  max c.z  s.t.  A z <= b, z >= 0.
// Returns nullopt when unbounded; throws ValidationError when infeasible.
std::optional<double> simplex_core(std::vector<std::vector<double>> a, std::vector<double> b,
                                   std::vector<double> c)
{
    size_t m = a.size();
    size_t n = c.size();
    size_t art = 0;
    for (double bi : b)
        if (bi < 0.0)
            ++art;

    size_t cols = n + m + art;  // structurals, slacks, artificials
    std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
    std::vector<size_t> basis(m);
    size_t next_art = n + m;
    for (size_t i = 0; i < m; ++i) {
        double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (size_t j = 0; j < n; ++j)
            t[i][j] = sign * a[i][j];
        t[i][n + i] = sign;  // slack
        t[i][cols] = sign * b[i];
        if (sign < 0.0) {
            t[i][next_art] = 1.0;
            basis[i] = next_art++;
        } else {
            basis[i] = n + i;
        }
    }

    auto run = [&](const std::vector<double>& obj) -> std::optional<double> {
        std::vector<double> red(cols, 0.0);
        double value = 0.0;
        for (size_t j = 0; j < cols; ++j)
            red[j] = obj[j];
        for (size_t i = 0; i < m; ++i) {
            if (obj[basis[i]] == 0.0)
                continue;
            double w = obj[basis[i]];
            for (size_t j = 0; j < cols; ++j)
                red[j] -= w * t[i][j];
            value -= w * t[i][cols];
        }
        for (;;) {
            size_t enter = cols;
            for (size_t j = 0; j < cols; ++j)
                if (red[j] > kEps) {  // Bland: first improving column
                    enter = j;
                    break;
                }
            if (enter == cols)
                return -value;  // optimum of max => recover sign below
            size_t leave = m;
            double best = 0.0;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= kEps)
                    continue;
                double ratio = t[i][cols] / t[i][enter];
                if (leave == m || ratio < best - 1e-12 ||
                    (std::abs(ratio - best) <= 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m)
                return std::nullopt;  // unbounded
            double piv = t[leave][enter];
            for (size_t j = 0; j <= cols; ++j)
                t[leave][j] /= piv;
            for (size_t i = 0; i < m; ++i) {
                if (i == leave || t[i][enter] == 0.0)
                    continue;
                double w = t[i][enter];
                for (size_t j = 0; j <= cols; ++j)
                    t[i][j] -= w * t[leave][j];
            }
            double w = red[enter];
            for (size_t j = 0; j < cols; ++j)
                red[j] -= w * t[leave][j];
            value -= w * t[leave][cols];
            basis[leave] = enter;
        }
    };

    if (art > 0) {
        std::vector<double> phase1(cols, 0.0);
        for (size_t j = n + m; j < cols; ++j)
            phase1[j] = -1.0;  // max -(sum of artificials)
        auto r = run(phase1);
        if (!r || *r < -1e-7)
            throw ValidationError("infeasible system");
        // drive leftover artificials out of the basis where possible
        for (size_t i = 0; i < m; ++i) {
            if (basis[i] < n + m)
                continue;
            size_t enter = cols;
            for (size_t j = 0; j < n + m; ++j)
                if (std::abs(t[i][j]) > kEps) {
                    enter = j;
                    break;
                }
            if (enter == cols)
                continue;  // redundant row
            double piv = t[i][enter];
            for (size_t j = 0; j <= cols; ++j)
                t[i][j] /= piv;
            for (size_t k = 0; k < m; ++k) {
                if (k == i || t[k][enter] == 0.0)
                    continue;
                double w = t[k][enter];
                for (size_t j = 0; j <= cols; ++j)
                    t[k][j] -= w * t[i][j];
            }
            basis[i] = enter;
        }
        for (auto& row : t)
            for (size_t j = n + m; j < cols; ++j)
                row[j] = 0.0;
    }

    std::vector<double> phase2(cols, 0.0);
    for (size_t j = 0; j < n; ++j)
        phase2[j] = c[j];
    auto r = run(phase2);
    if (!r)
        return std::nullopt;
    return *r;
}

struct LeRows {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    std::vector<bool> nonneg;
};

LeRows le_rows(const poly::LinSystem& sys)
{
    LeRows out;
    size_t d = sys.vars().size();
    out.nonneg = sys.nonneg();
    for (const auto& row : sys.ineqs()) {
        std::vector<double> coef(d);
        double sign = row.sense == poly::Sense::Le ? 1.0 : -1.0;
        for (size_t j = 0; j < d; ++j)
            coef[j] = sign * rat_to_double(row.coef[j]);
        out.a.push_back(std::move(coef));
        out.b.push_back(sign * rat_to_double(row.rhs));
    }
    return out;
}

}  // namespace

std::optional<double> simplex_max(const poly::LinSystem& sys, const std::vector<double>& obj)
{
    if (obj.size() != sys.vars().size())
        throw ValidationError("objective width does not match variable count");
    LeRows rows = le_rows(sys);
    size_t d = obj.size();

    // split unconstrained variables: x_j = x+_j - x-_j
    std::vector<size_t> neg_col(d, SIZE_MAX);
    size_t n = d;
    for (size_t j = 0; j < d; ++j)
        if (!rows.nonneg[j])
            neg_col[j] = n++;
    std::vector<std::vector<double>> a;
    for (const auto& r : rows.a) {
        std::vector<double> row(n, 0.0);
        for (size_t j = 0; j < d; ++j) {
            row[j] = r[j];
            if (neg_col[j] != SIZE_MAX)
                row[neg_col[j]] = -r[j];
        }
        a.push_back(std::move(row));
    }
    std::vector<double> c(n, 0.0);
    for (size_t j = 0; j < d; ++j) {
        c[j] = obj[j];
        if (neg_col[j] != SIZE_MAX)
            c[neg_col[j]] = -obj[j];
    }
    return simplex_core(std::move(a), rows.b, std::move(c));
}

std::vector<poly::RatePoint> brute_vertices(const poly::LinSystem& sys)
{
    size_t d = sys.vars().size();
    if (d == 0 || d > 4)
        throw ValidationError("vertex enumeration supports dimensions 1..4");

    for (size_t j = 0; j < d; ++j) {
        std::vector<double> e(d, 0.0);
        e[j] = 1.0;
        if (!simplex_max(sys, e))
            throw ValidationError("unbounded direction: +" + sys.vars()[j]);
        e[j] = -1.0;
        if (!simplex_max(sys, e))
            throw ValidationError("unbounded direction: -" + sys.vars()[j]);
    }

    LeRows rows = le_rows(sys);
    for (size_t j = 0; j < d; ++j) {
        if (!rows.nonneg[j])
            continue;
        std::vector<double> flag(d, 0.0);
        flag[j] = -1.0;
        rows.a.push_back(std::move(flag));
        rows.b.push_back(0.0);
    }
    size_t m = rows.a.size();

    std::vector<poly::RatePoint> found;
    std::vector<size_t> comb(d);
    auto consider = [&]() {
        // solve the active set as equalities by Gaussian elimination
        std::vector<std::vector<double>> mat(d, std::vector<double>(d + 1));
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = 0; j < d; ++j)
                mat[i][j] = rows.a[comb[i]][j];
            mat[i][d] = rows.b[comb[i]];
        }
        for (size_t col = 0; col < d; ++col) {
            size_t piv = col;
            for (size_t i = col + 1; i < d; ++i)
                if (std::abs(mat[i][col]) > std::abs(mat[piv][col]))
                    piv = i;
            if (std::abs(mat[piv][col]) < 1e-10)
                return;  // singular active set
            std::swap(mat[col], mat[piv]);
            for (size_t i = 0; i < d; ++i) {
                if (i == col)
                    continue;
                double f = mat[i][col] / mat[col][col];
                if (f == 0.0)
                    continue;
                for (size_t j = col; j <= d; ++j)
                    mat[i][j] -= f * mat[col][j];
            }
        }
        poly::RatePoint p;
        p.coords.resize(d);
        for (size_t j = 0; j < d; ++j)
            p.coords[j] = mat[j][d] / mat[j][j];
        for (size_t i = 0; i < m; ++i) {
            double lhs = 0.0;
            for (size_t j = 0; j < d; ++j)
                lhs += rows.a[i][j] * p.coords[j];
            if (lhs > rows.b[i] + 1e-9)
                return;
        }
        for (const auto& q : found) {
            double err = 0.0;
            for (size_t j = 0; j < d; ++j)
                err = std::max(err, std::abs(q.coords[j] - p.coords[j]));
            if (err <= 1e-9)
                return;
        }
        found.push_back(std::move(p));
    };
    auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
        if (depth == d) {
            consider();
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

McCompareResult mc_region_equal(const poly::LinSystem& a, const poly::LinSystem& b, int n,
                                double tol, uint64_t seed)
{
    if (a.vars() != b.vars())
        throw ValidationError("region comparison needs identical variable lists");
    size_t d = a.vars().size();

    std::vector<double> box(d);
    for (size_t j = 0; j < d; ++j) {
        std::vector<double> e(d, 0.0);
        e[j] = 1.0;
        auto ma = simplex_max(a, e);
        auto mb = simplex_max(b, e);
        if (!ma || !mb)
            throw ValidationError("unbounded region in comparison");
        box[j] = 1.1 * std::max({*ma, *mb, 1e-6});
    }

    auto margin = [&](const poly::LinSystem& sys, const poly::RatePoint& p) {
        double m = 1e300;
        for (size_t j = 0; j < d; ++j)
            if (sys.nonneg()[j])
                m = std::min(m, p.coords[j]);
        for (const auto& row : sys.ineqs()) {
            double lhs = 0.0;
            for (size_t j = 0; j < d; ++j)
                lhs += rat_to_double(row.coef[j]) * p.coords[j];
            double slack = rat_to_double(row.rhs) - lhs;
            if (row.sense == poly::Sense::Ge)
                slack = -slack;
            m = std::min(m, slack);
        }
        return m;
    };

    Rng rng(seed);
    McCompareResult res;
    for (int k = 0; k < n; ++k) {
        poly::RatePoint p;
        p.coords.resize(d);
        for (size_t j = 0; j < d; ++j)
            p.coords[j] = box[j] * rng.u01();
        double ma = margin(a, p);
        double mb = margin(b, p);
        if (ma > tol && mb < -tol && res.subset_ab) {
            res.subset_ab = false;
            if (!res.witness) {
                res.witness = p;
                res.witness_in = 1;
            }
        } else if (mb > tol && ma < -tol && res.subset_ba) {
            res.subset_ba = false;
            if (!res.witness) {
                res.witness = p;
                res.witness_in = 2;
            }
        }
        if (!res.subset_ab && !res.subset_ba)
            break;
    }
    return res;
}

namespace {

std::vector<double> conditional_table(Rng& rng, int nout, int nin, double density)
{
    // [out][in] with each column a pmf
    std::vector<double> t(static_cast<size_t>(nout * nin));
    for (int i = 0; i < nin; ++i) {
        auto col = rng.simplex(static_cast<size_t>(nout), density);
        for (int o = 0; o < nout; ++o)
            t[static_cast<size_t>(o * nin + i)] = col[static_cast<size_t>(o)];
    }
    return t;
}

}  // namespace

dm::DmBicChannel random_channel(const InstanceSpec& spec)
{
    Rng rng(spec.seed ^ 0xc8a5d5b1c3a5f0d1ull);
    dm::DmBicChannel ch;
    ch.nx1 = spec.nx1;
    ch.nx2 = spec.nx2;
    ch.ny1 = spec.ny1;
    ch.ny2 = spec.ny2;
    ch.ny3 = spec.ny3;
    ch.p1 = conditional_table(rng, spec.ny1, spec.nx1, spec.density);
    ch.p2 = conditional_table(rng, spec.ny2, spec.nx1 * spec.nx2, spec.density);
    ch.p3 = conditional_table(rng, spec.ny3, spec.nx2, spec.density);
    ch.validate();
    return ch;
}

dm::SimpleInput random_simple_input(const InstanceSpec& spec)
{
    Rng rng(spec.seed ^ 0x5851f42d4c957f2dull);
    dm::SimpleInput in;
    in.nu1 = spec.nu1;
    in.nx1 = spec.nx1;
    in.nu2 = spec.nu2;
    in.nx2 = spec.nx2;
    in.pU1 = rng.simplex(static_cast<size_t>(spec.nu1), spec.density);
    in.pX1 = conditional_table(rng, spec.nx1, spec.nu1, spec.density);
    in.pU2 = rng.simplex(static_cast<size_t>(spec.nu2), spec.density);
    in.pX2 = conditional_table(rng, spec.nx2, spec.nu2, spec.density);
    in.validate();
    return in;
}

dm::FactoredInput random_factored_input(const InstanceSpec& spec)
{
    Rng rng(spec.seed ^ 0x94d049bb133111ebull);
    dm::FactoredInput in;
    in.nq = spec.nq;
    in.nu1 = spec.nu1;
    in.nv1 = spec.nv1;
    in.nv2 = spec.nv2;
    in.nu2 = spec.nu2;
    in.nx1 = spec.nx1;
    in.nx2 = spec.nx2;
    in.pQ = rng.simplex(static_cast<size_t>(spec.nq), spec.density);
    in.pU1 = conditional_table(rng, spec.nu1, spec.nq, spec.density);
    in.pV1V2 = conditional_table(rng, spec.nv1 * spec.nv2, spec.nu1 * spec.nq, spec.density);
    in.pU2 = conditional_table(rng, spec.nu2, spec.nq, spec.density);
    in.pX2 = conditional_table(rng, spec.nx2, spec.nu2 * spec.nq, spec.density);
    in.f.resize(static_cast<size_t>(spec.nu1 * spec.nv1 * spec.nv2));
    for (auto& v : in.f)
        v = static_cast<int>(rng.u01() * spec.nx1) % spec.nx1;
    in.validate();
    return in;
}

std::pair<dm::DmBicChannel, dm::SimpleInput> random_cognizant_instance(const InstanceSpec& spec)
{
    Rng rng(spec.seed ^ 0xdeadbeefcafef00dull);
    dm::DmBicChannel ch;
    ch.nx1 = spec.nx1;
    ch.nx2 = spec.nx2;
    ch.ny1 = spec.ny1;
    ch.ny2 = spec.ny2;
    ch.ny3 = spec.ny3;
    ch.p1 = conditional_table(rng, spec.ny1, spec.nx1, spec.density);
    // degradation kernel y1 -> y2 conditioned on x2
    std::vector<double> k = conditional_table(rng, spec.ny2, spec.ny1 * spec.nx2, spec.density);
    ch.p2.assign(static_cast<size_t>(spec.ny2 * spec.nx1 * spec.nx2), 0.0);
    for (int y2 = 0; y2 < spec.ny2; ++y2)
        for (int x1 = 0; x1 < spec.nx1; ++x1)
            for (int x2 = 0; x2 < spec.nx2; ++x2) {
                double sum = 0.0;
                for (int y1 = 0; y1 < spec.ny1; ++y1)
                    sum += ch.at1(y1, x1) *
                           k[static_cast<size_t>(y2 * spec.ny1 * spec.nx2 + y1 * spec.nx2 + x2)];
                ch.p2[static_cast<size_t>((y2 * spec.nx1 + x1) * spec.nx2 + x2)] = sum;
            }
    ch.p3 = conditional_table(rng, spec.ny3, spec.nx2, spec.density);
    ch.validate();
    return {ch, random_simple_input(spec)};
}

std::pair<dm::DmBicChannel, dm::SimpleInput> random_oblivious_instance(const InstanceSpec& spec)
{
    Rng rng(spec.seed ^ 0x0b1ce7e55e11f00dull);
    const int nz = 2, nt = 2;
    dm::DmBicChannel ch;
    ch.nx1 = spec.nx1;
    ch.nx2 = spec.nx2;
    ch.ny1 = spec.ny1;
    ch.ny2 = nz * nt;  // Y2 = (Z, T)
    ch.ny3 = spec.ny3;

    std::vector<double> pz = conditional_table(rng, nz, spec.nx1, spec.density);
    std::vector<double> pt = conditional_table(rng, nt, spec.nx2, spec.density);
    std::vector<double> deg = conditional_table(rng, spec.ny1, nz, spec.density);

    ch.p1.assign(static_cast<size_t>(spec.ny1 * spec.nx1), 0.0);
    for (int y1 = 0; y1 < spec.ny1; ++y1)
        for (int x1 = 0; x1 < spec.nx1; ++x1) {
            double sum = 0.0;
            for (int z = 0; z < nz; ++z)
                sum += deg[static_cast<size_t>(y1 * nz + z)] *
                       pz[static_cast<size_t>(z * spec.nx1 + x1)];
            ch.p1[static_cast<size_t>(y1 * spec.nx1 + x1)] = sum;
        }
    ch.p2.assign(static_cast<size_t>(ch.ny2 * spec.nx1 * spec.nx2), 0.0);
    for (int z = 0; z < nz; ++z)
        for (int t = 0; t < nt; ++t)
            for (int x1 = 0; x1 < spec.nx1; ++x1)
                for (int x2 = 0; x2 < spec.nx2; ++x2) {
                    int y2 = z * nt + t;
                    ch.p2[static_cast<size_t>((y2 * spec.nx1 + x1) * spec.nx2 + x2)] =
                        pz[static_cast<size_t>(z * spec.nx1 + x1)] *
                        pt[static_cast<size_t>(t * spec.nx2 + x2)];
                }
    ch.p3 = conditional_table(rng, spec.ny3, spec.nx2, spec.density);
    ch.validate();
    return {ch, random_simple_input(spec)};
}

}  // namespace bic::oracle
