#include "bic/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bic::dm {

JointPmf::JointPmf(std::vector<std::string> names, std::vector<int> cards)
    : vars(std::move(names)), card(std::move(cards))
{
    if (vars.size() != card.size())
        throw ValidationError("variable/cardinality count mismatch");
    size_t n = 1;
    for (int c : card) {
        if (c <= 0)
            throw ValidationError("cardinalities must be positive");
        n *= static_cast<size_t>(c);
    }
    p.assign(n, 0.0);
}

int JointPmf::index_of(const std::string& name) const
{
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

double JointPmf::total() const
{
    return std::accumulate(p.begin(), p.end(), 0.0);
}

size_t JointPmf::flat(const std::vector<int>& symbols) const
{
    size_t idx = 0;
    for (size_t j = 0; j < vars.size(); ++j)
        idx = idx * static_cast<size_t>(card[j]) + static_cast<size_t>(symbols[j]);
    return idx;
}

void JointPmf::unflatten(size_t idx, std::vector<int>& symbols) const
{
    symbols.resize(vars.size());
    for (size_t j = vars.size(); j-- > 0;) {
        symbols[j] = static_cast<int>(idx % static_cast<size_t>(card[j]));
        idx /= static_cast<size_t>(card[j]);
    }
}

namespace {

struct GroupIndexer {
    std::vector<int> positions;  // variable positions within the joint
    std::vector<size_t> sizes;
    size_t size = 1;

    size_t key(const std::vector<int>& symbols) const
    {
        size_t k = 0;
        for (size_t i = 0; i < positions.size(); ++i)
            k = k * sizes[i] + static_cast<size_t>(symbols[static_cast<size_t>(positions[i])]);
        return k;
    }
};

GroupIndexer make_group(const JointPmf& joint, const VarSet& names)
{
    GroupIndexer g;
    for (const auto& n : names) {
        int pos = joint.index_of(n);
        if (pos < 0)
            throw ValidationError("unknown joint variable '" + n + "'");
        g.positions.push_back(pos);
        g.sizes.push_back(static_cast<size_t>(joint.card[static_cast<size_t>(pos)]));
        g.size *= g.sizes.back();
    }
    return g;
}

}  // namespace

double mutual_info(const JointPmf& joint, const VarSet& a, const VarSet& b, const VarSet& c)
{
    for (const auto& x : a)
        for (const auto& y : b)
            if (x == y)
                throw ValidationError("variable sets must be disjoint: " + x);
    for (const auto& z : c) {
        for (const auto& x : a)
            if (x == z)
                throw ValidationError("variable sets must be disjoint: " + z);
        for (const auto& y : b)
            if (y == z)
                throw ValidationError("variable sets must be disjoint: " + z);
    }

    GroupIndexer ga = make_group(joint, a);
    GroupIndexer gb = make_group(joint, b);
    GroupIndexer gc = make_group(joint, c);

    std::vector<double> pabc(ga.size * gb.size * gc.size, 0.0);
    std::vector<double> pac(ga.size * gc.size, 0.0);
    std::vector<double> pbc(gb.size * gc.size, 0.0);
    std::vector<double> pc(gc.size, 0.0);

    std::vector<int> symbols;
    for (size_t idx = 0; idx < joint.p.size(); ++idx) {
        double w = joint.p[idx];
        if (w == 0.0)
            continue;
        joint.unflatten(idx, symbols);
        size_t ka = ga.key(symbols), kb = gb.key(symbols), kc = gc.key(symbols);
        pabc[(ka * gb.size + kb) * gc.size + kc] += w;
        pac[ka * gc.size + kc] += w;
        pbc[kb * gc.size + kc] += w;
        pc[kc] += w;
    }

    double info = 0.0;
    for (size_t ka = 0; ka < ga.size; ++ka)
        for (size_t kb = 0; kb < gb.size; ++kb)
            for (size_t kc = 0; kc < gc.size; ++kc) {
                double w = pabc[(ka * gb.size + kb) * gc.size + kc];
                if (w <= 0.0)
                    continue;
                info += w * std::log2(w * pc[kc] /
                                      (pac[ka * gc.size + kc] * pbc[kb * gc.size + kc]));
            }
    if (info < 0.0 && info > -1e-10)
        info = 0.0;
    return info;
}

}  // namespace bic::dm
