#pragma once

#include "bic/rational.hpp"

#include <string>
#include <vector>

namespace bic::dm {

using VarSet = std::vector<std::string>;

// Dense joint pmf over named finite variables; vars[0] is the slowest index.
struct JointPmf {
    std::vector<std::string> vars;
    std::vector<int> card;
    std::vector<double> p;

    JointPmf() = default;
    JointPmf(std::vector<std::string> names, std::vector<int> cards);

    size_t size() const { return p.size(); }
    int index_of(const std::string& name) const;
    double total() const;

    // flat index from per-variable symbols
    size_t flat(const std::vector<int>& symbols) const;
    void unflatten(size_t idx, std::vector<int>& symbols) const;
};

// I(A;B|C) in bits; A, B, C must be disjoint subsets of joint.vars.
double mutual_info(const JointPmf& joint, const VarSet& a, const VarSet& b, const VarSet& c = {});

}  // namespace bic::dm
