#pragma once

#include "bic/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bic::poly {

enum class Sense { Le, Ge };

// One linear inequality over the owning system's variable list.
struct LinIneq {
    std::vector<Rat> coef;  // aligned with LinSystem::vars
    Sense sense = Sense::Le;
    Rat rhs;
};

// A finite system of linear inequalities over named variables with rational
// coefficients. Variables flagged nonneg contribute an explicit `v >= 0` row
// when the system is materialized.
class LinSystem {
public:
    LinSystem() = default;
    explicit LinSystem(std::vector<std::string> variables);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<LinIneq>& ineqs() const { return ineqs_; }
    std::vector<LinIneq>& ineqs() { return ineqs_; }
    const std::vector<bool>& nonneg() const { return nonneg_; }

    int var_index(const std::string& name) const;  // -1 when absent
    void set_nonneg(const std::string& name, bool flag = true);
    bool is_nonneg(int var) const { return nonneg_[var]; }

    void add(const std::map<std::string, Rat>& terms, Sense sense, const Rat& rhs);
    void add(const std::map<std::string, double>& terms, Sense sense, double rhs);
    void add_row(LinIneq row);  // coefficient count must match

    // Nonneg flags expanded into explicit rows; flags cleared in the result.
    LinSystem materialized() const;

    // One inequality per line, `c1*v1 + c2*v2 <= r`, rationals as `p/q`.
    std::string to_text() const;
    static LinSystem from_text(const std::string& text);

private:
    std::vector<std::string> vars_;
    std::vector<LinIneq> ineqs_;
    std::vector<bool> nonneg_;
};

// A coordinate assignment to rate variables, in bits. Coordinate order follows
// the system the point is tested against.
struct RatePoint {
    std::vector<double> coords;

    RatePoint() = default;
    RatePoint(std::initializer_list<double> c) : coords(c) {}
    explicit RatePoint(std::vector<double> c) : coords(std::move(c)) {}

    size_t dim() const { return coords.size(); }
    double operator[](size_t i) const { return coords[i]; }
    double& operator[](size_t i) { return coords[i]; }
    bool operator==(const RatePoint& o) const { return coords == o.coords; }
};

}  // namespace bic::poly
