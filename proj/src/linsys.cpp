#include "bic/linsys.hpp"

#include <algorithm>
#include <sstream>

namespace bic::poly {

LinSystem::LinSystem(std::vector<std::string> variables)
    : vars_(std::move(variables)), nonneg_(vars_.size(), false)
{
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw ValidationError("duplicate variable '" + vars_[i] + "'");
}

int LinSystem::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

void LinSystem::set_nonneg(const std::string& name, bool flag)
{
    int idx = var_index(name);
    if (idx < 0)
        throw ValidationError("unknown variable '" + name + "'");
    nonneg_[idx] = flag;
}

void LinSystem::add(const std::map<std::string, Rat>& terms, Sense sense, const Rat& rhs)
{
    LinIneq row;
    row.coef.assign(vars_.size(), Rat(0));
    for (const auto& [name, c] : terms) {
        int idx = var_index(name);
        if (idx < 0)
            throw ValidationError("unknown variable '" + name + "'");
        row.coef[idx] = c;
    }
    row.sense = sense;
    row.rhs = rhs;
    ineqs_.push_back(std::move(row));
}

void LinSystem::add(const std::map<std::string, double>& terms, Sense sense, double rhs)
{
    std::map<std::string, Rat> exact;
    for (const auto& [name, c] : terms)
        exact[name] = rat_from_double(c);
    add(exact, sense, rat_from_double(rhs));
}

void LinSystem::add_row(LinIneq row)
{
    if (row.coef.size() != vars_.size())
        throw ValidationError("row width does not match variable count");
    ineqs_.push_back(std::move(row));
}

LinSystem LinSystem::materialized() const
{
    LinSystem out(vars_);
    out.ineqs_ = ineqs_;
    for (size_t j = 0; j < vars_.size(); ++j) {
        if (!nonneg_[j])
            continue;
        LinIneq row;
        row.coef.assign(vars_.size(), Rat(0));
        row.coef[j] = 1;
        row.sense = Sense::Ge;
        row.rhs = 0;
        out.ineqs_.push_back(std::move(row));
    }
    return out;
}

std::string LinSystem::to_text() const
{
    std::ostringstream out;
    out << "vars";
    for (const auto& v : vars_)
        out << ' ' << v << (nonneg_[var_index(v)] ? "+" : "");
    out << '\n';
    for (const auto& row : ineqs_) {
        bool first = true;
        for (size_t j = 0; j < row.coef.size(); ++j) {
            if (row.coef[j] == 0)
                continue;
            if (!first)
                out << " + ";
            out << rat_str(row.coef[j]) << '*' << vars_[j];
            first = false;
        }
        if (first)
            out << '0';
        out << (row.sense == Sense::Le ? " <= " : " >= ") << rat_str(row.rhs) << '\n';
    }
    return out.str();
}

LinSystem LinSystem::from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError("empty system text");
    std::istringstream header(line);
    std::string tok;
    header >> tok;
    if (tok != "vars")
        throw ValidationError("system text must start with a 'vars' line");
    std::vector<std::string> names;
    std::vector<bool> flags;
    while (header >> tok) {
        bool nn = !tok.empty() && tok.back() == '+';
        if (nn)
            tok.pop_back();
        names.push_back(tok);
        flags.push_back(nn);
    }
    LinSystem sys(names);
    for (size_t j = 0; j < names.size(); ++j)
        if (flags[j])
            sys.set_nonneg(names[j]);

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::map<std::string, Rat> terms;
        Sense sense = Sense::Le;
        while (ls >> tok) {
            if (tok == "+")
                continue;
            if (tok == "<=" || tok == ">=") {
                sense = tok == "<=" ? Sense::Le : Sense::Ge;
                std::string rhs_tok;
                if (!(ls >> rhs_tok))
                    throw ValidationError("missing right-hand side: " + line);
                LinIneq row;
                row.coef.assign(names.size(), Rat(0));
                for (const auto& [name, c] : terms) {
                    int idx = sys.var_index(name);
                    if (idx < 0)
                        throw ValidationError("unknown variable '" + name + "'");
                    row.coef[idx] = c;
                }
                row.sense = sense;
                row.rhs = rat_parse(rhs_tok);
                sys.add_row(std::move(row));
                break;
            }
            auto star = tok.find('*');
            if (star == std::string::npos) {
                if (tok == "0")
                    continue;
                throw ValidationError("bad term '" + tok + "'");
            }
            terms[tok.substr(star + 1)] += rat_parse(tok.substr(0, star));
        }
    }
    return sys;
}

}  // namespace bic::poly
