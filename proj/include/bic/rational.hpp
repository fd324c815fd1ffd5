#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace bic {

// Thrown on bad user input: malformed files, inconsistent dimensions,
// out-of-range flags. The CLI maps it to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double x)
{
    if (!std::isfinite(x))
        throw ValidationError("non-finite coefficient");
    if (x == 0.0)
        return Rat(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);            // x = mant * 2^exp, |mant| in [0.5, 1)
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Int num = scaled;
    int shift = exp - 53;
    if (shift >= 0)
        return Rat(num << shift);
    return Rat(num, Int(1) << (-shift));
}

inline double rat_to_double(const Rat& r)
{
    return r.convert_to<double>();
}

inline std::string rat_str(const Rat& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

// Parses "p", "p/q" or a plain decimal like "-0.25".
inline Rat rat_parse(const std::string& text)
{
    if (text.empty())
        throw ValidationError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0)
                throw ValidationError("zero denominator in '" + text + "'");
            return Rat(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos)
            return Rat(Int(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        Int num(digits);
        Int den = 1;
        for (size_t i = dot + 1; i < text.size(); ++i)
            den *= 10;
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("bad rational literal '" + text + "'");
    }
}

}  // namespace bic
