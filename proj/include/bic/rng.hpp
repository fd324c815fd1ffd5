#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace bic {

// Deterministic sampling built on the standardized mt19937_64 stream only;
// identical seeds give identical draws on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double exponential() { return -std::log1p(-u01()); }

    double normal()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = u01(), v = u01();
        while (u <= 1e-300)
            u = u01();
        double r = std::sqrt(-2.0 * std::log(u));
        double t = 2.0 * M_PI * v;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Marsaglia-Tsang; shapes below 1 via the boost relation.
    double gamma(double shape)
    {
        if (shape < 1.0) {
            double u = u01();
            while (u <= 1e-300)
                u = u01();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0)
                continue;
            v = v * v * v;
            double u = u01();
            if (u < 1.0 - 0.0331 * x * x * x * x)
                return d * v;
            if (u > 1e-300 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v;
        }
    }

    // Symmetric Dirichlet draw; alpha tunes how peaked the pmf is.
    std::vector<double> simplex(size_t n, double alpha = 1.0)
    {
        std::vector<double> out(n);
        double sum = 0.0;
        for (auto& v : out) {
            v = gamma(alpha);
            sum += v;
        }
        if (sum <= 0.0) {
            for (auto& v : out)
                v = 1.0 / static_cast<double>(n);
            return out;
        }
        for (auto& v : out)
            v /= sum;
        return out;
    }

    uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bic
