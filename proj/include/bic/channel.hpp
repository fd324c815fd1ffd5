#pragma once

#include "bic/pmf.hpp"

#include <string>
#include <vector>

namespace bic::dm {

// Discrete memoryless broadcast interference channel: three conditional pmf
// tensors p(y1|x1), p(y2|x1,x2), p(y3|x2) over finite alphabets. The joint
// law factors as p(y1|x1) p(y2|x1,x2) p(y3|x2) by construction.
struct DmBicChannel {
    int nx1 = 0, nx2 = 0, ny1 = 0, ny2 = 0, ny3 = 0;
    std::vector<double> p1;  // [y1][x1]
    std::vector<double> p2;  // [y2][x1][x2]
    std::vector<double> p3;  // [y3][x2]

    double at1(int y1, int x1) const { return p1[static_cast<size_t>(y1 * nx1 + x1)]; }
    double at2(int y2, int x1, int x2) const
    {
        return p2[static_cast<size_t>((y2 * nx1 + x1) * nx2 + x2)];
    }
    double at3(int y3, int x2) const { return p3[static_cast<size_t>(y3 * nx2 + x2)]; }

    void validate() const;  // slices sum to 1 within 1e-9, entries >= 0
};

// Factored input law p(q) p(u1|q) p(v1,v2|u1,q) p(u2|q) p(x2|u2,q) together
// with the deterministic map x1 = f(u1,v1,v2).
struct FactoredInput {
    int nq = 1, nu1 = 1, nv1 = 1, nv2 = 1, nu2 = 1, nx1 = 1, nx2 = 1;
    std::vector<double> pQ;     // [q]
    std::vector<double> pU1;    // [u1][q]
    std::vector<double> pV1V2;  // [v1][v2][u1][q]
    std::vector<double> pU2;    // [u2][q]
    std::vector<double> pX2;    // [x2][u2][q]
    std::vector<int> f;         // [u1][v1][v2] -> x1

    double q_at(int q) const { return pQ[static_cast<size_t>(q)]; }
    double u1_at(int u1, int q) const { return pU1[static_cast<size_t>(u1 * nq + q)]; }
    double v_at(int v1, int v2, int u1, int q) const
    {
        return pV1V2[static_cast<size_t>(((v1 * nv2 + v2) * nu1 + u1) * nq + q)];
    }
    double u2_at(int u2, int q) const { return pU2[static_cast<size_t>(u2 * nq + q)]; }
    double x2_at(int x2, int u2, int q) const
    {
        return pX2[static_cast<size_t>((x2 * nu2 + u2) * nq + q)];
    }
    int f_at(int u1, int v1, int v2) const
    {
        return f[static_cast<size_t>((u1 * nv1 + v1) * nv2 + v2)];
    }

    void validate() const;
};

// Superposition-only input law p(u1) p(x1|u1) p(u2) p(x2|u2).
struct SimpleInput {
    int nu1 = 1, nx1 = 1, nu2 = 1, nx2 = 1;
    std::vector<double> pU1;  // [u1]
    std::vector<double> pX1;  // [x1][u1]
    std::vector<double> pU2;  // [u2]
    std::vector<double> pX2;  // [x2][u2]

    double u1_at(int u1) const { return pU1[static_cast<size_t>(u1)]; }
    double x1_at(int x1, int u1) const { return pX1[static_cast<size_t>(x1 * nu1 + u1)]; }
    double u2_at(int u2) const { return pU2[static_cast<size_t>(u2)]; }
    double x2_at(int x2, int u2) const { return pX2[static_cast<size_t>(x2 * nu2 + u2)]; }

    void validate() const;
};

// Joint pmf over (Q,U1,V1,V2,U2,X2,X1,Y1,Y2,Y3).
JointPmf joint_from_factored(const DmBicChannel& ch, const FactoredInput& in);
// Joint pmf over (U1,X1,U2,X2,Y1,Y2,Y3).
JointPmf joint_from_factored(const DmBicChannel& ch, const SimpleInput& in);

// Structured-text (JSON) channel and input files.
DmBicChannel load_channel(const std::string& path);
void save_channel(const DmBicChannel& ch, const std::string& path);

struct InputFile {
    bool factored = false;
    FactoredInput fin;
    SimpleInput sin;
};
InputFile load_input(const std::string& path);
void save_input(const SimpleInput& in, const std::string& path);
void save_input(const FactoredInput& in, const std::string& path);

}  // namespace bic::dm
