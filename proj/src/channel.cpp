#include "bic/channel.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace bic::dm {

namespace {

constexpr double kNormTol = 1e-9;

void check_slice(const std::vector<double>& t, size_t stride, size_t offset, size_t count,
                 const std::string& what)
{
    double sum = 0.0;
    for (size_t i = 0; i < count; ++i) {
        double v = t[offset + i * stride];
        if (v < 0.0)
            throw ValidationError(what + ": negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kNormTol)
        throw ValidationError(what + ": slice sums to " + std::to_string(sum));
}

}  // namespace

void DmBicChannel::validate() const
{
    if (nx1 <= 0 || nx2 <= 0 || ny1 <= 0 || ny2 <= 0 || ny3 <= 0)
        throw ValidationError("channel alphabet sizes must be positive");
    if (p1.size() != static_cast<size_t>(ny1 * nx1) ||
        p2.size() != static_cast<size_t>(ny2 * nx1 * nx2) ||
        p3.size() != static_cast<size_t>(ny3 * nx2))
        throw ValidationError("channel tensor size mismatch");
    for (int x1 = 0; x1 < nx1; ++x1)
        check_slice(p1, static_cast<size_t>(nx1), static_cast<size_t>(x1),
                    static_cast<size_t>(ny1), "p1(.|x1)");
    for (int x1 = 0; x1 < nx1; ++x1)
        for (int x2 = 0; x2 < nx2; ++x2)
            check_slice(p2, static_cast<size_t>(nx1 * nx2),
                        static_cast<size_t>(x1 * nx2 + x2), static_cast<size_t>(ny2),
                        "p2(.|x1,x2)");
    for (int x2 = 0; x2 < nx2; ++x2)
        check_slice(p3, static_cast<size_t>(nx2), static_cast<size_t>(x2),
                    static_cast<size_t>(ny3), "p3(.|x2)");
}

void FactoredInput::validate() const
{
    if (nq <= 0 || nu1 <= 0 || nv1 <= 0 || nv2 <= 0 || nu2 <= 0 || nx1 <= 0 || nx2 <= 0)
        throw ValidationError("input alphabet sizes must be positive");
    if (pQ.size() != static_cast<size_t>(nq) ||
        pU1.size() != static_cast<size_t>(nu1 * nq) ||
        pV1V2.size() != static_cast<size_t>(nv1 * nv2 * nu1 * nq) ||
        pU2.size() != static_cast<size_t>(nu2 * nq) ||
        pX2.size() != static_cast<size_t>(nx2 * nu2 * nq) ||
        f.size() != static_cast<size_t>(nu1 * nv1 * nv2))
        throw ValidationError("input table size mismatch");
    check_slice(pQ, 1, 0, static_cast<size_t>(nq), "pQ");
    for (int q = 0; q < nq; ++q) {
        check_slice(pU1, static_cast<size_t>(nq), static_cast<size_t>(q),
                    static_cast<size_t>(nu1), "pU1(.|q)");
        check_slice(pU2, static_cast<size_t>(nq), static_cast<size_t>(q),
                    static_cast<size_t>(nu2), "pU2(.|q)");
        for (int u1 = 0; u1 < nu1; ++u1)
            check_slice(pV1V2, static_cast<size_t>(nu1 * nq),
                        static_cast<size_t>(u1 * nq + q), static_cast<size_t>(nv1 * nv2),
                        "pV1V2(.|u1,q)");
        for (int u2 = 0; u2 < nu2; ++u2)
            check_slice(pX2, static_cast<size_t>(nu2 * nq),
                        static_cast<size_t>(u2 * nq + q), static_cast<size_t>(nx2),
                        "pX2(.|u2,q)");
    }
    for (int v : f)
        if (v < 0 || v >= nx1)
            throw ValidationError("f maps outside the X1 alphabet");
}

void SimpleInput::validate() const
{
    if (nu1 <= 0 || nx1 <= 0 || nu2 <= 0 || nx2 <= 0)
        throw ValidationError("input alphabet sizes must be positive");
    if (pU1.size() != static_cast<size_t>(nu1) ||
        pX1.size() != static_cast<size_t>(nx1 * nu1) ||
        pU2.size() != static_cast<size_t>(nu2) ||
        pX2.size() != static_cast<size_t>(nx2 * nu2))
        throw ValidationError("input table size mismatch");
    check_slice(pU1, 1, 0, static_cast<size_t>(nu1), "pU1");
    check_slice(pU2, 1, 0, static_cast<size_t>(nu2), "pU2");
    for (int u1 = 0; u1 < nu1; ++u1)
        check_slice(pX1, static_cast<size_t>(nu1), static_cast<size_t>(u1),
                    static_cast<size_t>(nx1), "pX1(.|u1)");
    for (int u2 = 0; u2 < nu2; ++u2)
        check_slice(pX2, static_cast<size_t>(nu2), static_cast<size_t>(u2),
                    static_cast<size_t>(nx2), "pX2(.|u2)");
}

JointPmf joint_from_factored(const DmBicChannel& ch, const FactoredInput& in)
{
    ch.validate();
    in.validate();
    if (in.nx1 != ch.nx1 || in.nx2 != ch.nx2)
        throw ValidationError("input/channel alphabet mismatch");

    JointPmf joint({"Q", "U1", "V1", "V2", "U2", "X2", "X1", "Y1", "Y2", "Y3"},
                   {in.nq, in.nu1, in.nv1, in.nv2, in.nu2, ch.nx2, ch.nx1, ch.ny1, ch.ny2,
                    ch.ny3});
    std::vector<int> s(10);
    for (int q = 0; q < in.nq; ++q)
        for (int u1 = 0; u1 < in.nu1; ++u1)
            for (int v1 = 0; v1 < in.nv1; ++v1)
                for (int v2 = 0; v2 < in.nv2; ++v2) {
                    int x1 = in.f_at(u1, v1, v2);
                    double w0 = in.q_at(q) * in.u1_at(u1, q) * in.v_at(v1, v2, u1, q);
                    if (w0 == 0.0)
                        continue;
                    for (int u2 = 0; u2 < in.nu2; ++u2)
                        for (int x2 = 0; x2 < ch.nx2; ++x2) {
                            double w1 = w0 * in.u2_at(u2, q) * in.x2_at(x2, u2, q);
                            if (w1 == 0.0)
                                continue;
                            for (int y1 = 0; y1 < ch.ny1; ++y1)
                                for (int y2 = 0; y2 < ch.ny2; ++y2)
                                    for (int y3 = 0; y3 < ch.ny3; ++y3) {
                                        double w = w1 * ch.at1(y1, x1) * ch.at2(y2, x1, x2) *
                                                   ch.at3(y3, x2);
                                        if (w == 0.0)
                                            continue;
                                        s = {q, u1, v1, v2, u2, x2, x1, y1, y2, y3};
                                        joint.p[joint.flat(s)] += w;
                                    }
                        }
                }
    if (std::abs(joint.total() - 1.0) > 1e-9)
        throw ValidationError("joint pmf does not normalize");
    return joint;
}

JointPmf joint_from_factored(const DmBicChannel& ch, const SimpleInput& in)
{
    ch.validate();
    in.validate();
    if (in.nx1 != ch.nx1 || in.nx2 != ch.nx2)
        throw ValidationError("input/channel alphabet mismatch");

    JointPmf joint({"U1", "X1", "U2", "X2", "Y1", "Y2", "Y3"},
                   {in.nu1, ch.nx1, in.nu2, ch.nx2, ch.ny1, ch.ny2, ch.ny3});
    std::vector<int> s(7);
    for (int u1 = 0; u1 < in.nu1; ++u1)
        for (int x1 = 0; x1 < ch.nx1; ++x1)
            for (int u2 = 0; u2 < in.nu2; ++u2)
                for (int x2 = 0; x2 < ch.nx2; ++x2) {
                    double w1 = in.u1_at(u1) * in.x1_at(x1, u1) * in.u2_at(u2) *
                                in.x2_at(x2, u2);
                    if (w1 == 0.0)
                        continue;
                    for (int y1 = 0; y1 < ch.ny1; ++y1)
                        for (int y2 = 0; y2 < ch.ny2; ++y2)
                            for (int y3 = 0; y3 < ch.ny3; ++y3) {
                                double w = w1 * ch.at1(y1, x1) * ch.at2(y2, x1, x2) *
                                           ch.at3(y3, x2);
                                if (w == 0.0)
                                    continue;
                                s = {u1, x1, u2, x2, y1, y2, y3};
                                joint.p[joint.flat(s)] += w;
                            }
                }
    if (std::abs(joint.total() - 1.0) > 1e-9)
        throw ValidationError("joint pmf does not normalize");
    return joint;
}

namespace {

using nlohmann::json;

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json(const json& j, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

std::vector<double> doubles(const json& j, const std::string& key)
{
    if (!j.contains(key))
        throw ValidationError("missing field '" + key + "'");
    return j.at(key).get<std::vector<double>>();
}

int integer(const json& j, const std::string& key)
{
    if (!j.contains(key))
        throw ValidationError("missing field '" + key + "'");
    return j.at(key).get<int>();
}

}  // namespace

DmBicChannel load_channel(const std::string& path)
{
    json j = read_json(path);
    DmBicChannel ch;
    try {
        ch.nx1 = integer(j, "x1");
        ch.nx2 = integer(j, "x2");
        ch.ny1 = integer(j, "y1");
        ch.ny2 = integer(j, "y2");
        ch.ny3 = integer(j, "y3");
        ch.p1 = doubles(j, "p1");
        ch.p2 = doubles(j, "p2");
        ch.p3 = doubles(j, "p3");
    } catch (const json::exception& e) {
        throw ValidationError("bad channel file '" + path + "': " + e.what());
    }
    ch.validate();
    return ch;
}

void save_channel(const DmBicChannel& ch, const std::string& path)
{
    json j{{"x1", ch.nx1}, {"x2", ch.nx2}, {"y1", ch.ny1}, {"y2", ch.ny2}, {"y3", ch.ny3},
           {"p1", ch.p1},  {"p2", ch.p2},  {"p3", ch.p3}};
    write_json(j, path);
}

InputFile load_input(const std::string& path)
{
    json j = read_json(path);
    if (!j.contains("type"))
        throw ValidationError("input file needs a 'type' field (simple|factored)");
    std::string type = j.at("type").get<std::string>();
    InputFile out;
    try {
        if (type == "simple") {
            SimpleInput in;
            in.nu1 = integer(j, "u1");
            in.nx1 = integer(j, "x1");
            in.nu2 = integer(j, "u2");
            in.nx2 = integer(j, "x2");
            in.pU1 = doubles(j, "pU1");
            in.pX1 = doubles(j, "pX1");
            in.pU2 = doubles(j, "pU2");
            in.pX2 = doubles(j, "pX2");
            in.validate();
            out.factored = false;
            out.sin = std::move(in);
        } else if (type == "factored") {
            FactoredInput in;
            in.nq = integer(j, "q");
            in.nu1 = integer(j, "u1");
            in.nv1 = integer(j, "v1");
            in.nv2 = integer(j, "v2");
            in.nu2 = integer(j, "u2");
            in.nx1 = integer(j, "x1");
            in.nx2 = integer(j, "x2");
            in.pQ = doubles(j, "pQ");
            in.pU1 = doubles(j, "pU1");
            in.pV1V2 = doubles(j, "pV1V2");
            in.pU2 = doubles(j, "pU2");
            in.pX2 = doubles(j, "pX2");
            in.f = j.at("f").get<std::vector<int>>();
            in.validate();
            out.factored = true;
            out.fin = std::move(in);
        } else {
            throw ValidationError("unknown input type '" + type + "'");
        }
    } catch (const json::exception& e) {
        throw ValidationError("bad input file '" + path + "': " + e.what());
    }
    return out;
}

void save_input(const SimpleInput& in, const std::string& path)
{
    json j{{"type", "simple"}, {"u1", in.nu1},  {"x1", in.nx1},  {"u2", in.nu2},
           {"x2", in.nx2},     {"pU1", in.pU1}, {"pX1", in.pX1}, {"pU2", in.pU2},
           {"pX2", in.pX2}};
    write_json(j, path);
}

void save_input(const FactoredInput& in, const std::string& path)
{
    json j{{"type", "factored"}, {"q", in.nq},        {"u1", in.nu1},  {"v1", in.nv1},
           {"v2", in.nv2},       {"u2", in.nu2},      {"x1", in.nx1},  {"x2", in.nx2},
           {"pQ", in.pQ},        {"pU1", in.pU1},     {"pV1V2", in.pV1V2},
           {"pU2", in.pU2},      {"pX2", in.pX2},     {"f", in.f}};
    write_json(j, path);
}

}  // namespace bic::dm
