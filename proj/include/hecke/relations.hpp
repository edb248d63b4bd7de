#pragma once

#include <string>
#include <vector>

#include "hecke/render.hpp"

namespace hecke {

struct RelationInstance {
    std::string relation;  // "R0".."R5"
    std::string instance;  // e.g. "i=2" or "i=1,j=3"
    bool pass = false;
    std::string diff;  // display form of lhs - rhs when the instance fails
};

struct RelationReport {
    int rank = 0;
    bool all_pass = true;
    std::vector<RelationInstance> instances;
    std::vector<std::string> notes;
};

// Evaluates every instance of the defining relations at the given rank:
//   R0  t t^{-1} = 1 = t^{-1} t
//   R1  (s_i + 1)(s_i - z) = 0                       1 <= i <= r-1
//   R2  t^2 s_1 = s_{r-1} t^2                        r >= 2
//   R3  t s_i = s_{i-1} t                            2 <= i <= r-1
//   R4  s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}        1 <= i <= r-2
//   R5  s_i s_j = s_j s_i                            |i-j| >= 2
template <class K>
RelationReport relation_check(const HeckeConfigT<K>& config) {
    const int r = config.rank();
    if (r > 6) throw Error(Errc::ResourceLimit, "relation_check supports ranks 1..6");

    RelationReport report;
    report.rank = r;

    auto record = [&](const std::string& rel, const std::string& inst, const HeckeElementT<K>& lhs,
                      const HeckeElementT<K>& rhs) {
        RelationInstance ri;
        ri.relation = rel;
        ri.instance = inst;
        HeckeElementT<K> diff = lhs - rhs;
        ri.pass = diff.is_zero();
        if (!ri.pass) {
            ri.diff = to_display(diff);
            report.all_pass = false;
        }
        report.instances.push_back(std::move(ri));
    };

    const HeckeElementT<K> one = unit(config);
    const HeckeElementT<K> t = gen(config, GenName::t());
    const HeckeElementT<K> tinv = gen(config, GenName::t_inv());
    std::vector<HeckeElementT<K>> s;  // s[i] for 1 <= i <= r-1
    s.reserve(static_cast<std::size_t>(r));
    s.push_back(one);  // placeholder at index 0
    for (int i = 1; i <= r - 1; ++i) s.push_back(gen(config, GenName::s(i)));

    record("R0", "t*tinv", mul(t, tinv), one);
    record("R0", "tinv*t", mul(tinv, t), one);

    const K& z = config.param();
    for (int i = 1; i <= r - 1; ++i) {
        HeckeElementT<K> lhs = mul(s[static_cast<std::size_t>(i)] + one,
                                   s[static_cast<std::size_t>(i)] - z * one);
        record("R1", "i=" + std::to_string(i), lhs, HeckeElementT<K>(config));
    }

    if (r >= 2) {
        HeckeElementT<K> t2 = mul(t, t);
        record("R2", "", mul(t2, s[1]), mul(s[static_cast<std::size_t>(r - 1)], t2));
    }

    for (int i = 2; i <= r - 1; ++i)
        record("R3", "i=" + std::to_string(i), mul(t, s[static_cast<std::size_t>(i)]),
               mul(s[static_cast<std::size_t>(i - 1)], t));

    for (int i = 1; i <= r - 2; ++i) {
        const auto& a = s[static_cast<std::size_t>(i)];
        const auto& b = s[static_cast<std::size_t>(i + 1)];
        record("R4", "i=" + std::to_string(i), mul(mul(a, b), a), mul(mul(b, a), b));
    }

    for (int i = 1; i <= r - 1; ++i)
        for (int j = i + 2; j <= r - 1; ++j)
            record("R5", "i=" + std::to_string(i) + ",j=" + std::to_string(j),
                   mul(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]),
                   mul(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(i)]));

    if (r == 1) report.notes.push_back("(R1)-(R5) vacuous at rank 1");
    if (r == 2) report.notes.push_back("(R3)-(R5) vacuous at rank 2");
    if (r == 3) report.notes.push_back("(R5) vacuous at rank 3");

    return report;
}

}  // namespace hecke
