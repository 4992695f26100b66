#include "frobvol/pfaffcomb/cores.hpp"

#include <functional>

#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::pfaffcomb {

using coeff::FiniteField;
using poly::GroupAction;
using poly::Ring;

namespace {

PolyGF parse(const Instance& inst, const std::string& s) { return poly::parse_poly<coeff::GF>(s, inst.ring, inst.field); }

PolyGF sum(const std::vector<PolyGF>& xs, const PolyGF& zero) {
    PolyGF s = zero;
    for (const auto& x : xs) s += x;
    return s;
}

PolyGF edge_var(const Instance& inst, uint32_t i, uint32_t j) {
    auto [idx, sign] = inst.ring->edge(i, j);
    auto v = PolyGF::variable(inst.ring, inst.field, idx);
    return sign < 0 ? -v : v;
}

std::vector<std::vector<std::string>> images_from(const poly::RingPtr& ring,
                                                  const std::function<std::string(const std::string&)>& f) {
    std::vector<std::string> img;
    for (const auto& n : ring->names()) img.push_back(f(n));
    return {img};
}

}  // namespace

Instance pfaffian_instance(uint32_t m, uint32_t p) {
    Instance inst;
    inst.field = &FiniteField::get(p);
    inst.ring = Ring::edges("z", m, p != 2);
    inst.ideal = submax_pfaffians(inst.ring, inst.field);
    return inst;
}

Instance tom_instance() {
    Instance inst;
    inst.field = &FiniteField::get(2);
    std::vector<std::string> names;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) names.push_back("z" + std::to_string(i) + "_" + std::to_string(j));
    inst.ring = Ring::make(names);
    auto z = [&](int i, int j) { return PolyGF::variable(inst.ring, inst.field, size_t((i - 1) * 3 + (j - 1))); };
    for (int r1 = 1; r1 <= 3; ++r1)
        for (int r2 = r1 + 1; r2 <= 3; ++r2)
            for (int c1 = 1; c1 <= 3; ++c1)
                for (int c2 = c1 + 1; c2 <= 3; ++c2)
                    inst.ideal.push_back(z(r1, c1) * z(r2, c2) - z(r1, c2) * z(r2, c1));
    return inst;
}

GroupAction tom_group(const poly::RingPtr& ring) {
    // Variable name z<i>_<j>; permute the row index or the column index.
    auto perm = [&](bool rows, std::array<int, 3> s) {
        return images_from(ring, [&](const std::string& n) {
            int i = n[1] - '0', j = n[3] - '0';
            if (rows)
                i = s[size_t(i - 1)];
            else
                j = s[size_t(j - 1)];
            return "z" + std::to_string(i) + "_" + std::to_string(j);
        })[0];
    };
    return GroupAction::from_variable_images(
        ring, {perm(true, {2, 1, 3}), perm(true, {2, 3, 1}), perm(false, {2, 1, 3}), perm(false, {2, 3, 1})});
}

std::array<PolyGF, 3> tom_etas(const Instance& inst) {
    return {parse(inst, "z1_2*z1_3*z2_2*z2_3*z3_1^2"), parse(inst, "z1_2*z1_3*z2_1*z2_3*z3_1*z3_2"),
            parse(inst, "z1_2^2*z2_3^2*z3_1^2")};
}

std::vector<PolyGF> tom_o3(const Instance& inst) {
    std::vector<PolyGF> out;
    for (auto s : {"z1_2^2*z2_3^2*z3_1^2", "z1_3^2*z2_1^2*z3_2^2", "z1_1^2*z2_3^2*z3_2^2", "z1_3^2*z2_2^2*z3_1^2",
                   "z1_2^2*z2_1^2*z3_3^2", "z1_1^2*z2_2^2*z3_3^2"})
        out.push_back(parse(inst, s));
    return out;
}

PolyGF tom_core(const Instance& inst, const std::vector<size_t>& S) {
    auto G = tom_group(inst.ring);
    auto eta = tom_etas(inst);
    auto o3 = tom_o3(inst);
    PolyGF h = G.orbit_sum(eta[0]) + G.orbit_sum(eta[1]);
    for (size_t s : S) h += o3.at(s);
    return h;
}

Instance jerry_instance() {
    Instance inst;
    inst.field = &FiniteField::get(2);
    inst.ring = Ring::make({"x", "t", "y1", "y2", "y3", "z1", "z2", "z3"});
    for (auto s : {"x*z1-y2*y3", "x*z2-y1*y3", "x*z3-y1*y2", "t*y1-z2*z3", "t*y2-z1*z3", "t*y3-z1*z2", "x*t-y1*z1",
                   "x*t-y2*z2", "x*t-y3*z3"})
        inst.ideal.push_back(parse(inst, s));
    return inst;
}

GroupAction jerry_group(const poly::RingPtr& ring, bool literal) {
    auto perm = [&](std::array<int, 3> s, bool swap) {
        return images_from(ring, [&](const std::string& n) -> std::string {
            if (n == "x") return swap ? "t" : "x";
            if (n == "t") return swap ? "x" : "t";
            std::string letter = n.substr(0, 1);
            if (swap && !literal) letter = letter == "y" ? "z" : "y";
            return letter + std::to_string(s[size_t(n[1] - '1')]);
        })[0];
    };
    return GroupAction::from_variable_images(ring, {perm({2, 1, 3}, false), perm({2, 3, 1}, false), perm({1, 2, 3}, true)});
}

std::array<PolyGF, 5> jerry_etas(const Instance& inst) {
    return {parse(inst, "y1*y2*y3*z1*z2*z3"), parse(inst, "x*y1*y2*z1*z2*t"), parse(inst, "x*y1*z1^2*z2*z3"),
            parse(inst, "x^2*z1*z2*z3*t"), parse(inst, "x^2*y1*z1*t^2")};
}

std::vector<PolyGF> jerry_q(const Instance& inst) {
    return {parse(inst, "x*y1^2*z1^2*t"), parse(inst, "x*y2^2*z2^2*t"), parse(inst, "x*y3^2*z3^2*t")};
}

PolyGF jerry_core(const Instance& inst, const std::vector<size_t>& S, bool literal) {
    auto G = jerry_group(inst.ring, literal);
    PolyGF h(inst.ring, inst.field);
    auto q = jerry_q(inst);
    for (size_t s : S) h += q.at(s);
    for (const auto& e : jerry_etas(inst)) h += G.orbit_sum(e);
    return h;
}

Instance char3_instance() { return pfaffian_instance(5, 3); }

GroupAction s5_group(const poly::RingPtr& ring) {
    return GroupAction::from_vertex_permutations(ring, {GroupAction::vertex_permutation_from_cycles(5, {{1, 2}}),
                                                        GroupAction::vertex_permutation_from_cycles(5, {{1, 2, 3, 4, 5}})});
}

std::array<PolyGF, 5> char3_etas(const Instance& inst) {
    return {parse(inst, "z1_3*z1_4*z1_5^2*z2_3*z2_4^2*z2_5*z3_4*z3_5"),
            parse(inst, "z1_3*z1_4*z1_5^2*z2_3*z2_4*z2_5^2*z3_4^2"), parse(inst, "z1_4^2*z1_5^2*z2_3^2*z2_5^2*z3_4^2"),
            parse(inst, "z1_4*z1_5^3*z2_3^2*z2_4*z2_5*z3_4^2"), parse(inst, "z1_5^4*z2_3^2*z2_4^2*z3_4^2")};
}

GroupAction affine_subgroup(const poly::RingPtr& ring, uint32_t a, uint32_t b, uint32_t c) {
    return GroupAction::from_vertex_permutations(ring, {GroupAction::vertex_permutation_from_cycles(5, {{1, 2, a, b, c}}),
                                                        GroupAction::vertex_permutation_from_cycles(5, {{2, a, c, b}})});
}

PolyGF char3_theta(const Instance& inst, uint32_t a, uint32_t b, uint32_t c) {
    PolyGF t = edge_var(inst, 2, a).pow(3) * edge_var(inst, b, c).pow(3);
    for (uint32_t i = 2; i <= 5; ++i) t = t * edge_var(inst, 1, i);
    return t;
}

PolyGF char3_u(const Instance& inst, uint32_t a, uint32_t b, uint32_t c) {
    return affine_subgroup(inst.ring, a, b, c).orbit_sum(char3_theta(inst, a, b, c));
}

PolyGF char3_core(const Instance& inst, uint32_t a, uint32_t b, uint32_t c) {
    auto G = s5_group(inst.ring);
    std::vector<PolyGF> parts;
    for (const auto& e : char3_etas(inst)) parts.push_back(G.orbit_sum(e));
    parts.push_back(char3_u(inst, a, b, c));
    return sum(parts, PolyGF(inst.ring, inst.field));
}

}  // namespace frobvol::pfaffcomb
