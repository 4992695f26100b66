#pragma once

#include <array>
#include <vector>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/poly/group_action.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::pfaffcomb {

using PolyGF = poly::Poly<coeff::GF>;

// Ideal together with its ambient ring and coefficient field.
struct Instance {
    poly::RingPtr ring;
    const coeff::FiniteField* field = nullptr;
    std::vector<PolyGF> ideal;
};

// Generic alternating m x m matrix over GF(p): ideal of submaximal Pfaffians.
Instance pfaffian_instance(uint32_t m, uint32_t p);

// 2x2 minors of a generic 3x3 matrix z_{i,j} over GF(2).
Instance tom_instance();
// S_3 x S_3 acting on rows and columns.
poly::GroupAction tom_group(const poly::RingPtr& ring);
std::array<PolyGF, 3> tom_etas(const Instance& inst);
// The orbit of eta_3 in a fixed order starting with eta_3 itself.
std::vector<PolyGF> tom_o3(const Instance& inst);
// Sum of the orbits of eta_1, eta_2 and the chosen elements of the eta_3 orbit.
PolyGF tom_core(const Instance& inst, const std::vector<size_t>& S);

// Segre ideal of P^1 x P^1 x P^1 in x, t, y_1..y_3, z_1..z_3 over GF(2).
Instance jerry_instance();
// S_3 permuting the indices of y and z, and Z/2 swapping x <-> t together
// with y_i <-> z_i (the symmetry of the Segre embedding). With `literal` the
// Z/2 factor swaps only x and t; orbit sizes agree but the orbit sums are not
// homogeneous for the Segre multigrading.
poly::GroupAction jerry_group(const poly::RingPtr& ring, bool literal = false);
std::array<PolyGF, 5> jerry_etas(const Instance& inst);
// x y_i^2 z_i^2 t for i = 1, 2, 3.
std::vector<PolyGF> jerry_q(const Instance& inst);
PolyGF jerry_core(const Instance& inst, const std::vector<size_t>& S, bool literal = false);

// 5x5 alternating matrix over GF(3) with z_{j,i} = -z_{i,j}.
Instance char3_instance();
poly::GroupAction s5_group(const poly::RingPtr& ring);
std::array<PolyGF, 5> char3_etas(const Instance& inst);
// Order-20 subgroup <(1,2,a,b,c), (2,a,c,b)> of S_5.
poly::GroupAction affine_subgroup(const poly::RingPtr& ring, uint32_t a, uint32_t b, uint32_t c);
// z_{2,a}^3 z_{b,c}^3 z_{1,2} z_{1,3} z_{1,4} z_{1,5}.
PolyGF char3_theta(const Instance& inst, uint32_t a, uint32_t b, uint32_t c);
PolyGF char3_u(const Instance& inst, uint32_t a, uint32_t b, uint32_t c);
// sum_t Q(eta_t) + U_{(a,b,c)}, Q being the S_5 orbit sum.
PolyGF char3_core(const Instance& inst, uint32_t a, uint32_t b, uint32_t c);

}  // namespace frobvol::pfaffcomb
