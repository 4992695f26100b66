#include <doctest.h>

#include <random>
#include <set>

#include "frobvol/gradedla/chain.hpp"
#include "frobvol/gradedla/resolution.hpp"
#include "frobvol/pfaffcomb/conducting.hpp"
#include "frobvol/pfaffcomb/cores.hpp"
#include "frobvol/pfaffcomb/multigraph.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/text.hpp"

using namespace frobvol;
using namespace frobvol::pfaffcomb;
using coeff::FiniteField;
using coeff::GF;
using gradedla::Grading;

namespace {

// Determinant by Gaussian elimination over a field.
GF det(Matrix<GF> a) {
    const size_t n = a.size();
    GF d = a[0][0].one_like();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return a[0][0].zero_like();
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d = d * a[c][c];
        GF inv = a[c][c].inv();
        for (size_t r = c + 1; r < n; ++r) {
            GF f = a[r][c] * inv;
            for (size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
        }
    }
    return d;
}

PolyGF P(const std::string& s, const Instance& inst) { return poly::parse_poly<GF>(s, inst.ring, inst.field); }

}  // namespace

TEST_CASE("pfaffians") {
    auto i3 = pfaffian_instance(3, 2);
    auto P3 = submax_pfaffians(i3.ring, i3.field);
    CHECK(P3[0] == P("z2_3", i3));
    CHECK(P3[1] == P("z1_3", i3));
    CHECK(P3[2] == P("z1_2", i3));

    auto i5 = pfaffian_instance(5, 2);
    for (const auto& p : i5.ideal) CHECK(p.size() == 3);
    auto i7 = pfaffian_instance(7, 2);
    for (const auto& p : i7.ideal) CHECK(p.size() == 15);

    // 4x4 generic over GF(3) with signs.
    auto R4 = poly::Ring::edges("z", 4, true);
    const auto& F3 = FiniteField::get(3);
    auto A4 = generic_alternating(R4, &F3);
    auto pf = pfaffian(A4, PolyGF(R4, &F3).one());
    CHECK(pf == poly::parse_poly<GF>("z1_2*z3_4 - z1_3*z2_4 + z1_4*z2_3", R4, &F3));

    Matrix<PolyGF> odd(3, std::vector<PolyGF>(3, PolyGF(R4, &F3)));
    CHECK_THROWS_AS(pfaffian(odd, PolyGF(R4, &F3).one()), InvalidMatrix);
    auto notskew = A4;
    notskew[0][1] = notskew[1][0];
    CHECK_THROWS_AS(pfaffian(notskew, PolyGF(R4, &F3).one()), InvalidMatrix);
    CHECK_THROWS_AS(submax_pfaffians(R4, &F3), InvalidInput);
}

TEST_CASE("pfaffian squared is the determinant") {
    std::mt19937_64 rng(3);
    for (auto [p, k] : {std::pair{3u, 1u}, {2u, 8u}, {5u, 2u}}) {
        const auto& F = FiniteField::get(p, k);
        for (size_t n = 2; n <= 8; n += 2)
            for (int t = 0; t < 5; ++t) {
                Matrix<GF> M(n, std::vector<GF>(n, F.zero()));
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j) {
                        M[i][j] = F.element(rng() % F.order());
                        M[j][i] = -M[i][j];
                    }
                GF pf = pfaffian(M, F.one());
                CHECK(pf * pf == det(M));
            }
    }
}

TEST_CASE("buchsbaum-eisenbud complexes") {
    for (uint32_t p : {2u, 3u})
        for (uint32_t m : {3u, 5u, 7u}) {
            auto inst = pfaffian_instance(m, p);
            CHECK(check_pfaffian_syzygy(inst.ring, inst.ideal).ok);
            auto cx = buchsbaum_eisenbud(inst.ring, inst.field);
            int dmax = m == 7 ? 5 : int(m) + 1;
            auto rep = gradedla::verify_complex(cx, inst.ideal, dmax, m < 7, Grading::standard(inst.ring->nvars()));
            CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures[0]));
        }
}

TEST_CASE("explicit chain map in characteristic 2") {
    auto i3 = pfaffian_instance(3, 2);
    CHECK(pfaffian_core(i3.ideal) == P("z1_2*z1_3*z2_3", i3));
    for (uint32_t m : {3u, 5u}) {
        auto inst = pfaffian_instance(m, 2);
        auto cx = buchsbaum_eisenbud(inst.ring, inst.field);
        auto phi = explicit_phi_char2(cx);
        CHECK(verify_chain_map(cx, phi).ok);
        CHECK(check_middle_square(inst.ring, inst.ideal).ok);
        auto H0 = pfaffian_core(inst.ideal);
        CHECK(check_left_square(inst.ideal, H0).ok);
        if (m == 5) {
            CHECK(H0.size() == 22);
            auto bad = phi;
            bad.levels[3].entries[0][0] += P("z1_2^5", inst);
            CHECK_FALSE(verify_chain_map(cx, bad).ok);
        }
    }
}

TEST_CASE("multigraph enumeration and generating functions") {
    for (uint32_t i = 1; i <= 5; ++i) CHECK(enumerate_matchings(5, i).size() == 3);
    CHECK(enumerate_oc(3).size() == 1);
    CHECK(enumerate_oc(5).size() == 22);
    CHECK(enumerate_oc(7).size() == 717);
    for (uint32_t m : {3u, 5u, 7u}) {
        auto inst = pfaffian_instance(m, 2);
        for (uint32_t i = 1; i <= m; ++i)
            CHECK(generating_function(enumerate_matchings(m, i), inst.ring, inst.field) == inst.ideal[i - 1]);
        auto oc = enumerate_oc(m);
        for (const auto& w : oc)
            for (uint32_t v = 1; v <= m; ++v) CHECK(w.degree(v) == 2);
        CHECK(std::set<WeightFunction>(oc.begin(), oc.end()).size() == oc.size());
        CHECK(generating_function(oc, inst.ring, inst.field) == pfaffian_core(inst.ideal));
        auto twice = oc;
        twice.insert(twice.end(), oc.begin(), oc.end());
        CHECK(generating_function(twice, inst.ring, inst.field).is_zero());
    }
}

TEST_CASE("conducting criterion") {
    for (uint32_t m : {5u, 7u}) {
        auto inst = pfaffian_instance(m, 2);
        auto rep = check_conducting(pfaffian_core(inst.ideal), 2);
        CHECK(rep.pass);
        // The witnesses are exactly the Hamilton cycles: (m-1)!/2 of them.
        size_t ham = 1;
        for (uint32_t k = 3; k < m; ++k) ham *= k;
        CHECK(rep.witnesses.size() == ham);
    }
    auto R = poly::Ring::make({"x", "y"});
    auto h = poly::parse_poly<GF>("x^2*y^2", R, &FiniteField::get(2));
    CHECK_FALSE(check_conducting(h, 2).pass);
}

TEST_CASE("hamiltonian cycles through an edge") {
    auto k4 = complete_graph(4);
    for (auto e : k4.edges) CHECK(hamiltonian_parity(k4, e) == 2);
    auto pg = petersen_graph();
    for (auto e : pg.edges) CHECK(hamiltonian_parity(pg, e) == 0);
    auto k33 = complete_bipartite(3, 3);
    for (auto e : k33.edges) CHECK(hamiltonian_parity(k33, e) % 2 == 0);
    CHECK_THROWS_AS(hamiltonian_parity(complete_graph(5), {0, 1}), InvalidInput);
    CHECK(all_cubic_graphs(4).size() == 1);
    CHECK(all_cubic_graphs(6).size() == 70);
}

TEST_CASE("cores from orbit sums") {
    auto tom = tom_instance();
    auto G = tom_group(tom.ring);
    CHECK(G.order() == 36);
    auto te = tom_etas(tom);
    CHECK(G.orbit_size(te[0]) == 9);
    CHECK(G.orbit_size(te[1]) == 6);
    CHECK(G.orbit_size(te[2]) == 6);
    auto o3 = G.orbit(te[2]);
    auto listed = tom_o3(tom);
    for (const auto& x : listed) CHECK(std::find(o3.begin(), o3.end(), x) != o3.end());
    CHECK(tom_core(tom, {0}).size() == 16);

    auto jerry = jerry_instance();
    auto J = jerry_group(jerry.ring);
    auto je = jerry_etas(jerry);
    std::vector<size_t> sizes;
    for (const auto& e : je) sizes.push_back(J.orbit_size(e));
    CHECK(sizes == std::vector<size_t>{1, 3, 6, 2, 3});
    auto q = J.orbit(jerry_q(jerry)[0]);
    CHECK(q.size() == 3);

    auto c3 = char3_instance();
    auto S5 = s5_group(c3.ring);
    CHECK(S5.order() == 120);
    auto u = char3_u(c3, 3, 4, 5);
    auto L = P("z1_2*z1_5^3*z2_3*z2_4*z2_5*z3_4^3+z1_3*z1_4^3*z2_3*z2_5^3*z3_4*z3_5+z1_2*z1_3*z1_4*z1_5*z2_4^3*z3_5^3"
               "+z1_2*z1_4^3*z2_3*z2_4*z2_5*z3_5^3+z1_4*z1_5^3*z2_3^3*z2_4*z3_4*z4_5+z1_3^3*z1_4*z2_4*z2_5^3*z3_4*z4_5"
               "+z1_3^3*z1_5*z2_4^3*z2_5*z3_5*z4_5+z1_2^3*z1_5*z2_5*z3_4^3*z3_5*z4_5+z1_2*z1_3*z1_4*z1_5*z2_3^3*z4_5^3"
               "+z1_2^3*z1_3*z2_3*z3_4*z3_5*z4_5^3",
               c3);
    CHECK(u == L);
    CHECK(affine_subgroup(c3.ring, 3, 4, 5).order() == 20);
    CHECK(S5.orbit_size(u) == 6);
    CHECK(S5.stabilizer_order(u) == 20);
}

TEST_CASE("the solver reproduces the characteristic 2 Pfaffian core") {
    auto inst = pfaffian_instance(5, 2);
    auto cx = buchsbaum_eisenbud(inst.ring, inst.field);
    auto H0 = pfaffian_core(inst.ideal);
    gradedla::ChainMapConstraints<GF> cons;
    cons.top = gradedla::GradedMatrix<GF>{gradedla::FreeModule{{10}}, cx.modules[3], {{H0}}};
    auto g = Grading::fine(inst.ring->nvars(), inst.ideal);
    auto sol = gradedla::solve_chain_map(cx, cons, g);
    CHECK(sol.sat);
    if (sol.sat) CHECK(verify_chain_map(cx, sol.map).ok);
    cons.top->entries[0][0] = cx.zero_poly();
    CHECK_FALSE(gradedla::solve_chain_map(cx, cons, g).sat);
}

namespace {
bool solve_top(const Instance& inst, const PolyGF& h, uint32_t p, const std::vector<std::vector<int>>& tmpl) {
    auto g = Grading::fine(inst.ring->nvars(), inst.ideal);
    auto cx = gradedla::build_graded_resolution<GF>(inst.ring, inst.field, inst.ideal, 8, g, tmpl);
    gradedla::ChainMapConstraints<GF> cons;
    const int top = cx.modules.back().shifts[0];
    cons.top = gradedla::GradedMatrix<GF>{gradedla::FreeModule{{int(p) * top}}, cx.modules.back(), {{h}}};
    auto sol = gradedla::solve_chain_map(cx, cons, g);
    if (sol.sat) REQUIRE(verify_chain_map(cx, sol.map).ok);
    return sol.sat;
}
const std::vector<std::vector<int>> kCodim4{{0}, std::vector<int>(9, 2), std::vector<int>(16, 3), std::vector<int>(9, 4), {6}};
}  // namespace

TEST_CASE("cores of the codimension 4 examples and characteristic 3") {
    auto tom = tom_instance();
    CHECK(solve_top(tom, tom_core(tom, {0}), 2, kCodim4));
    CHECK(solve_top(tom, tom_core(tom, {0, 3, 5}), 2, kCodim4));
    CHECK_FALSE(solve_top(tom, tom_core(tom, {0, 1}), 2, kCodim4));

    auto jerry = jerry_instance();
    CHECK(solve_top(jerry, jerry_core(jerry, {1}), 2, kCodim4));
    CHECK(solve_top(jerry, jerry_core(jerry, {0, 1, 2}), 2, kCodim4));
    CHECK_FALSE(solve_top(jerry, jerry_core(jerry, {0, 2}), 2, kCodim4));
    // Swapping only x and t gives the same orbit sizes but no chain map.
    auto lit = jerry_group(jerry.ring, true);
    for (const auto& e : jerry_etas(jerry)) CHECK(lit.orbit_size(e) == jerry_group(jerry.ring).orbit_size(e));
    CHECK_FALSE(solve_top(jerry, jerry_core(jerry, {0}, true), 2, kCodim4));

    auto c3 = char3_instance();
    const std::vector<std::vector<int>> be5{{0}, std::vector<int>(5, 2), std::vector<int>(5, 3), {5}};
    CHECK(solve_top(c3, char3_core(c3, 3, 4, 5), 3, be5));
    CHECK(solve_top(c3, char3_core(c3, 4, 3, 5), 3, be5));
    CHECK_FALSE(solve_top(c3, c3.ideal[0].zero(), 3, be5));
}
