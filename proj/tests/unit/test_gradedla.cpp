#include <doctest.h>

#include <random>

#include "frobvol/gradedla/chain.hpp"
#include "frobvol/gradedla/elimination.hpp"
#include "frobvol/gradedla/quotient.hpp"
#include "frobvol/gradedla/resolution.hpp"
#include "frobvol/poly/text.hpp"

using namespace frobvol;
using namespace frobvol::gradedla;
using coeff::FiniteField;
using coeff::Frac;
using coeff::FracField;
using coeff::GF;
using poly::Poly;
using poly::Ring;
using poly::RingPtr;

namespace {
Poly<GF> P(const std::string& s, const RingPtr& R, const FiniteField& F) { return poly::parse_poly<GF>(s, R, &F); }

FreeComplex<GF> koszul3(const RingPtr& R, const FiniteField& F) {
    auto x = [&](const char* s) { return P(s, R, F); };
    auto z = Poly<GF>(R, &F);
    FreeComplex<GF> cx{R, &F, {FreeModule{{0}}, FreeModule{{1, 1, 1}}, FreeModule{{2, 2, 2}}, FreeModule{{3}}}, {}};
    cx.d.push_back(GradedMatrix<GF>{cx.modules[1], cx.modules[0], {{x("x1"), x("x2"), x("x3")}}});
    // Columns are e23, e13, e12.
    cx.d.push_back(GradedMatrix<GF>{cx.modules[2], cx.modules[1],
                                    {{z, x("x3"), x("x2")}, {x("x3"), z, x("x1")}, {x("x2"), x("x1"), z}}});
    cx.d.push_back(GradedMatrix<GF>{cx.modules[3], cx.modules[2], {{x("x1")}, {x("x2")}, {x("x3")}}});
    return cx;
}
}  // namespace

TEST_CASE("graded pieces of quotients") {
    const auto& F2 = FiniteField::get(2);
    auto R2 = Ring::make({"x", "y"});
    auto q = GradedQuotient<GF>::ideal(R2, &F2, {P("x^2", R2, F2), P("x*y", R2, F2), P("y^2", R2, F2)});
    CHECK(q.dim(2) == 0);
    CHECK(q.dim(1) == 2);
    auto R3 = Ring::make({"x", "y", "z"});
    auto e = GradedQuotient<GF>::ideal(R3, &F2, {});
    CHECK(e.dim(2) == 6);

    // Normal forms are idempotent and kill the ideal.
    auto q3 = GradedQuotient<GF>::ideal(R3, &F2, {P("x*y+z^2", R3, F2), P("x^2", R3, F2)});
    ModuleElement<GF> f{P("x*y*z + y^3 + x^2*y", R3, F2)};
    auto nf = q3.normal_form(f, 3);
    CHECK(q3.normal_form(nf, 3) == nf);
    ModuleElement<GF> g{P("(x*y+z^2)*(x+y+z)", R3, F2)};
    CHECK(q3.normal_form(g, 3)[0].is_zero());
}

TEST_CASE("hilbert function with a generic linear form") {
    const auto& F = FiniteField::get(2, 16);
    auto R = Ring::make({"x1", "x2", "x3"});
    std::mt19937_64 rng(7);
    std::vector<Poly<GF>> gens{P("x2*x3", R, F), P("x1*x3", R, F), P("x1*x2", R, F)};
    Poly<GF> ell(R, &F);
    for (size_t i = 0; i < 3; ++i) ell += Poly<GF>::variable(R, &F, i) * F.element(rng() % F.order());
    gens.push_back(ell);
    CHECK(hilbert_function<GF>(R, &F, gens, 3) == std::vector<size_t>{1, 2, 0, 0});

    // Same over the rational function field with symbolic coefficients.
    const auto& K = FracField::get(FiniteField::get(2), {"a", "b", "c"});
    std::vector<Poly<Frac>> fg;
    for (auto s : {"x2*x3", "x1*x3", "x1*x2", "a*x1+b*x2+c*x3"}) fg.push_back(poly::parse_poly<Frac>(s, R, &K));
    CHECK(hilbert_function<Frac>(R, &K, fg, 2) == std::vector<size_t>{1, 2, 0});
}

TEST_CASE("fraction-free elimination agrees with specialization") {
    const auto& K = FracField::get(FiniteField::get(3), {"a", "b"});
    auto R = Ring::make({"x", "y", "z"});
    auto f = [&](const char* s) { return poly::parse_poly<Frac>(s, R, &K); };
    auto q = GradedQuotient<Frac>::ideal(R, &K, {f("a*x^2 + b*y*z"), f("x*y - a*z^2"), f("(a+b)*x*z + y^2")});
    auto h = q.hilbert_function(0, 4);
    const auto& F = FiniteField::get(3, 6);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 3; ++t) {
        std::vector<GF> pt{F.element(1 + rng() % (F.order() - 1)), F.element(1 + rng() % (F.order() - 1))};
        std::vector<Poly<GF>> g;
        for (auto s : {"a*x^2 + b*y*z", "x*y - a*z^2", "(a+b)*x*z + y^2"}) g.push_back(poly::specialize(f(s), pt));
        CHECK(GradedQuotient<GF>::ideal(R, &F, g).hilbert_function(0, 4) == h);
    }
}

TEST_CASE("koszul complex is exact and a corrupted copy is caught") {
    const auto& F = FiniteField::get(2);
    auto R = Ring::make({"x1", "x2", "x3"});
    auto cx = koszul3(R, F);
    std::vector<Poly<GF>> ideal{P("x1", R, F), P("x2", R, F), P("x3", R, F)};
    auto rep = verify_complex(cx, ideal, 6, true, Grading::standard(3));
    CHECK(rep.ok);

    auto bad = cx;
    bad.d[1].entries[0][1] = P("x1", R, F);
    auto r2 = verify_complex(bad, ideal, 6, true, Grading::standard(3));
    CHECK_FALSE(r2.ok);
    REQUIRE_FALSE(r2.failures.empty());
    CHECK(r2.failures[0].find("d_1*d_2") != std::string::npos);

    auto trunc = cx;
    trunc.d.pop_back();
    trunc.modules.pop_back();
    CHECK_FALSE(verify_complex(trunc, ideal, 4, true, Grading::standard(3)).ok);
}

TEST_CASE("resolutions built from kernels") {
    const auto& F = FiniteField::get(2);
    auto R = Ring::make({"x", "y"});
    auto cx = build_graded_resolution<GF>(R, &F, {P("x", R, F), P("y", R, F)}, 6, Grading::standard(2));
    REQUIRE(cx.modules.size() == 3);
    CHECK(cx.modules[1].shifts == std::vector<int>{1, 1});
    CHECK(cx.modules[2].shifts == std::vector<int>{2});
    CHECK(verify_complex(cx, {P("x", R, F), P("y", R, F)}, 6, true, Grading::standard(2)).ok);

    std::vector<Poly<GF>> g{P("x^2", R, F), P("x*y", R, F), P("y^2", R, F)};
    auto c2 = build_graded_resolution<GF>(R, &F, g, 8, Grading::fine(2, g), std::vector<std::vector<int>>{{0}, {2, 2, 2}, {3, 3}});
    CHECK(verify_complex(c2, g, 8, true, Grading::standard(2)).ok);
    CHECK_THROWS_AS(build_graded_resolution<GF>(R, &F, g, 8, Grading::standard(2),
                                                 std::vector<std::vector<int>>{{0}, {2, 2, 2}, {3, 4}}),
                    TemplateMismatch);
}

TEST_CASE("chain map solving on the koszul complex") {
    const auto& F = FiniteField::get(2);
    auto R = Ring::make({"x1", "x2", "x3"});
    auto cx = koszul3(R, F);
    ChainMapConstraints<GF> cons;
    auto sol = solve_chain_map(cx, cons, Grading::standard(3));
    REQUIRE(sol.sat);
    CHECK(verify_chain_map(cx, sol.map, true).ok);
    // The top level is the socle generator (x1 x2 x3)^{p-1} up to boundaries.
    CHECK(sol.map.levels.back().entries[0][0] == P("x1*x2*x3", R, F));

    cons.top = GradedMatrix<GF>::zero(FreeModule{{6}}, cx.modules[3], Poly<GF>(R, &F));
    auto unsat = solve_chain_map(cx, cons, Grading::standard(3));
    CHECK_FALSE(unsat.sat);
    CHECK_FALSE(unsat.witness.empty());
}
