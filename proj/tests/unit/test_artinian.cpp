#include <doctest.h>

#include <random>

#include "frobvol/artinian/algebra.hpp"
#include "frobvol/artinian/certificates.hpp"
#include "frobvol/artinian/parseval.hpp"
#include "frobvol/pfaffcomb/cores.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/operators.hpp"
#include "frobvol/poly/text.hpp"

using namespace frobvol;
using namespace frobvol::artinian;
using coeff::FiniteField;
using coeff::Frac;
using coeff::FracField;
using coeff::GF;
using pfaffcomb::Instance;

namespace {

Instance coordinate_lines() {
    Instance inst;
    inst.field = &FiniteField::get(2);
    inst.ring = poly::Ring::make({"x1", "x2", "x3"});
    for (auto s : {"x2*x3", "x1*x3", "x1*x2"})
        inst.ideal.push_back(poly::parse_poly<GF>(s, inst.ring, inst.field));
    return inst;
}

Instance hypersurface_x2() {
    Instance inst;
    inst.field = &FiniteField::get(2);
    inst.ring = poly::Ring::make({"x", "y"});
    inst.ideal.push_back(poly::parse_poly<GF>("x^2", inst.ring, inst.field));
    return inst;
}

ArtinianAlgebra<GF> reduce(const Instance& inst, size_t nparams, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return *random_reduction(inst, FiniteField::get(2, 16), nparams, 20, rng).algebra;
}

}  // namespace

TEST_CASE("artinian reductions") {
    auto a = reduce(coordinate_lines(), 1, 3);
    CHECK(a.top_degree() == 1);
    CHECK(a.hilbert() == std::vector<size_t>{1, 2});
    CHECK_FALSE(a.is_gorenstein());

    auto m5 = pfaffcomb::pfaffian_instance(5, 2);
    auto b = reduce(m5, 7, 5);
    CHECK(b.hilbert() == std::vector<size_t>{1, 3, 1});
    CHECK(b.is_gorenstein());

    auto tom = pfaffcomb::tom_instance();
    CHECK(reduce(tom, 5, 1).hilbert() == std::vector<size_t>{1, 4, 1});
    auto jerry = pfaffcomb::jerry_instance();
    CHECK(reduce(jerry, 4, 1).hilbert() == std::vector<size_t>{1, 4, 1});

    auto ring = poly::Ring::make({"x1", "x2"});
    const auto* F = &FiniteField::get(2);
    auto x1 = poly::Poly<GF>::variable(ring, F, 0);
    CHECK_THROWS_AS(ArtinianAlgebra<GF>(ring, F, {}, {x1, x1}, 8), NotArtinianWithinBound);
}

TEST_CASE("normal forms and volumes") {
    auto m5 = pfaffcomb::pfaffian_instance(5, 2);
    auto A = reduce(m5, 7, 9);
    const int s = A.top_degree();
    auto V = volume(A);
    CHECK(vol_eval(V, poly::Poly<GF>(V.normalization()[0])).is_one());

    // Normal form is idempotent in every degree.
    std::mt19937_64 rng(1);
    const auto& K = *A.field();
    for (int d = 0; d <= s + 1; ++d) {
        poly::Poly<GF> f(A.reduced_ring(), &K);
        for (const auto& m : poly::monomials_of_degree(A.reduced_ring()->nvars(), uint32_t(d)))
            f += poly::Poly<GF>::term(A.reduced_ring(), &K, m, K.element(rng() % K.order()));
        auto nf = A.normal_form_reduced(f, d);
        CHECK(A.normal_form_reduced(nf, d) == nf);
    }

    // Vol vanishes on the ideal in degree s, and its kernel on the degree-s
    // monomials of the reduced ring has codimension one.
    auto ideal_elem = poly::extend_field(m5.ideal[0], K) * poly::Poly<GF>::variable(m5.ring, &K, 3).pow(uint32_t(s - 2));
    CHECK(V(ideal_elem).is_zero());
    const size_t monos = poly::monomials_of_degree(A.reduced_ring()->nvars(), uint32_t(s)).size();
    CHECK(A.quotient().ideal_dim(s) + 1 == monos);

    bool nonzero = false;
    for (const auto& m : poly::monomials_of_degree(m5.ring->nvars(), uint32_t(s)))
        nonzero = nonzero || !V(poly::Poly<GF>::term(m5.ring, &K, m, K.one())).is_zero();
    CHECK(nonzero);

    CHECK_THROWS_AS(volume(A, std::optional<poly::Poly<GF>>(ideal_elem)), DegenerateNormalization);
}

TEST_CASE("volume on the presented canonical module of three coordinate lines") {
    const auto& F2 = FiniteField::get(2);
    const auto& K = FracField::get(F2, {"a", "b", "c"});
    auto ring = poly::Ring::make({"x1", "x2", "x3"});
    auto P = [&](const std::string& s) { return poly::parse_poly<Frac>(s, ring, &K); };
    const auto zero = P("0");
    ModulePresentation<Frac> M{ring, &K, {-1, -1}, {{P("x3"), zero}, {P("x2"), P("x2")}, {zero, P("x1")}}};
    const auto ell = P("a*x1 + b*x2 + c*x3");
    auto V = volume_presented(M, {ell}, {zero, P("c*x3")});
    auto e = [&](const std::string& w, int j) {
        gradedla::ModuleElement<Frac> v{zero, zero};
        v[size_t(j - 1)] = P(w);
        return v;
    };
    const Frac a = K.variable("a"), b = K.variable("b"), c = K.variable("c");
    CHECK(V(e("x1", 1)) == a.inv());
    CHECK(V(e("x2", 1)) == b.inv());
    CHECK(V(e("x3", 1)).is_zero());
    CHECK(V(e("x1", 2)).is_zero());
    CHECK(V(e("x2", 2)) == b.inv());
    CHECK(V(e("x3", 2)) == c.inv());
    CHECK(V(e("x1", 1)) == a * V(e("x1", 1)).pow(2));

    const auto g = P("x1*x2*x3") * ell;
    auto rep = presented_parseval_check(M, V, {{g, zero}, {zero, g}});
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 6);

    // A wrong G breaks the identity.
    auto bad = presented_parseval_check(M, V, {{g, zero}, {zero, P("x1*x2*x3*b*x2")}});
    CHECK_FALSE(bad.pass);

    CHECK_THROWS_AS(volume_presented(M, {}, {zero, P("c*x3")}), DegenerateNormalization);
}

TEST_CASE("abstract Parseval identity on the 5x5 Pfaffian reduction") {
    auto m5 = pfaffcomb::pfaffian_instance(5, 2);
    auto H0 = pfaffcomb::pfaffian_core(pfaffcomb::submax_pfaffians(m5.ring, m5.field));
    ParsevalOptions opt;
    opt.nparams = 7;
    opt.trials = 3;
    auto rep = parseval_check_abstract(m5, H0, opt);
    CHECK(rep.pass);
    for (const auto& t : rep.trials) {
        CHECK(t.consistent);
        CHECK(t.renormalizable);
        CHECK(t.monomials == 55);
    }
    CHECK_NOTHROW(rep.require());

    opt.parallel = true;
    auto again = parseval_check_abstract(m5, H0, opt);
    for (size_t k = 0; k < rep.trials.size(); ++k) CHECK(again.trials[k].lambda == rep.trials[k].lambda);

    // Normalizing at c^{-1} z0 multiplies lambda by c^{1-p}.
    opt.parallel = false;
    opt.trials = 1;
    opt.normalization_scale = 12345;
    auto scaled = parseval_check_abstract(m5, H0, opt);
    const auto& K = FiniteField::get(2, 16);
    CHECK(scaled.trials[0].lambda_value == rep.trials[0].lambda_value * K.element(12345).inv());

    auto corrupted = H0 + poly::parse_poly<GF>("z1_2^5", m5.ring, m5.field);
    opt.normalization_scale = 1;
    auto bad = parseval_check_abstract(m5, corrupted, opt);
    CHECK_FALSE(bad.pass);
    CHECK_THROWS_AS(bad.require(), IdentityFails);
}

TEST_CASE("expanded and differential identities on a hypersurface") {
    auto inst = hypersurface_x2();
    auto H0 = inst.ideal[0];
    auto rep = parseval_check_expanded(inst, H0, {{0, 1}}, {"th1", "th2"});
    CHECK(rep.pass);
    CHECK(rep.hilbert == std::vector<size_t>{1, 1});
    CHECK(rep.rows.size() == 2);
    for (const auto& r : rep.rows) CHECK(r.agree);

    for (auto B : {std::vector<uint32_t>{1, 0}, std::vector<uint32_t>{0, 1}}) {
        auto d = differential_identity_check(inst, H0, {{0, 1}}, {B}, {"th1", "th2"});
        CHECK(d.pass);
        CHECK(d.pth_powers_constant);
    }
    CHECK_THROWS_AS(differential_identity_check(inst, H0, {{0, 1}}, {{1, 1}}, {"th1", "th2"}), InvalidInput);

    // With one linear parameter and s = 1 any core gives proportional sides,
    // so the negative control is the zero core.
    auto bad = parseval_check_expanded(inst, poly::parse_poly<GF>("0", inst.ring, inst.field), {{0, 1}}, {"th1", "th2"});
    CHECK_FALSE(bad.pass);
}

TEST_CASE("lefschetz ranks") {
    auto m5 = pfaffcomb::pfaffian_instance(5, 2);
    LefschetzOptions opt;
    opt.nparams = 7;
    auto rep = lefschetz_check(m5, opt);
    CHECK(rep.verdict == "CERTIFIED");

    auto A = reduce(m5, 7, 2);
    auto zero = poly::Poly<GF>(m5.ring, A.field());
    auto levels = lefschetz_ranks(A, zero);
    CHECK(levels[0].rank == 0);
    CHECK(lefschetz_report({LefschetzTrial{0, 0, A.hilbert(), levels}}).verdict == "NO-CERTIFICATE");

    // s = 0: the identity on A^0.
    auto ring = poly::Ring::make({"x"});
    const auto* F = &FiniteField::get(2, 16);
    auto x = poly::Poly<GF>::variable(ring, F, 0);
    ArtinianAlgebra<GF> point(ring, F, {}, {x}, 4);
    CHECK(point.top_degree() == 0);
    CHECK(lefschetz_report({LefschetzTrial{0, 0, point.hilbert(), lefschetz_ranks(point, x * F->zero())}}).verdict ==
          "CERTIFIED");
}

TEST_CASE("square decomposition and the semilinear anisotropy check") {
    const auto& K = FracField::get(FiniteField::get(2), {"t1", "t2"});
    auto f = K.make(poly::parse_poly<GF>("t1^3*t2 + t2^2 + 1", K.param_ring(), &K.base()),
                    poly::parse_poly<GF>("t1 + t2", K.param_ring(), &K.base()));
    auto parts = square_decomposition(f);
    REQUIRE(parts.size() == 4);
    Frac back = K.zero();
    for (size_t e = 0; e < 4; ++e) {
        Frac te = K.one();
        if (e & 1) te *= K.variable(0);
        if (e & 2) te *= K.variable(1);
        back += te * parts[e].pow(2);
    }
    CHECK(back == f);
    const auto& big = coeff::FiniteField::get(2, 16);
    std::vector<coeff::GF> pt{big.element(1234), big.element(777)};
    auto at = square_decomposition_at(f, pt);
    for (size_t e = 0; e < 4; ++e) CHECK(at[e] == coeff::evaluate(parts[e], pt));

    auto m5 = pfaffcomb::pfaffian_instance(5, 2);
    AnisotropyOptions opt;
    opt.nparams = 7;
    auto rep = anisotropy_semilinear_check(m5, opt);
    CHECK(rep.rows == 3);
    CHECK(rep.full_rank);
    CHECK(rep.label == "EVIDENCE");
    opt.r = 2;
    CHECK_THROWS_AS(anisotropy_semilinear_check(m5, opt), InsufficientTranscendentals);
}

TEST_CASE("quadratic values are additive and semilinear in characteristic 2") {
    auto m5 = pfaffcomb::pfaffian_instance(5, 2);
    auto A = reduce(m5, 7, 4);
    auto V = volume(A);
    const auto& K = *A.field();
    std::mt19937_64 rng(3);
    auto rnd = [&] { return K.element(rng() % K.order()); };
    auto basis = A.basis(1);
    auto ell = poly::Poly<GF>(A.reduced_ring(), &K);
    for (size_t v = 0; v < A.reduced_ring()->nvars(); ++v) ell += poly::Poly<GF>::variable(A.reduced_ring(), &K, v) * rnd();
    for (int trial = 0; trial < 5; ++trial) {
        poly::Poly<GF> u(A.reduced_ring(), &K), w(A.reduced_ring(), &K);
        for (const auto& b : basis) {
            u += b * rnd();
            w += b * rnd();
        }
        GF c = rnd();
        auto qu = quadratic_values(A, V, ell, 0, u);
        auto qw = quadratic_values(A, V, ell, 0, w);
        auto qs = quadratic_values(A, V, ell, 0, u + w);
        auto qc = quadratic_values(A, V, ell, 0, u * c);
        for (size_t k = 0; k < qu.size(); ++k) {
            CHECK(qs[k] == qu[k] + qw[k]);
            CHECK(qc[k] == c * c * qu[k]);
        }
    }
}
