#include "properties.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "frobvol/artinian/certificates.hpp"
#include "frobvol/artinian/parseval.hpp"
#include "frobvol/errors.hpp"
#include "frobvol/gradedla/resolution.hpp"
#include "frobvol/pfaffcomb/cores.hpp"
#include "frobvol/pfaffcomb/multigraph.hpp"
#include "frobvol/pfaffcomb/pfaffian.hpp"
#include "frobvol/poly/operators.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::props {

using coeff::FiniteField;
using coeff::GF;
using poly::Poly;
using PolyGF = Poly<GF>;
using Rng = std::mt19937_64;

namespace {

struct Tally {
    PropertyResult& r;
    void check(bool ok, const std::function<std::string()>& what) {
        ++r.cases;
        if (ok) return;
        if (r.failures++ == 0) r.first_failure = what();
    }
};

GF random_element(const FiniteField& F, Rng& rng) { return F.element(rng() % F.order()); }

PolyGF random_poly(const poly::RingPtr& R, const FiniteField& F, Rng& rng, size_t terms, uint32_t max_exp) {
    PolyGF f(R, &F);
    for (size_t t = 0; t < terms; ++t) {
        std::vector<poly::Exponent> e(R->nvars());
        for (auto& x : e) x = poly::Exponent(rng() % (max_exp + 1));
        f += PolyGF::term(R, &F, poly::Monomial(e), random_element(F, rng));
    }
    return f;
}

const std::vector<std::pair<uint32_t, uint32_t>> kFields{{2, 1}, {3, 1}, {5, 1}, {2, 8}, {3, 4}, {5, 2}};

void frobenius_homomorphism(Tally& t, Rng& rng, size_t scale) {
    auto R = poly::Ring::make({"x", "y", "z"});
    for (auto [p, k] : kFields) {
        const auto& F = FiniteField::get(p, k);
        for (size_t n = 0; n < 20 * scale; ++n) {
            GF a = random_element(F, rng), b = random_element(F, rng);
            t.check((a + b).pow(p) == a.pow(p) + b.pow(p) && (a * b).pow(p) == a.pow(p) * b.pow(p),
                    [&] { return "field " + F.name(); });
            t.check(a.pth_root().pow(p) == a && a.pow(p).pth_root() == a, [&] { return "p-th root in " + F.name(); });
            auto f = random_poly(R, F, rng, 4, 3), g = random_poly(R, F, rng, 4, 3);
            auto Fr = [](const PolyGF& h) { return poly::frobenius_power(h); };
            t.check(Fr(f + g) == Fr(f) + Fr(g) && Fr(f * g) == Fr(f) * Fr(g) && Fr(f) == f.pow(p),
                    [&] { return "F(" + poly::to_string(f) + ") over " + F.name(); });
        }
    }
}

void cartier_linearity(Tally& t, Rng& rng, size_t scale) {
    auto R = poly::Ring::make({"x", "y", "z"});
    for (auto [p, k] : kFields) {
        const auto& F = FiniteField::get(p, k);
        for (size_t n = 0; n < 10 * scale; ++n) {
            auto a = random_poly(R, F, rng, 3, 2), b = random_poly(R, F, rng, 3, 2);
            auto f = random_poly(R, F, rng, 6, 2 * p), g = random_poly(R, F, rng, 6, 2 * p);
            for (auto mode : {poly::SplitMode::Omega, poly::SplitMode::Shifted}) {
                auto S = [&](const PolyGF& h) { return poly::frobenius_split(h, mode); };
                auto lhs = S(poly::frobenius_power(a) * f + poly::frobenius_power(b) * g);
                t.check(lhs == a * S(f) + b * S(g), [&] { return "split of " + poly::to_string(f) + " over " + F.name(); });
            }
        }
    }
}

void leibniz_dk(Tally& t, Rng& rng, size_t scale) {
    for (auto [p, anti] : {std::pair{2u, false}, {3u, true}, {5u, true}}) {
        auto R = poly::Ring::edges("z", 5, anti);
        const auto& F = FiniteField::get(p);
        for (size_t n = 0; n < 10 * scale; ++n) {
            auto f = random_poly(R, F, rng, 4, 2), g = random_poly(R, F, rng, 4, 2);
            for (uint32_t k = 1; k <= 5; ++k) {
                auto D = [&](const PolyGF& h) { return poly::dk_operator(h, k); };
                t.check(D(f * g) == D(f) * g + f * D(g) && D(f + g) == D(f) + D(g),
                        [&] { return "D_" + std::to_string(k) + " on " + poly::to_string(f); });
            }
        }
    }
}

GF determinant(pfaffcomb::Matrix<GF> a) {
    const size_t n = a.size();
    GF d = a[0][0].one_like();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return d.zero_like();
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        const GF inv = a[c][c].inv();
        for (size_t r = c + 1; r < n; ++r) {
            const GF f = a[r][c] * inv;
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

void pfaffian_squared(Tally& t, Rng& rng, size_t scale) {
    for (auto [p, k] : kFields) {
        const auto& F = FiniteField::get(p, k);
        for (size_t n = 2; n <= 10; n += 2)
            for (size_t rep = 0; rep < 4 * scale; ++rep) {
                pfaffcomb::Matrix<GF> M(n, std::vector<GF>(n, F.zero()));
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j) {
                        M[i][j] = random_element(F, rng);
                        M[j][i] = -M[i][j];
                    }
                const GF pf = pfaffcomb::pfaffian(M, F.one());
                t.check(pf * pf == determinant(M), [&] { return "n = " + std::to_string(n) + " over " + F.name(); });
            }
    }
    // Symbolically on the generic 4x4 and 6x6 matrices over GF(3).
    for (uint32_t m : {4u, 6u}) {
        auto R = poly::Ring::edges("z", m, true);
        const auto& F3 = FiniteField::get(3);
        auto A = pfaffcomb::generic_alternating(R, &F3);
        auto pf = pfaffcomb::pfaffian(A, PolyGF(R, &F3).one());
        // Evaluate both sides at random points.
        for (size_t rep = 0; rep < 3 * scale; ++rep) {
            std::vector<GF> pt;
            for (size_t v = 0; v < R->nvars(); ++v) pt.push_back(random_element(F3, rng));
            pfaffcomb::Matrix<GF> M(m, std::vector<GF>(m, F3.zero()));
            for (uint32_t i = 0; i < m; ++i)
                for (uint32_t j = 0; j < m; ++j) M[i][j] = coeff::evaluate(A[i][j], pt);
            const GF v = coeff::evaluate(pf, pt);
            t.check(v * v == determinant(M), [&] { return "generic " + std::to_string(m) + "x" + std::to_string(m); });
        }
    }
}

void d_squared(Tally& t, Rng&, size_t) {
    auto check = [&](const gradedla::FreeComplex<GF>& cx, const std::string& label) {
        for (size_t i = 0; i + 1 < cx.d.size(); ++i) {
            auto prod = gradedla::multiply(cx.d[i], cx.d[i + 1]);
            bool zero = true;
            for (const auto& row : prod.entries)
                for (const auto& e : row) zero = zero && e.is_zero();
            t.check(zero, [&] { return label + ": d" + std::to_string(i + 1) + " d" + std::to_string(i + 2); });
        }
    };
    for (uint32_t p : {2u, 3u})
        for (uint32_t m : {3u, 5u, 7u, 9u}) {
            auto inst = pfaffcomb::pfaffian_instance(m, p);
            check(pfaffcomb::buchsbaum_eisenbud(inst.ring, inst.field),
                  "Buchsbaum-Eisenbud m=" + std::to_string(m) + " p=" + std::to_string(p));
        }
    const std::vector<std::vector<int>> codim4{{0}, std::vector<int>(9, 2), std::vector<int>(16, 3),
                                               std::vector<int>(9, 4), {6}};
    for (auto inst : {pfaffcomb::tom_instance(), pfaffcomb::jerry_instance()}) {
        auto g = gradedla::Grading::fine(inst.ring->nvars(), inst.ideal);
        check(gradedla::build_graded_resolution<GF>(inst.ring, inst.field, inst.ideal, 8, g, codim4),
              "computed codimension 4 resolution");
    }
}

void hilbert_symmetry(Tally& t, Rng& rng, size_t scale) {
    struct Case {
        pfaffcomb::Instance inst;
        size_t nparams;
    };
    std::vector<Case> cases{{pfaffcomb::pfaffian_instance(5, 2), 7}, {pfaffcomb::pfaffian_instance(7, 2), 18},
                            {pfaffcomb::pfaffian_instance(5, 3), 7}, {pfaffcomb::tom_instance(), 5},
                            {pfaffcomb::jerry_instance(), 4},        {pfaffcomb::char3_instance(), 7}};
    for (const auto& c : cases)
        for (size_t rep = 0; rep < 2 * scale; ++rep) {
            const auto& K = FiniteField::get(c.inst.field->characteristic(), c.inst.field->characteristic() == 2 ? 16 : 10);
            auto red = artinian::random_reduction(c.inst, K, c.nparams, 24, rng);
            const auto& h = red.algebra->hilbert();
            bool sym = red.algebra->is_gorenstein();
            for (size_t i = 0; i < h.size(); ++i) sym = sym && h[i] == h[h.size() - 1 - i];
            t.check(sym, [&] {
                std::string s;
                for (auto x : h) s += std::to_string(x) + " ";
                return "hilbert " + s;
            });
        }
}

void smith_parity(Tally& t, Rng&, size_t) {
    for (uint32_t n : {4u, 6u, 8u})
        for (const auto& g : pfaffcomb::all_cubic_graphs(n))
            for (const auto& e : g.edges) {
                const auto h = pfaffcomb::hamiltonian_parity(g, e);
                t.check(h % 2 == 0, [&] {
                    return std::to_string(h) + " Hamiltonian cycles through an edge of a cubic graph on " +
                           std::to_string(n) + " vertices";
                });
            }
    for (const auto& g : {pfaffcomb::petersen_graph(), pfaffcomb::complete_bipartite(3, 3)})
        for (const auto& e : g.edges) t.check(pfaffcomb::hamiltonian_parity(g, e) % 2 == 0, [] { return "named graph"; });
}

void q_semilinearity(Tally& t, Rng& rng, size_t scale) {
    const auto& K = FiniteField::get(2, 16);
    struct Case {
        pfaffcomb::Instance inst;
        size_t nparams;
    };
    for (const auto& c : {Case{pfaffcomb::pfaffian_instance(5, 2), 7}, Case{pfaffcomb::pfaffian_instance(7, 2), 18},
                          Case{pfaffcomb::tom_instance(), 5}}) {
        auto red = artinian::random_reduction(c.inst, K, c.nparams, 24, rng);
        const auto& A = *red.algebra;
        const auto V = artinian::volume(A);
        const auto ell = A.to_reduced(artinian::random_linear_forms(c.inst.ring, K, 1, rng)[0]);
        const int s = A.top_degree();
        for (int i = 1; 2 * i <= s; ++i)
            for (uint32_t k = 0; 2 * i + int(k) <= s; ++k) {
                const auto basis = A.basis(i);
                auto random_w = [&] {
                    PolyGF w(A.reduced_ring(), &K);
                    for (const auto& b : basis) w += b * random_element(K, rng);
                    return w;
                };
                for (size_t rep = 0; rep < 5 * scale; ++rep) {
                    auto w1 = random_w(), w2 = random_w();
                    const GF a = random_element(K, rng);
                    auto q1 = artinian::quadratic_values(A, V, ell, k, w1);
                    auto q2 = artinian::quadratic_values(A, V, ell, k, w2);
                    auto q12 = artinian::quadratic_values(A, V, ell, k, w1 + w2);
                    auto qa = artinian::quadratic_values(A, V, ell, k, w1 * a);
                    bool ok = true;
                    for (size_t j = 0; j < q1.size(); ++j)
                        ok = ok && q12[j] == q1[j] + q2[j] && qa[j] == a * a * q1[j];
                    t.check(ok, [&] { return "q at i=" + std::to_string(i) + " k=" + std::to_string(k); });
                }
            }
    }
}

using Body = std::function<void(Tally&, Rng&, size_t)>;

const std::vector<std::pair<std::string, Body>>& registry() {
    static const std::vector<std::pair<std::string, Body>> r{
        {"frobenius homomorphism", frobenius_homomorphism},
        {"cartier linearity", cartier_linearity},
        {"leibniz rule for D_k", leibniz_dk},
        {"pfaffian squared is the determinant", pfaffian_squared},
        {"d^2 = 0", d_squared},
        {"hilbert symmetry of Gorenstein reductions", hilbert_symmetry},
        {"smith parity on cubic graphs", smith_parity},
        {"semilinearity of q in characteristic 2", q_semilinearity},
    };
    return r;
}

PropertyResult run(const std::string& name, const Body& body, uint64_t seed, size_t scale) {
    PropertyResult r;
    r.name = name;
    Rng rng(seed);
    Tally t{r};
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t, rng, scale);
    } catch (const std::exception& e) {
        ++r.failures;
        if (r.first_failure.empty()) r.first_failure = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> out;
    for (const auto& [n, b] : registry()) out.push_back(n);
    return out;
}

PropertyResult run_one(const std::string& name, uint64_t seed, size_t scale) {
    for (const auto& [n, b] : registry())
        if (n == name) return run(n, b, seed, scale);
    throw InvalidInput("no property named " + name);
}

std::vector<PropertyResult> run_all(uint64_t seed, size_t scale) {
    std::vector<PropertyResult> out;
    for (const auto& [n, b] : registry()) out.push_back(run(n, b, seed, scale));
    return out;
}

}  // namespace frobvol::props
