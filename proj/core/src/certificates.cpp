#include "frobvol/artinian/certificates.hpp"

#include <algorithm>
#include <random>

#include "frobvol/poly/operators.hpp"

namespace frobvol::artinian {

using coeff::FiniteField;
using coeff::Frac;
using coeff::FracField;
using coeff::GF;

LefschetzReport lefschetz_report(std::vector<LefschetzTrial> trials) {
    LefschetzReport rep;
    rep.trials = std::move(trials);
    for (const auto& t : rep.trials) {
        if (rep.certified.size() < t.levels.size()) rep.certified.resize(t.levels.size(), false);
        for (size_t l = 0; l < t.levels.size(); ++l)
            if (t.levels[l].full()) rep.certified[l] = true;
    }
    bool all = !rep.certified.empty();
    for (bool c : rep.certified) all = all && c;
    rep.verdict = all ? "CERTIFIED" : "NO-CERTIFICATE";
    return rep;
}

LefschetzReport lefschetz_check(const pfaffcomb::Instance& inst, const LefschetzOptions& opt) {
    const FiniteField& K = FiniteField::get(inst.field->characteristic(), opt.ext_degree);
    std::vector<LefschetzTrial> trials;
    for (size_t k = 0; k < opt.trials; ++k) {
        LefschetzTrial t;
        t.seed = opt.seed + k;
        std::mt19937_64 rng(t.seed);
        auto red = random_reduction(inst, K, opt.nparams, opt.degree_bound, rng);
        t.redraws = red.redraws;
        t.hilbert = red.algebra->hilbert();
        auto ell = random_linear_forms(inst.ring, K, 1, rng)[0];
        t.levels = lefschetz_ranks(*red.algebra, ell);
        trials.push_back(std::move(t));
    }
    return lefschetz_report(std::move(trials));
}

namespace {

using PolyT = poly::Poly<GF>;

// g = sum over eps of t^eps g_eps^2; needs a perfect base field.
std::vector<PolyT> square_parts(const PolyT& g, size_t r) {
    std::vector<std::vector<PolyT::Term>> parts(size_t(1) << r);
    for (const auto& [m, c] : g.terms()) {
        size_t eps = 0;
        std::vector<poly::Exponent> half(r);
        for (size_t i = 0; i < r; ++i) {
            if (m[i] & 1) eps |= size_t(1) << i;
            half[i] = poly::Exponent(m[i] / 2);
        }
        parts[eps].emplace_back(poly::Monomial(half), c.pth_root());
    }
    std::vector<PolyT> out;
    for (auto& ts : parts) out.push_back(PolyT::from_terms(g.ring(), g.field(), std::move(ts)));
    return out;
}

PolyT t_power(const FracField& K, size_t mask) {
    std::vector<poly::Exponent> e(K.nvars());
    for (size_t i = 0; i < e.size(); ++i) e[i] = poly::Exponent((mask >> i) & 1);
    return PolyT::term(K.param_ring(), &K.base(), poly::Monomial(e), K.base().one());
}

}  // namespace

// With N = sum t^a N_a^2 and D = sum t^b D_b^2, f = N D / D^2 has
// f_eps = sum over a xor b = eps of t^(a and b) N_a D_b / D.
std::vector<Frac> square_decomposition(const Frac& f) {
    const FracField& K = *f.field();
    if (K.characteristic() != 2) throw InvalidInput("square decomposition is implemented in characteristic 2");
    const size_t r = K.nvars();
    const auto n = square_parts(f.num(), r);
    const auto d = square_parts(f.den(), r);
    std::vector<PolyT> acc(n.size(), PolyT(K.param_ring(), &K.base()));
    for (size_t a = 0; a < n.size(); ++a) {
        if (n[a].is_zero()) continue;
        for (size_t b = 0; b < d.size(); ++b)
            if (!d[b].is_zero()) acc[a ^ b] += t_power(K, a & b) * n[a] * d[b];
    }
    std::vector<Frac> out;
    for (auto& x : acc) out.push_back(K.make(std::move(x), f.den()));
    return out;
}

// Values of the parts f_eps at a point, without expanding them.
std::vector<GF> square_decomposition_at(const Frac& f, const std::vector<GF>& point) {
    const size_t r = point.size();
    const FiniteField& F = *point[0].field();
    GF den = coeff::evaluate(f.den(), point);
    if (den.is_zero()) throw DegenerateInstance("denominator vanishes at the point");
    std::vector<GF> nv, dv;
    for (const auto& x : square_parts(f.num(), r)) nv.push_back(coeff::evaluate(x, point));
    for (const auto& x : square_parts(f.den(), r)) dv.push_back(coeff::evaluate(x, point));
    std::vector<GF> out(nv.size(), F.zero());
    for (size_t a = 0; a < nv.size(); ++a)
        for (size_t b = 0; b < dv.size(); ++b) {
            GF c = nv[a] * dv[b];
            for (size_t i = 0; i < r; ++i)
                if ((a & b) >> i & 1) c = c * point[i];
            out[a ^ b] += c;
        }
    for (auto& x : out) x = x / den;
    return out;
}

namespace {

// Random monomial in t_1..t_r with exponents in [0, max_exponent].
poly::Poly<GF> random_monomial(const FracField& K, uint32_t max_exponent, std::mt19937_64& rng) {
    std::vector<poly::Exponent> e(K.nvars());
    for (auto& x : e) x = poly::Exponent(rng() % (max_exponent + 1));
    return poly::Poly<GF>::term(K.param_ring(), &K.base(), poly::Monomial(e), K.base().one());
}

}  // namespace

AnisotropyReport anisotropy_semilinear_check(const pfaffcomb::Instance& inst, const AnisotropyOptions& opt) {
    if (inst.field->characteristic() != 2) throw InvalidInput("the semilinear check needs p = 2");
    if (opt.r == 0 || opt.r > 12) throw InvalidInput("r must be in 1..12");
    std::vector<std::string> tnames;
    for (uint32_t i = 1; i <= opt.r; ++i) tnames.push_back("t" + std::to_string(i));
    const FracField& K = FracField::get(*inst.field, tnames);
    const size_t n = inst.ring->nvars();
    std::vector<PolyFrac> ideal;
    for (const auto& g : inst.ideal) ideal.push_back(poly::to_fraction_field(g, K));

    AnisotropyReport rep;
    std::mt19937_64 rng(opt.seed);
    const FiniteField& big = FiniteField::get(2, 16);
    std::optional<ArtinianAlgebra<Frac>> A;
    std::vector<PolyFrac> forms;
    PolyFrac ell(inst.ring, &K);
    // Parameter forms in solved shape x_{j} + sum over the free variables of
    // monomials in t times x_v; a generic parameter space has such a basis,
    // and the elimination stays polynomial in t.
    if (opt.nparams >= n) throw InvalidInput("more parameters than variables");
    auto coefficient = [&](const std::string& label) {
        auto m = random_monomial(K, opt.max_exponent, rng);
        rep.plan.push_back(label + " -> " + coeff::format_base_poly(m));
        return K.from_poly(m);
    };
    for (;; ++rep.redraws) {
        rep.plan.clear();
        forms.clear();
        for (size_t j = 0; j < opt.nparams; ++j) {
            PolyFrac f = PolyFrac::variable(inst.ring, &K, j);
            for (size_t v = opt.nparams; v < n; ++v)
                f += PolyFrac::variable(inst.ring, &K, v) *
                     coefficient("l" + std::to_string(j + 1) + "," + inst.ring->name(v));
            forms.push_back(std::move(f));
        }
        ell = PolyFrac(inst.ring, &K);
        for (size_t v = 0; v < n; ++v)
            ell += PolyFrac::variable(inst.ring, &K, v) * coefficient("ell," + inst.ring->name(v));
        // Find the top degree at a random point of GF(2^16)^r; pieces can only
        // grow under specialization, so a zero piece there is zero here.
        gradedla::LinearElimination<Frac> elim(inst.ring, &K, forms);
        std::vector<GF> point;
        for (size_t i = 0; i < opt.r; ++i) point.push_back(big.element(1 + rng() % (big.order() - 1)));
        std::vector<PolyGF> special;
        for (const auto& g : ideal) special.push_back(poly::specialize(elim.apply(g), point));
        auto numeric = gradedla::GradedQuotient<GF>::ideal(elim.reduced_ring(), &big, special);
        int top = -1;
        for (int d = 0; d <= opt.degree_bound; ++d)
            if (numeric.dim(d) == 0) {
                top = d - 1;
                break;
            }
        try {
            if (top < 0) throw NotArtinianWithinBound("no zero piece at the specialization");
            A.emplace(inst.ring, &K, ideal, forms, opt.degree_bound, top);
            if (A->hilbert() != numeric.hilbert_function(0, top)) throw NotArtinianWithinBound("rank drop");
            break;
        } catch (const NotArtinianWithinBound&) {
            if (rep.redraws >= 16) throw;
        }
    }
    rep.hilbert = A->hilbert();
    const int s = A->top_degree();
    if (2 * int(opt.i) + int(opt.k) > s) throw InvalidInput("need 2i + k <= s");
    const size_t di = A->dim(int(opt.i));
    uint32_t need = 1;
    while ((size_t(1) << (need - 1)) < di) ++need;  // ceil(log2 di) + 1
    if (di <= 1) need = 1;
    if (opt.r < need)
        throw InsufficientTranscendentals("dim A^i = " + std::to_string(di) + " needs r >= " + std::to_string(need));

    const auto V = volume(*A);
    const auto l = A->to_reduced(ell);
    const auto basis = A->basis(int(opt.i));
    const size_t ncomp = A->dim(s - 2 * int(opt.i) - int(opt.k));
    const size_t nparts = size_t(1) << opt.r;
    rep.rows = basis.size();
    rep.cols = ncomp * nparts;
    std::vector<std::vector<Frac>> entries;
    for (const auto& w : basis) {
        entries.push_back(quadratic_values(*A, V, l, opt.k, w));
        for (size_t c = 0; c < entries.back().size(); ++c)
            rep.values.push_back("q(" + poly::to_string(w) + ")[" + std::to_string(c) +
                                 "] = " + entries.back()[c].to_string());
    }
    // Rank over F_2(t) is at least the rank at any point where the
    // denominators survive, and equals it at a generic point.
    for (int attempt = 0; attempt < 8 && rep.rank < rep.rows; ++attempt) {
        std::vector<GF> point;
        for (size_t i = 0; i < opt.r; ++i) point.push_back(big.element(rng() % big.order()));
        std::vector<gradedla::SparseVec<GF>> rows;
        try {
            for (const auto& row : entries) {
                gradedla::SparseVec<GF> v;
                for (size_t c = 0; c < row.size(); ++c) {
                    if (row[c].is_zero()) continue;
                    auto parts = square_decomposition_at(row[c], point);
                    for (size_t e = 0; e < nparts; ++e)
                        if (!parts[e].is_zero()) v.emplace_back(uint32_t(c * nparts + e), parts[e]);
                }
                rows.push_back(std::move(v));
            }
        } catch (const DegenerateInstance&) {
            continue;
        }
        rep.rank = std::max(rep.rank, gradedla::rank_of(rows, uint32_t(rep.cols), big.zero()));
    }
    rep.full_rank = rep.rank == rep.rows;
    rep.label = rep.full_rank ? "EVIDENCE" : "NO-EVIDENCE";
    return rep;
}

}  // namespace frobvol::artinian
