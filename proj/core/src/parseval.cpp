#include "frobvol/artinian/parseval.hpp"

#include <future>
#include <map>
#include <numeric>

#include "frobvol/poly/operators.hpp"

namespace frobvol::artinian {

using coeff::FiniteField;
using coeff::Frac;
using coeff::FracField;
using coeff::GF;
using poly::Monomial;

std::vector<PolyGF> random_linear_forms(const poly::RingPtr& ring, const FiniteField& field, size_t count,
                                        std::mt19937_64& rng) {
    std::vector<PolyGF> out;
    for (size_t k = 0; k < count; ++k) {
        PolyGF f(ring, &field);
        for (size_t i = 0; i < ring->nvars(); ++i)
            f += PolyGF::variable(ring, &field, i) * field.element(rng() % field.order());
        out.push_back(std::move(f));
    }
    return out;
}

Reduction random_reduction(const pfaffcomb::Instance& inst, const FiniteField& field, size_t nparams,
                           int degree_bound, std::mt19937_64& rng, size_t max_redraws) {
    std::vector<PolyGF> ideal;
    for (const auto& g : inst.ideal) ideal.push_back(poly::extend_field(g, field));
    Reduction red;
    for (;; ++red.redraws) {
        red.forms = random_linear_forms(inst.ring, field, nparams, rng);
        try {
            red.algebra.emplace(inst.ring, &field, ideal, red.forms, degree_bound);
            return red;
        } catch (const NotArtinianWithinBound&) {
            if (red.redraws >= max_redraws) throw;
        }
    }
}

bool is_kth_power(const GF& x, uint64_t k) {
    if (x.is_zero() || k <= 1) return true;
    const uint64_t q1 = x.field()->order() - 1;
    const uint64_t g = std::gcd(k, q1);
    return x.pow(q1 / g).is_one();
}

void ParsevalReport::require() const {
    for (const auto& t : trials) {
        if (t.failure.empty()) continue;
        if (t.failure.rfind("DegenerateInstance", 0) == 0) throw DegenerateInstance(t.failure);
        throw IdentityFails(t.failure);
    }
}

ParsevalTrial parseval_trial(const pfaffcomb::Instance& inst, const PolyGF& H0, const ParsevalOptions& opt,
                             uint64_t seed) {
    const uint32_t p = inst.field->characteristic();
    const FiniteField& K = FiniteField::get(p, opt.ext_degree);
    ParsevalTrial t;
    t.seed = seed;
    std::mt19937_64 rng(seed);
    Reduction red;
    try {
        red = random_reduction(inst, K, opt.nparams, opt.degree_bound, rng);
    } catch (const NotArtinianWithinBound& e) {
        t.failure = std::string("DegenerateInstance: ") + e.what();
        return t;
    }
    const auto& A = *red.algebra;
    t.redraws = red.redraws;
    t.hilbert = A.hilbert();
    t.top_degree = A.top_degree();
    if (!A.is_gorenstein()) {
        t.failure = "DegenerateInstance: socle has dimension " + std::to_string(A.hilbert().back());
        return t;
    }
    const GF c = K.element(opt.normalization_scale);
    if (c.is_zero()) throw InvalidInput("normalization scale must be nonzero");
    const auto V = volume(A, std::optional<PolyGF>(default_normalization(A) * c.inv()));

    PolyGF L = PolyGF(inst.ring, &K).one();
    for (const auto& f : red.forms) L = L * f.pow(p - 1);
    const PolyGF G = L * poly::extend_field(H0, K);

    // Only terms with a = -1 - w (mod p) survive the split of G w x^1, so
    // bucket G by exponent residues once.
    std::map<std::vector<uint8_t>, std::vector<PolyGF::Term>> buckets;
    for (const auto& term : G.terms()) {
        std::vector<uint8_t> key(term.first.nvars());
        for (size_t i = 0; i < key.size(); ++i) key[i] = uint8_t(term.first[i] % p);
        buckets[key].push_back(term);
    }
    std::map<std::vector<uint8_t>, PolyGF> bucket_polys;
    for (auto& [key, ts] : buckets) bucket_polys.emplace(key, PolyGF::from_sorted_terms(inst.ring, &K, std::move(ts)));

    std::optional<GF> lambda;
    t.consistent = true;
    for (const auto& w : poly::monomials_of_degree(inst.ring->nvars(), uint32_t(A.top_degree()))) {
        ++t.monomials;
        std::vector<uint8_t> key(w.nvars());
        for (size_t i = 0; i < key.size(); ++i) key[i] = uint8_t((2 * p - 1 - w[i] % p) % p);
        GF rhs = K.zero();
        if (auto it = bucket_polys.find(key); it != bucket_polys.end()) {
            PolyGF u = poly::split_shifted_product(it->second, w, poly::SplitMode::Shifted);
            if (!u.is_zero()) rhs = V(u).pow(p);
        }
        const PolyGF wp = PolyGF::term(inst.ring, &K, w, K.one());
        const GF lhs = V(wp);
        if (lhs.is_zero() && rhs.is_zero()) continue;
        auto witness = [&] {
            return "w = " + poly::to_string(wp) + ", Vol(w) = " + lhs.to_string() +
                   ", Vol(split)^p = " + rhs.to_string();
        };
        if (lhs.is_zero() || rhs.is_zero()) {
            t.consistent = false;
            t.failure = "IdentityFails: " + witness();
            break;
        }
        ++t.nonzero;
        GF l = lhs / rhs;
        if (!lambda) {
            lambda = l;
        } else if (*lambda != l) {
            t.consistent = false;
            t.failure = "IdentityFails: lambda " + l.to_string() + " != " + lambda->to_string() + " at " + witness();
            break;
        }
    }
    if (t.consistent && !lambda) {
        t.consistent = false;
        t.failure = "DegenerateInstance: every degree-s volume vanishes";
    }
    if (lambda) {
        t.lambda = lambda->to_string();
        t.lambda_value = *lambda;
        t.renormalizable = is_kth_power(*lambda, p - 1);
        if (t.consistent && !t.renormalizable)
            t.failure = "IdentityFails: lambda " + t.lambda + " is not a (p-1)-st power";
    }
    return t;
}

ParsevalReport parseval_check_abstract(const pfaffcomb::Instance& inst, const PolyGF& H0, const ParsevalOptions& opt) {
    if (opt.nparams == 0) throw InvalidInput("parameter count is required");
    ParsevalReport rep;
    rep.trials.resize(opt.trials);
    if (opt.parallel) {
        std::vector<std::future<ParsevalTrial>> fs;
        for (size_t k = 0; k < opt.trials; ++k)
            fs.push_back(std::async(std::launch::async, [&, k] { return parseval_trial(inst, H0, opt, opt.seed + k); }));
        for (size_t k = 0; k < opt.trials; ++k) rep.trials[k] = fs[k].get();
    } else {
        for (size_t k = 0; k < opt.trials; ++k) rep.trials[k] = parseval_trial(inst, H0, opt, opt.seed + k);
    }
    rep.pass = !rep.trials.empty();
    for (const auto& t : rep.trials) rep.pass = rep.pass && t.failure.empty();
    return rep;
}

SymbolicForms symbolic_forms(const poly::RingPtr& ring, const FiniteField& base,
                             const std::vector<std::vector<size_t>>& blocks, std::vector<std::string> names) {
    SymbolicForms sf;
    sf.blocks = blocks;
    if (names.empty())
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t v : blocks[i]) names.push_back("th" + std::to_string(i + 1) + "_" + ring->name(v));
    sf.field = &FracField::get(base, names);
    size_t k = 0;
    for (const auto& b : blocks) {
        PolyFrac f(ring, sf.field);
        std::vector<size_t> idx;
        for (size_t v : b) {
            if (k >= names.size()) throw IncompletePlan("fewer parameter names than block entries");
            f += PolyFrac::variable(ring, sf.field, v) * sf.field->variable(k);
            idx.push_back(k++);
        }
        sf.forms.push_back(std::move(f));
        sf.theta_index.push_back(std::move(idx));
    }
    if (k != names.size()) throw IncompletePlan("more parameter names than block entries");
    return sf;
}

namespace {

// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
std::vector<std::vector<uint32_t>> compositions(size_t parts, uint32_t total) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(parts, 0);
    std::function<void(size_t, uint32_t)> rec = [&](size_t i, uint32_t left) {
        if (i + 1 == parts) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (uint32_t a = 0; a <= left; ++a) {
            cur[i] = a;
            rec(i + 1, left - a);
        }
    };
    if (parts) rec(0, total);
    return out;
}

// Symbolic reduction with generic forms, shared by the expanded and
// differential checks.
struct SymbolicSetup {
    SymbolicForms sf;
    std::optional<ArtinianAlgebra<Frac>> A;
    std::optional<VolumeFunctional<Frac>> V;
    uint32_t p = 0;
    std::map<Monomial, Frac> vol_cache;

    Frac vol(const Monomial& m) {
        auto it = vol_cache.find(m);
        if (it != vol_cache.end()) return it->second;
        Frac v = (*V)(PolyFrac::term(A->ring(), sf.field, m, sf.field->one()));
        vol_cache.emplace(m, v);
        return v;
    }
    int sign() const { return sf.blocks.size() % 2 ? -1 : 1; }

    // (-1)^t sum over B of theta^B / B! * Vol(Phi(y^B H0 w x^1))^p, one
    // entry per B in the order of `all_B()`.
    std::vector<std::vector<std::vector<uint32_t>>> all_B() const {
        std::vector<std::vector<std::vector<uint32_t>>> out{{}};
        for (const auto& b : sf.blocks) {
            std::vector<std::vector<std::vector<uint32_t>>> next;
            for (const auto& prefix : out)
                for (const auto& c : compositions(b.size(), p - 1)) {
                    auto e = prefix;
                    e.push_back(c);
                    next.push_back(std::move(e));
                }
            out = std::move(next);
        }
        return out;
    }
    // Vol(Phi(y^B H0 w x^1))^p with coefficients in F_p.
    Frac phi_term(const PolyGF& H0, const std::vector<std::vector<uint32_t>>& B, const Monomial& w) {
        std::vector<poly::Exponent> e(H0.nvars(), 0);
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t k = 0; k < B[i].size(); ++k) e[sf.blocks[i][k]] = poly::Exponent(e[sf.blocks[i][k]] + B[i][k]);
        PolyGF f = H0.mul_monomial(Monomial(e) * w, H0.field()->one());
        PolyFrac g = poly::to_fraction_field(f, *sf.field);
        return frobenius_pairing(g, p, [&](const Monomial& mu) { return vol(mu); });
    }
    Frac theta_over_factorial(const std::vector<std::vector<uint32_t>>& B) const {
        Frac c = sf.field->one();
        int64_t fact = 1;
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t k = 0; k < B[i].size(); ++k) {
                c *= sf.field->variable(sf.theta_index[i][k]).pow(B[i][k]);
                for (uint32_t a = 2; a <= B[i][k]; ++a) fact *= a;
            }
        return c / sf.field->from_integer(fact);
    }
};

SymbolicSetup make_setup(const pfaffcomb::Instance& inst, const std::vector<std::vector<size_t>>& blocks,
                         const std::vector<std::string>& names, int degree_bound) {
    SymbolicSetup S;
    S.p = inst.field->characteristic();
    S.sf = symbolic_forms(inst.ring, *inst.field, blocks, names);
    std::vector<PolyFrac> ideal;
    for (const auto& g : inst.ideal) ideal.push_back(poly::to_fraction_field(g, *S.sf.field));
    S.A.emplace(inst.ring, S.sf.field, ideal, S.sf.forms, degree_bound);
    S.V.emplace(volume(*S.A));
    return S;
}

}  // namespace

ExpandedReport parseval_check_expanded(const pfaffcomb::Instance& inst, const PolyGF& H0,
                                       const std::vector<std::vector<size_t>>& blocks,
                                       const std::vector<std::string>& names, int degree_bound) {
    ExpandedReport rep;
    SymbolicSetup S = make_setup(inst, blocks, names, degree_bound);
    const FracField& K = *S.sf.field;
    rep.hilbert = S.A->hilbert();
    rep.top_degree = S.A->top_degree();
    PolyFrac L = PolyFrac(inst.ring, &K).one();
    for (const auto& f : S.sf.forms) L = L * f.pow(S.p - 1);
    const PolyFrac G = L * poly::to_fraction_field(H0, K);
    const auto Bs = S.all_B();

    std::optional<Frac> lambda;
    rep.pass = true;
    for (const auto& w : poly::monomials_of_degree(inst.ring->nvars(), uint32_t(rep.top_degree))) {
        ExpandedRow row;
        const PolyFrac wp = PolyFrac::term(inst.ring, &K, w, K.one());
        row.w = poly::to_string(wp);
        Frac lhs = S.vol(w);
        Frac abs = frobenius_pairing(G.mul_monomial(w, K.one()), S.p, [&](const Monomial& mu) { return S.vol(mu); });
        Frac exp = K.zero();
        for (const auto& B : Bs) exp += S.theta_over_factorial(B) * S.phi_term(H0, B, w);
        if (S.sign() < 0) exp = -exp;
        row.vol = lhs.to_string();
        row.abstract = abs.to_string();
        row.expanded = exp.to_string();
        row.agree = abs == exp;
        if (!row.agree && rep.failure.empty()) rep.failure = "IdentityFails: expanded and abstract sums differ at " + row.w;
        if (lhs.is_zero() != exp.is_zero()) {
            if (rep.failure.empty()) rep.failure = "IdentityFails: exactly one side vanishes at " + row.w;
        } else if (!lhs.is_zero()) {
            Frac l = lhs / exp;
            if (!lambda)
                lambda = l;
            else if (*lambda != l && rep.failure.empty())
                rep.failure = "IdentityFails: lambda " + l.to_string() + " != " + lambda->to_string() + " at " + row.w;
        }
        rep.rows.push_back(std::move(row));
    }
    if (!lambda && rep.failure.empty()) rep.failure = "DegenerateInstance: every degree-s volume vanishes";
    if (lambda) rep.lambda = lambda->to_string();
    rep.pass = rep.failure.empty();
    return rep;
}

DifferentialReport differential_identity_check(const pfaffcomb::Instance& inst, const PolyGF& H0,
                                               const std::vector<std::vector<size_t>>& blocks,
                                               const std::vector<std::vector<uint32_t>>& B,
                                               const std::vector<std::string>& names, int degree_bound) {
    DifferentialReport rep;
    SymbolicSetup S = make_setup(inst, blocks, names, degree_bound);
    const FracField& K = *S.sf.field;
    if (B.size() != blocks.size()) throw InvalidInput("derivative orders must be given per block");
    for (size_t i = 0; i < B.size(); ++i) {
        if (B[i].size() != blocks[i].size()) throw InvalidInput("derivative orders must be given per block entry");
        if (std::accumulate(B[i].begin(), B[i].end(), 0u) != S.p - 1)
            throw InvalidInput("derivative orders in a block must sum to p-1");
    }

    // lambda between the socle volume and the exact normalization.
    PolyFrac L = PolyFrac(inst.ring, &K).one();
    for (const auto& f : S.sf.forms) L = L * f.pow(S.p - 1);
    const PolyFrac G = L * poly::to_fraction_field(H0, K);
    std::optional<Frac> lambda;
    const auto degree_s = poly::monomials_of_degree(inst.ring->nvars(), uint32_t(S.A->top_degree()));
    for (const auto& w : degree_s) {
        Frac lhs = S.vol(w);
        Frac rhs = frobenius_pairing(G.mul_monomial(w, K.one()), S.p, [&](const Monomial& mu) { return S.vol(mu); });
        if (lhs.is_zero() || rhs.is_zero()) continue;
        Frac l = lhs / rhs;
        if (lambda && *lambda != l) {
            rep.failure = "IdentityFails: inconsistent lambda at " + poly::to_string(PolyFrac::term(inst.ring, &K, w, K.one()));
            return rep;
        }
        lambda = l;
    }
    if (!lambda) {
        rep.failure = "DegenerateInstance: every degree-s volume vanishes";
        return rep;
    }
    rep.lambda = lambda->to_string();
    // Vol' = c Vol gives lambda = c^{1-p}; for p = 2 the exact volume is lambda * Vol'.
    Frac scale = K.one();
    if (S.p == 2)
        scale = *lambda;
    else if (!lambda->is_one())
        throw InvalidInput("renormalization needs p = 2 or lambda = 1");
    auto vol = [&](const Monomial& mu) { return scale * S.vol(mu); };

    rep.pth_powers_constant = true;
    rep.pass = true;
    for (const auto& w : degree_s) {
        DifferentialRow row;
        row.w = poly::to_string(PolyFrac::term(inst.ring, &K, w, K.one()));
        Frac d = vol(w);
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t k = 0; k < B[i].size(); ++k)
                for (uint32_t a = 0; a < B[i][k]; ++a) d = d.derivative(S.sf.theta_index[i][k]);
        std::vector<poly::Exponent> e(inst.ring->nvars(), 0);
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t k = 0; k < B[i].size(); ++k) e[blocks[i][k]] = poly::Exponent(e[blocks[i][k]] + B[i][k]);
        PolyGF f = H0.mul_monomial(Monomial(e) * w, H0.field()->one());
        Frac rhs = frobenius_pairing(poly::to_fraction_field(f, K), S.p, [&](const Monomial& mu) {
            Frac v = vol(mu);
            for (size_t x = 0; x < K.nvars(); ++x)
                if (!v.pow(S.p).derivative(x).is_zero()) rep.pth_powers_constant = false;
            return v;
        });
        if (S.sign() < 0) rhs = -rhs;
        row.derivative = d.to_string();
        row.rhs = rhs.to_string();
        row.agree = d == rhs;
        if (!row.agree && rep.failure.empty()) rep.failure = "IdentityFails: derivative mismatch at " + row.w;
        rep.rows.push_back(std::move(row));
    }
    if (!rep.pth_powers_constant && rep.failure.empty()) rep.failure = "IdentityFails: a p-th power has a nonzero derivative";
    rep.pass = rep.failure.empty();
    return rep;
}

}  // namespace frobvol::artinian
