#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobvol/artinian/algebra.hpp"
#include "frobvol/coeff/fraction.hpp"
#include "frobvol/pfaffcomb/cores.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::artinian {

using PolyGF = poly::Poly<coeff::GF>;
using PolyFrac = poly::Poly<coeff::Frac>;

// sum over terms c x^a of f with every a_i = p-1 (mod p) of c * vol(mu)^p,
// where x^a = x^{(p-1)1} mu^p. Equals Vol(Phi(x^1 f))^p when vol is linear.
template <class C, class Vol>
C frobenius_pairing(const poly::Poly<C>& f, uint32_t p, const Vol& vol) {
    C acc = f.field()->zero();
    std::vector<poly::Exponent> e(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        bool ok = true;
        for (size_t i = 0; i < m.nvars() && ok; ++i) {
            ok = (m[i] + 1) % p == 0;
            e[i] = poly::Exponent((m[i] + 1) / p - 1);
        }
        if (ok) acc += c * vol(poly::Monomial(e)).pow(p);
    }
    return acc;
}

// Uniformly random linear forms over `field`.
std::vector<PolyGF> random_linear_forms(const poly::RingPtr& ring, const coeff::FiniteField& field, size_t count,
                                        std::mt19937_64& rng);

// Draws parameter forms until R/(I + forms) is Artinian within the bound.
struct Reduction {
    std::vector<PolyGF> forms;
    std::optional<ArtinianAlgebra<coeff::GF>> algebra;
    size_t redraws = 0;
};
Reduction random_reduction(const pfaffcomb::Instance& inst, const coeff::FiniteField& field, size_t nparams,
                           int degree_bound, std::mt19937_64& rng, size_t max_redraws = 16);

// True when x is a k-th power in the finite field.
bool is_kth_power(const coeff::GF& x, uint64_t k);

struct ParsevalOptions {
    size_t nparams = 0;
    size_t trials = 20;
    uint64_t seed = 1;
    uint32_t ext_degree = 16;
    int degree_bound = 24;
    bool parallel = false;
    // Normalize at c^{-1} z0 instead of z0, c the element with this code.
    uint64_t normalization_scale = 1;
};

struct ParsevalTrial {
    uint64_t seed = 0;
    size_t redraws = 0;
    std::vector<size_t> hilbert;
    int top_degree = -1;
    size_t monomials = 0;
    size_t nonzero = 0;  // monomials with Vol(w) != 0
    bool consistent = false;
    bool renormalizable = false;
    std::string lambda;
    coeff::GF lambda_value;
    std::string failure;  // "IdentityFails: ..." or "DegenerateInstance: ..."
};

struct ParsevalReport {
    bool pass = false;
    std::vector<ParsevalTrial> trials;
    // Throws IdentityFails or DegenerateInstance for the first failing trial.
    void require() const;
};

// Vol(w) against Vol(Phi(L H0 w x^1))^p, L the product of ell_i^{p-1}, for
// every degree-s monomial w, over random specializations in GF(p^k).
ParsevalReport parseval_check_abstract(const pfaffcomb::Instance& inst, const PolyGF& H0, const ParsevalOptions& opt);
ParsevalTrial parseval_trial(const pfaffcomb::Instance& inst, const PolyGF& H0, const ParsevalOptions& opt,
                             uint64_t seed);

// Generic linear forms ell_i = sum_{y in blocks[i]} theta_{i,y} y over the
// rational function field in the theta.
struct SymbolicForms {
    const coeff::FracField* field = nullptr;
    std::vector<std::vector<size_t>> blocks;       // ambient variable indices
    std::vector<std::vector<size_t>> theta_index;  // parameter index of theta_{i,y}
    std::vector<PolyFrac> forms;
};
// `names` (optional) gives one parameter name per (block, variable) in order;
// the default is th<i>_<variable name>.
SymbolicForms symbolic_forms(const poly::RingPtr& ring, const coeff::FiniteField& base,
                             const std::vector<std::vector<size_t>>& blocks, std::vector<std::string> names = {});

struct ExpandedRow {
    std::string w;
    std::string vol;       // Vol(w)
    std::string expanded;  // (-1)^t sum_B Vol(Phi(y^B H0 w x^1))^p theta^B / B!
    std::string abstract;  // Vol(Phi(L H0 w x^1))^p
    bool agree = false;    // expanded == abstract
};

struct ExpandedReport {
    bool pass = false;
    std::vector<size_t> hilbert;
    int top_degree = -1;
    std::string lambda;
    std::vector<ExpandedRow> rows;
    std::string failure;
};

ExpandedReport parseval_check_expanded(const pfaffcomb::Instance& inst, const PolyGF& H0,
                                       const std::vector<std::vector<size_t>>& blocks,
                                       const std::vector<std::string>& names = {}, int degree_bound = 16);

struct DifferentialRow {
    std::string w;
    std::string derivative;  // d^B Vol(w)
    std::string rhs;         // (-1)^t Vol(Phi(y^B H0 w x^1))^p
    bool agree = false;
};

struct DifferentialReport {
    bool pass = false;
    std::string lambda;  // renormalization applied to the socle volume
    std::vector<DifferentialRow> rows;
    bool pth_powers_constant = false;  // d/dtheta of each Vol(...)^p vanished
    std::string failure;
};

// B[i][k] is the order of the derivative in theta_{i, blocks[i][k]}; each
// block must sum to p-1. The socle volume is rescaled to the exact Parseval
// normalization first, which needs p = 2 or lambda = 1.
DifferentialReport differential_identity_check(const pfaffcomb::Instance& inst, const PolyGF& H0,
                                               const std::vector<std::vector<size_t>>& blocks,
                                               const std::vector<std::vector<uint32_t>>& B,
                                               const std::vector<std::string>& names = {}, int degree_bound = 16);

struct PresentedRow {
    std::string element;  // w e_i
    std::string vol;
    std::string rhs;  // sum_j sum_mu <G w e_i, x^{(p-1)1} mu^p e_j> Vol(mu e_j)^p
    bool agree = false;
};

struct PresentedReport {
    bool pass = false;
    std::vector<PresentedRow> rows;
};

// The identity Vol(z) = sum <G z, x^{(p-1)1} mu^p e_j> Vol(mu e_j)^p on the
// degree-0 piece of a presented module, with G[j][i] the (j, i) entry.
template <class C>
PresentedReport presented_parseval_check(const ModulePresentation<C>& M, const VolumeFunctional<C>& V,
                                         const std::vector<std::vector<poly::Poly<C>>>& G) {
    const uint32_t p = M.field->characteristic();
    const size_t r = M.gen_degrees.size();
    auto element = [&](size_t j, const poly::Monomial& mu) {
        gradedla::ModuleElement<C> v(r, poly::Poly<C>(M.ring, M.field));
        v[j] = poly::Poly<C>::term(M.ring, M.field, mu, M.field->one());
        return v;
    };
    PresentedReport rep;
    rep.pass = true;
    for (size_t i = 0; i < r; ++i) {
        if (M.gen_degrees[i] > 0) continue;
        for (const auto& w : poly::monomials_of_degree(M.ring->nvars(), uint32_t(-M.gen_degrees[i]))) {
            auto wp = poly::Poly<C>::term(M.ring, M.field, w, M.field->one());
            C lhs = V(element(i, w));
            C rhs = M.field->zero();
            for (size_t j = 0; j < r; ++j) {
                if (G[j][i].is_zero()) continue;
                rhs += frobenius_pairing(G[j][i] * wp, p, [&](const poly::Monomial& mu) {
                    if (int(mu.degree()) + M.gen_degrees[j] != 0) return M.field->zero();
                    return V(element(j, mu));
                });
            }
            PresentedRow row;
            row.element = poly::to_string(wp) + "*e" + std::to_string(i + 1);
            row.vol = lhs.to_string();
            row.rhs = rhs.to_string();
            row.agree = lhs == rhs;
            rep.pass = rep.pass && row.agree;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

}  // namespace frobvol::artinian
