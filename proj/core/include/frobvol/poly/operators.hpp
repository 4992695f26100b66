#pragma once

#include <functional>
#include <vector>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/coeff/fraction.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::poly {

enum class SplitMode { Omega, Shifted };

template <class C>
Poly<C> frobenius_power(const Poly<C>& f) {
    const uint32_t p = f.field()->characteristic();
    std::vector<typename Poly<C>::Term> ts;
    ts.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        std::vector<Exponent> e(m.exponents());
        for (auto& x : e) x = Exponent(x * p);
        ts.emplace_back(Monomial(std::move(e)), c.frobenius());
    }
    return Poly<C>::from_sorted_terms(f.ring(), f.field(), std::move(ts));
}

// Image of a single exponent vector under the splitting; false if dropped.
inline bool split_exponents(const Monomial& m, uint32_t p, SplitMode mode, std::vector<Exponent>& out) {
    const size_t n = m.nvars();
    out.resize(n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t a = m[i] + (mode == SplitMode::Shifted ? 1u : 0u);
        if (a % p) return false;
        out[i] = Exponent(a / p - (mode == SplitMode::Shifted ? 1u : 0u));
    }
    return true;
}

template <class C>
Poly<C> frobenius_split(const Poly<C>& f, SplitMode mode) {
    const uint32_t p = f.field()->characteristic();
    std::vector<typename Poly<C>::Term> ts;
    std::vector<Exponent> e;
    for (const auto& [m, c] : f.terms())
        if (split_exponents(m, p, mode, e)) ts.emplace_back(Monomial(e), c.pth_root());
    return Poly<C>::from_sorted_terms(f.ring(), f.field(), std::move(ts));
}

template <class C>
Poly<C> partial_derivative(const Poly<C>& f, size_t var) {
    std::vector<typename Poly<C>::Term> ts;
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        C v = c * f.field()->from_integer(m[var]);
        if (v.is_zero()) continue;
        Monomial d(m);
        d.set(var, Exponent(m[var] - 1));
        ts.emplace_back(std::move(d), std::move(v));
    }
    return Poly<C>::from_terms(f.ring(), f.field(), std::move(ts));
}

// D_k = sum over u<v with u,v != k of z_{uk} z_{kv} d/dz_{uv}, signs per the
// ring's edge convention.
template <class C>
Poly<C> dk_operator(const Poly<C>& f, uint32_t k) {
    const Ring& R = *f.ring();
    if (!R.has_edges()) throw RingMismatch("D_k needs edge variables");
    const uint32_t m = R.edge_convention()->m;
    Poly<C> out = f.zero();
    for (uint32_t u = 1; u <= m; ++u)
        for (uint32_t v = u + 1; v <= m; ++v) {
            if (u == k || v == k) continue;
            auto [uv, s0] = R.edge(u, v);
            Poly<C> d = partial_derivative(f, uv);
            if (d.is_zero()) continue;
            auto [uk, s1] = R.edge(u, k);
            auto [kv, s2] = R.edge(k, v);
            Monomial mm = Monomial::variable(R.nvars(), uk) * Monomial::variable(R.nvars(), kv);
            int sign = s0 * s1 * s2;  // d/dz_{uv} of a signed variable carries s0
            out += d.mul_monomial(mm, f.field()->from_integer(sign));
        }
    return out;
}

// Ring homomorphism sending variable i to images[i] (all in one target ring),
// with coefficients mapped by `coeff_map`.
template <class C, class D>
Poly<D> substitute(const Poly<C>& f, const std::vector<Poly<D>>& images,
                   const std::function<D(const C&)>& coeff_map, const Poly<D>& target_zero) {
    if (images.size() != f.nvars()) throw IncompletePlan("substitution misses variables");
    std::vector<std::vector<Poly<D>>> powers(images.size());
    auto power = [&](size_t i, Exponent e) -> const Poly<D>& {
        auto& v = powers[i];
        if (v.empty()) v.push_back(target_zero.one());
        while (v.size() <= e) v.push_back(v.back() * images[i]);
        return v[e];
    };
    Poly<D> out = target_zero;
    for (const auto& [m, c] : f.terms()) {
        Poly<D> t = Poly<D>::constant(target_zero.ring(), target_zero.field(), coeff_map(c));
        for (size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) t = t * power(i, m[i]);
        out += t;
    }
    return out;
}

// Coefficient-wise map into another field over the same ring.
template <class C, class D>
Poly<D> map_coefficients(const Poly<C>& f, const typename D::Field* field, const std::function<D(const C&)>& fn) {
    std::vector<typename Poly<D>::Term> ts;
    ts.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        D v = fn(c);
        if (!v.is_zero()) ts.emplace_back(m, std::move(v));
    }
    return Poly<D>::from_sorted_terms(f.ring(), field, std::move(ts));
}

// Same polynomial over a larger finite field of the same characteristic.
Poly<coeff::GF> extend_field(const Poly<coeff::GF>& f, const coeff::FiniteField& target);
// Constant-coefficient polynomial viewed over a fraction field.
Poly<coeff::Frac> to_fraction_field(const Poly<coeff::GF>& f, const coeff::FracField& target);
// Parameters -> elements of a finite field (same characteristic).
Poly<coeff::GF> specialize(const Poly<coeff::Frac>& f, const std::vector<coeff::GF>& point);
// Parameters -> polynomials in the target fraction field's variables.
Poly<coeff::Frac> specialize(const Poly<coeff::Frac>& f, const std::vector<Poly<coeff::GF>>& images,
                             const coeff::FracField& target);

// Multiply by the monomial x^shift and split, without forming the product.
template <class C>
Poly<C> split_shifted_product(const Poly<C>& f, const Monomial& shift, SplitMode mode) {
    const uint32_t p = f.field()->characteristic();
    std::vector<typename Poly<C>::Term> ts;
    std::vector<Exponent> e;
    for (const auto& [m, c] : f.terms())
        if (split_exponents(m * shift, p, mode, e)) ts.emplace_back(Monomial(e), c.pth_root());
    return Poly<C>::from_terms(f.ring(), f.field(), std::move(ts));
}

}  // namespace frobvol::poly
