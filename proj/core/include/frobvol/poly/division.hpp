#pragma once

#include <optional>

#include "frobvol/poly/polynomial.hpp"

namespace frobvol::poly {

// Exact quotient a / b when b divides a; nullopt otherwise. Uses leading-term
// reduction in deglex order, which terminates with zero remainder exactly when
// the division is exact. `max_steps` bounds the work (nullopt when exceeded).
template <class C>
std::optional<Poly<C>> exact_divide(const Poly<C>& a, const Poly<C>& b, size_t max_steps = size_t(-1)) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return a;
    if (b.size() == 1) {
        const auto& [bm, bc] = b.terms()[0];
        C inv = bc.inv();
        std::vector<typename Poly<C>::Term> out;
        out.reserve(a.size());
        for (const auto& [m, c] : a.terms()) {
            if (!bm.divides(m)) return std::nullopt;
            out.emplace_back(bm.quotient_of(m), c * inv);
        }
        return Poly<C>::from_sorted_terms(a.ring(), a.field(), std::move(out));
    }
    if (a.degree() < b.degree()) return std::nullopt;
    const auto& [lm, lc] = b.terms()[0];
    C linv = lc.inv();
    Poly<C> r = a;
    std::vector<typename Poly<C>::Term> q;
    size_t steps = 0;
    while (!r.is_zero()) {
        if (++steps > max_steps) return std::nullopt;
        const auto& [rm, rc] = r.terms()[0];
        if (!lm.divides(rm)) return std::nullopt;
        Monomial t = lm.quotient_of(rm);
        C c = rc * linv;
        r = r - b.mul_monomial(t, c);
        q.emplace_back(std::move(t), std::move(c));
    }
    return Poly<C>::from_sorted_terms(a.ring(), a.field(), std::move(q));
}

}  // namespace frobvol::poly
