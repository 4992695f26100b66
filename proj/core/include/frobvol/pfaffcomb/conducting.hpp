#pragma once

#include <string>
#include <vector>

#include "frobvol/poly/polynomial.hpp"

namespace frobvol::pfaffcomb {

struct ConductingReport {
    bool pass = false;  // sufficient criterion met
    size_t support_size = 0;
    // Support monomials with all entries <= p-1 that differ from every other
    // support monomial by a vector outside pZ^n.
    std::vector<poly::Monomial> witnesses;
    std::string verdict() const { return pass ? "PASS (sufficient criterion)" : "INCONCLUSIVE"; }
};

// Checks the sufficient criterion for p-conducting: some support monomial m
// has every exponent <= p-1 (so a + (p-1)1 - m >= 0 for all a >= 0) and is
// p-isolated in the support.
template <class C>
ConductingReport check_conducting(const poly::Poly<C>& H0, uint32_t p) {
    ConductingReport rep;
    const auto& ts = H0.terms();
    rep.support_size = ts.size();
    const size_t n = H0.nvars();
    for (size_t a = 0; a < ts.size(); ++a) {
        const auto& m = ts[a].first;
        bool low = true;
        for (size_t i = 0; i < n && low; ++i) low = m[i] <= p - 1;
        if (!low) continue;
        bool isolated = true;
        for (size_t b = 0; b < ts.size() && isolated; ++b) {
            if (a == b) continue;
            bool congruent = true;
            for (size_t i = 0; i < n && congruent; ++i) congruent = (int(m[i]) - int(ts[b].first[i])) % int(p) == 0;
            if (congruent) isolated = false;
        }
        if (isolated) rep.witnesses.push_back(m);
    }
    rep.pass = !rep.witnesses.empty();
    return rep;
}

}  // namespace frobvol::pfaffcomb
