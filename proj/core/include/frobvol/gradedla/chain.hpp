#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "frobvol/gradedla/complex.hpp"
#include "frobvol/gradedla/linalg.hpp"
#include "frobvol/gradedla/report.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::gradedla {

// Checks Phi_{i-1} * phi(d_i) = d_i * Phi_i for every square, degrees of all
// entries, and Phi_0 = id when requested.
template <class C>
CheckReport verify_chain_map(const FreeComplex<C>& cx, const ChainMap<C>& phi, bool identity_at_zero = true) {
    CheckReport rep;
    const size_t u = cx.length();
    if (phi.levels.size() != u + 1) {
        rep.fail("chain map has " + std::to_string(phi.levels.size()) + " levels, complex needs " +
                 std::to_string(u + 1));
        return rep;
    }
    const int p = int(cx.field->characteristic());
    for (size_t i = 0; i <= u; ++i) {
        const auto& m = phi.levels[i];
        const auto& F = cx.modules[i];
        if (m.rows() != F.rank() || m.cols() != F.rank()) {
            rep.fail("level " + std::to_string(i) + ": matrix shape does not match F_" + std::to_string(i));
            return rep;
        }
        for (size_t k = 0; k < F.rank(); ++k)
            for (size_t c = 0; c < F.rank(); ++c) {
                const auto& e = m.entries[k][c];
                if (e.is_zero()) continue;
                int want = p * F.shifts[c] - F.shifts[k];
                if (!e.is_homogeneous() || e.degree() != want)
                    rep.fail("level " + std::to_string(i) + " entry (" + std::to_string(k) + "," + std::to_string(c) +
                             "): not homogeneous of degree " + std::to_string(want));
            }
    }
    if (identity_at_zero) {
        const auto& m = phi.levels[0];
        for (size_t k = 0; k < m.rows(); ++k)
            for (size_t c = 0; c < m.cols(); ++c) {
                bool ok = k == c ? (m.entries[k][c].is_constant() && !m.entries[k][c].is_zero() &&
                                    m.entries[k][c].constant_term().is_one())
                                 : m.entries[k][c].is_zero();
                if (!ok)
                    rep.fail("level 0 entry (" + std::to_string(k) + "," + std::to_string(c) + ") is not the identity");
            }
    }
    for (size_t i = 1; i <= u; ++i) {
        auto tw = frobenius_power(cx.d[i - 1]);
        auto left = multiply(phi.levels[i - 1], tw);
        auto right = multiply(cx.d[i - 1], phi.levels[i]);
        for (size_t r = 0; r < left.rows(); ++r)
            for (size_t c = 0; c < left.cols(); ++c) {
                auto diff = left.entries[r][c] - right.entries[r][c];
                if (!diff.is_zero())
                    rep.fail("square " + std::to_string(i) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                             "): difference " + poly::to_string(diff));
            }
    }
    return rep;
}

struct ChainMapStats {
    size_t unknowns = 0;
    size_t equations = 0;
    size_t components = 0;
    size_t rank = 0;
    bool fine_grading = false;
};

template <class C>
struct ChainMapSolution {
    bool sat = false;
    ChainMap<C> map;
    ChainMapStats stats;
    std::string witness;  // on UNSAT: an inconsistent square/entry/monomial
};

template <class C>
struct ChainMapConstraints {
    bool identity_at_zero = true;
    std::optional<GradedMatrix<C>> top;  // fixed Phi_u
    // Values for free unknowns (default zero); lets callers draw random solutions.
    std::function<C()> free_value;
};

namespace detail {
struct EqKey {
    uint32_t square, r, c;
    poly::Monomial m;
    bool operator==(const EqKey& o) const { return square == o.square && r == o.r && c == o.c && m == o.m; }
};
struct EqKeyHash {
    size_t operator()(const EqKey& k) const {
        return k.m.hash() ^ (size_t(k.square) * 0x9E3779B97F4A7C15ULL) ^ (size_t(k.r) << 20) ^ (size_t(k.c) << 40);
    }
};
}  // namespace detail

// Solves all commuting squares at once as one sparse linear system in the
// coefficients of the unknown entries. Unknown entries are restricted to the
// multidegree forced by the grading (`grading` may be the standard grading).
template <class C>
ChainMapSolution<C> solve_chain_map(const FreeComplex<C>& cx, const ChainMapConstraints<C>& cons,
                                    const Grading& grading_in) {
    using P = poly::Poly<C>;
    ChainMapSolution<C> sol;
    const size_t u = cx.length();
    const int p = int(cx.field->characteristic());
    const P zero = cx.zero_poly();

    Grading grading = grading_in;
    auto ms = derive_multishifts(cx, grading);
    if (ms && cons.top) {
        // The fixed top must be homogeneous of the forced fine degree.
        const auto& S = (*ms)[u];
        for (size_t k = 0; k < S.size() && ms; ++k)
            for (size_t c = 0; c < S.size(); ++c) {
                const auto& e = cons.top->entries[k][c];
                if (e.is_zero()) continue;
                auto key = grading.key_of(e);
                if (!key || *key != scale(S[c], p) - S[k]) {
                    ms.reset();
                    break;
                }
            }
    }
    if (!ms) {
        grading = Grading::standard(cx.ring->nvars());
        ms = derive_multishifts(cx, grading);
        if (!ms) throw InvalidInput("complex entries are not homogeneous");
    }
    sol.stats.fine_grading = !grading.is_standard();
    const auto& S = *ms;

    // Unknowns.
    struct Unknown {
        uint32_t level, k, c;
        poly::Monomial m;
    };
    std::vector<Unknown> unknowns;
    const size_t lo = cons.identity_at_zero ? 1 : 0;
    const size_t hi = cons.top ? u - 1 : u;
    std::vector<std::vector<std::vector<std::pair<uint32_t, uint32_t>>>> range(u + 1);  // [level][k][c] -> [begin,end)
    for (size_t i = 0; i <= u; ++i) {
        const size_t n = cx.modules[i].rank();
        range[i].assign(n, std::vector<std::pair<uint32_t, uint32_t>>(n, {0, 0}));
        if (i < lo || i > hi || (u == 0 && cons.top)) continue;
        for (size_t k = 0; k < n; ++k)
            for (size_t c = 0; c < n; ++c) {
                DegreeKey key = scale(S[i][c], p) - S[i][k];
                uint32_t b = uint32_t(unknowns.size());
                for (const auto& m : grading.monomials(key)) unknowns.push_back({uint32_t(i), uint32_t(k), uint32_t(c), m});
                range[i][k][c] = {b, uint32_t(unknowns.size())};
            }
    }
    GradedMatrix<C> id0 = GradedMatrix<C>::identity(cx.modules[0], cx.modules[0], zero);
    auto fixed = [&](size_t i) -> const GradedMatrix<C>* {
        if (i == 0 && cons.identity_at_zero) return &id0;
        if (i == u && cons.top) return &*cons.top;
        return nullptr;
    };

    // Equations, keyed by (square, row, column, monomial).
    std::unordered_map<detail::EqKey, uint32_t, detail::EqKeyHash> eq_index;
    std::vector<SparseVec<C>> eq_rows;
    std::vector<C> eq_rhs;
    std::vector<detail::EqKey> eq_keys;
    auto eq = [&](uint32_t sq, uint32_t r, uint32_t c, const poly::Monomial& m) -> uint32_t {
        detail::EqKey key{sq, r, c, m};
        auto it = eq_index.find(key);
        if (it != eq_index.end()) return it->second;
        uint32_t id = uint32_t(eq_rows.size());
        eq_index.emplace(key, id);
        eq_rows.emplace_back();
        eq_rhs.push_back(cx.field->zero());
        eq_keys.push_back(std::move(key));
        return id;
    };

    for (size_t i = 1; i <= u; ++i) {
        const auto& d = cx.d[i - 1];
        auto tw = frobenius_power(d);
        const size_t nr = d.rows(), nc = d.cols();
        const auto* left = fixed(i - 1);
        const auto* right = fixed(i);
        // Phi_{i-1} * phi(d_i)
        for (size_t r = 0; r < nr; ++r)
            for (size_t c = 0; c < nc; ++c)
                for (size_t j = 0; j < nr; ++j) {
                    const P& t = tw.entries[j][c];
                    if (t.is_zero()) continue;
                    if (left) {
                        const P& a = left->entries[r][j];
                        if (a.is_zero()) continue;
                        P prod = a * t;
                        for (const auto& [m, v] : prod.terms()) {
                            uint32_t e = eq(uint32_t(i), uint32_t(r), uint32_t(c), m);
                            eq_rhs[e] -= v;
                        }
                    } else {
                        auto [b, en] = range[i - 1][r][j];
                        for (uint32_t x = b; x < en; ++x)
                            for (const auto& [m, v] : t.terms()) {
                                uint32_t e = eq(uint32_t(i), uint32_t(r), uint32_t(c), m * unknowns[x].m);
                                eq_rows[e].emplace_back(x, v);
                            }
                    }
                }
        // - d_i * Phi_i
        for (size_t r = 0; r < nr; ++r)
            for (size_t c = 0; c < nc; ++c)
                for (size_t k = 0; k < nc; ++k) {
                    const P& t = d.entries[r][k];
                    if (t.is_zero()) continue;
                    if (right) {
                        const P& a = right->entries[k][c];
                        if (a.is_zero()) continue;
                        P prod = t * a;
                        for (const auto& [m, v] : prod.terms()) {
                            uint32_t e = eq(uint32_t(i), uint32_t(r), uint32_t(c), m);
                            eq_rhs[e] += v;
                        }
                    } else {
                        auto [b, en] = range[i][k][c];
                        for (uint32_t x = b; x < en; ++x)
                            for (const auto& [m, v] : t.terms()) {
                                uint32_t e = eq(uint32_t(i), uint32_t(r), uint32_t(c), m * unknowns[x].m);
                                eq_rows[e].emplace_back(x, -v);
                            }
                    }
                }
    }
    sol.stats.unknowns = unknowns.size();
    sol.stats.equations = eq_rows.size();

    // Split into connected components of the unknown/equation incidence.
    std::vector<uint32_t> parent(unknowns.size());
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& row : eq_rows) {
        // Combine repeated unknowns.
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseVec<C> merged;
        for (auto& [x, v] : row) {
            if (!merged.empty() && merged.back().first == x)
                merged.back().second += v;
            else
                merged.emplace_back(x, v);
        }
        row.clear();
        for (auto& e : merged)
            if (!e.second.is_zero()) row.push_back(e);
        for (size_t t = 1; t < row.size(); ++t) {
            uint32_t a = find(row[0].first), b = find(row[t].first);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<C> value(unknowns.size(), cx.field->zero());
    std::unordered_map<uint32_t, std::vector<uint32_t>> comp_eqs;
    for (uint32_t e = 0; e < eq_rows.size(); ++e) {
        if (eq_rows[e].empty()) {
            if (!eq_rhs[e].is_zero()) {
                const auto& k = eq_keys[e];
                sol.witness = "square " + std::to_string(k.square) + " entry (" + std::to_string(k.r) + "," +
                              std::to_string(k.c) + "), monomial " +
                              poly::to_string(P::term(cx.ring, cx.field, k.m, cx.field->one())) +
                              ": fixed entries leave a nonzero residue";
                return sol;
            }
            continue;
        }
        comp_eqs[find(eq_rows[e][0].first)].push_back(e);
    }
    std::unordered_map<uint32_t, std::vector<uint32_t>> comp_unknowns;
    for (uint32_t x = 0; x < unknowns.size(); ++x) comp_unknowns[find(x)].push_back(x);
    sol.stats.components = comp_unknowns.size();

    std::vector<uint32_t> roots;
    for (const auto& kv : comp_unknowns) roots.push_back(kv.first);
    std::sort(roots.begin(), roots.end());
    for (uint32_t root : roots) {
        const auto& xs = comp_unknowns[root];
        std::unordered_map<uint32_t, uint32_t> local;
        for (uint32_t t = 0; t < xs.size(); ++t) local[xs[t]] = t;
        const uint32_t n = uint32_t(xs.size());
        Echelon<C> ech(n + 1, cx.field->zero());
        auto eit = comp_eqs.find(root);
        if (eit != comp_eqs.end())
            for (uint32_t e : eit->second) {
                SparseVec<C> row;
                for (const auto& [x, v] : eq_rows[e]) row.emplace_back(local[x], v);
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                if (!eq_rhs[e].is_zero()) row.emplace_back(n, eq_rhs[e]);
                ech.insert(row);
                if (ech.is_pivot(n)) {
                    const auto& k = eq_keys[e];
                    sol.witness = "square " + std::to_string(k.square) + " entry (" + std::to_string(k.r) + "," +
                                  std::to_string(k.c) + "), monomial " +
                                  poly::to_string(P::term(cx.ring, cx.field, k.m, cx.field->one())) +
                                  ": system becomes inconsistent";
                    return sol;
                }
            }
        sol.stats.rank += ech.rank();
        std::vector<std::optional<C>> fv(n);
        if (cons.free_value)
            for (uint32_t j = 0; j < n; ++j)
                if (!ech.is_pivot(j)) fv[j] = cons.free_value();
        auto x = ech.back_substitute(n, &fv);
        if (!x) {
            sol.witness = "inconsistent component";
            return sol;
        }
        for (uint32_t t = 0; t < n; ++t) value[xs[t]] = (*x)[t];
    }

    // Assemble the chain map.
    sol.map.levels.resize(u + 1);
    for (size_t i = 0; i <= u; ++i) {
        const auto& F = cx.modules[i];
        FreeModule tw{F.shifts};
        for (auto& s : tw.shifts) s *= p;
        if (const auto* f = fixed(i)) {
            sol.map.levels[i] = *f;
            sol.map.levels[i].source = tw;
            sol.map.levels[i].target = F;
            continue;
        }
        auto m = GradedMatrix<C>::zero(tw, F, zero);
        for (size_t k = 0; k < F.rank(); ++k)
            for (size_t c = 0; c < F.rank(); ++c) {
                auto [b, en] = range[i][k][c];
                std::vector<typename P::Term> ts;
                for (uint32_t x = b; x < en; ++x)
                    if (!value[x].is_zero()) ts.emplace_back(unknowns[x].m, value[x]);
                m.entries[k][c] = P::from_terms(cx.ring, cx.field, std::move(ts));
            }
        sol.map.levels[i] = std::move(m);
    }
    sol.sat = true;
    return sol;
}

}  // namespace frobvol::gradedla
