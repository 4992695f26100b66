#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "frobvol/gradedla/complex.hpp"
#include "frobvol/gradedla/linalg.hpp"
#include "frobvol/gradedla/report.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::gradedla {

namespace detail {

// Coordinates of homogeneous module elements in one fine-degree block of a
// free module: basis (generator j, monomial of key block - S_j).
struct BlockBasis {
    std::vector<std::pair<uint32_t, poly::Monomial>> cols;
    std::vector<std::unordered_map<poly::Monomial, uint32_t, poly::MonomialHash>> index;

    BlockBasis(const Grading& g, const std::vector<DegreeKey>& shifts, const DegreeKey& block) {
        index.resize(shifts.size());
        for (size_t j = 0; j < shifts.size(); ++j)
            for (const auto& m : g.monomials(block - shifts[j])) {
                index[j].emplace(m, uint32_t(cols.size()));
                cols.emplace_back(uint32_t(j), m);
            }
    }
    size_t size() const { return cols.size(); }

    // mu * (column c of M), as coordinates in this basis.
    template <class C>
    SparseVec<C> image(const GradedMatrix<C>& M, size_t c, const poly::Monomial& mu) const {
        SparseVec<C> out;
        for (size_t r = 0; r < M.rows(); ++r)
            for (const auto& [m, v] : M.entries[r][c].terms()) {
                auto it = index[r].find(m * mu);
                if (it == index[r].end()) throw InvalidInput("matrix entry is not homogeneous for the grading");
                out.emplace_back(it->second, v);
            }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
};

// Fine degrees of total degree D occurring in a free module.
inline std::set<DegreeKey> blocks_of_degree(const Grading& g, const std::vector<DegreeKey>& shifts, int D) {
    std::set<DegreeKey> out;
    for (const auto& s : shifts) {
        int e = D - int(s[0]);
        if (e < 0) continue;
        for (const auto& kv : g.monomials_by_key(uint32_t(e))) out.insert(kv.first + s);
    }
    return out;
}

// Rank of M restricted to the block (source block -> target block).
template <class C>
size_t block_rank(const GradedMatrix<C>& M, const std::vector<DegreeKey>& src, const std::vector<DegreeKey>& tgt,
                  const Grading& g, const DegreeKey& block, const C& zero) {
    BlockBasis tb(g, tgt, block);
    Echelon<C> e(uint32_t(tb.size()), zero);
    for (size_t c = 0; c < src.size(); ++c)
        for (const auto& mu : g.monomials(block - src[c])) {
            auto v = tb.image(M, c, mu);
            if (!v.empty()) e.insert(v);
        }
    return e.rank();
}

template <class C>
size_t block_dim(const Grading& g, const std::vector<DegreeKey>& shifts, const DegreeKey& block) {
    size_t n = 0;
    for (const auto& s : shifts) n += g.monomials(block - s).size();
    return n;
}

}  // namespace detail

// Checks (a) entry homogeneity, (b) d_i d_{i+1} = 0, (c) image of d_1 equals
// the ideal in degrees <= d_max, (d) optionally exactness at F_1..F_u in
// degrees <= d_max by rank counting (a bounded certificate).
template <class C>
CheckReport verify_complex(const FreeComplex<C>& cx, const std::vector<poly::Poly<C>>& ideal, int d_max,
                           bool check_exactness, const Grading& grading_in) {
    CheckReport rep;
    const size_t u = cx.length();
    for (size_t i = 1; i <= u; ++i) {
        const auto& d = cx.d[i - 1];
        if (d.source.shifts != cx.modules[i].shifts || d.target.shifts != cx.modules[i - 1].shifts)
            rep.fail("d_" + std::to_string(i) + ": source/target shifts disagree with the modules");
        for (size_t r = 0; r < d.rows(); ++r)
            for (size_t c = 0; c < d.cols(); ++c) {
                const auto& e = d.entries[r][c];
                if (e.is_zero()) continue;
                int want = d.source.shifts[c] - d.target.shifts[r];
                if (!e.is_homogeneous() || e.degree() != want)
                    rep.fail("d_" + std::to_string(i) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                             "): " + poly::to_string(e) + " is not homogeneous of degree " + std::to_string(want));
            }
    }
    if (!rep.ok) return rep;
    for (size_t i = 1; i < u; ++i) {
        auto prod = multiply(cx.d[i - 1], cx.d[i]);
        for (size_t r = 0; r < prod.rows(); ++r)
            for (size_t c = 0; c < prod.cols(); ++c)
                if (!prod.entries[r][c].is_zero())
                    rep.fail("d_" + std::to_string(i) + "*d_" + std::to_string(i + 1) + " entry (" + std::to_string(r) +
                             "," + std::to_string(c) + "): " + poly::to_string(prod.entries[r][c]));
    }
    if (!rep.ok) return rep;

    Grading grading = grading_in;
    auto ms = derive_multishifts(cx, grading);
    bool ideal_homog = true;
    for (const auto& g : ideal)
        if (!grading.is_homogeneous(g)) ideal_homog = false;
    if (!ms || !ideal_homog) {
        grading = Grading::standard(cx.ring->nvars());
        ms = derive_multishifts(cx, grading);
    }
    const auto& S = *ms;
    const C zero = cx.field->zero();

    if (!ideal.empty() && u >= 1 && cx.modules[0].rank() == 1) {
        std::vector<DegreeKey> gk;
        for (const auto& g : ideal) gk.push_back(g.is_zero() ? grading.zero_key() : *grading.key_of(g));
        for (int D = 0; D <= d_max; ++D) {
            for (const auto& kv : grading.monomials_by_key(uint32_t(D))) {
                const DegreeKey& block = kv.first;
                detail::BlockBasis tb(grading, S[0], block);
                Echelon<C> ei(uint32_t(tb.size()), zero), ed(uint32_t(tb.size()), zero), eb(uint32_t(tb.size()), zero);
                for (size_t t = 0; t < ideal.size(); ++t) {
                    if (ideal[t].is_zero()) continue;
                    for (const auto& mu : grading.monomials(block - gk[t])) {
                        SparseVec<C> v;
                        for (const auto& [m, c] : ideal[t].terms()) v.emplace_back(tb.index[0].at(m * mu), c);
                        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                        ei.insert(v);
                        eb.insert(v);
                    }
                }
                for (size_t c = 0; c < S[1].size(); ++c)
                    for (const auto& mu : grading.monomials(block - S[1][c])) {
                        auto v = tb.image(cx.d[0], c, mu);
                        ed.insert(v);
                        eb.insert(v);
                    }
                if (ei.rank() != eb.rank() || ed.rank() != eb.rank()) {
                    rep.fail("image of d_1 differs from the ideal in degree " + std::to_string(D) + " (ranks ideal " +
                             std::to_string(ei.rank()) + ", image " + std::to_string(ed.rank()) + ", joint " +
                             std::to_string(eb.rank()) + ")");
                }
            }
        }
    }

    if (check_exactness) {
        for (size_t i = 1; i <= u; ++i)
            for (int D = 0; D <= d_max; ++D)
                for (const auto& block : detail::blocks_of_degree(grading, S[i], D)) {
                    size_t dim = detail::block_dim<C>(grading, S[i], block);
                    size_t rk_out = detail::block_rank(cx.d[i - 1], S[i], S[i - 1], grading, block, zero);
                    size_t rk_in = i < u ? detail::block_rank(cx.d[i], S[i + 1], S[i], grading, block, zero) : 0;
                    if (dim - rk_out != rk_in) {
                        rep.fail("homology at F_" + std::to_string(i) + " in degree " + std::to_string(D) +
                                 ": kernel dimension " + std::to_string(dim - rk_out) + ", image rank " +
                                 std::to_string(rk_in));
                    }
                }
        rep.notes.push_back("exactness certified by rank counts in degrees <= " + std::to_string(d_max));
    }
    rep.notes.push_back(grading.is_standard() ? "standard grading" : "fine grading of rank " +
                                                                          std::to_string(grading.rank()));
    return rep;
}

template <class C>
std::string betti_string(const FreeComplex<C>& cx) {
    std::ostringstream os;
    for (size_t i = 0; i < cx.modules.size(); ++i) {
        if (i) os << " ; ";
        std::map<int, int> cnt;
        for (int s : cx.modules[i].shifts) ++cnt[s];
        bool first = true;
        for (auto [s, n] : cnt) {
            if (!first) os << " + ";
            first = false;
            os << "R(" << -s << ")";
            if (n > 1) os << "^" << n;
        }
    }
    return os.str();
}

// Minimal graded free resolution of R/(gens), built degree by degree from
// kernel computations up to total degree d_max. `shift_template` (one shift
// list per level) is compared against the result when given.
template <class C>
FreeComplex<C> build_graded_resolution(const poly::RingPtr& ring, const typename C::Field* field,
                                       const std::vector<poly::Poly<C>>& gens, int d_max, const Grading& grading_in,
                                       const std::optional<std::vector<std::vector<int>>>& shift_template = {}) {
    using P = poly::Poly<C>;
    Grading grading = grading_in;
    for (const auto& g : gens)
        if (!g.is_zero() && !grading.is_homogeneous(g)) grading = Grading::standard(ring->nvars());
    for (const auto& g : gens)
        if (!g.is_zero() && !g.is_homogeneous()) throw InvalidInput("generator is not homogeneous: " + poly::to_string(g));
    const C zero = field->zero();

    FreeComplex<C> cx;
    cx.ring = ring;
    cx.field = field;
    cx.modules.push_back(FreeModule{{0}});
    std::vector<std::vector<DegreeKey>> keys{{grading.zero_key()}};

    // Minimal generators of the ideal, by increasing degree.
    std::vector<size_t> order;
    for (size_t t = 0; t < gens.size(); ++t)
        if (!gens[t].is_zero()) order.push_back(t);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return gens[a].degree() < gens[b].degree(); });
    std::vector<P> mingens;
    std::vector<DegreeKey> minkeys;
    for (size_t t : order) {
        DegreeKey k = *grading.key_of(gens[t]);
        detail::BlockBasis tb(grading, keys[0], k);
        Echelon<C> e(uint32_t(tb.size()), zero);
        for (size_t s = 0; s < mingens.size(); ++s)
            for (const auto& mu : grading.monomials(k - minkeys[s])) {
                SparseVec<C> v;
                for (const auto& [m, c] : mingens[s].terms()) v.emplace_back(tb.index[0].at(m * mu), c);
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                e.insert(v);
            }
        SparseVec<C> v;
        for (const auto& [m, c] : gens[t].terms()) v.emplace_back(tb.index[0].at(m), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (e.insert(v)) {
            mingens.push_back(gens[t]);
            minkeys.push_back(k);
        }
    }
    if (mingens.empty()) return cx;
    {
        GradedMatrix<C> d1{FreeModule{}, FreeModule{{0}}, {std::vector<P>{}}};
        for (size_t s = 0; s < mingens.size(); ++s) {
            d1.source.shifts.push_back(mingens[s].degree());
            d1.entries[0].push_back(mingens[s]);
        }
        cx.modules.push_back(d1.source);
        cx.d.push_back(std::move(d1));
        keys.push_back(minkeys);
    }

    // Syzygies level by level.
    while (cx.modules.size() <= ring->nvars() + 1) {
        const size_t i = cx.modules.size() - 1;  // resolve ker d_i
        const auto& d = cx.d[i - 1];
        const auto& src = keys[i];
        const auto& tgt = keys[i - 1];
        int lowest = *std::min_element(cx.modules[i].shifts.begin(), cx.modules[i].shifts.end());
        std::vector<std::vector<P>> new_cols;
        std::vector<int> new_shifts;
        std::vector<DegreeKey> new_keys;
        for (int D = lowest + 1; D <= d_max; ++D) {
            for (const auto& block : detail::blocks_of_degree(grading, src, D)) {
                detail::BlockBasis sb(grading, src, block);
                detail::BlockBasis tb(grading, tgt, block);
                const uint32_t n = uint32_t(sb.size());
                // Kernel of the block map: equations indexed by target coordinates.
                std::vector<SparseVec<C>> eqs(tb.size());
                for (uint32_t x = 0; x < n; ++x)
                    for (const auto& [row, v] : tb.image(d, sb.cols[x].first, sb.cols[x].second))
                        eqs[row].emplace_back(x, v);
                Echelon<C> e(n, zero);
                for (auto& r : eqs)
                    if (!r.empty()) e.insert(r);
                size_t kdim = n - e.rank();
                if (kdim == 0) continue;
                // Span of previously found syzygies in this block.
                Echelon<C> old(n, zero);
                for (size_t s = 0; s < new_cols.size(); ++s)
                    for (const auto& mu : grading.monomials(block - new_keys[s])) {
                        SparseVec<C> v;
                        for (size_t j = 0; j < new_cols[s].size(); ++j)
                            for (const auto& [m, c] : new_cols[s][j].terms()) v.emplace_back(sb.index[j].at(m * mu), c);
                        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                        old.insert(v);
                    }
                if (old.rank() == kdim) continue;
                for (const auto& kv : e.kernel(n)) {
                    SparseVec<C> v;
                    for (uint32_t x = 0; x < n; ++x)
                        if (!kv[x].is_zero()) v.emplace_back(x, kv[x]);
                    if (!old.insert(v)) continue;
                    std::vector<std::vector<typename P::Term>> ts(src.size());
                    for (const auto& [x, c] : v) ts[sb.cols[x].first].emplace_back(sb.cols[x].second, c);
                    std::vector<P> col;
                    for (auto& t : ts) col.push_back(P::from_terms(ring, field, std::move(t)));
                    new_cols.push_back(std::move(col));
                    new_shifts.push_back(D);
                    new_keys.push_back(block);
                    if (old.rank() == kdim) break;
                }
            }
        }
        if (new_cols.empty()) break;
        GradedMatrix<C> dn{FreeModule{new_shifts}, cx.modules[i], {}};
        dn.entries.assign(cx.modules[i].rank(), std::vector<P>());
        for (size_t j = 0; j < cx.modules[i].rank(); ++j)
            for (size_t s = 0; s < new_cols.size(); ++s) dn.entries[j].push_back(new_cols[s][j]);
        cx.modules.push_back(dn.source);
        cx.d.push_back(std::move(dn));
        keys.push_back(new_keys);
    }

    if (shift_template) {
        bool ok = shift_template->size() == cx.modules.size();
        for (size_t i = 0; ok && i < cx.modules.size(); ++i) {
            auto a = (*shift_template)[i], b = cx.modules[i].shifts;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            ok = a == b;
        }
        if (!ok) throw TemplateMismatch("computed Betti data " + betti_string(cx));
    }
    return cx;
}

}  // namespace frobvol::gradedla
