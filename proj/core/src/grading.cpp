#include "frobvol/gradedla/grading.hpp"

#include <algorithm>
#include <numeric>

namespace frobvol::gradedla {

DegreeKey operator+(const DegreeKey& a, const DegreeKey& b) {
    DegreeKey r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

DegreeKey operator-(const DegreeKey& a, const DegreeKey& b) {
    DegreeKey r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

DegreeKey scale(const DegreeKey& a, int64_t s) {
    DegreeKey r(a);
    for (auto& x : r) x *= s;
    return r;
}

Grading Grading::standard(size_t nvars) {
    Grading g;
    g.nvars_ = nvars;
    g.weights_.push_back(std::vector<int64_t>(nvars, 1));
    return g;
}

Grading Grading::from_relations(size_t nvars, const std::vector<std::vector<int64_t>>& relations) {
    // Reduced row echelon form of the relation matrix over Q, kept integral.
    std::vector<std::vector<int64_t>> m = relations;
    std::vector<size_t> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < nvars && r < m.size(); ++c) {
        size_t piv = m.size();
        for (size_t i = r; i < m.size(); ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            int64_t a = m[r][c], b = m[i][c];
            int64_t g = 0;
            for (size_t j = 0; j < nvars; ++j) {
                m[i][j] = a * m[i][j] - b * m[r][j];
                g = std::gcd(g, m[i][j]);
            }
            if (g > 1)
                for (auto& x : m[i]) x /= g;
        }
        pivcol.push_back(c);
        ++r;
    }
    m.resize(r);
    std::vector<bool> is_piv(nvars, false);
    for (auto c : pivcol) is_piv[c] = true;

    Grading g = standard(nvars);
    // One kernel vector per free column: w_f = 1, w_pivot = -m[i][f] / m[i][pc].
    for (size_t f = 0; f < nvars; ++f) {
        if (is_piv[f]) continue;
        int64_t l = 1;
        for (size_t i = 0; i < r; ++i) {
            int64_t d = std::abs(m[i][pivcol[i]]);
            l = std::lcm(l, d);
        }
        std::vector<int64_t> w(nvars, 0);
        w[f] = l;
        for (size_t i = 0; i < r; ++i) w[pivcol[i]] = -m[i][f] * (l / m[i][pivcol[i]]);
        int64_t gg = 0;
        for (auto x : w) gg = std::gcd(gg, x);
        if (gg > 1)
            for (auto& x : w) x /= gg;
        g.weights_.push_back(std::move(w));
    }
    // When only total degree survives the single kernel vector is redundant
    // with the all-ones weight; drop weights in the span of earlier ones.
    if (g.weights_.size() == 2) {
        const auto& w = g.weights_[1];
        bool constant = std::all_of(w.begin(), w.end(), [&](int64_t x) { return x == w[0]; });
        if (constant) g.weights_.pop_back();
    }
    return g;
}

DegreeKey Grading::key(const poly::Monomial& m) const {
    DegreeKey k(weights_.size(), 0);
    for (size_t w = 0; w < weights_.size(); ++w) {
        int64_t s = 0;
        const auto& wt = weights_[w];
        for (size_t i = 0; i < nvars_; ++i)
            if (m[i]) s += wt[i] * m[i];
        k[w] = s;
    }
    return k;
}

const std::map<DegreeKey, std::vector<poly::Monomial>>& Grading::monomials_by_key(uint32_t d) const {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::map<DegreeKey, std::vector<poly::Monomial>> groups;
    for (auto& m : poly::monomials_of_degree(nvars_, d)) groups[key(m)].push_back(std::move(m));
    return cache_.emplace(d, std::move(groups)).first->second;
}

const std::vector<poly::Monomial>& Grading::monomials(const DegreeKey& k) const {
    static const std::vector<poly::Monomial> empty;
    if (k.empty() || k[0] < 0) return empty;
    const auto& groups = monomials_by_key(uint32_t(k[0]));
    auto it = groups.find(k);
    return it == groups.end() ? empty : it->second;
}

}  // namespace frobvol::gradedla
