#include "frobvol/gradedla/fraction_free.hpp"

#include "frobvol/poly/division.hpp"

namespace frobvol::gradedla {

using coeff::Frac;
using P = FractionFreeEchelon::P;

namespace {
P divide_exact(const P& a, const P& b) {
    auto q = poly::exact_divide(a, b);
    if (!q) throw Error("fraction-free elimination: inexact division");
    return *q;
}
}  // namespace

void FractionFreeEchelon::add_row(const SparseVec<Frac>& v) {
    if (finalized_) throw Error("fraction-free echelon already finalized");
    const auto& R = field_->param_ring();
    const auto* F = &field_->base();
    std::vector<P> dens;
    for (const auto& [j, c] : v) {
        if (c.is_polynomial()) continue;
        bool seen = false;
        for (const auto& d : dens)
            if (d == c.den()) seen = true;
        if (!seen) dens.push_back(c.den());
    }
    P common = P::constant(R, F, F->one());
    for (const auto& d : dens) common = common * d;
    std::vector<P> row(ncols_, P(R, F));
    bool nonzero = false;
    for (const auto& [j, c] : v) {
        if (c.is_zero()) continue;
        row[j] = c.is_polynomial() ? c.num() * common * c.den().constant_term().inv()
                                   : c.num() * divide_exact(common, c.den());
        nonzero = true;
    }
    if (nonzero) rows_.push_back(std::move(row));
}

void FractionFreeEchelon::finalize() {
    if (finalized_) return;
    finalized_ = true;
    const auto& R = field_->param_ring();
    const auto* F = &field_->base();
    P d = P::constant(R, F, F->one());
    size_t r = 0;
    for (uint32_t c = 0; c < ncols_ && r < rows_.size(); ++c) {
        size_t best = rows_.size();
        for (size_t i = r; i < rows_.size(); ++i)
            if (!rows_[i][c].is_zero() && (best == rows_.size() || rows_[i][c].size() < rows_[best][c].size()))
                best = i;
        if (best == rows_.size()) continue;
        std::swap(rows_[r], rows_[best]);
        const P p = rows_[r][c];
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i == r) continue;
            const P a = rows_[i][c];
            for (uint32_t j = 0; j < ncols_; ++j) {
                P t = p * rows_[i][j];
                if (!a.is_zero() && !rows_[r][j].is_zero()) t = t - a * rows_[r][j];
                rows_[i][j] = d.is_constant() ? t * d.constant_term().inv() : divide_exact(t, d);
            }
        }
        d = p;
        pivots_.push_back(c);
        ++r;
    }
    rows_.resize(r);
    delta_ = d;
    pivot_of_col_.assign(ncols_, -1);
    for (size_t i = 0; i < pivots_.size(); ++i) pivot_of_col_[pivots_[i]] = int32_t(i);
}

bool FractionFreeEchelon::is_pivot(uint32_t col) const { return pivot_of_col_.at(col) >= 0; }

SparseVec<Frac> FractionFreeEchelon::reduce(const SparseVec<Frac>& v) const {
    if (!finalized_) throw Error("fraction-free echelon not finalized");
    std::vector<Frac> acc(ncols_, field_->zero());
    std::vector<Frac> coef;
    bool any_pivot = false;
    for (const auto& [j, c] : v) acc[j] += c;
    coef.reserve(pivots_.size());
    for (uint32_t c : pivots_) {
        coef.push_back(acc[c]);
        if (!acc[c].is_zero()) any_pivot = true;
    }
    SparseVec<Frac> out;
    const Frac dinv = field_->from_poly(delta_).inv();
    for (uint32_t j = 0; j < ncols_; ++j) {
        if (pivot_of_col_[j] >= 0) continue;
        Frac s = acc[j];
        if (any_pivot) {
            Frac extra = field_->zero();
            for (size_t i = 0; i < pivots_.size(); ++i) {
                if (coef[i].is_zero() || rows_[i][j].is_zero()) continue;
                extra += coef[i] * field_->from_poly(rows_[i][j]);
            }
            if (!extra.is_zero()) s -= extra * dinv;
        }
        if (!s.is_zero()) out.emplace_back(j, s);
    }
    return out;
}

}  // namespace frobvol::gradedla
