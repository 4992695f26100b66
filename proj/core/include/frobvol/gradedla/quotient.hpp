#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/coeff/fraction.hpp"
#include "frobvol/gradedla/fraction_free.hpp"
#include "frobvol/gradedla/linalg.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::gradedla {

// Uniform row-space interface: incremental elimination over finite fields,
// fraction-free elimination over rational function fields.
template <class C>
class RowSpace;

template <>
class RowSpace<coeff::GF> {
public:
    RowSpace(uint32_t ncols, const coeff::FiniteField* f) : e_(ncols, f->zero()) {}
    void add_row(const SparseVec<coeff::GF>& v) { e_.insert(v); }
    void finalize() {}
    size_t rank() const { return e_.rank(); }
    bool is_pivot(uint32_t c) const { return e_.is_pivot(c); }
    SparseVec<coeff::GF> reduce(const SparseVec<coeff::GF>& v) const { return e_.reduce(v); }

private:
    Echelon<coeff::GF> e_;
};

template <>
class RowSpace<coeff::Frac> {
public:
    RowSpace(uint32_t ncols, const coeff::FracField* f) : e_(ncols, *f) {}
    void add_row(const SparseVec<coeff::Frac>& v) { e_.add_row(v); }
    void finalize() { e_.finalize(); }
    size_t rank() const { return e_.rank(); }
    bool is_pivot(uint32_t c) const { return e_.is_pivot(c); }
    SparseVec<coeff::Frac> reduce(const SparseVec<coeff::Frac>& v) const { return e_.reduce(v); }

private:
    FractionFreeEchelon e_;
};

// Element of a free module: one polynomial per generator.
template <class C>
using ModuleElement = std::vector<poly::Poly<C>>;

// Graded pieces of coker(relations) for a free module with generators of the
// given degrees. An ideal quotient R/I is the rank-one case with degree 0.
template <class C>
class GradedQuotient {
public:
    using Field = typename C::Field;

    struct Piece {
        int degree = 0;
        std::vector<std::pair<uint32_t, poly::Monomial>> columns;  // (generator, monomial)
        std::vector<std::unordered_map<poly::Monomial, uint32_t, poly::MonomialHash>> index;  // per generator
        std::unique_ptr<RowSpace<C>> rows;
        std::vector<uint32_t> standard;  // non-pivot columns
        std::vector<int32_t> standard_pos;  // column -> position in `standard` or -1
    };

    GradedQuotient(poly::RingPtr ring, const Field* field, std::vector<int> gen_degrees,
                   std::vector<ModuleElement<C>> relations)
        : ring_(std::move(ring)), field_(field), gen_degrees_(std::move(gen_degrees)), relations_(std::move(relations)) {
        for (const auto& rel : relations_) {
            if (rel.size() != gen_degrees_.size()) throw InvalidInput("relation length differs from generator count");
            int deg = 0;
            bool any = false;
            for (size_t j = 0; j < rel.size(); ++j) {
                if (rel[j].is_zero()) continue;
                if (!rel[j].is_homogeneous()) throw InvalidInput("relation entry is not homogeneous");
                int dj = rel[j].degree() + gen_degrees_[j];
                if (any && dj != deg) throw InvalidInput("relation is not homogeneous");
                deg = dj;
                any = true;
            }
            rel_degrees_.push_back(any ? deg : INT32_MIN);
        }
    }

    // Ideal quotient R/(gens).
    static GradedQuotient ideal(poly::RingPtr ring, const Field* field, const std::vector<poly::Poly<C>>& gens) {
        std::vector<ModuleElement<C>> rels;
        for (const auto& g : gens)
            if (!g.is_zero()) rels.push_back({g});
        return GradedQuotient(std::move(ring), field, {0}, std::move(rels));
    }

    const poly::RingPtr& ring() const { return ring_; }
    const Field* field() const { return field_; }
    size_t ngens() const { return gen_degrees_.size(); }
    const std::vector<int>& gen_degrees() const { return gen_degrees_; }

    const Piece& piece(int d) const {
        auto it = pieces_.find(d);
        if (it != pieces_.end()) return *it->second;
        auto p = std::make_unique<Piece>();
        p->degree = d;
        p->index.resize(ngens());
        for (size_t j = 0; j < ngens(); ++j) {
            int e = d - gen_degrees_[j];
            if (e < 0) continue;
            for (auto& m : poly::monomials_of_degree(ring_->nvars(), uint32_t(e))) {
                p->index[j].emplace(m, uint32_t(p->columns.size()));
                p->columns.emplace_back(uint32_t(j), std::move(m));
            }
        }
        p->rows = std::make_unique<RowSpace<C>>(uint32_t(p->columns.size()), field_);
        for (size_t r = 0; r < relations_.size(); ++r) {
            int e = d - rel_degrees_[r];
            if (rel_degrees_[r] == INT32_MIN || e < 0) continue;
            for (const auto& mu : poly::monomials_of_degree(ring_->nvars(), uint32_t(e))) {
                SparseVec<C> v = vectorize(*p, relations_[r], &mu);
                if (!v.empty()) p->rows->add_row(v);
            }
        }
        p->rows->finalize();
        p->standard_pos.assign(p->columns.size(), -1);
        for (uint32_t c = 0; c < p->columns.size(); ++c)
            if (!p->rows->is_pivot(c)) {
                p->standard_pos[c] = int32_t(p->standard.size());
                p->standard.push_back(c);
            }
        return *pieces_.emplace(d, std::move(p)).first->second;
    }

    size_t dim(int d) const { return piece(d).standard.size(); }
    size_t ideal_dim(int d) const { return piece(d).rows->rank(); }

    // Coordinates of a homogeneous element of degree d in the standard basis.
    std::vector<C> coordinates(const ModuleElement<C>& v, int d) const {
        const Piece& p = piece(d);
        std::vector<C> out(p.standard.size(), field_->zero());
        for (const auto& [c, val] : p.rows->reduce(vectorize(p, v, nullptr))) out[size_t(p.standard_pos[c])] = val;
        return out;
    }

    // Normal form as a module element supported on standard monomials.
    ModuleElement<C> normal_form(const ModuleElement<C>& v, int d) const {
        const Piece& p = piece(d);
        ModuleElement<C> out(ngens(), poly::Poly<C>(ring_, field_));
        std::vector<std::vector<typename poly::Poly<C>::Term>> ts(ngens());
        for (const auto& [c, val] : p.rows->reduce(vectorize(p, v, nullptr)))
            ts[p.columns[c].first].emplace_back(p.columns[c].second, val);
        for (size_t j = 0; j < ngens(); ++j)
            out[j] = poly::Poly<C>::from_terms(ring_, field_, std::move(ts[j]));
        return out;
    }

    // Standard basis element k of degree d as a module element.
    ModuleElement<C> basis_element(int d, size_t k) const {
        const Piece& p = piece(d);
        const auto& [j, m] = p.columns[p.standard.at(k)];
        ModuleElement<C> out(ngens(), poly::Poly<C>(ring_, field_));
        out[j] = poly::Poly<C>::term(ring_, field_, m, field_->one());
        return out;
    }

    std::vector<size_t> hilbert_function(int dmin, int dmax) const {
        std::vector<size_t> h;
        for (int d = dmin; d <= dmax; ++d) h.push_back(dim(d));
        return h;
    }

private:
    // Sparse coordinates of mu*v (mu optional) in the piece's column space;
    // terms of other degrees are ignored by callers passing homogeneous input.
    SparseVec<C> vectorize(const Piece& p, const ModuleElement<C>& v, const poly::Monomial* mu) const {
        SparseVec<C> out;
        for (size_t j = 0; j < v.size() && j < ngens(); ++j)
            for (const auto& [m, c] : v[j].terms()) {
                auto it = mu ? p.index[j].find(m * *mu) : p.index[j].find(m);
                if (it == p.index[j].end()) {
                    throw InvalidInput("element has a term outside degree " + std::to_string(p.degree));
                }
                out.emplace_back(it->second, c);
            }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    poly::RingPtr ring_;
    const Field* field_;
    std::vector<int> gen_degrees_;
    std::vector<ModuleElement<C>> relations_;
    std::vector<int> rel_degrees_;
    mutable std::map<int, std::unique_ptr<Piece>> pieces_;
};

}  // namespace frobvol::gradedla
