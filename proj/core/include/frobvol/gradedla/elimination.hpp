#pragma once

#include <numeric>
#include <vector>

#include "frobvol/gradedla/quotient.hpp"
#include "frobvol/poly/operators.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::gradedla {

// Quotienting by linear forms is a change of rings: solve the forms for
// pivot variables and substitute, landing in the ring of the free variables.
template <class C>
class LinearElimination {
public:
    using Field = typename C::Field;

    // `preferred_pivots` lists variables to try first as pivots (optional).
    LinearElimination(poly::RingPtr ring, const Field* field, const std::vector<poly::Poly<C>>& forms,
                      const std::vector<size_t>& preferred_pivots = {})
        : ring_(std::move(ring)), field_(field) {
        const size_t n = ring_->nvars();
        std::vector<std::vector<C>> m;
        for (const auto& f : forms) {
            if (f.is_zero()) continue;
            if (f.degree() != 1 || !f.is_homogeneous()) throw InvalidInput("parameter form is not linear");
            std::vector<C> row(n, field_->zero());
            for (const auto& [mon, c] : f.terms())
                for (size_t i = 0; i < n; ++i)
                    if (mon[i]) row[i] = c;
            m.push_back(std::move(row));
        }
        std::vector<size_t> order = preferred_pivots;
        std::vector<bool> listed(n, false);
        for (auto v : order) listed.at(v) = true;
        for (size_t v = 0; v < n; ++v)
            if (!listed[v]) order.push_back(v);

        // Gauss-Jordan over the coefficient field, pivot columns in `order`.
        std::vector<bool> is_pivot(n, false);
        size_t r = 0;
        std::vector<size_t> pivot_rows;
        for (size_t col : order) {
            if (r == m.size()) break;
            size_t piv = m.size();
            for (size_t i = r; i < m.size(); ++i)
                if (!m[i][col].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == m.size()) continue;
            std::swap(m[r], m[piv]);
            C inv = m[r][col].inv();
            for (auto& x : m[r]) x = x * inv;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == r || m[i][col].is_zero()) continue;
                C a = m[i][col];
                for (size_t j = 0; j < n; ++j)
                    if (!m[r][j].is_zero()) m[i][j] = m[i][j] - a * m[r][j];
            }
            is_pivot[col] = true;
            pivots_.push_back(col);
            ++r;
        }
        m.resize(r);

        std::vector<std::string> names;
        std::vector<size_t> new_index(n, size_t(-1));
        for (size_t v = 0; v < n; ++v)
            if (!is_pivot[v]) {
                new_index[v] = names.size();
                free_.push_back(v);
                names.push_back(ring_->name(v));
            }
        reduced_ = poly::Ring::make(names);
        images_.resize(n);
        for (size_t v = 0; v < n; ++v)
            if (!is_pivot[v]) images_[v] = poly::Poly<C>::variable(reduced_, field_, new_index[v]);
        for (size_t i = 0; i < r; ++i) {
            poly::Poly<C> img(reduced_, field_);
            for (size_t v = 0; v < n; ++v)
                if (!is_pivot[v] && !m[i][v].is_zero())
                    img -= poly::Poly<C>::variable(reduced_, field_, new_index[v]) * m[i][v];
            images_[pivots_[i]] = std::move(img);
        }
    }

    const poly::RingPtr& ring() const { return ring_; }
    const poly::RingPtr& reduced_ring() const { return reduced_; }
    size_t rank() const { return pivots_.size(); }
    const std::vector<size_t>& pivots() const { return pivots_; }
    const std::vector<size_t>& free_variables() const { return free_; }
    const std::vector<poly::Poly<C>>& images() const { return images_; }

    poly::Poly<C> apply(const poly::Poly<C>& f) const {
        if (f.is_zero()) return poly::Poly<C>(reduced_, field_);
        std::function<C(const C&)> id = [](const C& c) { return c; };
        return poly::substitute<C, C>(f, images_, id, poly::Poly<C>(reduced_, field_));
    }

private:
    poly::RingPtr ring_;
    const Field* field_;
    poly::RingPtr reduced_;
    std::vector<size_t> pivots_;
    std::vector<size_t> free_;
    std::vector<poly::Poly<C>> images_;
};

// Hilbert function of R/(gens) in degrees 0..d_max. Linear generators are
// eliminated first by substitution; the rest is degreewise linear algebra.
template <class C>
std::vector<size_t> hilbert_function(const poly::RingPtr& ring, const typename C::Field* field,
                                     const std::vector<poly::Poly<C>>& gens, int d_max) {
    std::vector<poly::Poly<C>> linear, rest;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw InvalidInput("generator is not homogeneous");
        (g.degree() == 1 ? linear : rest).push_back(g);
    }
    LinearElimination<C> elim(ring, field, linear);
    std::vector<poly::Poly<C>> reduced;
    for (const auto& g : rest) reduced.push_back(elim.apply(g));
    auto q = GradedQuotient<C>::ideal(elim.reduced_ring(), field, reduced);
    return q.hilbert_function(0, d_max);
}

}  // namespace frobvol::gradedla
