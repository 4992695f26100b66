#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "frobvol/errors.hpp"
#include "frobvol/gradedla/elimination.hpp"
#include "frobvol/gradedla/quotient.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::artinian {

// R/(I + params). Linear parameters are eliminated by substitution; the
// graded pieces of the remaining quotient live in the ring of free variables.
template <class C>
class ArtinianAlgebra {
public:
    using Field = typename C::Field;
    using P = poly::Poly<C>;

    // With `known_top` >= 0 the vanishing of the next piece is taken as
    // certified by the caller (for instance at a specialization, which can
    // only enlarge pieces) and only degrees up to it are computed.
    ArtinianAlgebra(poly::RingPtr ring, const Field* field, const std::vector<P>& ideal, const std::vector<P>& params,
                    int degree_bound, int known_top = -1)
        : ring_(ring), field_(field) {
        std::vector<P> linear, rest;
        for (const auto& g : params) {
            if (!g.is_homogeneous()) throw InvalidInput("parameter form is not homogeneous");
            (g.degree() == 1 ? linear : rest).push_back(g);
        }
        for (const auto& g : ideal) {
            if (!g.is_homogeneous()) throw InvalidInput("ideal generator is not homogeneous");
            rest.push_back(g);
        }
        elim_ = std::make_shared<gradedla::LinearElimination<C>>(ring, field, linear);
        std::vector<P> reduced;
        for (const auto& g : rest) {
            P r = elim_->apply(g);
            if (!r.is_zero()) reduced.push_back(std::move(r));
        }
        quotient_ = std::make_shared<gradedla::GradedQuotient<C>>(
            gradedla::GradedQuotient<C>::ideal(elim_->reduced_ring(), field, reduced));
        reduced_ = std::move(reduced);
        if (known_top >= 0) {
            for (int d = 0; d <= known_top; ++d) hilbert_.push_back(quotient_->dim(d));
            if (hilbert_.back() == 0) throw InvalidInput("piece of the certified top degree vanishes");
            top_ = known_top;
            return;
        }
        for (int d = 0; d <= degree_bound; ++d) {
            size_t h = quotient_->dim(d);
            if (h == 0) {
                top_ = d - 1;
                break;
            }
            hilbert_.push_back(h);
        }
        if (top_ < 0) throw NotArtinianWithinBound("no zero piece up to degree " + std::to_string(degree_bound));
    }

    const poly::RingPtr& ring() const { return ring_; }
    const Field* field() const { return field_; }
    const poly::RingPtr& reduced_ring() const { return elim_->reduced_ring(); }
    const gradedla::LinearElimination<C>& elimination() const { return *elim_; }
    std::shared_ptr<const gradedla::LinearElimination<C>> elimination_ptr() const { return elim_; }
    const gradedla::GradedQuotient<C>& quotient() const { return *quotient_; }
    std::shared_ptr<const gradedla::GradedQuotient<C>> quotient_ptr() const { return quotient_; }

    int top_degree() const { return top_; }
    const std::vector<size_t>& hilbert() const { return hilbert_; }
    // Generators of the quotient in the reduced ring.
    const std::vector<P>& reduced_generators() const { return reduced_; }
    size_t dim(int d) const { return d < 0 || d > top_ ? 0 : hilbert_[size_t(d)]; }
    bool is_gorenstein() const { return hilbert_.back() == 1; }

    // Image of an ambient polynomial in the ring of free variables.
    P to_reduced(const P& f) const { return elim_->apply(f); }

    // Coordinates of a degree-d element (ambient ring) on the standard basis.
    std::vector<C> coordinates(const P& f, int d) const { return coordinates_reduced(to_reduced(f), d); }
    std::vector<C> coordinates_reduced(const P& f, int d) const {
        if (d < 0 || d > top_) return {};
        return quotient_->coordinates({f}, d);
    }
    P normal_form_reduced(const P& f, int d) const {
        if (d < 0 || d > top_) return P(reduced_ring(), field_);
        return quotient_->normal_form({f}, d)[0];
    }
    // Standard monomials of degree d, as polynomials in the reduced ring.
    std::vector<P> basis(int d) const {
        std::vector<P> out;
        for (size_t k = 0; k < dim(d); ++k) out.push_back(quotient_->basis_element(d, k)[0]);
        return out;
    }

private:
    poly::RingPtr ring_;
    const Field* field_;
    std::shared_ptr<gradedla::LinearElimination<C>> elim_;
    std::shared_ptr<gradedla::GradedQuotient<C>> quotient_;
    std::vector<P> reduced_;
    std::vector<size_t> hilbert_;
    int top_ = -1;
};

// Graded module given by generators (with degrees) and relations.
template <class C>
struct ModulePresentation {
    poly::RingPtr ring;
    const typename C::Field* field = nullptr;
    std::vector<int> gen_degrees;
    std::vector<gradedla::ModuleElement<C>> relations;
};

// Linear functional on a one-dimensional graded piece, normalized by
// Vol(z0) = 1. Elements are given in the quotient's ring after `to_quotient`.
template <class C>
class VolumeFunctional {
public:
    using P = poly::Poly<C>;
    using Element = gradedla::ModuleElement<C>;

    VolumeFunctional(std::shared_ptr<const gradedla::GradedQuotient<C>> q, int degree,
                     std::function<Element(const Element&)> to_quotient, const Element& z0)
        : q_(std::move(q)), degree_(degree), to_quotient_(std::move(to_quotient)) {
        if (q_->dim(degree_) != 1)
            throw DegenerateNormalization("piece of degree " + std::to_string(degree_) + " has dimension " +
                                          std::to_string(q_->dim(degree_)));
        C c = raw(z0);
        if (c.is_zero()) throw DegenerateNormalization("normalization element lies in the relations");
        scale_ = c.inv();
        z0_ = z0;
    }

    int degree() const { return degree_; }
    const Element& normalization() const { return z0_; }
    // Value on the standard basis vector of the piece.
    const C& table() const { return scale_; }

    C operator()(const Element& v) const { return raw(v) * scale_; }
    C operator()(const P& w) const { return (*this)(Element{w}); }
    // Element already expressed in the quotient's ring.
    C eval_reduced(const P& w) const { return q_->coordinates({w}, degree_)[0] * scale_; }

private:
    C raw(const Element& v) const { return q_->coordinates(to_quotient_(v), degree_)[0]; }

    std::shared_ptr<const gradedla::GradedQuotient<C>> q_;
    int degree_;
    std::function<Element(const Element&)> to_quotient_;
    Element z0_;
    C scale_;
};

// First degree-s monomial of the ambient ring with nonzero socle coordinate.
template <class C>
poly::Poly<C> default_normalization(const ArtinianAlgebra<C>& A) {
    const int s = A.top_degree();
    for (const auto& m : poly::monomials_of_degree(A.ring()->nvars(), uint32_t(s))) {
        auto w = poly::Poly<C>::term(A.ring(), A.field(), m, A.field()->one());
        auto c = A.coordinates(w, s);
        if (!c.empty() && !c[0].is_zero()) return w;
    }
    throw DegenerateNormalization("every degree-s monomial lies in the ideal");
}

template <class C>
VolumeFunctional<C> volume(const ArtinianAlgebra<C>& A, std::optional<poly::Poly<C>> z0 = std::nullopt) {
    if (!A.is_gorenstein()) throw InvalidInput("socle is not one-dimensional");
    poly::Poly<C> z = z0 ? *z0 : default_normalization(A);
    auto elim = [e = A.elimination_ptr()](const gradedla::ModuleElement<C>& v) {
        return gradedla::ModuleElement<C>{e->apply(v.at(0))};
    };
    return VolumeFunctional<C>(A.quotient_ptr(), A.top_degree(), elim, {z});
}

template <class C>
C vol_eval(const VolumeFunctional<C>& V, const poly::Poly<C>& w) {
    return V(w);
}

// Volume on the degree-0 piece of M / (params) M.
template <class C>
VolumeFunctional<C> volume_presented(const ModulePresentation<C>& M, const std::vector<poly::Poly<C>>& params,
                                     const gradedla::ModuleElement<C>& z0) {
    auto rels = M.relations;
    const size_t r = M.gen_degrees.size();
    for (const auto& l : params)
        for (size_t j = 0; j < r; ++j) {
            gradedla::ModuleElement<C> v(r, poly::Poly<C>(M.ring, M.field));
            v[j] = l;
            rels.push_back(std::move(v));
        }
    auto q = std::make_shared<gradedla::GradedQuotient<C>>(M.ring, M.field, M.gen_degrees, std::move(rels));
    auto id = [](const gradedla::ModuleElement<C>& v) { return v; };
    return VolumeFunctional<C>(q, 0, id, z0);
}

}  // namespace frobvol::artinian
