#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobvol/errors.hpp"
#include "frobvol/poly/monomial.hpp"
#include "frobvol/poly/ring.hpp"

namespace frobvol::poly {

// Sparse polynomial over a coefficient type C (coeff::GF or coeff::Frac).
// Terms are kept sorted in descending deglex order with nonzero coefficients.
template <class C>
class Poly {
public:
    using Coeff = C;
    using Field = typename C::Field;
    using Term = std::pair<Monomial, C>;

    Poly() = default;
    Poly(RingPtr ring, const Field* field) : ring_(std::move(ring)), field_(field) {}

    static Poly constant(RingPtr ring, const Field* field, const C& c) {
        Poly p(std::move(ring), field);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial(p.ring_->nvars()), c);
        return p;
    }
    static Poly variable(RingPtr ring, const Field* field, size_t i) {
        Poly p(std::move(ring), field);
        p.terms_.emplace_back(Monomial::variable(p.ring_->nvars(), i), field->one());
        return p;
    }
    static Poly term(RingPtr ring, const Field* field, Monomial m, const C& c) {
        Poly p(std::move(ring), field);
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
        return p;
    }
    // Sorts and combines arbitrary terms.
    static Poly from_terms(RingPtr ring, const Field* field, std::vector<Term> terms) {
        Poly p(std::move(ring), field);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first.precedes(b.first); });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
            } else if (!t.second.is_zero()) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }
    // Terms already sorted, distinct and nonzero.
    static Poly from_sorted_terms(RingPtr ring, const Field* field, std::vector<Term> terms) {
        Poly p(std::move(ring), field);
        p.terms_ = std::move(terms);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Field* field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
    size_t nvars() const { return ring_->nvars(); }

    Poly zero() const { return Poly(ring_, field_); }
    Poly one() const { return constant(ring_, field_, field_->one()); }

    // Maximum total degree; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : int(terms_.front().first.degree()); }
    int min_degree() const { return terms_.empty() ? -1 : int(terms_.back().first.degree()); }
    bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

    C coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& x) { return t.first.precedes(x); });
        if (it != terms_.end() && it->first == m) return it->second;
        return field_->zero();
    }
    C constant_term() const {
        if (!terms_.empty() && terms_.back().first.degree() == 0) return terms_.back().second;
        return field_->zero();
    }

    Poly operator+(const Poly& o) const { return merge(o, false); }
    Poly operator-(const Poly& o) const { return merge(o, true); }
    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator*(const C& c) const {
        Poly r(ring_, field_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C v = t.second * c;
            if (!v.is_zero()) r.terms_.emplace_back(t.first, v);
        }
        return r;
    }

    Poly mul_monomial(const Monomial& m, const C& c) const {
        Poly r(ring_, field_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C v = t.second * c;
            if (!v.is_zero()) r.terms_.emplace_back(t.first * m, v);
        }
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        if (is_zero() || o.is_zero()) return zero();
        if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].first, o.terms_[0].second);
        if (terms_.size() == 1) return o.mul_monomial(terms_[0].first, terms_[0].second);
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.first * b.first;
                C v = a.second * b.second;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(v));
                else
                    it->second += v;
            }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& kv : acc)
            if (!kv.second.is_zero()) ts.emplace_back(kv.first, kv.second);
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.first.precedes(b.first); });
        return from_sorted_terms(ring_, field_, std::move(ts));
    }

    Poly pow(uint32_t e) const {
        Poly r = one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != o.terms_[i].first || !(terms_[i].second == o.terms_[i].second)) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Terms of a given total degree.
    Poly homogeneous_part(uint32_t d) const {
        Poly r(ring_, field_);
        for (const auto& t : terms_)
            if (t.first.degree() == d) r.terms_.push_back(t);
        return r;
    }

    void check_ring(const Poly& o) const {
        if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->same_as(*o.ring_)))
            throw RingMismatch("operands live in different rings");
        if (field_ != o.field_) throw FieldMismatch("polynomials over different coefficient fields");
    }

private:
    Poly merge(const Poly& o, bool subtract) const {
        check_ring(o);
        Poly r(ring_, field_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first.precedes(o.terms_[j].first))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first.precedes(terms_[i].first)) {
                const auto& t = o.terms_[j++];
                r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
            } else {
                C v = subtract ? terms_[i].second - o.terms_[j].second : terms_[i].second + o.terms_[j].second;
                if (!v.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    const Field* field_ = nullptr;
    std::vector<Term> terms_;
};

}  // namespace frobvol::poly
