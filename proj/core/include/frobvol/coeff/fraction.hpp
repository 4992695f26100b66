#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::coeff {

class Frac;

// Rational function field base(t_1..t_r), elements as numerator/denominator
// pairs of polynomials over `base`.
class FracField {
public:
    using Field = FracField;
    static const FracField& get(const FiniteField& base, const std::vector<std::string>& vars);

    const FiniteField& base() const { return *base_; }
    const poly::RingPtr& param_ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return ring_->names(); }
    size_t nvars() const { return ring_->nvars(); }
    uint32_t characteristic() const { return base_->characteristic(); }
    std::string name() const;

    Frac zero() const;
    Frac one() const;
    Frac from_integer(int64_t v) const;
    Frac from_base(const GF& c) const;
    Frac variable(size_t i) const;
    Frac variable(const std::string& name) const;
    Frac from_poly(poly::Poly<GF> num) const;
    Frac make(poly::Poly<GF> num, poly::Poly<GF> den) const;

private:
    FracField(const FiniteField* base, poly::RingPtr ring) : base_(base), ring_(std::move(ring)) {}
    const FiniteField* base_;
    poly::RingPtr ring_;
};

class Frac {
public:
    using Field = FracField;
    using P = poly::Poly<GF>;

    Frac() = default;
    Frac(const FracField* f, P num, P den);

    const FracField* field() const { return f_; }
    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    // Denominator is the constant 1.
    bool is_polynomial() const { return den_.is_constant(); }

    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const { return *this * o.inv(); }
    Frac operator-() const { return Frac(f_, -num_, den_, true); }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    bool operator==(const Frac& o) const;
    bool operator!=(const Frac& o) const { return !(*this == o); }

    Frac inv() const;
    Frac pow(uint64_t e) const;
    Frac frobenius() const;
    Frac pth_root() const;
    // Partial derivative with respect to parameter variable i.
    Frac derivative(size_t i) const;

    Frac zero_like() const { return f_->zero(); }
    Frac one_like() const { return f_->one(); }
    Frac from_int_like(int64_t v) const { return f_->from_integer(v); }
    uint32_t characteristic() const { return f_->characteristic(); }
    std::string to_string() const;

private:
    Frac(const FracField* f, P num, P den, bool normalized)
        : f_(f), num_(std::move(num)), den_(std::move(den)) {
        if (!normalized) normalize();
    }
    void normalize();
    const FracField* same(const Frac& o) const;

    const FracField* f_ = nullptr;
    P num_;
    P den_;
};

// Evaluate at a point of a finite field of the same characteristic.
GF evaluate(const Frac& a, const std::vector<GF>& point);
GF evaluate(const poly::Poly<GF>& a, const std::vector<GF>& point);

// Substitute parameter images (polynomials over the base field in the target
// field's variables) into a fraction.
Frac substitute(const Frac& a, const std::vector<poly::Poly<GF>>& images, const FracField& target);

// Text form of a polynomial over a finite field (used for fraction parts and
// parameter-ring polynomials).
std::string format_base_poly(const poly::Poly<GF>& p);

}  // namespace frobvol::coeff
