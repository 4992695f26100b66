#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace frobvol::coeff {

class GF;

// GF(p^k) with a stored monic irreducible modulus. Elements are encoded as
// integers sum c_i p^i (c_i the coefficient of g^i, g the class of x).
class FiniteField {
public:
    // Default modulus from the built-in table.
    static const FiniteField& get(uint32_t p, uint32_t k = 1);
    // Explicit modulus: lower coefficients c_0..c_{k-1} of a monic polynomial.
    static const FiniteField& get(uint32_t p, const std::vector<uint32_t>& modulus_low);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return k_; }
    uint64_t order() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool is_prime() const { return k_ == 1; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t from_int(int64_t v) const;
    uint64_t pth_root(uint64_t a) const { return pow(a, q_ / p_); }

    GF element(uint64_t code) const;
    GF zero() const;
    GF one() const;
    GF generator() const;  // class of x, not necessarily primitive
    GF from_integer(int64_t v) const;

    // Text form: integer residue for prime fields, polynomial in `gen` otherwise.
    std::string format(uint64_t code, const std::string& gen = "g") const;

    std::string name() const;

private:
    FiniteField(uint32_t p, std::vector<uint32_t> modulus_low);
    uint64_t mul_slow(uint64_t a, uint64_t b) const;
    void build_tables();

    uint32_t p_;
    uint32_t k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    uint64_t modmask_ = 0;  // p = 2: modulus bits without the leading term
    std::vector<uint32_t> log_;
    std::vector<uint32_t> exp_;
};

// Smallest-code monic irreducible of degree k over GF(p) from the built-in table.
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t k);

class GF {
public:
    using Field = FiniteField;

    GF() = default;
    GF(const FiniteField* f, uint64_t v) : f_(f), v_(v) {}

    const FiniteField* field() const { return f_; }
    uint64_t code() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    GF operator+(const GF& o) const { return GF(same(o), f_->add(v_, o.v_)); }
    GF operator-(const GF& o) const { return GF(same(o), f_->sub(v_, o.v_)); }
    GF operator*(const GF& o) const { return GF(same(o), f_->mul(v_, o.v_)); }
    GF operator/(const GF& o) const { return *this * o.inv(); }
    GF operator-() const { return GF(f_, f_->neg(v_)); }
    GF& operator+=(const GF& o) { return *this = *this + o; }
    GF& operator-=(const GF& o) { return *this = *this - o; }
    GF& operator*=(const GF& o) { return *this = *this * o; }
    bool operator==(const GF& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const GF& o) const { return !(*this == o); }

    GF inv() const;
    GF pow(uint64_t e) const { return GF(f_, f_->pow(v_, e)); }
    GF frobenius() const { return pow(f_->characteristic()); }
    GF pth_root() const { return GF(f_, f_->pth_root(v_)); }

    // Coefficient helpers shared with Frac so templates can treat both alike.
    GF zero_like() const { return GF(f_, 0); }
    GF one_like() const { return GF(f_, 1); }
    GF from_int_like(int64_t v) const { return GF(f_, f_->from_int(v)); }
    uint32_t characteristic() const { return f_->characteristic(); }
    std::string to_string() const { return f_->format(v_); }
    size_t hash() const { return std::hash<uint64_t>()(v_); }
    bool is_constant_poly() const { return true; }

private:
    const FiniteField* same(const GF& o) const;
    const FiniteField* f_ = nullptr;
    uint64_t v_ = 0;
};

// Embed an element of a subfield into `target` (same characteristic). Only
// prime-field elements and elements already in `target` are supported.
GF embed(const GF& a, const FiniteField& target);

}  // namespace frobvol::coeff
