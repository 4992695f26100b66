#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frobvol::poly {

using Exponent = uint16_t;

// Dense exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {
        for (auto x : e_) deg_ += x;
    }

    static Monomial variable(size_t nvars, size_t i, Exponent power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        m.deg_ = power;
        return m;
    }

    size_t nvars() const { return e_.size(); }
    uint32_t degree() const { return deg_; }
    Exponent operator[](size_t i) const { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    void set(size_t i, Exponent v) {
        deg_ = deg_ - e_[i] + v;
        e_[i] = v;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = Exponent(r.e_[i] + o.e_[i]);
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(o);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = Exponent(r.e_[i] - e_[i]);
        r.deg_ -= deg_;
        return r;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Degree-lexicographic: higher degree first, then larger leading exponents first.
    bool precedes(const Monomial& o) const {
        if (deg_ != o.deg_) return deg_ > o.deg_;
        return e_ > o.e_;
    }
    bool operator<(const Monomial& o) const { return precedes(o); }

    size_t hash() const {
        uint64_t h = 1469598103934665603ULL;
        for (auto x : e_) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return size_t(h);
    }

private:
    std::vector<Exponent> e_;
    uint32_t deg_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All exponent vectors of total degree d in n variables, in descending deglex order.
std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d);

}  // namespace frobvol::poly
