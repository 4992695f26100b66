#include "frobvol/coeff/fraction.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "frobvol/errors.hpp"
#include "frobvol/poly/division.hpp"

namespace frobvol::coeff {

using poly::Monomial;
using P = poly::Poly<GF>;

const FracField& FracField::get(const FiniteField& base, const std::vector<std::string>& vars) {
    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, std::vector<std::string>>, std::unique_ptr<FracField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&base, vars);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    std::unique_ptr<FracField> f(new FracField(&base, poly::Ring::make(vars)));
    const FracField& ref = *f;
    registry.emplace(key, std::move(f));
    return ref;
}

std::string FracField::name() const {
    std::string s = base_->name() + "(";
    for (size_t i = 0; i < vars().size(); ++i) s += (i ? "," : "") + vars()[i];
    return s + ")";
}

Frac FracField::zero() const { return Frac(this, P(ring_, base_), P::constant(ring_, base_, base_->one())); }
Frac FracField::one() const { return from_base(base_->one()); }
Frac FracField::from_integer(int64_t v) const { return from_base(base_->from_integer(v)); }
Frac FracField::from_base(const GF& c) const {
    return Frac(this, P::constant(ring_, base_, c), P::constant(ring_, base_, base_->one()));
}
Frac FracField::variable(size_t i) const { return from_poly(P::variable(ring_, base_, i)); }
Frac FracField::variable(const std::string& name) const { return variable(ring_->require_index(name)); }
Frac FracField::from_poly(P num) const {
    return Frac(this, std::move(num), P::constant(ring_, base_, base_->one()));
}
Frac FracField::make(P num, P den) const { return Frac(this, std::move(num), std::move(den)); }

Frac::Frac(const FracField* f, P num, P den) : f_(f), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    normalize();
}

void Frac::normalize() {
    if (num_.is_zero()) {
        den_ = P::constant(f_->param_ring(), &f_->base(), f_->base().one());
        return;
    }
    // Cancel the common monomial content.
    const size_t n = f_->nvars();
    if (n > 0) {
        std::vector<poly::Exponent> g(num_.terms()[0].first.exponents());
        auto meet = [&](const P& p) {
            for (const auto& t : p.terms())
                for (size_t i = 0; i < n; ++i) g[i] = std::min(g[i], t.first[i]);
        };
        meet(num_);
        meet(den_);
        Monomial gm(g);
        if (gm.degree() > 0) {
            num_ = *poly::exact_divide(num_, P::term(num_.ring(), num_.field(), gm, f_->base().one()));
            den_ = *poly::exact_divide(den_, P::term(den_.ring(), den_.field(), gm, f_->base().one()));
        }
    }
    // Monic denominator.
    GF lc = den_.terms()[0].second;
    if (!lc.is_one()) {
        GF li = lc.inv();
        num_ = num_ * li;
        den_ = den_ * li;
    }
    if (den_.size() > 1 && num_.size() >= den_.size() && num_.degree() >= den_.degree()) {
        if (num_ == den_) {
            num_ = P::constant(num_.ring(), num_.field(), f_->base().one());
            den_ = num_;
            return;
        }
        auto q = poly::exact_divide(num_, den_, 4 * num_.size() + 16);
        if (q) {
            num_ = std::move(*q);
            den_ = P::constant(num_.ring(), num_.field(), f_->base().one());
        }
    }
}

const FracField* Frac::same(const Frac& o) const {
    if (f_ != o.f_) {
        throw FieldMismatch(std::string("operands in ") + (f_ ? f_->name() : "<unset>") + " and " +
                            (o.f_ ? o.f_->name() : "<unset>"));
    }
    return f_;
}

Frac Frac::operator+(const Frac& o) const {
    same(o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Frac(f_, num_ + o.num_, den_);
    return Frac(f_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator-(const Frac& o) const { return *this + (-o); }

Frac Frac::operator*(const Frac& o) const {
    same(o);
    if (is_zero() || o.is_zero()) return f_->zero();
    if (den_ == o.num_) return Frac(f_, num_, o.den_);
    if (num_ == o.den_) return Frac(f_, o.num_, den_);
    if (is_polynomial() && o.is_polynomial()) return Frac(f_, num_ * o.num_, den_, true);
    return Frac(f_, num_ * o.num_, den_ * o.den_);
}

bool Frac::operator==(const Frac& o) const {
    same(o);
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

Frac Frac::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + f_->name());
    return Frac(f_, den_, num_);
}

Frac Frac::pow(uint64_t e) const {
    Frac r = f_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

namespace {
P frobenius_poly(const P& a) {
    const uint32_t p = a.field()->characteristic();
    std::vector<P::Term> ts;
    ts.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
        std::vector<poly::Exponent> e(m.exponents());
        for (auto& x : e) x = poly::Exponent(x * p);
        ts.emplace_back(Monomial(std::move(e)), c.frobenius());
    }
    return P::from_sorted_terms(a.ring(), a.field(), std::move(ts));
}

P root_poly(const P& a) {
    const uint32_t p = a.field()->characteristic();
    std::vector<P::Term> ts;
    ts.reserve(a.size());
    for (const auto& [m, c] : a.terms()) {
        std::vector<poly::Exponent> e(m.exponents());
        for (auto& x : e) {
            if (x % p) throw NotAPthPower("term exponent not divisible by " + std::to_string(p));
            x = poly::Exponent(x / p);
        }
        ts.emplace_back(Monomial(std::move(e)), c.pth_root());
    }
    return P::from_sorted_terms(a.ring(), a.field(), std::move(ts));
}

P derivative_poly(const P& a, size_t i) {
    std::vector<P::Term> ts;
    for (const auto& [m, c] : a.terms()) {
        if (m[i] == 0) continue;
        GF v = c * c.from_int_like(m[i]);
        if (v.is_zero()) continue;
        Monomial d(m);
        d.set(i, poly::Exponent(m[i] - 1));
        ts.emplace_back(std::move(d), v);
    }
    return P::from_terms(a.ring(), a.field(), std::move(ts));
}
}  // namespace

Frac Frac::frobenius() const { return Frac(f_, frobenius_poly(num_), frobenius_poly(den_), true); }

Frac Frac::pth_root() const { return Frac(f_, root_poly(num_), root_poly(den_)); }

Frac Frac::derivative(size_t i) const {
    P dn = derivative_poly(num_, i);
    P dd = derivative_poly(den_, i);
    if (dd.is_zero()) return Frac(f_, dn, den_);
    return Frac(f_, dn * den_ - num_ * dd, den_ * den_);
}

std::string format_base_poly(const P& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const bool prime = p.field()->is_prime();
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (!prime && c.code() >= p.field()->characteristic()) cs = "(" + cs + ")";
        bool wrote = false;
        if (m.degree() == 0 || !c.is_one()) {
            os << cs;
            wrote = true;
        }
        for (size_t i = 0; i < m.nvars(); ++i) {
            if (!m[i]) continue;
            if (wrote) os << "*";
            os << p.ring()->name(i);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string Frac::to_string() const {
    if (den_.is_constant()) return format_base_poly(num_);
    return "(" + format_base_poly(num_) + ")/(" + format_base_poly(den_) + ")";
}

GF evaluate(const P& a, const std::vector<GF>& point) {
    if (point.size() != a.nvars()) throw IncompletePlan("evaluation point has wrong length");
    const FiniteField& target = *point.at(0).field();
    GF s = target.zero();
    for (const auto& [m, c] : a.terms()) {
        GF v = embed(c, target);
        for (size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) v *= point[i].pow(m[i]);
        s += v;
    }
    return s;
}

GF evaluate(const Frac& a, const std::vector<GF>& point) {
    if (point.empty()) throw IncompletePlan("empty evaluation point");
    GF d = evaluate(a.den(), point);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at evaluation point");
    return evaluate(a.num(), point) / d;
}

namespace {
P substitute_poly(const P& a, const std::vector<P>& images, const FracField& target) {
    P s(target.param_ring(), &target.base());
    for (const auto& [m, c] : a.terms()) {
        P v = P::constant(target.param_ring(), &target.base(), embed(c, target.base()));
        for (size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) v = v * images.at(i).pow(m[i]);
        s += v;
    }
    return s;
}
}  // namespace

Frac substitute(const Frac& a, const std::vector<P>& images, const FracField& target) {
    if (images.size() != a.field()->nvars()) throw IncompletePlan("substitution misses parameters");
    P d = substitute_poly(a.den(), images, target);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
    return target.make(substitute_poly(a.num(), images, target), d);
}

}  // namespace frobvol::coeff
