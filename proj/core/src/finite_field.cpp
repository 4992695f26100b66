#include "frobvol/coeff/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "frobvol/errors.hpp"

namespace frobvol::coeff {

namespace {
#include "modulus_table.inc"

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime_number(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

constexpr uint64_t kTableLimit = uint64_t(1) << 20;
}  // namespace

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t k) {
    for (const auto& e : kModulusTable) {
        if (e.p == p && e.k == k) {
            std::vector<uint32_t> low(k);
            unsigned long long c = e.code;
            for (uint32_t i = 0; i < k; ++i) {
                low[i] = uint32_t(c % p);
                c /= p;
            }
            return low;
        }
    }
    throw InvalidInput("no built-in modulus for GF(" + std::to_string(p) + "^" +
                       std::to_string(k) + ")");
}

const FiniteField& FiniteField::get(uint32_t p, uint32_t k) {
    if (k == 1) return get(p, std::vector<uint32_t>{0});
    return get(p, default_modulus(p, k));
}

const FiniteField& FiniteField::get(uint32_t p, const std::vector<uint32_t>& modulus_low) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, std::vector<uint32_t>>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, modulus_low);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    if (!is_prime_number(p)) throw InvalidInput("characteristic must be prime: " + std::to_string(p));
    if (modulus_low.empty()) throw InvalidInput("empty modulus");
    std::unique_ptr<FiniteField> f(new FiniteField(p, modulus_low));
    const FiniteField& ref = *f;
    registry.emplace(key, std::move(f));
    return ref;
}

FiniteField::FiniteField(uint32_t p, std::vector<uint32_t> modulus_low)
    : p_(p), k_(uint32_t(modulus_low.size())), modulus_(std::move(modulus_low)) {
    if (k_ == 1) modulus_ = {0};
    q_ = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        if (q_ > (uint64_t(1) << 40) / p_) throw InvalidInput("field too large");
        q_ *= p_;
    }
    if (p_ == 2) {
        for (uint32_t i = 0; i < k_; ++i)
            if (modulus_[i] & 1) modmask_ |= uint64_t(1) << i;
    }
    if (k_ > 1 && q_ <= kTableLimit) build_tables();
}

void FiniteField::build_tables() {
    // Find a primitive element and tabulate discrete logarithms.
    auto factors = prime_factors(q_ - 1);
    uint64_t prim = 0;
    for (uint64_t c = 2; c < q_ && !prim; ++c) {
        bool ok = true;
        for (uint64_t r : factors) {
            uint64_t x = 1, b = c, e = (q_ - 1) / r;
            while (e) {
                if (e & 1) x = mul_slow(x, b);
                b = mul_slow(b, b);
                e >>= 1;
            }
            if (x == 1) {
                ok = false;
                break;
            }
        }
        if (ok) prim = c;
    }
    if (!prim) throw InvalidInput("modulus is not irreducible: no primitive element");
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    uint64_t x = 1;
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = uint32_t(x);
        exp_[i + q_ - 1] = uint32_t(x);
        if (i > 0 && x == 1) throw InvalidInput("modulus is not irreducible");
        log_[x] = uint32_t(i);
        x = mul_slow(x, prim);
    }
}

uint64_t FiniteField::add(uint64_t a, uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t r = 0, w = 1;
    while (a || b) {
        uint64_t d = (a % p_ + b % p_) % p_;
        r += d * w;
        w *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

uint64_t FiniteField::neg(uint64_t a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a ? p_ - a : 0;
    uint64_t r = 0, w = 1;
    while (a) {
        uint64_t d = a % p_;
        r += ((p_ - d) % p_) * w;
        w *= p_;
        a /= p_;
    }
    return r;
}

uint64_t FiniteField::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t FiniteField::mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return (a * b) % p_;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

uint64_t FiniteField::mul_slow(uint64_t a, uint64_t b) const {
    if (k_ == 1) return (a * b) % p_;
    if (p_ == 2) {
        uint64_t r = 0;
        // Interleave shift-and-add with reduction so intermediates stay below 2^k.
        const uint64_t top = uint64_t(1) << (k_ - 1);
        for (int i = int(k_) - 1; i >= 0; --i) {
            bool carry = r & top;
            r = (r << 1) & ((top << 1) - 1);
            if (carry) r ^= modmask_;
            if ((b >> i) & 1) r ^= a;
        }
        return r;
    }
    std::vector<uint64_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < k_; ++i)
        if (da[i])
            for (uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int i = int(2 * k_) - 2; i >= int(k_); --i) {
        uint64_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (uint32_t j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
    }
    uint64_t r = 0, w = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        r += prod[i] * w;
        w *= p_;
    }
    return r;
}

uint64_t FiniteField::pow(uint64_t a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) return exp_[(uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t FiniteField::inv(uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in " + name());
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

uint64_t FiniteField::from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return uint64_t(r);
}

GF FiniteField::element(uint64_t code) const {
    if (code >= q_) throw InvalidInput("element code out of range for " + name());
    return GF(this, code);
}
GF FiniteField::zero() const { return GF(this, 0); }
GF FiniteField::one() const { return GF(this, 1); }
GF FiniteField::generator() const { return GF(this, k_ == 1 ? 1 : p_); }
GF FiniteField::from_integer(int64_t v) const { return GF(this, from_int(v)); }

std::string FiniteField::format(uint64_t code, const std::string& gen) const {
    if (k_ == 1) return std::to_string(code);
    if (code == 0) return "0";
    std::vector<uint64_t> d;
    while (code) {
        d.push_back(code % p_);
        code /= p_;
    }
    std::ostringstream os;
    bool first = true;
    for (int i = int(d.size()) - 1; i >= 0; --i) {
        if (!d[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << d[i];
            continue;
        }
        if (d[i] != 1) os << d[i] << "*";
        os << gen;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::string FiniteField::name() const {
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

const FiniteField* GF::same(const GF& o) const {
    if (f_ != o.f_) {
        throw FieldMismatch(std::string("operands in ") + (f_ ? f_->name() : "<unset>") + " and " +
                            (o.f_ ? o.f_->name() : "<unset>"));
    }
    return f_;
}

GF GF::inv() const { return GF(f_, f_->inv(v_)); }

GF embed(const GF& a, const FiniteField& target) {
    if (a.field() == &target) return a;
    if (a.field()->characteristic() != target.characteristic())
        throw FieldMismatch("cannot embed " + a.field()->name() + " into " + target.name());
    if (a.code() >= a.field()->characteristic())
        throw FieldMismatch("only prime-field elements embed into " + target.name());
    return GF(&target, a.code());
}

}  // namespace frobvol::coeff
