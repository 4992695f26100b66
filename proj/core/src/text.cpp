#include "frobvol/poly/text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "frobvol/errors.hpp"

namespace frobvol::poly {

using coeff::FiniteField;
using coeff::Frac;
using coeff::FracField;
using coeff::GF;

namespace {

std::optional<GF> coefficient_symbol(const FiniteField* f, const std::string& name) {
    if (name == "g" && !f->is_prime()) return f->generator();
    return std::nullopt;
}

std::optional<Frac> coefficient_symbol(const FracField* f, const std::string& name) {
    if (auto i = f->param_ring()->index(name)) return f->variable(*i);
    if (name == "g" && !f->base().is_prime()) return f->from_base(f->base().generator());
    return std::nullopt;
}

template <class C>
class Parser {
public:
    Parser(const std::string& s, const RingPtr& ring, const typename C::Field* field)
        : s_(s), ring_(ring), field_(field) {}

    Poly<C> run() {
        Poly<C> r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly<C> expr() {
        Poly<C> acc(ring_, field_);
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Poly<C> t = term();
        acc = neg ? acc - t : acc + t;
        while (true) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly<C> term() {
        Poly<C> acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                Poly<C> d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc = acc * d.constant_term().inv();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<C> factor() {
        Poly<C> a = atom();
        if (accept('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            a = a.pow(uint32_t(std::stoul(s_.substr(start, pos_ - start))));
        }
        return a;
    }

    Poly<C> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<C> e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // Reduce digit by digit so long literals never overflow.
            C v = field_->zero();
            C ten = field_->from_integer(10);
            for (size_t i = start; i < pos_; ++i) v = v * ten + field_->from_integer(s_[i] - '0');
            return Poly<C>::constant(ring_, field_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (auto i = ring_->index(name)) return Poly<C>::variable(ring_, field_, *i);
            if (auto k = coefficient_symbol(field_, name)) return Poly<C>::constant(ring_, field_, *k);
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const RingPtr& ring_;
    const typename C::Field* field_;
    size_t pos_ = 0;
};

}  // namespace

std::string coefficient_factor(const GF& c) {
    if (c.code() < c.field()->characteristic()) return std::to_string(c.code());
    return "(" + c.to_string() + ")";
}

std::string coefficient_factor(const Frac& c) {
    if (c.is_polynomial() && c.num().is_constant()) return coefficient_factor(c.num().constant_term());
    std::string s = "(" + coeff::format_base_poly(c.num()) + ")";
    if (!c.is_polynomial()) s += "/(" + coeff::format_base_poly(c.den()) + ")";
    return s;
}

template <class C>
Poly<C> parse_poly(const std::string& text, const RingPtr& ring, const typename C::Field* field) {
    return Parser<C>(text, ring, field).run();
}

template <class C>
std::string to_string(const Poly<C>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool wrote = false;
        if (m.degree() == 0 || !c.is_one()) {
            os << coefficient_factor(c);
            wrote = true;
        }
        for (size_t i = 0; i < m.nvars(); ++i) {
            if (!m[i]) continue;
            if (wrote) os << "*";
            os << f.ring()->name(i);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

template Poly<GF> parse_poly<GF>(const std::string&, const RingPtr&, const FiniteField*);
template Poly<Frac> parse_poly<Frac>(const std::string&, const RingPtr&, const FracField*);
template std::string to_string<GF>(const Poly<GF>&);
template std::string to_string<Frac>(const Poly<Frac>&);

}  // namespace frobvol::poly
