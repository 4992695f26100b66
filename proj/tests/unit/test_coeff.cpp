#include <doctest.h>

#include <random>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/coeff/fraction.hpp"
#include "frobvol/errors.hpp"

using namespace frobvol;
using namespace frobvol::coeff;

TEST_CASE("prime field arithmetic") {
    const auto& F2 = FiniteField::get(2);
    CHECK((F2.one() + F2.one()).is_zero());
    const auto& F3 = FiniteField::get(3);
    CHECK(F3.from_integer(2).inv() == F3.from_integer(2));
    CHECK(F3.from_integer(-1) == F3.from_integer(2));
    CHECK_THROWS_AS(F3.zero().inv(), DivisionByZero);
    const auto& F5 = FiniteField::get(5);
    CHECK_THROWS_AS(F5.one() + F3.one(), FieldMismatch);
    for (int a = 1; a < 5; ++a) CHECK((F5.from_integer(a) * F5.from_integer(a).inv()).is_one());
}

TEST_CASE("extension field: modulus, frobenius and roots") {
    const auto& F = FiniteField::get(2, 8);
    GF g = F.generator();
    CHECK(g.pow(2).pth_root() == g);
    CHECK(F.order() == 256);
    // Multiplicative group has order q-1.
    for (uint64_t c = 1; c < 256; ++c) CHECK(F.element(c).pow(255).is_one());

    const auto& F9 = FiniteField::get(3, 2);
    for (uint64_t a = 0; a < 9; ++a)
        for (uint64_t b = 0; b < 9; ++b) {
            GF x = F9.element(a), y = F9.element(b);
            CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));
            if (a) CHECK((x * y) / x == y);
        }
}

TEST_CASE("table-backed and schoolbook multiplication agree") {
    // GF(2^16) uses log tables; GF(2^24) multiplies directly.
    for (uint32_t k : {16u, 24u, 31u}) {
        const auto& F = FiniteField::get(2, k);
        std::mt19937_64 rng(k);
        for (int t = 0; t < 200; ++t) {
            GF a = F.element(rng() % F.order()), b = F.element(rng() % F.order());
            GF c = F.element(rng() % F.order());
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
            CHECK(a.pth_root().pow(2) == a);
            CHECK(a.pow(2).pth_root() == a);
        }
    }
    const auto& F3 = FiniteField::get(3, 20);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        GF a = F3.element(rng() % F3.order());
        if (a.is_zero()) continue;
        CHECK((a * a.inv()).is_one());
        CHECK(a.pth_root().pow(3) == a);
    }
}

TEST_CASE("all table moduli are irreducible") {
    // A primitive element exists only for irreducible moduli; build tables for q <= 2^20.
    for (uint32_t k = 2; k <= 20; ++k) CHECK_NOTHROW(FiniteField::get(2, k));
    for (uint32_t k = 2; k <= 12; ++k) CHECK_NOTHROW(FiniteField::get(3, k));
    for (uint32_t k = 2; k <= 8; ++k) CHECK_NOTHROW(FiniteField::get(5, k));
    CHECK_THROWS_AS(FiniteField::get(2, std::vector<uint32_t>{1, 0, 0}), InvalidInput);  // x^3+1 = (x+1)(x^2+x+1)
}

TEST_CASE("fractions") {
    const auto& K = FracField::get(FiniteField::get(2), {"a", "b"});
    Frac a = K.variable("a"), b = K.variable("b");
    CHECK(a / b == (a * a) / (a * b));
    CHECK((a / b).to_string() == "(a)/(b)");
    CHECK((a * a).pth_root() == a);
    CHECK_THROWS_AS(a.pth_root(), NotAPthPower);
    CHECK(((a + b) * (a + b)).pth_root() == a + b);
    CHECK_THROWS_AS(K.zero().inv(), DivisionByZero);
    CHECK((a / b + b / a) == (a * a + b * b) / (a * b));
    CHECK(((a + b) / (a + b)).is_one());
    // d/da (a/b) = 1/b ; d/da (a^2) = 0 in char 2.
    CHECK((a / b).derivative(0) == b.inv());
    CHECK((a * a).derivative(0).is_zero());

    const auto& K3 = FracField::get(FiniteField::get(3), {"t"});
    Frac t = K3.variable(0);
    CHECK((t.pow(3) + K3.one()).pth_root() == t + K3.one());
    CHECK((K3.from_integer(2) * t).derivative(0) == K3.from_integer(2));
}

TEST_CASE("fraction equality is consistent with arithmetic on random triples") {
    const auto& F = FiniteField::get(3);
    const auto& K = FracField::get(F, {"a", "b", "c"});
    std::mt19937_64 rng(11);
    auto rnd = [&]() {
        Frac v = K.zero();
        for (int i = 0; i < 3; ++i) {
            Frac t = K.from_integer(int64_t(rng() % 3));
            for (int j = 0; j < 3; ++j) t = t * K.variable(size_t(j)).pow(rng() % 2);
            v += t;
        }
        return v.is_zero() ? K.one() : v;
    };
    for (int it = 0; it < 30; ++it) {
        Frac x = rnd(), y = rnd(), z = rnd();
        CHECK((x / y) * y == x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));
        CHECK((x / y) / z == x / (y * z));
    }
}
