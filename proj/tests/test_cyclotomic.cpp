#include <doctest.h>

#include <random>

#include "hopford/cyclotomic.hpp"

using namespace hopford;

namespace {

CycNumber random_element(const FieldPtr& f, std::mt19937_64& rng) {
    std::vector<Rational> c;
    for (unsigned i = 0; i < f->degree(); ++i)
        c.push_back(make_rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1));
    return CycNumber(f.get(), std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    auto f1 = CycField::get(1);
    CHECK(f1->degree() == 1);
    CHECK(f1->cyclotomic_poly() == std::vector<Integer>{Integer(-1), Integer(1)});

    auto f4 = CycField::get(4);
    CHECK(f4->degree() == 2);
    CHECK(f4->cyclotomic_poly() == std::vector<Integer>{Integer(1), Integer(0), Integer(1)});

    auto f12 = CycField::get(12);
    CHECK(f12->degree() == 4);
    CHECK(f12->cyclotomic_poly() ==
          std::vector<Integer>{Integer(1), Integer(0), Integer(-1), Integer(0), Integer(1)});
}

TEST_CASE("product of cyclotomic polynomials over divisors reconstructs x^n - 1") {
    // Independent oracle: multiply out prod_{d | n} Phi_d and compare.
    for (unsigned n : {1u, 2u, 6u, 12u, 21u, 30u}) {
        std::vector<Rational> prod{Rational(1)};
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const auto& phi = CycField::get(d)->cyclotomic_poly();
            std::vector<Rational> next(prod.size() + phi.size() - 1, Rational(0));
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * Rational(phi[j]);
            prod = std::move(next);
        }
        REQUIRE(prod.size() == n + 1);
        CHECK(prod[0] == -1);
        CHECK(prod[n] == 1);
        for (unsigned i = 1; i < n; ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("basic arithmetic") {
    auto f4 = CycField::get(4);
    CycNumber i = f4->zeta_pow(1);
    CHECK(i * i == f4->from_rational(make_rational(-1)));

    auto f3 = CycField::get(3);
    CHECK(f3->from_rational(make_rational(1, 2)) + f3->from_rational(make_rational(1, 3)) ==
          f3->from_rational(make_rational(5, 6)));

    // 1/(1 + zeta_3) = -zeta_3; cross-check by multiplying back.
    CycNumber z = f3->zeta_pow(1);
    CycNumber one_plus = f3->one() + z;
    CycNumber inv = f3->one() / one_plus;
    CHECK(inv == -z);
    CHECK(inv * one_plus == f3->one());
}

TEST_CASE("roots of unity") {
    auto f12 = CycField::get(12);
    CHECK(f12->root_of_unity(2) == f12->from_rational(make_rational(-1)));

    CycNumber w = f12->root_of_unity(3);
    CHECK(w == f12->zeta_pow(4));
    CHECK(w * w + w + f12->one() == f12->zero());  // minimal polynomial of a primitive cube root

    CHECK_THROWS_AS(f12->root_of_unity(5), std::domain_error);
}

TEST_CASE("algebraic integrality") {
    auto f3 = CycField::get(3);
    CHECK(is_algebraic_integer(f3->zeta_pow(1)));
    CHECK_FALSE(is_algebraic_integer(f3->from_rational(make_rational(1, 2))));
    CycNumber a = f3->one() + f3->zeta_pow(1);
    CHECK(is_algebraic_integer(a));
    CycNumber third = a;
    third.scale(make_rational(1, 3));
    CHECK_FALSE(is_algebraic_integer(third));
}

TEST_CASE("integrality is closed under sum and product") {
    std::mt19937_64 rng(7);
    auto f = CycField::get(12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> ca, cb;
        for (unsigned i = 0; i < f->degree(); ++i) {
            ca.push_back(make_rational(static_cast<long>(rng() % 13) - 6));
            cb.push_back(make_rational(static_cast<long>(rng() % 13) - 6));
        }
        CycNumber a(f.get(), ca), b(f.get(), cb);
        REQUIRE(is_algebraic_integer(a));
        REQUIRE(is_algebraic_integer(b));
        CHECK(is_algebraic_integer(a + b));
        CHECK(is_algebraic_integer(a * b));
    }
}

TEST_CASE("embedding") {
    auto f2 = CycField::get(2);
    auto f12 = CycField::get(12);
    CHECK(embed(f2->zeta_pow(1), f12) == f12->from_rational(make_rational(-1)));

    auto f3 = CycField::get(3);
    CycNumber img = embed(f3->zeta_pow(1), f12);
    CHECK(img == f12->zeta_pow(4));
    CHECK(img.pow(3) == f12->one());
    CHECK(img != f12->one());

    auto f6 = CycField::get(6);
    CHECK_THROWS_AS(embed(CycField::get(4)->zeta_pow(1), f6), std::domain_error);
}

TEST_CASE("embedding is a ring homomorphism and preserves integrality") {
    std::mt19937_64 rng(11);
    auto f6 = CycField::get(6);
    auto f12 = CycField::get(12);
    for (int trial = 0; trial < 30; ++trial) {
        CycNumber a = random_element(f6, rng), b = random_element(f6, rng);
        CHECK(embed(a + b, f12) == embed(a, f12) + embed(b, f12));
        CHECK(embed(a * b, f12) == embed(a, f12) * embed(b, f12));
        CHECK(is_algebraic_integer(a) == is_algebraic_integer(embed(a, f12)));
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(23);
    for (unsigned n : {3u, 8u, 12u, 21u}) {
        auto f = CycField::get(n);
        for (int trial = 0; trial < 20; ++trial) {
            CycNumber a = random_element(f, rng);
            CycNumber b = random_element(f, rng);
            CycNumber c = random_element(f, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
        }
    }
}

TEST_CASE("canonical form and serialization round-trip") {
    std::mt19937_64 rng(31);
    auto f = CycField::get(21);
    for (int trial = 0; trial < 25; ++trial) {
        CycNumber a = random_element(f, rng), b = random_element(f, rng);
        CycNumber p = a * b;
        CHECK(p.coords().size() == f->degree());
        CHECK(parse_coords(f, serialize_coords(p)) == p);
    }
    CHECK(rat_from_string("-3/2") == make_rational(-3, 2));
    CHECK(rat_from_string("5") == make_rational(5));
    CHECK(rat_to_string(make_rational(-3, 2)) == "-3/2");
}

TEST_CASE("division errors") {
    auto f3 = CycField::get(3);
    CHECK_THROWS_AS(f3->one() / f3->zero(), std::domain_error);
    auto f4 = CycField::get(4);
    CHECK_THROWS_AS(f3->one() + f4->one(), std::invalid_argument);
}
