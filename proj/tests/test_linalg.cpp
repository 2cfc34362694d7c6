#include <doctest.h>

#include "hopford/linalg.hpp"

using namespace hopford;

TEST_CASE("solve and inverse over a cyclotomic field") {
    auto f = CycField::get(3);
    Mat a(2, 2, f);
    a.at(0, 0) = f->one();
    a.at(0, 1) = f->zeta_pow(1);
    a.at(1, 0) = f->from_rational(make_rational(2));
    a.at(1, 1) = f->one();
    Mat inv = inverse(a);
    CHECK(a * inv == Mat::identity(2, f));

    Vec b{f->one(), f->zero()};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    Vec check(2, f->zero());
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) check[i] += a.at(i, j) * (*x)[j];
    CHECK(check == b);
}

TEST_CASE("nullspace") {
    auto f = CycField::get(1);
    Mat a(2, 3, f);
    // x + y + z = 0; x - z = 0
    a.at(0, 0) = a.at(0, 1) = a.at(0, 2) = f->one();
    a.at(1, 0) = f->one();
    a.at(1, 2) = -f->one();
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    for (unsigned i = 0; i < 2; ++i) {
        CycNumber acc = f->zero();
        for (unsigned j = 0; j < 3; ++j) acc += a.at(i, j) * ns[0][j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("singular matrix") {
    auto f = CycField::get(1);
    Mat a(2, 2, f);
    a.at(0, 0) = f->one();
    a.at(1, 0) = f->one();
    CHECK_THROWS_AS(inverse(a), std::domain_error);
    CHECK(rank(a) == 1);
}

TEST_CASE("echelon span with dependence tracking") {
    auto f = CycField::get(1);
    EchelonSpan span(3, f, true);
    Vec v1{f->one(), f->one(), f->zero()};
    Vec v2{f->zero(), f->one(), f->one()};
    Vec v3{f->one(), f->from_rational(make_rational(2)), f->one()};  // v1 + v2
    CHECK(span.add(v1));
    CHECK(span.add(v2));
    CHECK_FALSE(span.add(v3));
    const Vec& dep = span.dependence();
    REQUIRE(dep.size() == 3);
    // dep[0]*v1 + dep[1]*v2 + dep[2]*v3 = 0 with dep[2] = 1
    CHECK(dep[2].is_one());
    for (unsigned j = 0; j < 3; ++j) {
        CycNumber acc = dep[0] * v1[j] + dep[1] * v2[j] + dep[2] * v3[j];
        CHECK(acc.is_zero());
    }
    CHECK(span.contains(v3));
    CHECK(span.dim_span() == 2);
    auto coords = span.coordinates(v3);
    CHECK(coords.has_value());
    Vec outside{f->one(), f->zero(), f->zero()};
    CHECK_FALSE(span.coordinates(outside).has_value());
}
