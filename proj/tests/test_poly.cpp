#include "hecke/poly.hpp"

#include <doctest.h>

#include <random>

using namespace hecke;

namespace {

UPoly poly(std::vector<int> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return UPoly(std::move(v));
}

UPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 5), coef(-6, 6);
    std::vector<int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (int& x : c) x = coef(rng);
    return poly(c);
}

}  // namespace

TEST_CASE("addition and multiplication") {
    CHECK(upoly_add(UPoly::u(), UPoly::constant(1)) == poly({1, 1}));
    CHECK(upoly_mul(UPoly::u(), UPoly::u()) == UPoly::monomial(1, 2));
    // One reduction step: u * f(s_i w1) + f(s_i w1 s_delta(i)) with values u and 1.
    CHECK(upoly_add(upoly_mul(UPoly::u(), UPoly::u()), UPoly::constant(1)) == poly({1, 0, 1}));
}

TEST_CASE("degree") {
    CHECK_FALSE(upoly_degree(UPoly{}).has_value());
    CHECK(upoly_degree(UPoly::constant(1)) == 0);
    CHECK(upoly_degree(poly({0, 1, 0, 3})) == 3);
    CHECK(poly({0, 0, 0}).is_zero());
}

TEST_CASE("point-count evaluation") {
    CHECK(eval_point_count(UPoly::constant(1), 0, 3) == QPoly({3}));
    CHECK(eval_point_count(UPoly{}, 5, 3).is_zero());
    CHECK(eval_point_count(UPoly::u(), 5, 3) == QPoly({0, 0, -3, 3}));
    CHECK(eval_point_count(UPoly::u(), 5, 3).eval(4) == 144);
    CHECK_THROWS_AS(eval_point_count(UPoly::u(), 4, 3), ParityError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        const UPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * UPoly::constant(1) == a);
    }
}

TEST_CASE("evaluation is a ring map") {
    std::mt19937 rng(9);
    for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<int> coef(-5, 5);
        const QPoly a({coef(rng), coef(rng), coef(rng)}), b({coef(rng), coef(rng)});
        for (int q : {2, 3, 7}) {
            CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
            CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
        }
    }
}
