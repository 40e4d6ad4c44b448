#include "hecke/group.hpp"
#include "hecke/verify.hpp"

#include <doctest.h>

#include <random>

using namespace hecke;

namespace {

Element random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-4, 4), fin_idx(0, 5);
    return Element{Coweight{coord(rng), coord(rng)}, kAllFin[fin_idx(rng)]};
}

}  // namespace

TEST_CASE("multiplication examples") {
    CHECK(multiply(simple(1), simple(1)) == identity());
    CHECK(multiply(tau(), multiply(simple(0), invert(tau()))) == simple(1));
    CHECK(tau() == multiply(translation(Coweight{1, 0}), fin(Fin::s12)));
    const Element a = multiply(simple(2), make(1, 0, Fin::s1));
    CHECK(a == make(1, 1, Fin::s21));
    CHECK(format_element(a) == "t[1,1].s21.tau^0");
}

TEST_CASE("inverses") {
    CHECK(invert(identity()) == identity());
    CHECK(invert(translation(AlphaCoords{1, 0})) == translation(AlphaCoords{-1, 0}));
    CHECK(multiply(tau(), multiply(tau(), tau())) == identity());
    CHECK(invert(tau()) == tau_pow(2));
}

TEST_CASE("lengths") {
    CHECK(length(tau()) == 0);
    CHECK(length(make(1, 0, Fin::s1)) == 3);
    CHECK(length(make(0, 1, Fin::s21)) == 2);
    CHECK(length(translation(AlphaCoords{1, 2})) == 6);
    CHECK(length(translation(AlphaCoords{1, 1})) == 4);
}

TEST_CASE("diagram automorphism") {
    CHECK(apply_delta(simple(2)) == simple(1));
    CHECK(apply_delta(simple(0)) == simple(0));
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Element x = random_element(rng);
        CHECK(mode_delta(x, Mode::Split) == x);
        CHECK(apply_delta(apply_delta(x)) == x);
        CHECK(length(apply_delta(x)) == length(x));
    }
}

TEST_CASE("pairing with 2 rho") {
    CHECK(pairing_2rho(AlphaCoords{1, 1}) == 4);
    CHECK(pairing_2rho(AlphaCoords{0, 0}) == 0);
    CHECK(pairing_2rho(AlphaCoords{1, 2}) == 6);
}

TEST_CASE("element syntax") {
    CHECK(parse_element("t[0,0].e.tau^0") == identity());
    CHECK(format_element(tau()) == "t[0,0].e.tau^1");
    CHECK_THROWS_AS(parse_element("s1"), ParseError);
    CHECK_THROWS_AS(parse_element("t[1,x].e.tau^0"), ParseError);
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Element x = random_element(rng);
        CHECK(parse_element(format_element(x)) == x);
    }
}

TEST_CASE("group laws on random triples") {
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        const Element a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, identity()) == a);
        CHECK(multiply(a, invert(a)) == identity());
        CHECK(kappa(multiply(a, b)) == (kappa(a) + kappa(b)) % 3);
    }
}

TEST_CASE("length equals breadth-first word length up to 10") {
    const Report r = verify_word_length(10);
    CHECK(r.cases > 0);
    CHECK_MESSAGE(r.ok(), format_report(r));
}
