#include "hecke/conj.hpp"
#include "hecke/verify.hpp"

#include <doctest.h>

using namespace hecke;

TEST_CASE("classification examples") {
    CHECK(classify(fin(Fin::s12), Mode::Split) == ConjClassId::o2());
    CHECK(classify(translation(AlphaCoords{1, -1}), Mode::Split) == ConjClassId::o_lambda(1, 2));
    CHECK(classify(translation(AlphaCoords{-2, -1}), Mode::Split) == ConjClassId::o_lambda(1, 2));
    CHECK(classify(fin(Fin::s121), Mode::Twisted) == ConjClassId::o3d());
    CHECK(classify(simple(0), Mode::Twisted) == ConjClassId::o1pd());
    CHECK(classify(simple(1), Mode::Twisted) == ConjClassId::o1d());
    CHECK(classify(tau(), Mode::SplitTau) == ConjClassId::o_idtau());
}

TEST_CASE("mode mismatch is rejected") {
    CHECK_THROWS_AS(classify(tau(), Mode::Split), ModeMismatch);
    CHECK_THROWS_AS(classify(simple(1), Mode::SplitTau), ModeMismatch);
}

TEST_CASE("minimal lengths") {
    CHECK(min_length(ConjClassId::o2()) == 2);
    CHECK(min_length(ConjClassId::c(1)) == 3);
    CHECK(min_length(ConjClassId::c(2)) == 7);
    CHECK(min_length(ConjClassId::cp(3)) == 9);
    CHECK(min_length(ConjClassId::o2md(3)) == 6);
    CHECK(min_length(ConjClassId::o_lambda(2, 1)) == 6);
}

TEST_CASE("Newton points and Kottwitz points") {
    CHECK(newton_point(translation(AlphaCoords{1, 1}), Mode::Split) == NewtonPoint{1, 1});
    CHECK(newton_point(simple(1), Mode::Split).is_zero());
    CHECK(newton_point(tau(), Mode::SplitTau).is_zero());
    CHECK(kottwitz(make(3, -2, Fin::s121), Mode::Split) == 0);
    CHECK(kottwitz(tau(), Mode::SplitTau) == 1);
    CHECK(kottwitz(simple(1), Mode::Twisted) == 0);
    CHECK(newton_point(canonical_rep(ConjClassId::c(1)), Mode::Split) == NewtonPoint{Rational(1, 2), 1});
}

TEST_CASE("class invariants") {
    CHECK(invariant_of_class(ConjClassId::o1()).newton.is_zero());
    CHECK(invariant_of_class(ConjClassId::o1()).kottwitz == 0);
    CHECK(invariant_of_class(ConjClassId::o_lambda(3, 2)).newton == NewtonPoint{3, 2});
    const InvariantF o4 = invariant_of_class(ConjClassId::o2md(2));
    CHECK(o4.newton == NewtonPoint{1, 1});
    CHECK(o4.kottwitz == 0);
    // Straight classes sharing an invariant must be conjugate, so C_{2i} shares O_{i(a1+2a2)}'s invariant.
    CHECK(invariant_of_class(ConjClassId::c(2)) == invariant_of_class(ConjClassId::o_lambda(1, 2)));
}

TEST_CASE("class enumeration") {
    using V = std::vector<ConjClassId>;
    CHECK(enumerate_classes(Mode::Split, 1) == V{ConjClassId::id(), ConjClassId::o1()});
    CHECK(enumerate_classes(Mode::Twisted, 3) == V{ConjClassId::o0d(), ConjClassId::o1d(), ConjClassId::o1pd(),
                                                  ConjClassId::o2md(1), ConjClassId::o3d()});
    CHECK(enumerate_classes(Mode::SplitTau, 0) == V{ConjClassId::o_idtau()});
}

TEST_CASE("class names round-trip") {
    for (Mode m : {Mode::Split, Mode::SplitTau, Mode::Twisted})
        for (const ConjClassId& c : enumerate_classes(m, 14)) {
            CHECK(parse_class_id(to_string(c)) == c);
            CHECK(mode_of(c) == m);
            CHECK(classify(canonical_rep(c), m) == c);
            CHECK(length(canonical_rep(c)) == min_length(c));
        }
}

TEST_CASE("conjugation orbits up to length 14") {
    const Report r = verify_classification(14);
    CHECK(r.cases > 0);
    CHECK_MESSAGE(r.ok(), format_report(r));
}
