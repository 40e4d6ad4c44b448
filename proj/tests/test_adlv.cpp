#include "hecke/adlv.hpp"
#include "hecke/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hecke;

namespace {

SigmaClass sc(Group g, const char* text) {
    auto b = parse_sigma_class(g, text);
    REQUIRE(b.has_value());
    return *b;
}

bool contains(const std::vector<SigmaClass>& v, const SigmaClass& b) {
    return std::find(v.begin(), v.end(), b) != v.end();
}

Element first_of(Mode mode, const ConjClassId& c, int len) {
    for (const Element& w : elements_up_to(mode, len))
        if (length(w) == len && classify(w, mode) == c) return w;
    FAIL("no element of " << to_string(c) << " with length " << len);
    return identity();
}

}  // namespace

TEST_CASE("sigma classes") {
    const auto basic = sigma_classes(Group::PGL3, 0);
    CHECK(basic.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(contains(basic, basic_class(Group::PGL3, k)));
    for (const auto& b : basic) CHECK(b.basic());

    const auto u3 = sigma_classes(Group::U3, 0);
    REQUIRE(u3.size() == 1);
    CHECK(u3.front().repr == ConjClassId::o0d());

    const auto four = sigma_classes(Group::PGL3, 4);
    CHECK(contains(four, make_sigma_class(Group::PGL3, ConjClassId::o_lambda(1, 1))));
    CHECK(make_sigma_class(Group::PGL3, ConjClassId::o_lambda(1, 1)).invariant.newton == NewtonPoint{1, 1});

    // Distinct straight classes carry distinct invariants.
    for (Group g : {Group::PGL3, Group::U3}) {
        const auto all = sigma_classes(g, 8);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK_FALSE(all[i].invariant == all[j].invariant);
    }
}

TEST_CASE("sigma class syntax") {
    CHECK(to_string(sc(Group::PGL3, "tau")) == "O_idtau");
    CHECK(sc(Group::PGL3, "tau^2").mirrored);
    CHECK(sc(Group::PGL3, "delta(O_tau[1])") == make_sigma_class(Group::PGL3, ConjClassId::o_tau(1), true, 2));
    CHECK(sc(Group::GL3, "1@3").det == 3);
    CHECK_FALSE(parse_sigma_class(Group::PGL3, "nonsense").has_value());
}

TEST_CASE("dimension examples") {
    const SigmaClass one = basic_class(Group::PGL3, 0), t = basic_class(Group::PGL3, 1);
    DimResult r = adlv(Group::PGL3, fin(Fin::s12), one);
    CHECK(r.nonempty);
    CHECK(r.dim == 2);
    CHECK_FALSE(adlv(Group::PGL3, simple(1), t).nonempty);
    r = adlv(Group::PGL3, make(1, 0, Fin::s1), one);
    CHECK(r.nonempty);
    CHECK(r.dim == 3);
    CHECK(r.witness_class == ConjClassId::o2());
    CHECK(r.degree == 1);
}

TEST_CASE("result record") {
    const Element w = make(1, 0, Fin::s1);
    const SigmaClass one = basic_class(Group::PGL3, 0);
    const auto j = to_json(Group::PGL3, group_elt(Group::PGL3, w), one, adlv(Group::PGL3, w, one));
    CHECK(j.at("group") == "pgl3");
    CHECK(j.at("element") == "t[1,0].s1.tau^0");
    CHECK(j.at("nonempty") == true);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("witness_class") == "O2");
    CHECK(j.at("degree") == 1);
    const auto e = to_json(Group::PGL3, group_elt(Group::PGL3, simple(1)), basic_class(Group::PGL3, 1),
                           adlv(Group::PGL3, simple(1), basic_class(Group::PGL3, 1)));
    CHECK(e.at("nonempty") == false);
    CHECK(e.at("dim").is_null());
}

TEST_CASE("group transfer") {
    // GL3 needs the determinant to match; D3X reads X_w(b) as the PGL3 variety of (w tau, b tau).
    const Element w = make(1, 0, Fin::s1);
    GroupElt gw = group_elt(Group::GL3, w);
    CHECK(adlv(Group::GL3, gw, sc(Group::GL3, "1@0")).nonempty);
    gw.det = 3;
    CHECK(adlv(Group::GL3, gw, sc(Group::GL3, "1@3")).nonempty);
    CHECK_FALSE(adlv(Group::GL3, gw, sc(Group::GL3, "1@0")).nonempty);
    for (const Element& x : elements_up_to(Mode::Split, 10))
        for (const SigmaClass& b : sigma_classes(Group::D3X, 6)) {
            const SigmaClass p = make_sigma_class(Group::PGL3, b.repr, b.mirrored);
            const DimResult d = adlv(Group::D3X, x, b), e = adlv(Group::PGL3, multiply(x, tau()), p);
            CHECK(d.nonempty == e.nonempty);
            if (d.nonempty) CHECK(d.dim == e.dim);
        }
}

TEST_CASE("defects") {
    CHECK(defect(basic_class(Group::PGL3, 0)) == 0);
    CHECK(defect(basic_class(Group::PGL3, 1)) == 2);
    CHECK(defect(basic_class(Group::PGL3, 2)) == 2);
    CHECK(defect(make_sigma_class(Group::PGL3, ConjClassId::o_lambda(2, 3))) == 0);
    CHECK(defect(make_sigma_class(Group::PGL3, ConjClassId::c(1))) == 1);
    for (const SigmaClass& b : sigma_classes(Group::U3, 8)) CHECK(defect(b) == 0);
}

TEST_CASE("rational points") {
    const SigmaClass t = basic_class(Group::PGL3, 1);
    CHECK(rational_points(Group::PGL3, group_elt(Group::PGL3, tau()), t, 5) == 3);
    CHECK(rational_points(Group::PGL3, group_elt(Group::PGL3, simple(1)), t, 5) == 0);
    const Element w = first_of(Mode::SplitTau, ConjClassId::o_tau(1), 5);
    CHECK(rational_points(Group::PGL3, group_elt(Group::PGL3, w), t, 4) == 144);
    CHECK_THROWS_AS(rational_points(Group::PGL3, group_elt(Group::PGL3, tau()), basic_class(Group::PGL3, 0), 5),
                    NotSuperbasic);
    CHECK_THROWS_AS(rational_points(Group::U3, group_elt(Group::U3, identity()), basic_class(Group::U3, 0), 5),
                    NotSuperbasic);
    CHECK_THROWS_AS(rational_points(Group::PGL3, group_elt(Group::PGL3, tau()), t, 1), PreconditionError);
}

TEST_CASE("GHKR examples") {
    const SigmaClass b = make_sigma_class(Group::PGL3, ConjClassId::o_lambda(2, 2));
    int n = 0;
    for (const Element& w : elements_up_to(Mode::Split, 19)) {
        if (length(w) != 19 || !(classify(w, Mode::Split) == ConjClassId::o1())) continue;
        CHECK(ghkr_check(Group::PGL3, group_elt(Group::PGL3, w), b));
        ++n;
    }
    CHECK(n > 0);
    const SigmaClass o2 = make_sigma_class(Group::U3, ConjClassId::o2md(1));
    n = 0;
    for (const Element& w : elements_up_to(Mode::Twisted, 16)) {
        if (length(w) != 16 || !(classify(w, Mode::Twisted) == ConjClassId::o0d())) continue;
        CHECK(ghkr_check(Group::U3, group_elt(Group::U3, w), o2));
        ++n;
    }
    CHECK(n > 0);
    CHECK_THROWS_AS(ghkr_check(Group::PGL3, group_elt(Group::PGL3, simple(1)),
                               make_sigma_class(Group::PGL3, ConjClassId::o_lambda(1, 1))),
                    PreconditionError);
    CHECK_THROWS_AS(ghkr_check(Group::PGL3, group_elt(Group::PGL3, simple(1)), basic_class(Group::PGL3, 0)),
                    PreconditionError);
}

TEST_CASE("leading coefficients for the symmetric family") {
    const LeadingTable t = leading_table({8, 8});
    auto lead = [&](const ConjClassId& c) -> std::optional<BigInt> {
        for (const auto& [b, v] : t.rows)
            if (b.repr == c && !b.mirrored) return v;
        return std::nullopt;
    };
    for (std::int64_t i = 1; 6 * i <= 16; ++i) {
        CHECK(lead(ConjClassId::o_lambda(i, 2 * i)) == t.n0 - 2 * i);
        CHECK(lead(ConjClassId::o_lambda(2 * i, i)) == t.n0 - 2 * i);
    }
    for (std::int64_t i = 1; 3 * i <= 16; i += 2) {
        CHECK(lead(ConjClassId::c(i)) == t.n0 - i);
        CHECK(lead(ConjClassId::cp(i)) == t.n0 - i);
    }
    for (const auto& [b, v] : t.rows) CHECK(v != 0);
    CHECK_THROWS_AS(leading_table({1, 3}), PreconditionError);
}

TEST_CASE("Grassmannian bound") {
    const SigmaClass one = basic_class(Group::PGL3, 0);
    CHECK(grassmannian_bound_check({2, 1}, Fin::s121, Fin::e, one));
    CHECK(grassmannian_bound_check({2, 1}, Fin::s1, Fin::e, basic_class(Group::PGL3, 2)));
    CHECK_THROWS_AS(grassmannian_bound_check({2, 0}, Fin::e, Fin::s2, one), PreconditionError);
    const Report r = verify_grassmannian(12);
    CHECK_MESSAGE(r.ok(), format_report(r));
}

TEST_CASE("dimension statements up to length 20") {
    const Report r = verify_dims(20, 8);
    CHECK(r.cases > 0);
    CHECK_MESSAGE(r.ok(), format_report(r));
    for (const auto& n : r.notes) MESSAGE(n);
}

TEST_CASE("point counts up to length 20") {
    const Report r = verify_points(20);
    CHECK_MESSAGE(r.ok(), format_report(r));
}

TEST_CASE("GHKR up to length 20") {
    const Report r = verify_ghkr(20, 8, kDefaultGhkrOffset);
    CHECK_MESSAGE(r.ok(), format_report(r));
    for (const auto& n : r.notes) MESSAGE(n);
}

TEST_CASE("leading coefficient families") {
    const Report r = verify_leading(8);
    CHECK_MESSAGE(r.ok(), format_report(r));
    for (const auto& n : r.notes) MESSAGE(n);
}
