#include "hecke/engine.hpp"
#include "hecke/verify.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hecke;

namespace {

ClassPolynomial poly(Mode m, std::initializer_list<std::pair<ConjClassId, UPoly>> rows) {
    ClassPolynomial f;
    f.mode = m;
    for (const auto& [c, p] : rows) f.add(c, p);
    return f;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("reduction steps") {
    CHECK(find_reduction(simple(1), Mode::Split).minimal);
    CHECK(find_reduction(tau(), Mode::SplitTau).minimal);
    const Element w = make(1, 0, Fin::s1);
    const ReductionStep st = find_reduction(w, Mode::Split);
    REQUIRE_FALSE(st.minimal);
    const Element s = simple(st.gen);
    CHECK(length(multiply(s, multiply(st.witness, mode_delta(s, Mode::Split)))) == length(w) - 2);
    CHECK(length(st.witness) == length(w));
    CHECK(st.path.front() == w);
    CHECK(st.path.back() == st.witness);
}

TEST_CASE("class polynomial examples") {
    CHECK(class_polynomial(make(1, 0, Fin::s1), Mode::Split) ==
          poly(Mode::Split, {{ConjClassId::o1(), UPoly::constant(1)}, {ConjClassId::o2(), UPoly::u()}}));
    CHECK(class_polynomial(translation(AlphaCoords{2, 1}), Mode::Split) ==
          poly(Mode::Split, {{ConjClassId::o_lambda(2, 1), UPoly::constant(1)}}));
    int seen = 0;
    for (const Element& w : elements_up_to(Mode::Twisted, 3)) {
        if (length(w) != 3 || !(classify(w, Mode::Twisted) == ConjClassId::o1d())) continue;
        ++seen;
        CHECK(class_polynomial(w, Mode::Twisted) ==
              poly(Mode::Twisted, {{ConjClassId::o1d(), UPoly::constant(1)}, {ConjClassId::o2md(1), UPoly::u()}}));
    }
    CHECK(seen > 0);
}

TEST_CASE("minimality") {
    CHECK(is_minimal_in_class(fin(Fin::s12), Mode::Split));
    CHECK_FALSE(is_minimal_in_class(make(1, 0, Fin::s1), Mode::Split));
    CHECK(is_minimal_in_class(identity(), Mode::Split));
    for (Mode m : {Mode::Split, Mode::SplitTau, Mode::Twisted})
        for (const Element& w : elements_up_to(m, 12))
            CHECK(is_minimal_in_class(w, m) == (length(w) == min_length(classify(w, m))));
}

TEST_CASE("polynomial properties up to length 20") {
    const Report r = verify_polynomial_properties(20);
    CHECK(r.cases > 0);
    CHECK_MESSAGE(r.ok(), format_report(r));
}

TEST_CASE("path independence over ten reduction orders up to length 16") {
    const Report r = verify_path_independence(16, 10);
    CHECK_MESSAGE(r.ok(), format_report(r));
}

TEST_CASE("memo save and load") {
    Engine a;
    for (Mode m : {Mode::Split, Mode::SplitTau, Mode::Twisted})
        for (const Element& w : elements_up_to(m, 8)) a.class_polynomial(w, m);
    const std::string path = temp_path("hecke_memo_test.jsonl");
    a.save(path);
    Engine b;
    b.load(path);
    CHECK(b.memo_size() == a.memo_size());
    const std::size_t loaded = b.memo_size();
    for (Mode m : {Mode::Split, Mode::SplitTau, Mode::Twisted})
        for (const Element& w : elements_up_to(m, 8)) CHECK(b.class_polynomial(w, m) == a.class_polynomial(w, m));
    // Everything was answered from the loaded memo.
    CHECK(b.memo_size() == loaded);
    std::remove(path.c_str());
}

TEST_CASE("cache version mismatch is rejected") {
    const std::string path = temp_path("hecke_memo_bad.jsonl");
    {
        std::ofstream out(path);
        out << R"({"format":"hecke-memo","version":99})" << "\n";
    }
    Engine e;
    CHECK_THROWS_AS(e.load(path), CacheError);
    CHECK_THROWS_AS(e.load(temp_path("hecke_memo_missing.jsonl")), CacheError);
    std::remove(path.c_str());
}
