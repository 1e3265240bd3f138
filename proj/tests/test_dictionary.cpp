#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dictionary.hpp"

using namespace exo;

namespace {
RingPtr zmod(int n) { return build_ring(*presentation_zmod(n)); }
}  // namespace

TEST_CASE("invariance topologique on a perfection map") {
    auto h = perfection(zmod(4));
    h.name = "Z/4->Z/2";
    auto c = check_invariance_topologique(h, 4);
    CHECK(c.passed());
    CHECK(!c.vacuous);
}

TEST_CASE("radicial check distinguishes degree-two extensions") {
    auto f2 = zmod(2);
    auto f4 = build_ring(*presentation_gf(2, 2));
    RingHom inc{f2, f4, {0, 1}, "F_2->F_4"};
    auto c = check_radicial(inc, 4);
    CHECK(c.passed());
    CHECK(c.vacuous);  // both sides false
    auto h = perfection(zmod(8));
    h.name = "Z/8->Z/2";
    auto c2 = check_radicial(h, 4);
    CHECK(c2.passed());
    CHECK(!c2.vacuous);
}

TEST_CASE("etale converse is gated on perfect reducedness") {
    auto f2 = zmod(2);
    auto dual = build_ring(*presentation_quotient(2, {0, 0, 1}));
    RingHom h{f2, dual, {0, 1}, "F_2->F_2[x]/(x^2)"};
    REQUIRE(validate_ring_hom(h).ok());
    // classifier is positive (the model only sees the reduction) but the
    // map is not etale; the converse hypothesis fails, so: skipped
    auto c = check_etale(h, 4);
    CHECK(c.verdict == "skipped");
    auto c2 = check_finite_etale(h, 4);
    CHECK(c2.verdict == "skipped");
}

TEST_CASE("etale biconditional on a genuine cover") {
    auto f2 = zmod(2);
    auto f4 = build_ring(*presentation_gf(2, 2));
    RingHom inc{f2, f4, {0, 1}, "F_2->F_4"};
    auto c = check_etale(inc, 4);
    CHECK(c.passed());
    CHECK(!c.vacuous);
    CHECK(check_finite(inc, 4).passed());
    CHECK(check_finite_etale(inc, 4).passed());
}

TEST_CASE("open-closed check fails on a wrong declaration") {
    auto model = gal_cyclotomic(4, {2, 3, 5});
    int eta = model.category->object_count() - 1;
    auto c = check_open_closed("bad", model, {{"generic point", {eta}, "closed", true}});
    CHECK(c.failed());
    auto c2 = check_open_closed("good", model, {{"generic point", {eta}, "open", true}});
    CHECK(c2.passed());
}

TEST_CASE("local and irreducible detectors") {
    auto local_model = gal_finite_ring(zmod(8), 12);
    CHECK(check_local("Z/8", local_model, true).passed());
    CHECK(check_irreducible("Z/8", local_model, true).passed());
    auto split_model = gal_finite_ring(zmod(6), 12);
    CHECK(check_local("Z/6", split_model, false).passed());
    CHECK(check_irreducible("Z/6", split_model, false).passed());
    auto zmodel = gal_cyclotomic(8, {2, 3});
    CHECK(check_local("Z", zmodel, false).passed());
    CHECK(check_irreducible("Z", zmodel, true).passed());
}

TEST_CASE("default corpus is big enough") {
    auto rings = default_corpus_rings();
    CHECK(rings.size() >= 40);
    int prime_char = 0;
    for (const auto& r : rings)
        if (is_prime(r.ring->characteristic())) ++prime_char;
    CHECK(prime_char >= 25);
    auto homs = default_corpus_homs();
    CHECK(homs.size() >= 60);
    for (const auto& h : homs) CHECK(validate_ring_hom(h).ok());
}

TEST_CASE("full suite is green and deterministic") {
    auto sc = run_suite(12);
    for (const auto& c : sc.cases) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.verdict != "fail");
    }
    CHECK(sc.ok());
    CHECK(sc.failed == 0);
    CHECK(sc.non_vacuous_passes >= 40);
    CHECK(sc.skipped > 0);
    CHECK(std::is_sorted(sc.cases.begin(), sc.cases.end(),
                         [](const DictionaryCase& a, const DictionaryCase& b) {
                             return a.name < b.name;
                         }));

    auto sc2 = run_suite(12);
    REQUIRE(sc2.cases.size() == sc.cases.size());
    for (size_t i = 0; i < sc.cases.size(); ++i) {
        CHECK(sc.cases[i].name == sc2.cases[i].name);
        CHECK(sc.cases[i].verdict == sc2.cases[i].verdict);
        CHECK(sc.cases[i].detail == sc2.cases[i].detail);
    }
}
