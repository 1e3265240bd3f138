#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace exo;
using namespace exo::testing;

TEST_CASE("sieve / cosieve / interval on a chain") {
    auto c = chain_category(3);
    CHECK(is_sieve({c, {0}}).value);
    CHECK(is_sieve({c, {0, 1}}).value);
    auto bad = is_sieve({c, {1}});
    CHECK(!bad.value);
    CHECK(!bad.witness.empty());

    CHECK(is_cosieve({c, {2}}).value);
    CHECK(is_cosieve({c, {1, 2}}).value);
    auto bad2 = is_cosieve({c, {1}});
    CHECK(!bad2.value);
    CHECK(!bad2.witness.empty());

    CHECK(is_interval({c, {1}}).value);
    CHECK(is_interval({c, {0, 1}}).value);
    auto bad3 = is_interval({c, {0, 2}});
    CHECK(!bad3.value);
    CHECK(!bad3.witness.empty());
}

TEST_CASE("sieve inclusion is a right fibration, cosieve a left fibration") {
    auto c = chain_category(2);
    auto closed = inclusion(c, {0});
    auto open = inclusion(c, {1});

    auto r = is_right_fibration(closed);
    CHECK(r.value);
    auto l = is_left_fibration(closed);
    CHECK(!l.value);
    CHECK(!l.witness.empty());

    CHECK(is_left_fibration(open).value);
    auto r2 = is_right_fibration(open);
    CHECK(!r2.value);
    CHECK(!r2.witness.empty());

    auto k = is_kan_fibration(open);
    CHECK(!k.value);
    CHECK(is_kan_fibration(identity_functor(c)).value);
}

TEST_CASE("specialization lifting holds for right fibrations and fails for the open point") {
    auto c = chain_category(2);
    CHECK(specialization_lifting(inclusion(c, {0})).value);
    auto v = specialization_lifting(inclusion(c, {1}));
    CHECK(!v.value);
    CHECK(!v.witness.empty());
}

TEST_CASE("fibers of a subgroup inclusion") {
    // B(Z/2) -> B(Z/4) via the index-2 subgroup
    Functor f;
    f.source = cyclic_group_category(2);
    f.target = cyclic_group_category(4);
    f.on_objects = {0};
    f.on_morphisms = {0, 2};
    REQUIRE(validate_functor(f).ok());
    CHECK(is_kan_fibration(f).value);
    auto fa = analyze_fiber(f, 0);
    CHECK(fa.components_contractible);
    CHECK(fa.pi0 == 2);
    CHECK(fa.size == 1);  // Aut(d) permutes the two components transitively
    auto ff = is_finite_fibers(f);
    CHECK(ff.value);
    CHECK(ff.sizes == std::vector<int>{1});
}

TEST_CASE("collapse to the point has a non-discrete fiber") {
    Functor f;
    f.source = cyclic_group_category(2);
    f.target = point_category();
    f.on_objects = {0};
    f.on_morphisms = {0, 0};
    auto fa = analyze_fiber(f, 0);
    CHECK(!fa.components_contractible);
    CHECK(fa.witness.size() == 2);
    CHECK(!is_finite_fibers(f).value);
}

TEST_CASE("iso fiber vs comma fiber on a chain inclusion") {
    auto c = chain_category(3);
    auto f = inclusion(c, {0, 1});
    // comma over the top object sees both, the iso fiber sees none
    CHECK(comma_fiber(f, 2, true).objects.size() == 2);
    CHECK(iso_fiber(f, 2).objects.empty());
    CHECK(analyze_fiber(f, 2).size == 0);
    CHECK(analyze_fiber(f, 0).size == 1);
}

namespace {

SetValuedDiagram chain_diagram() {
    SetValuedDiagram g;
    g.base = chain_category(3);
    g.sizes = {1, 2, 3};
    g.transport.resize(g.base->morphism_count());
    for (const auto& m : g.base->morphisms()) {
        std::vector<int> t;
        for (int s = 0; s < g.sizes[m.dst]; ++s)
            t.push_back(s % g.sizes[m.src]);
        g.transport[m.id] = t;
    }
    return g;
}

SetValuedDiagram random_diagram(std::mt19937& rng, CatPtr base) {
    SetValuedDiagram g;
    g.base = base;
    for (int i = 0; i < base->object_count(); ++i)
        g.sizes.push_back(static_cast<int>(rng() % 3) + 1);
    g.transport.assign(base->morphism_count(), {});
    // assign generators in a functorial way: factor everything through a
    // fixed set map per object pair is not functorial in general, so build
    // transports along a functor to a fixed monoid action: use constant maps
    // seeded per (src element) -- constants compose, so functoriality holds
    std::vector<std::vector<int>> constant(base->object_count());
    for (int i = 0; i < base->object_count(); ++i)
        constant[i] = {static_cast<int>(rng() % g.sizes[i])};
    for (const auto& m : base->morphisms()) {
        std::vector<int> t(g.sizes[m.dst]);
        if (base->is_identity(m.id)) {
            for (int s = 0; s < g.sizes[m.dst]; ++s) t[s] = s;
        } else {
            for (int s = 0; s < g.sizes[m.dst]; ++s) t[s] = constant[m.src][0];
        }
        g.transport[m.id] = t;
    }
    return g;
}

}  // namespace

TEST_CASE("grothendieck of a diagram is a right fibration with the right fiber sizes") {
    auto g = chain_diagram();
    REQUIRE(validate_diagram(g).ok());
    auto tot = grothendieck(g);
    CHECK(validate_functor(tot.projection).ok());
    CHECK(tot.projection.source->object_count() == 6);
    CHECK(is_right_fibration(tot.projection).value);
    auto ff = is_finite_fibers(tot.projection);
    CHECK(ff.value);
    CHECK(ff.sizes == g.sizes);
}

TEST_CASE("straightening inverts the grothendieck construction") {
    auto g = chain_diagram();
    auto tot = grothendieck(g);
    auto g2 = straighten(tot.projection);
    CHECK(diagrams_isomorphic(g, g2));
    auto cmp = unstraightening_comparison(tot.projection, g2, grothendieck(g2));
    CHECK(validate_functor(cmp).ok());
    CHECK(is_equivalence(cmp).value);
}

TEST_CASE("randomized grothendieck round trips") {
    std::mt19937 rng(7);
    auto base_a = chain_category(3);
    auto base_b = poset_as_category(poset_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    for (int trial = 0; trial < 20; ++trial) {
        auto base = (trial % 2) ? base_a : base_b;
        auto g = random_diagram(rng, base);
        REQUIRE(validate_diagram(g).ok());
        auto tot = grothendieck(g);
        REQUIRE(is_right_fibration(tot.projection).value);
        auto g2 = straighten(tot.projection);
        CHECK(diagrams_isomorphic(g, g2));
        auto cmp = unstraightening_comparison(tot.projection, g2, grothendieck(g2));
        CHECK(is_equivalence(cmp).value);
    }
}

TEST_CASE("diagram isomorphism distinguishes transports") {
    auto g = chain_diagram();
    auto h = g;
    // change a non-identity transport to a different function
    for (const auto& m : g.base->morphisms()) {
        if (g.base->is_identity(m.id)) continue;
        if (g.sizes[m.dst] >= 2 && g.sizes[m.src] >= 2) {
            auto& t = h.transport[m.id];
            for (auto& v : t) v = 0;  // collapse; the original was s % size
            break;
        }
    }
    REQUIRE(validate_diagram(h).ok());
    CHECK(!diagrams_isomorphic(g, h));
}

TEST_CASE("straighten rejects functors that are not right fibrations") {
    auto c = chain_category(2);
    CHECK_THROWS_AS(straighten(inclusion(c, {1})), InvalidInput);
}

TEST_CASE("equivalences are kan fibrations with point fibers") {
    auto w = walking_iso();
    auto inc = inclusion(w, {0});
    CHECK(is_kan_fibration(inc).value);
    auto ff = is_finite_fibers(inc);
    CHECK(ff.value);
    CHECK(ff.sizes == std::vector<int>{1, 1});
}
