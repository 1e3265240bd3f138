#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace exo;
using namespace exo::testing;

TEST_CASE("chain poset as category: counts and homs") {
    auto c = chain_category(3);
    CHECK(c->object_count() == 3);
    // 3 identities + (0<=1, 1<=2, 0<=2)
    CHECK(c->morphism_count() == 6);
    CHECK(validate_category(*c).ok());
    CHECK(c->hom(0, 2).size() == 1);
    CHECK(c->hom(2, 0).empty());
    // composition of 0->1 and 1->2 is the unique 0->2
    int f01 = c->hom(0, 1)[0], f12 = c->hom(1, 2)[0], f02 = c->hom(0, 2)[0];
    CHECK(c->compose(f12, f01) == f02);
    CHECK(c->compose(f01, f12) == -1);
}

TEST_CASE("validation catches a broken associativity table") {
    CategoryBuilder b;
    b.add_object();
    int id = b.add_morphism(0, 0);
    int a = b.add_morphism(0, 0);
    b.set_identity(0, id);
    b.set_composite(id, id, id);
    b.set_composite(a, id, a);
    b.set_composite(id, a, a);
    b.set_composite(a, a, id);  // a is an involution so far
    auto cat = b.build_unchecked();
    // now break it: nothing else is wrong, so tamper via a bad identity law
    CategoryBuilder b2 = b;
    b2.composites[1] = {a, id, id};  // a . id = id violates the identity law
    auto rep = validate_category(*b2.build_unchecked());
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.kind.find("identity") != std::string::npos) found = true;
    CHECK(found);
    CHECK(validate_category(*cat).ok());
}

TEST_CASE("missing composites are reported") {
    CategoryBuilder b;
    b.add_object();
    b.add_object();
    int id0 = b.add_morphism(0, 0);
    int id1 = b.add_morphism(1, 1);
    b.add_morphism(0, 1);
    b.set_identity(0, id0);
    b.set_identity(1, id1);
    b.set_composite(id0, id0, id0);
    b.set_composite(id1, id1, id1);
    // f's unit composites are missing
    auto rep = validate_category(*b.build_unchecked());
    CHECK(!rep.ok());
    CHECK_THROWS_AS(b.build(), InvalidInput);
}

TEST_CASE("cyclic group category is a groupoid with inverses") {
    auto c = cyclic_group_category(4);
    CHECK(validate_category(*c).ok());
    CHECK(is_groupoid(*c));
    CHECK(!is_contractible(*c));
    CHECK(endos_are_autos(*c));
    CHECK(c->inverse(1) == 3);
    CHECK(c->inverse(2) == 2);
    for (int m = 0; m < 4; ++m) CHECK(is_mono(*c, m));
}

TEST_CASE("walking iso: isos, iso classes, equivalences") {
    auto w = walking_iso();
    CHECK(is_groupoid(*w));
    CHECK(is_contractible(*w));
    auto cls = iso_classes(*w);
    CHECK(cls[0] == cls[1]);

    // the inclusion of a single object is an equivalence
    auto inc = inclusion(w, {0});
    CHECK(validate_functor(inc).ok());
    CHECK(is_equivalence(inc).value);

    // collapsing Z/2 to the point is not full-on-homs backwards: not faithful
    Functor collapse;
    collapse.source = cyclic_group_category(2);
    collapse.target = point_category();
    collapse.on_objects = {0};
    collapse.on_morphisms = {0, 0};
    CHECK(validate_functor(collapse).ok());
    auto verdict = is_equivalence(collapse);
    CHECK(!verdict.value);
    CHECK(!verdict.reason.empty());
}

TEST_CASE("non-mono morphism detected") {
    // x => y -> z with the parallel pair equalized by h
    CategoryBuilder b;
    b.add_object();
    b.add_object();
    b.add_object();
    int idx = b.add_morphism(0, 0), idy = b.add_morphism(1, 1), idz = b.add_morphism(2, 2);
    int f1 = b.add_morphism(0, 1), f2 = b.add_morphism(0, 1);
    int h = b.add_morphism(1, 2), k = b.add_morphism(0, 2);
    b.set_identity(0, idx);
    b.set_identity(1, idy);
    b.set_identity(2, idz);
    for (int m : {idx, idy, idz}) b.set_composite(m, m, m);
    for (int m : {f1, f2}) {
        b.set_composite(m, idx, m);
        b.set_composite(idy, m, m);
        b.set_composite(h, m, k);
    }
    b.set_composite(h, idy, h);
    b.set_composite(idz, h, h);
    b.set_composite(k, idx, k);
    b.set_composite(idz, k, k);
    auto c = b.build();
    CHECK(!is_mono(*c, h));
    CHECK(is_mono(*c, f1));
}

TEST_CASE("iso class poset of a poset category is the poset itself") {
    auto p = poset_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});  // diamond
    auto c = poset_as_category(p);
    auto r = iso_class_poset(*c);
    REQUIRE(r.ok);
    CHECK(posets_isomorphic(r.poset, p));
    CHECK(has_finite_nonempty_joins(r.poset));
}

TEST_CASE("iso class poset antisymmetry failure has a witness") {
    auto c = split_idempotent();
    CHECK(validate_category(*c).ok());
    auto r = iso_class_poset(*c);
    CHECK(!r.ok);
    REQUIRE(r.witness_cycle.size() == 2);
    CHECK(r.witness_cycle[0] != r.witness_cycle[1]);
    CHECK(!endos_are_autos(*c));
}

TEST_CASE("bowtie poset has no join of the minimal pair") {
    auto p = poset_from_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(validate_poset(p).ok());
    CHECK(!has_finite_nonempty_joins(p));
    CHECK(has_finite_nonempty_joins(chain_poset(4)));
}

TEST_CASE("poset isomorphism is permutation-invariant") {
    auto v = poset_from_pairs(3, {{0, 1}, {0, 2}});
    auto v2 = poset_from_pairs(3, {{2, 0}, {2, 1}});
    CHECK(posets_isomorphic(v, v2));
    CHECK(!posets_isomorphic(v, chain_poset(3)));
}

TEST_CASE("conservativity") {
    auto arrow = chain_category(2);
    auto w = walking_iso();
    auto f = thin_functor(arrow, w, {0, 1});
    CHECK(validate_functor(f).ok());
    CHECK(!is_conservative(f));
    CHECK(is_conservative(identity_functor(arrow)));
}

TEST_CASE("connected components") {
    // disjoint union of a chain and a point
    CategoryBuilder b;
    for (int i = 0; i < 3; ++i) b.add_object();
    int i0 = b.add_morphism(0, 0), i1 = b.add_morphism(1, 1), i2 = b.add_morphism(2, 2);
    int f = b.add_morphism(0, 1);
    b.set_identity(0, i0);
    b.set_identity(1, i1);
    b.set_identity(2, i2);
    for (int m : {i0, i1, i2}) b.set_composite(m, m, m);
    b.set_composite(f, i0, f);
    b.set_composite(i1, f, f);
    auto c = b.build();
    auto comp = connected_components(*c);
    CHECK(comp[0] == comp[1]);
    CHECK(comp[0] != comp[2]);
}

TEST_CASE("slice of a group category is contractible") {
    auto c = cyclic_group_category(4);
    auto s = slice(c, 0);
    CHECK(s.cat->object_count() == 4);
    CHECK(is_contractible(*s.cat));
    auto cs = coslice(c, 0);
    CHECK(is_contractible(*cs.cat));
}

TEST_CASE("slice of a chain at the top is the chain") {
    auto c = chain_category(3);
    auto s = slice(c, 2);
    CHECK(s.cat->object_count() == 3);
    auto r = iso_class_poset(*s.cat);
    REQUIRE(r.ok);
    CHECK(posets_isomorphic(r.poset, chain_poset(3)));
}

TEST_CASE("induced slice functor of an identity is an equivalence") {
    auto c = chain_category(3);
    auto f = identity_functor(c);
    auto sc = slice(c, 2);
    auto sd = slice(c, 2);
    auto sf = slice_functor(f, 2, sc, sd);
    CHECK(validate_functor(sf).ok());
    CHECK(is_equivalence(sf).value);
}

TEST_CASE("weakly initial and terminal objects") {
    auto c = chain_category(3);
    CHECK(has_weakly_initial(*c));
    CHECK(has_weakly_terminal(*c));
    auto p = poset_as_category(poset_from_pairs(3, {{0, 1}, {0, 2}}));
    CHECK(has_weakly_initial(*p));
    CHECK(!has_weakly_terminal(*p));
}

TEST_CASE("caps are enforced") {
    auto saved = caps();
    caps().max_objects = 2;
    CategoryBuilder b;
    b.add_object();
    b.add_object();
    b.add_object();
    int i0 = b.add_morphism(0, 0), i1 = b.add_morphism(1, 1), i2 = b.add_morphism(2, 2);
    b.set_identity(0, i0);
    b.set_identity(1, i1);
    b.set_identity(2, i2);
    for (int m : {i0, i1, i2}) b.set_composite(m, m, m);
    CHECK_THROWS_AS(b.build(), CapExceeded);
    caps() = saved;
}

TEST_CASE("functor validation reports a witness") {
    auto c = chain_category(2);
    Functor f;
    f.source = c;
    f.target = c;
    f.on_objects = {0, 1};
    f.on_morphisms = {0, 1, 0};  // the arrow maps to an identity on 0: endpoints break
    auto rep = validate_functor(f);
    CHECK(!rep.ok());
}

TEST_CASE("functor composition") {
    auto c = chain_category(2);
    auto w = walking_iso();
    auto f = thin_functor(c, w, {0, 1});
    auto g = compose_functors(identity_functor(w), f);
    CHECK(g.on_objects == f.on_objects);
    CHECK(g.on_morphisms == f.on_morphisms);
}
