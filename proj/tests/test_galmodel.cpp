#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fibrations.hpp"
#include "galmodel.hpp"
#include "gf.hpp"

using namespace exo;

namespace {
RingPtr zmod(int n) { return build_ring(*presentation_zmod(n)); }
RingPtr gff(int p, int e) { return build_ring(*presentation_gf(p, e)); }
}  // namespace

TEST_CASE("u64 primality and factoring") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(561));  // Carmichael
    CHECK(is_prime_u64(1000000007ULL));
    CHECK(factorize_u64(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});
    auto f = factorize_u64((1ULL << 32) + 1);  // 641 * 6700417
    CHECK(f == std::vector<std::uint64_t>{641, 6700417});
}

TEST_CASE("GF(3,2) arithmetic agrees with the table ring") {
    GF f(3, 2);
    CHECK(f.order() == 9);
    auto table = gff(3, 2);
    // both use the first irreducible in the same counting order, so the
    // packed encodings match element ids
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
            CHECK(static_cast<int>(f.add(a, b)) == table->add(a, b));
            CHECK(static_cast<int>(f.mul(a, b)) == table->mul(a, b));
        }
}

TEST_CASE("GF generator and subfields at level 12") {
    GF f(2, 12);
    CHECK(f.order() == 4096);
    auto g = f.generator();
    CHECK(f.pow(g, 4095) == f.one());
    CHECK(f.pow(g, 4095 / 3) != f.one());
    CHECK(f.pow(g, 4095 / 5) != f.one());
    CHECK(f.pow(g, 4095 / 7) != f.one());
    CHECK(f.pow(g, 4095 / 13) != f.one());
    for (int e : {1, 2, 3, 4, 6}) {
        auto s = f.subfield(e);
        CHECK(static_cast<int>(s.size()) == (1 << e));
        for (auto a : s) CHECK(f.pow(a, 1ULL << e) == a);
        // closed under addition and multiplication
        std::set<GF::Elem> ss(s.begin(), s.end());
        CHECK(ss.count(f.add(s[1], s.back())));
        CHECK(ss.count(f.mul(s[1], s.back())));
    }
}

TEST_CASE("large GF still works") {
    GF f(23, 12);
    auto a = f.x();
    CHECK(f.pow(a, f.order()) == a);  // q-th power map fixes everything
    CHECK(f.frobenius(f.from_int(7)) == f.from_int(7));
}

TEST_CASE("level-12 model of a finite field is the Frobenius groupoid") {
    auto g = gal_finite_ring(gff(2, 2), 12);
    CHECK(g.category->object_count() == 2);
    CHECK(g.category->morphism_count() == 24);
    CHECK(g.category->hom(0, 0).size() == 6);  // Z/(12/2)
    CHECK(g.category->hom(0, 1).size() == 6);
    CHECK(is_groupoid(*g.category));
    CHECK(validate_category(*g.category).ok());
    CHECK(validate_functor(g.projection).ok());
    CHECK(check_galois_axioms(g).ok());
    // sigma shifts the embedding: an exponent-1 morphism moves 0 to 1
    for (const auto& m : g.category->morphisms())
        if (g.frobenius_exponent[m.id] == 1 && m.src == 0) CHECK(m.dst == 1);
}

TEST_CASE("the model only sees the reduction") {
    auto g4 = gal_finite_ring(zmod(4), 12);
    auto g2 = gal_finite_ring(zmod(2), 12);
    CHECK(g4.category->object_count() == 1);
    CHECK(g4.category->morphism_count() == 12);
    CHECK(g2.category->morphism_count() == 12);
}

TEST_CASE("split rings give disjoint components") {
    auto g = gal_finite_ring(zmod(6), 12);
    CHECK(g.category->object_count() == 2);
    auto comp = connected_components(*g.category);
    CHECK(comp[0] != comp[1]);
    CHECK(std::set<int>(g.object_char.begin(), g.object_char.end()) == std::set<int>{2, 3});
    CHECK(check_galois_axioms(g).ok());
}

TEST_CASE("residue degree not dividing the level gives no points") {
    auto g = gal_finite_ring(gff(2, 5), 12);
    CHECK(g.category->object_count() == 0);
    CHECK(g.zariski.size == 1);
}

TEST_CASE("zero ring gives the empty model") {
    auto g = gal_finite_ring(zmod(1), 12);
    CHECK(g.category->object_count() == 0);
    CHECK(g.zariski.size == 0);
}

TEST_CASE("separable extension induces a kan fibration with singleton fibers") {
    auto f2 = zmod(2);
    auto f4 = gff(2, 2);
    RingHom inc{f2, f4, {0, 1}, "F2->F4"};
    auto gf = gal_functor(inc, 12);
    REQUIRE(validate_functor(gf.functor).ok());
    CHECK(is_kan_fibration(gf.functor).value);
    auto ff = is_finite_fibers(gf.functor);
    CHECK(ff.value);
    CHECK(ff.sizes == std::vector<int>{1});
    CHECK(!is_equivalence(gf.functor).value);
}

TEST_CASE("perfection induces an equivalence of models") {
    for (auto a : {zmod(4), zmod(8), build_ring(*presentation_quotient(2, {0, 0, 1}))}) {
        auto gf = gal_functor(perfection(a), 12);
        REQUIRE(validate_functor(gf.functor).ok());
        CHECK(is_equivalence(gf.functor).value);
    }
}

TEST_CASE("splitting data in the eighth cyclotomic field") {
    auto s2 = cyclotomic_splitting(8, 2);
    CHECK(s2.ramification == 4);
    CHECK(s2.residue_degree == 1);
    CHECK(s2.prime_count == 1);
    for (int p : {3, 5, 7, 13}) {
        auto s = cyclotomic_splitting(8, p);
        CHECK(s.ramification == 1);
        CHECK(s.residue_degree == 2);
        CHECK(s.prime_count == 2);
    }
    auto s17 = cyclotomic_splitting(8, 17);  // 17 = 1 mod 8: splits completely
    CHECK(s17.residue_degree == 1);
    CHECK(s17.prime_count == 4);
}

TEST_CASE("splitting data in the fifth cyclotomic field") {
    CHECK(cyclotomic_splitting(5, 2).residue_degree == 4);
    CHECK(cyclotomic_splitting(5, 5).ramification == 4);
    CHECK(cyclotomic_splitting(5, 11).prime_count == 4);
    CHECK(cyclotomic_splitting(5, 19).residue_degree == 2);
}

TEST_CASE("cyclotomic model over Q") {
    auto g = gal_cyclotomic(8, {2, 3, 5, 7, 11, 13});
    CHECK(g.category->object_count() == 7);  // six primes + eta
    CHECK(g.category->hom(6, 6).size() == 4);  // Aut(eta) = (Z/8)^x
    CHECK(validate_category(*g.category).ok());
    CHECK(validate_functor(g.projection).ok());
    auto ax = check_galois_axioms(g);
    CHECK(ax.ok());
    // the inert prime 3 has a residue-degree-2 automorphism group
    CHECK(g.category->hom(1, 1).size() == 2);
    // the ramified prime 2 has trivial automorphisms but 1 map to eta
    CHECK(g.category->hom(0, 0).size() == 1);
    CHECK(g.category->hom(0, 6).size() == 1);
    CHECK(g.category->hom(6, 0).empty());
}

TEST_CASE("gaussian integers inside the eighth cyclotomic model") {
    std::vector<int> primes = {2, 3, 5, 7, 11, 13};
    std::vector<int> h = {1, 5};  // fixes Q(i)
    auto sub = gal_cyclotomic(8, primes, h);
    // 2 ramifies, 3/7/11 are inert, 5/13 split: 1+1+2+1+1+2 primes + eta
    CHECK(sub.category->object_count() == 9);
    CHECK(sub.category->hom(8, 8).size() == 2);  // Aut(eta_K) = H
    CHECK(check_galois_axioms(sub).ok());

    auto rel = gal_relative_functor(8, primes, h);
    REQUIRE(validate_functor(rel.functor).ok());
    CHECK(is_right_fibration(rel.functor).value);
    auto left = is_left_fibration(rel.functor);
    CHECK(!left.value);
    CHECK(!left.witness.empty());
    CHECK(!is_kan_fibration(rel.functor).value);
    CHECK(specialization_lifting(rel.functor).value);

    auto ff = is_finite_fibers(rel.functor);
    CHECK(ff.value);
    CHECK(ff.sizes == std::vector<int>{1, 1, 2, 1, 1, 2, 1});

    // inverting 2 makes the map finite etale: restrict to the cosieve
    // away from the ramified prime
    std::vector<int> away;
    for (int i = 1; i < rel.target.category->object_count(); ++i) away.push_back(i);
    CHECK(is_cosieve({rel.target.category, away}).value);
    auto loc = restrict_to_target_objects(rel.functor, away);
    REQUIRE(validate_functor(loc).ok());
    CHECK(is_left_fibration(loc).value);
    CHECK(is_right_fibration(loc).value);
    CHECK(is_kan_fibration(loc).value);
    CHECK(is_finite_fibers(loc).sizes == std::vector<int>{1, 2, 1, 1, 2, 1});
}

TEST_CASE("trivial modulus gives the one-point model") {
    auto g = gal_cyclotomic(1, {2, 3});
    CHECK(g.category->object_count() == 3);
    CHECK(g.category->hom(2, 2).size() == 1);
    CHECK(check_galois_axioms(g).ok());
}

TEST_CASE("subgroup input is validated") {
    CHECK_THROWS_AS(gal_cyclotomic(8, {3}, {1, 2}), InvalidInput);   // 2 not a unit
    CHECK_THROWS_AS(gal_cyclotomic(8, {3}, {3, 5}), InvalidInput);   // no identity
    CHECK_THROWS_AS(gal_cyclotomic(8, {3}, {1, 3, 5}), InvalidInput);  // not closed
}
