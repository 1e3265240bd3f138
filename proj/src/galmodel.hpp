#pragma once

// Finite Galois-category models: the level-N groupoid of points of a
// finite commutative ring, cyclotomic number-ring models with a
// generic point, and the functors induced by ring maps and subfields.

#include <cstdint>
#include <string>
#include <vector>

#include "fincat.hpp"
#include "finring.hpp"

namespace exo {

struct GaloisCategory {
    CatPtr category;
    FinPoset zariski;            // specialization order, generic point on top
    CatPtr zariski_category;
    Functor projection;          // category -> zariski_category
    std::vector<std::string> object_labels;
    std::vector<std::string> zariski_labels;

    int level = 0;               // N for finite-ring models
    RingPtr ring;                // set for finite-ring models

    // finite-ring models: concrete data behind the objects
    // object -> (ring element -> packed GF(p^N) element)
    std::vector<std::vector<std::uint64_t>> object_tables;
    std::vector<int> object_char;        // residue characteristic per object
    std::vector<int> frobenius_exponent; // per morphism (finite-ring models)

    int modulus = 0;             // m for cyclotomic models
    std::vector<int> group;      // the acting subgroup of (Z/m)^x
};

// Points of a valued in F_{p^N} (one field per residue characteristic),
// with Frobenius powers as morphisms.
GaloisCategory gal_finite_ring(RingPtr a, int level);

struct GalFunctor {
    GaloisCategory source;  // model of the hom's target ring
    GaloisCategory target;  // model of the hom's source ring
    Functor functor;
};

// Precomposition along f: A -> B, as gal(B) -> gal(A).
GalFunctor gal_functor(const RingHom& f, int level);

// Inertia and decomposition of p in the m-th cyclotomic field.
struct SplittingDatum {
    int m = 0;
    int p = 0;
    std::vector<int> inertia;        // I_p as elements of (Z/m)^x
    std::vector<int> decomposition;  // D_p
    int ramification = 0;            // e = |I_p|
    int residue_degree = 0;          // f = |D_p/I_p|
    int prime_count = 0;             // g = [G : D_p]
};

std::vector<int> units_mod(int m);
SplittingDatum cyclotomic_splitting(int m, int p);

// Model of the ring of integers of the subfield fixed by the subgroup
// (empty = the whole group, the field Q): objects are primes over the
// given rational primes plus a generic point.
GaloisCategory gal_cyclotomic(int m, const std::vector<int>& primes,
                              const std::vector<int>& subgroup = {});

// The functor induced by Spec O_K -> Spec Z for K fixed by the subgroup.
GalFunctor gal_relative_functor(int m, const std::vector<int>& primes,
                                const std::vector<int>& subgroup);

struct AxiomReport {
    bool projection_conservative = false;
    bool endos_are_autos = false;
    bool all_mono = false;
    bool slice_posets_have_joins = false;
    int witness_object = -1;  // slice failing the join axiom, if any
    bool ok() const {
        return projection_conservative && endos_are_autos && all_mono &&
               slice_posets_have_joins;
    }
};

AxiomReport check_galois_axioms(const GaloisCategory& g);

}  // namespace exo
