#pragma once

// Equivalence-invariant classifiers for functors between finite
// categories: sieves, cosieves, intervals, fibers, left/right/Kan
// fibrations, specialization lifting, and the Grothendieck
// construction with its inverse (straightening).

#include <map>
#include <utility>

#include "fincat.hpp"

namespace exo {

struct FullSubcategory {
    CatPtr parent;
    std::vector<int> objects;  // ascending, subset of parent objects
};

// The subcategory as its own FinCategory plus the inclusion functor.
Functor full_subcategory_inclusion(const FullSubcategory& s);

struct Verdict {
    bool value = false;
    std::vector<int> witness;  // ids in the parent/source, empty when true
    std::string detail;
};

Verdict is_sieve(const FullSubcategory& s);
Verdict is_cosieve(const FullSubcategory& s);
Verdict is_interval(const FullSubcategory& s);

// Comma category (F ↓ d) (orientation right) or (d ↓ F) (left).
struct CommaFiber {
    CatPtr cat;
    // comma object -> (source object x, decorating morphism in target)
    std::vector<std::pair<int, int>> objects;
    bool right_oriented = true;
};

CommaFiber comma_fiber(const Functor& f, int d, bool right_oriented);

// The equivalence-invariant fiber of F at d: objects (x, iso F(x) -> d),
// morphisms u with the decorations commuting.
CommaFiber iso_fiber(const Functor& f, int d);

struct FiberAnalysis {
    bool components_contractible = false;
    int pi0 = 0;         // connected components of the iso fiber
    int size = 0;        // components counted up to Aut(d), the point count
    std::vector<int> witness;  // two fiber objects breaking contractibility
};

FiberAnalysis analyze_fiber(const Functor& f, int d);

struct FiniteFibersResult {
    bool value = false;
    std::vector<int> sizes;  // per target object
    int witness_object = -1;
};

FiniteFibersResult is_finite_fibers(const Functor& f);

Verdict is_right_fibration(const Functor& f);
Verdict is_left_fibration(const Functor& f);
Verdict is_kan_fibration(const Functor& f);

// For every ξ in the source and ψ: y -> F(ξ), some φ: x -> ξ has
// F(φ) = ψ up to precomposition with an isomorphism F(x) -> y.
Verdict specialization_lifting(const Functor& f);

// Contravariant finite-set-valued diagram on a base category.
struct SetValuedDiagram {
    CatPtr base;
    std::vector<int> sizes;  // per base object
    // per base morphism u: d -> d', the function G(u): G(d') -> G(d)
    std::vector<std::vector<int>> transport;
};

ValidationReport validate_diagram(const SetValuedDiagram& g);

struct GrothendieckResult {
    Functor projection;  // total category -> base
    // total object -> (base object, element index)
    std::vector<std::pair<int, int>> objects;
};

GrothendieckResult grothendieck(const SetValuedDiagram& g);

// Requires a right fibration whose iso fibers split into contractible
// components; produces the classifying diagram with pi0 values.
SetValuedDiagram straighten(const Functor& f);

// Natural bijection between two diagrams on the same base.
bool diagrams_isomorphic(const SetValuedDiagram& a, const SetValuedDiagram& b);

// Base change of f to the full subcategory of the target on the given
// objects: the source restricts to the preimage.
Functor restrict_to_target_objects(const Functor& f, const std::vector<int>& target_objects);

// Comparison functor C -> total(straighten(F)) over the base; the round
// trip holds when this is an equivalence.
Functor unstraightening_comparison(const Functor& f, const SetValuedDiagram& g,
                                   const GrothendieckResult& total);

}  // namespace exo
