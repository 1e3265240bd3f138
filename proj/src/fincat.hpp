#pragma once

// Finite 1-categories given by explicit composition tables, functors
// between them, and the categorical predicates used throughout the
// project (monos, slices, equivalences, iso-class posets, joins).

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace exo {

struct Caps {
    int max_objects = 64;
    int max_morphisms = 4096;
    int max_ring_elements = 4096;
};

// Global size caps; the CLI may override them via EXODROMY_CAPS.
Caps& caps();

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Morphism {
    int id;
    int src;
    int dst;
};

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// Objects are dense ids 0..object_count-1, morphisms 0..morphism_count-1
// (morphism id equals its index). Composition is a flat table keyed by
// (g, f) pairs, defined exactly on composable pairs.
class FinCategory {
public:
    FinCategory() = default;
    FinCategory(int object_count, std::vector<Morphism> morphisms,
                std::vector<int> identities);

    int object_count() const { return object_count_; }
    int morphism_count() const { return static_cast<int>(morphisms_.size()); }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    const Morphism& morphism(int id) const { return morphisms_.at(id); }
    int identity(int obj) const { return identities_.at(obj); }
    const std::vector<int>& identities() const { return identities_; }

    void set_composite(int g, int f, int gf);
    // -1 when the pair is not composable or the table has no entry.
    int compose(int g, int f) const;

    bool is_identity(int mor) const;
    // Morphism ids from x to y, ascending.
    std::vector<int> hom(int x, int y) const;
    std::vector<int> morphisms_into(int obj) const;
    std::vector<int> morphisms_out_of(int obj) const;

    bool is_iso(int mor) const;
    // Inverse morphism id, or -1.
    int inverse(int mor) const;

private:
    int object_count_ = 0;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::unordered_map<std::int64_t, int> compose_;

    std::int64_t key(int g, int f) const {
        return static_cast<std::int64_t>(g) * morphisms_.size() + f;
    }
};

struct Violation {
    std::string kind;
    std::vector<int> witness;  // morphism/object ids, meaning depends on kind
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_category(const FinCategory& c);

// Throws InvalidInput when the table is not a category.
CatPtr make_category(int object_count, std::vector<Morphism> morphisms,
                     std::vector<int> identities,
                     const std::vector<std::array<int, 3>>& composites);

struct Functor {
    CatPtr source;
    CatPtr target;
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;
};

ValidationReport validate_functor(const Functor& f);
Functor identity_functor(CatPtr c);
Functor compose_functors(const Functor& g, const Functor& f);

bool is_mono(const FinCategory& c, int mor);
bool endos_are_autos(const FinCategory& c);

struct FinPoset {
    int size = 0;
    // leq[a*size+b] = (a <= b)
    std::vector<char> leq;
    bool le(int a, int b) const { return leq[static_cast<size_t>(a) * size + b] != 0; }
};

ValidationReport validate_poset(const FinPoset& p);
// The poset viewed as a category: one morphism per related pair.
CatPtr poset_as_category(const FinPoset& p);

struct SliceCategory {
    CatPtr cat;
    // slice object index -> morphism id of the parent category
    std::vector<int> object_to_morphism;
    // parent morphism id -> slice object index (-1 when absent)
    std::vector<int> morphism_to_object;
    // slice morphism id -> the parent morphism filling the triangle
    std::vector<int> morphism_to_u;
};

SliceCategory slice(CatPtr c, int obj);    // morphisms into obj
SliceCategory coslice(CatPtr c, int obj);  // morphisms out of obj

// Induced functor slice(C,x) -> slice(D,F(x)) (or coslices).
Functor slice_functor(const Functor& f, int obj, const SliceCategory& sc,
                      const SliceCategory& sd);
Functor coslice_functor(const Functor& f, int obj, const SliceCategory& sc,
                        const SliceCategory& sd);

struct EquivalenceVerdict {
    bool value = false;
    std::string reason;        // empty when value
    std::vector<int> witness;  // ids, meaning depends on reason
};

EquivalenceVerdict is_equivalence(const Functor& f);

// Union-find iso classes; result[obj] = class representative index (0-based
// dense class ids, ascending by least member).
std::vector<int> iso_classes(const FinCategory& c);

struct IsoClassPosetResult {
    bool ok = false;
    FinPoset poset;                  // when ok
    std::vector<int> object_class;   // object -> poset element
    std::vector<int> witness_cycle;  // two objects x,y with x<->y non-iso
};

IsoClassPosetResult iso_class_poset(const FinCategory& c);

bool has_weakly_initial(const FinCategory& c);
bool has_weakly_terminal(const FinCategory& c);

bool has_finite_nonempty_joins(const FinPoset& p);

// Exhaustive poset isomorphism test (small inputs only).
bool posets_isomorphic(const FinPoset& a, const FinPoset& b);

// F reflects isomorphisms.
bool is_conservative(const Functor& f);

// Contractible: nonempty and exactly one morphism between any ordered pair.
bool is_contractible(const FinCategory& c);
bool is_groupoid(const FinCategory& c);

// Connected components of the underlying graph; result[obj] = component id.
std::vector<int> connected_components(const FinCategory& c);

struct CategoryBuilder {
    int object_count = 0;
    std::vector<Morphism> morphisms;
    std::vector<int> identities;
    std::vector<std::array<int, 3>> composites;  // {g, f, gf}

    int add_object();
    int add_morphism(int src, int dst);
    void set_identity(int obj, int mor);
    void set_composite(int g, int f, int gf);
    CatPtr build() const;          // validates
    CatPtr build_unchecked() const;
};

}  // namespace exo
