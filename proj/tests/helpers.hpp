#pragma once

// Shared builders for test categories, posets, and functors.

#include <array>
#include <numeric>
#include <vector>

#include "fibrations.hpp"
#include "fincat.hpp"

namespace exo::testing {

inline FinPoset poset_from_pairs(int n, const std::vector<std::array<int, 2>>& le) {
    FinPoset p;
    p.size = n;
    p.leq.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) p.leq[static_cast<size_t>(i) * n + i] = 1;
    for (auto [a, b] : le) p.leq[static_cast<size_t>(a) * n + b] = 1;
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.le(i, k) && p.le(k, j)) p.leq[static_cast<size_t>(i) * n + j] = 1;
    return p;
}

inline FinPoset chain_poset(int n) {
    std::vector<std::array<int, 2>> le;
    for (int i = 0; i + 1 < n; ++i) le.push_back({i, i + 1});
    return poset_from_pairs(n, le);
}

inline CatPtr chain_category(int n) { return poset_as_category(chain_poset(n)); }

inline CatPtr point_category() { return chain_category(1); }

// One object, morphisms Z/n under addition.
inline CatPtr cyclic_group_category(int n) {
    CategoryBuilder b;
    b.add_object();
    for (int i = 0; i < n; ++i) b.add_morphism(0, 0);
    b.set_identity(0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.set_composite(i, j, (i + j) % n);
    return b.build();
}

// Two isomorphic objects: id0, id1, f: 0 -> 1, g: 1 -> 0.
inline CatPtr walking_iso() {
    CategoryBuilder b;
    b.add_object();
    b.add_object();
    int id0 = b.add_morphism(0, 0);
    int id1 = b.add_morphism(1, 1);
    int f = b.add_morphism(0, 1);
    int g = b.add_morphism(1, 0);
    b.set_identity(0, id0);
    b.set_identity(1, id1);
    b.set_composite(g, f, id0);
    b.set_composite(f, g, id1);
    b.set_composite(f, id0, f);
    b.set_composite(id1, f, f);
    b.set_composite(g, id1, g);
    b.set_composite(id0, g, g);
    b.set_composite(id0, id0, id0);
    b.set_composite(id1, id1, id1);
    return b.build();
}

// x a retract of y: gf = id_x but fg = e, an idempotent endo of y.
inline CatPtr split_idempotent() {
    CategoryBuilder b;
    b.add_object();
    b.add_object();
    int idx = b.add_morphism(0, 0);
    int idy = b.add_morphism(1, 1);
    int f = b.add_morphism(0, 1);
    int g = b.add_morphism(1, 0);
    int e = b.add_morphism(1, 1);
    b.set_identity(0, idx);
    b.set_identity(1, idy);
    b.set_composite(g, f, idx);
    b.set_composite(f, g, e);
    b.set_composite(e, e, e);
    b.set_composite(e, f, f);
    b.set_composite(g, e, g);
    b.set_composite(idx, idx, idx);
    b.set_composite(idy, idy, idy);
    b.set_composite(f, idx, f);
    b.set_composite(idy, f, f);
    b.set_composite(g, idy, g);
    b.set_composite(idx, g, g);
    b.set_composite(idy, e, e);
    b.set_composite(e, idy, e);
    return b.build();
}

// Functor between thin categories determined by an object map.
inline Functor thin_functor(CatPtr c, CatPtr d, std::vector<int> on_objects) {
    Functor f;
    f.source = c;
    f.target = d;
    f.on_objects = std::move(on_objects);
    for (const auto& m : c->morphisms()) {
        auto h = d->hom(f.on_objects[m.src], f.on_objects[m.dst]);
        if (h.empty()) throw InvalidInput("thin_functor: no image morphism");
        f.on_morphisms.push_back(h[0]);
    }
    return f;
}

// Inclusion of the full subcategory on the given objects.
inline Functor inclusion(CatPtr c, std::vector<int> objects) {
    FullSubcategory s{c, std::move(objects)};
    return full_subcategory_inclusion(s);
}

}  // namespace exo::testing
