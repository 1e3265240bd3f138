#include "fincat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace exo {

Caps& caps() {
    static Caps c;
    return c;
}

FinCategory::FinCategory(int object_count, std::vector<Morphism> morphisms,
                         std::vector<int> identities)
    : object_count_(object_count),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)) {
    if (object_count_ > caps().max_objects)
        throw CapExceeded("category exceeds object cap");
    if (static_cast<int>(morphisms_.size()) > caps().max_morphisms)
        throw CapExceeded("category exceeds morphism cap");
}

void FinCategory::set_composite(int g, int f, int gf) {
    compose_[key(g, f)] = gf;
}

int FinCategory::compose(int g, int f) const {
    auto it = compose_.find(key(g, f));
    return it == compose_.end() ? -1 : it->second;
}

bool FinCategory::is_identity(int mor) const {
    const auto& m = morphisms_.at(mor);
    return m.src == m.dst && identities_.at(m.src) == mor;
}

std::vector<int> FinCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (const auto& m : morphisms_)
        if (m.src == x && m.dst == y) out.push_back(m.id);
    return out;
}

std::vector<int> FinCategory::morphisms_into(int obj) const {
    std::vector<int> out;
    for (const auto& m : morphisms_)
        if (m.dst == obj) out.push_back(m.id);
    return out;
}

std::vector<int> FinCategory::morphisms_out_of(int obj) const {
    std::vector<int> out;
    for (const auto& m : morphisms_)
        if (m.src == obj) out.push_back(m.id);
    return out;
}

int FinCategory::inverse(int mor) const {
    const auto& m = morphisms_.at(mor);
    for (const auto& g : morphisms_) {
        if (g.src != m.dst || g.dst != m.src) continue;
        if (compose(g.id, mor) == identities_.at(m.src) &&
            compose(mor, g.id) == identities_.at(m.dst))
            return g.id;
    }
    return -1;
}

bool FinCategory::is_iso(int mor) const { return inverse(mor) >= 0; }

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;
    const int n = c.object_count();
    const int m = c.morphism_count();

    for (int i = 0; i < m; ++i) {
        const auto& mor = c.morphism(i);
        if (mor.id != i)
            rep.violations.push_back({"morphism-id-not-dense", {i, mor.id}, ""});
        if (mor.src < 0 || mor.src >= n || mor.dst < 0 || mor.dst >= n)
            rep.violations.push_back({"morphism-endpoint-out-of-range", {i}, ""});
    }
    if (!rep.ok()) return rep;

    if (static_cast<int>(c.identities().size()) != n) {
        rep.violations.push_back({"identity-map-wrong-size", {}, ""});
        return rep;
    }
    for (int x = 0; x < n; ++x) {
        int e = c.identity(x);
        if (e < 0 || e >= m || c.morphism(e).src != x || c.morphism(e).dst != x)
            rep.violations.push_back({"identity-not-an-endomorphism", {x, e}, ""});
    }
    if (!rep.ok()) return rep;

    // Totality and endpoints of composition.
    for (int f = 0; f < m; ++f) {
        for (int g = 0; g < m; ++g) {
            bool composable = c.morphism(f).dst == c.morphism(g).src;
            int gf = c.compose(g, f);
            if (composable && gf < 0)
                rep.violations.push_back({"composite-missing", {g, f}, ""});
            if (!composable && gf >= 0)
                rep.violations.push_back({"composite-of-non-composable", {g, f}, ""});
            if (composable && gf >= 0) {
                if (gf >= m || c.morphism(gf).src != c.morphism(f).src ||
                    c.morphism(gf).dst != c.morphism(g).dst)
                    rep.violations.push_back({"composite-wrong-endpoints", {g, f, gf}, ""});
            }
        }
    }
    if (!rep.ok()) return rep;

    // Identity laws.
    for (int f = 0; f < m; ++f) {
        const auto& mor = c.morphism(f);
        if (c.compose(c.identity(mor.dst), f) != f)
            rep.violations.push_back({"left-identity-law", {f}, ""});
        if (c.compose(f, c.identity(mor.src)) != f)
            rep.violations.push_back({"right-identity-law", {f}, ""});
    }

    // Associativity on all composable triples.
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (c.morphism(f).dst != c.morphism(g).src) continue;
            int gf = c.compose(g, f);
            for (int h = 0; h < m; ++h) {
                if (c.morphism(g).dst != c.morphism(h).src) continue;
                int hg = c.compose(h, g);
                if (c.compose(h, gf) != c.compose(hg, f))
                    rep.violations.push_back({"associativity", {h, g, f}, ""});
            }
        }
    return rep;
}

CatPtr make_category(int object_count, std::vector<Morphism> morphisms,
                     std::vector<int> identities,
                     const std::vector<std::array<int, 3>>& composites) {
    auto cat = std::make_shared<FinCategory>(object_count, std::move(morphisms),
                                             std::move(identities));
    for (const auto& t : composites)
        const_cast<FinCategory&>(*cat).set_composite(t[0], t[1], t[2]);
    auto rep = validate_category(*cat);
    if (!rep.ok())
        throw InvalidInput("not a category: " + rep.violations.front().kind);
    return cat;
}

int CategoryBuilder::add_object() {
    identities.push_back(-1);
    return object_count++;
}

int CategoryBuilder::add_morphism(int src, int dst) {
    int id = static_cast<int>(morphisms.size());
    morphisms.push_back({id, src, dst});
    return id;
}

void CategoryBuilder::set_identity(int obj, int mor) { identities.at(obj) = mor; }

void CategoryBuilder::set_composite(int g, int f, int gf) {
    composites.push_back({g, f, gf});
}

CatPtr CategoryBuilder::build_unchecked() const {
    auto cat = std::make_shared<FinCategory>(object_count, morphisms, identities);
    for (const auto& t : composites)
        const_cast<FinCategory&>(*cat).set_composite(t[0], t[1], t[2]);
    return cat;
}

CatPtr CategoryBuilder::build() const {
    auto cat = build_unchecked();
    auto rep = validate_category(*cat);
    if (!rep.ok())
        throw InvalidInput("not a category: " + rep.violations.front().kind);
    return cat;
}

ValidationReport validate_functor(const Functor& f) {
    ValidationReport rep;
    const auto& c = *f.source;
    const auto& d = *f.target;
    if (static_cast<int>(f.on_objects.size()) != c.object_count() ||
        static_cast<int>(f.on_morphisms.size()) != c.morphism_count()) {
        rep.violations.push_back({"functor-map-wrong-size", {}, ""});
        return rep;
    }
    for (int x = 0; x < c.object_count(); ++x)
        if (f.on_objects[x] < 0 || f.on_objects[x] >= d.object_count())
            rep.violations.push_back({"object-image-out-of-range", {x}, ""});
    for (int m = 0; m < c.morphism_count(); ++m) {
        int fm = f.on_morphisms[m];
        if (fm < 0 || fm >= d.morphism_count()) {
            rep.violations.push_back({"morphism-image-out-of-range", {m}, ""});
            continue;
        }
        if (d.morphism(fm).src != f.on_objects[c.morphism(m).src] ||
            d.morphism(fm).dst != f.on_objects[c.morphism(m).dst])
            rep.violations.push_back({"functor-endpoint-mismatch", {m}, ""});
    }
    if (!rep.ok()) return rep;
    for (int x = 0; x < c.object_count(); ++x)
        if (f.on_morphisms[c.identity(x)] != d.identity(f.on_objects[x]))
            rep.violations.push_back({"identity-not-preserved", {x}, ""});
    for (int a = 0; a < c.morphism_count(); ++a)
        for (int b = 0; b < c.morphism_count(); ++b) {
            int ab = c.compose(a, b);
            if (ab < 0) continue;
            if (d.compose(f.on_morphisms[a], f.on_morphisms[b]) != f.on_morphisms[ab])
                rep.violations.push_back({"composition-not-preserved", {a, b}, ""});
        }
    return rep;
}

Functor identity_functor(CatPtr c) {
    Functor f;
    f.source = c;
    f.target = c;
    f.on_objects.resize(c->object_count());
    std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
    f.on_morphisms.resize(c->morphism_count());
    std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    Functor h;
    h.source = f.source;
    h.target = g.target;
    h.on_objects.reserve(f.on_objects.size());
    for (int x : f.on_objects) h.on_objects.push_back(g.on_objects.at(x));
    h.on_morphisms.reserve(f.on_morphisms.size());
    for (int m : f.on_morphisms) h.on_morphisms.push_back(g.on_morphisms.at(m));
    return h;
}

bool is_mono(const FinCategory& c, int mor) {
    if (mor < 0 || mor >= c.morphism_count())
        throw InvalidInput("is_mono: unknown morphism id");
    int x = c.morphism(mor).src;
    auto in = c.morphisms_into(x);
    for (int g : in)
        for (int h : in) {
            if (g == h) continue;
            if (c.morphism(g).src != c.morphism(h).src) continue;
            if (c.compose(mor, g) == c.compose(mor, h)) return false;
        }
    return true;
}

bool endos_are_autos(const FinCategory& c) {
    for (const auto& m : c.morphisms())
        if (m.src == m.dst && !c.is_iso(m.id)) return false;
    return true;
}

ValidationReport validate_poset(const FinPoset& p) {
    ValidationReport rep;
    const int n = p.size;
    if (static_cast<int>(p.leq.size()) != n * n) {
        rep.violations.push_back({"poset-relation-wrong-size", {}, ""});
        return rep;
    }
    for (int a = 0; a < n; ++a)
        if (!p.le(a, a)) rep.violations.push_back({"not-reflexive", {a}, ""});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && p.le(a, b) && p.le(b, a))
                rep.violations.push_back({"not-antisymmetric", {a, b}, ""});
            if (!p.le(a, b)) continue;
            for (int d = 0; d < n; ++d)
                if (p.le(b, d) && !p.le(a, d))
                    rep.violations.push_back({"not-transitive", {a, b, d}, ""});
        }
    return rep;
}

CatPtr poset_as_category(const FinPoset& p) {
    CategoryBuilder b;
    for (int i = 0; i < p.size; ++i) b.add_object();
    std::vector<std::vector<int>> mor(p.size, std::vector<int>(p.size, -1));
    for (int a = 0; a < p.size; ++a)
        for (int c = 0; c < p.size; ++c)
            if (p.le(a, c)) mor[a][c] = b.add_morphism(a, c);
    for (int a = 0; a < p.size; ++a) b.set_identity(a, mor[a][a]);
    for (int a = 0; a < p.size; ++a)
        for (int c = 0; c < p.size; ++c) {
            if (!p.le(a, c)) continue;
            for (int d = 0; d < p.size; ++d)
                if (p.le(c, d)) b.set_composite(mor[c][d], mor[a][c], mor[a][d]);
        }
    return b.build();
}

namespace {

SliceCategory slice_impl(CatPtr c, int obj, bool over) {
    if (obj < 0 || obj >= c->object_count())
        throw InvalidInput("slice: unknown object");
    SliceCategory out;
    out.morphism_to_object.assign(c->morphism_count(), -1);
    auto objs = over ? c->morphisms_into(obj) : c->morphisms_out_of(obj);
    CategoryBuilder b;
    for (int m : objs) {
        int ix = b.add_object();
        out.object_to_morphism.push_back(m);
        out.morphism_to_object[m] = ix;
    }
    // Morphism (a) -> (b): u with b∘u = a (slice) or u∘a = b (coslice).
    std::vector<std::vector<int>> cell(objs.size() * objs.size());
    auto at = [&](int i, int j) -> std::vector<int>& {
        return cell[static_cast<size_t>(i) * objs.size() + j];
    };
    for (size_t i = 0; i < objs.size(); ++i) {
        int a = objs[i];
        for (size_t j = 0; j < objs.size(); ++j) {
            int bm = objs[j];
            int s = over ? c->morphism(a).src : c->morphism(a).dst;
            int t = over ? c->morphism(bm).src : c->morphism(bm).dst;
            for (int u : c->hom(s, t)) {
                bool commutes = over ? (c->compose(bm, u) == a)
                                     : (c->compose(u, a) == bm);
                if (!commutes) continue;
                int id = b.add_morphism(static_cast<int>(i), static_cast<int>(j));
                at(static_cast<int>(i), static_cast<int>(j)).push_back(id);
                out.morphism_to_u.push_back(u);
            }
        }
    }
    for (size_t i = 0; i < objs.size(); ++i) {
        int a = objs[i];
        int idm = over ? c->identity(c->morphism(a).src)
                       : c->identity(c->morphism(a).dst);
        for (int t : at(static_cast<int>(i), static_cast<int>(i)))
            if (out.morphism_to_u[t] == idm) b.set_identity(static_cast<int>(i), t);
    }
    for (size_t i = 0; i < objs.size(); ++i)
        for (size_t j = 0; j < objs.size(); ++j)
            for (int f : at(static_cast<int>(i), static_cast<int>(j)))
                for (size_t k = 0; k < objs.size(); ++k)
                    for (int g : at(static_cast<int>(j), static_cast<int>(k))) {
                        int u = c->compose(out.morphism_to_u[g], out.morphism_to_u[f]);
                        for (int gf : at(static_cast<int>(i), static_cast<int>(k)))
                            if (out.morphism_to_u[gf] == u) b.set_composite(g, f, gf);
                    }
    out.cat = b.build();
    return out;
}

}  // namespace

SliceCategory slice(CatPtr c, int obj) { return slice_impl(std::move(c), obj, true); }
SliceCategory coslice(CatPtr c, int obj) { return slice_impl(std::move(c), obj, false); }

namespace {

Functor induced_slice_functor(const Functor& f, const SliceCategory& sc,
                              const SliceCategory& sd) {
    Functor out;
    out.source = sc.cat;
    out.target = sd.cat;
    for (int m : sc.object_to_morphism)
        out.on_objects.push_back(sd.morphism_to_object.at(f.on_morphisms.at(m)));
    for (const auto& sm : sc.cat->morphisms()) {
        int fu = f.on_morphisms.at(sc.morphism_to_u[sm.id]);
        int di = out.on_objects[sm.src];
        int dj = out.on_objects[sm.dst];
        int found = -1;
        for (const auto& dm : sd.cat->morphisms())
            if (dm.src == di && dm.dst == dj && sd.morphism_to_u[dm.id] == fu)
                found = dm.id;
        if (found < 0)
            throw InvalidInput("induced slice functor: image triangle missing");
        out.on_morphisms.push_back(found);
    }
    return out;
}

}  // namespace

Functor slice_functor(const Functor& f, int /*obj*/, const SliceCategory& sc,
                      const SliceCategory& sd) {
    return induced_slice_functor(f, sc, sd);
}

Functor coslice_functor(const Functor& f, int /*obj*/, const SliceCategory& sc,
                        const SliceCategory& sd) {
    return induced_slice_functor(f, sc, sd);
}

std::vector<int> iso_classes(const FinCategory& c) {
    const int n = c.object_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& m : c.morphisms())
        if (m.src != m.dst && c.is_iso(m.id)) {
            int a = find(m.src), b = find(m.dst);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> rep(n), out(n);
    for (int i = 0; i < n; ++i) rep[i] = find(i);
    // dense class ids ordered by least member
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (rep[i] == i) order.push_back(i);
    for (int i = 0; i < n; ++i)
        out[i] = static_cast<int>(std::lower_bound(order.begin(), order.end(), rep[i]) -
                                  order.begin());
    return out;
}

EquivalenceVerdict is_equivalence(const Functor& f) {
    const auto& c = *f.source;
    const auto& d = *f.target;
    const auto& cp = caps();
    if (c.object_count() > cp.max_objects || d.object_count() > cp.max_objects ||
        c.morphism_count() > cp.max_morphisms || d.morphism_count() > cp.max_morphisms)
        throw CapExceeded("is_equivalence: category exceeds size caps");
    // fully faithful
    for (int x = 0; x < c.object_count(); ++x)
        for (int y = 0; y < c.object_count(); ++y) {
            auto hom_c = c.hom(x, y);
            auto hom_d = d.hom(f.on_objects[x], f.on_objects[y]);
            if (hom_c.size() != hom_d.size())
                return {false, "not-fully-faithful", {x, y}};
            std::vector<int> images;
            for (int m : hom_c) images.push_back(f.on_morphisms[m]);
            std::sort(images.begin(), images.end());
            if (std::adjacent_find(images.begin(), images.end()) != images.end())
                return {false, "not-faithful", {x, y}};
            for (int m : images)
                if (!std::binary_search(hom_d.begin(), hom_d.end(), m))
                    return {false, "not-full", {x, y}};
        }
    // essentially surjective
    auto classes = iso_classes(d);
    int nclasses = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
    std::vector<char> hit(nclasses, 0);
    for (int x = 0; x < c.object_count(); ++x) hit[classes[f.on_objects[x]]] = 1;
    for (int k = 0; k < nclasses; ++k)
        if (!hit[k]) {
            for (int y = 0; y < d.object_count(); ++y)
                if (classes[y] == k) return {false, "not-essentially-surjective", {y}};
        }
    return {true, "", {}};
}

IsoClassPosetResult iso_class_poset(const FinCategory& c) {
    IsoClassPosetResult res;
    auto classes = iso_classes(c);
    int k = 0;
    for (int v : classes) k = std::max(k, v + 1);
    FinPoset p;
    p.size = k;
    p.leq.assign(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) p.leq[static_cast<size_t>(i) * k + i] = 1;
    for (const auto& m : c.morphisms())
        p.leq[static_cast<size_t>(classes[m.src]) * k + classes[m.dst]] = 1;
    // antisymmetry: a 2-cycle between distinct classes means C is not
    // Galois-shaped
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (p.le(a, b) && p.le(b, a)) {
                int x = -1, y = -1;
                for (int i = 0; i < c.object_count() && (x < 0 || y < 0); ++i) {
                    if (classes[i] == a && x < 0) x = i;
                    if (classes[i] == b && y < 0) y = i;
                }
                res.ok = false;
                res.witness_cycle = {x, y};
                return res;
            }
    res.ok = true;
    res.poset = std::move(p);
    res.object_class = std::move(classes);
    return res;
}

bool has_weakly_initial(const FinCategory& c) {
    for (int x = 0; x < c.object_count(); ++x) {
        bool ok = true;
        for (int y = 0; y < c.object_count() && ok; ++y)
            if (c.hom(x, y).empty()) ok = false;
        if (ok) return true;
    }
    return false;
}

bool has_weakly_terminal(const FinCategory& c) {
    for (int y = 0; y < c.object_count(); ++y) {
        bool ok = true;
        for (int x = 0; x < c.object_count() && ok; ++x)
            if (c.hom(x, y).empty()) ok = false;
        if (ok) return true;
    }
    return false;
}

bool has_finite_nonempty_joins(const FinPoset& p) {
    // pairwise joins suffice for all finite nonempty joins
    for (int a = 0; a < p.size; ++a)
        for (int b = a; b < p.size; ++b) {
            std::vector<int> ub;
            for (int u = 0; u < p.size; ++u)
                if (p.le(a, u) && p.le(b, u)) ub.push_back(u);
            if (ub.empty()) return false;
            bool has_least = false;
            for (int u : ub) {
                bool least = true;
                for (int v : ub)
                    if (!p.le(u, v)) least = false;
                if (least) has_least = true;
            }
            if (!has_least) return false;
        }
    return true;
}

namespace {

bool poset_iso_search(const FinPoset& a, const FinPoset& b, std::vector<int>& map,
                      std::vector<char>& used, int i) {
    if (i == a.size) return true;
    for (int j = 0; j < b.size; ++j) {
        if (used[j]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k) {
            if (a.le(i, k) != b.le(j, map[k])) ok = false;
            if (a.le(k, i) != b.le(map[k], j)) ok = false;
        }
        if (!ok) continue;
        map[i] = j;
        used[j] = 1;
        if (poset_iso_search(a, b, map, used, i + 1)) return true;
        used[j] = 0;
    }
    return false;
}

}  // namespace

bool posets_isomorphic(const FinPoset& a, const FinPoset& b) {
    if (a.size != b.size) return false;
    std::vector<int> map(a.size, -1);
    std::vector<char> used(b.size, 0);
    return poset_iso_search(a, b, map, used, 0);
}

bool is_conservative(const Functor& f) {
    for (const auto& m : f.source->morphisms())
        if (f.target->is_iso(f.on_morphisms[m.id]) && !f.source->is_iso(m.id))
            return false;
    return true;
}

bool is_contractible(const FinCategory& c) {
    if (c.object_count() == 0) return false;
    for (int x = 0; x < c.object_count(); ++x)
        for (int y = 0; y < c.object_count(); ++y)
            if (c.hom(x, y).size() != 1) return false;
    return true;
}

bool is_groupoid(const FinCategory& c) {
    for (const auto& m : c.morphisms())
        if (!c.is_iso(m.id)) return false;
    return true;
}

std::vector<int> connected_components(const FinCategory& c) {
    const int n = c.object_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& m : c.morphisms()) {
        int a = find(m.src), b = find(m.dst);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) order.push_back(i);
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = static_cast<int>(std::lower_bound(order.begin(), order.end(), find(i)) -
                                  order.begin());
    return out;
}

}  // namespace exo
