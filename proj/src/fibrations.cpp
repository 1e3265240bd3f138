#include "fibrations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace exo {

namespace {

std::vector<char> membership(const FullSubcategory& s) {
    std::vector<char> in(s.parent->object_count(), 0);
    for (int o : s.objects) {
        if (o < 0 || o >= s.parent->object_count())
            throw InvalidInput("full subcategory: object out of range");
        in[o] = 1;
    }
    return in;
}

}  // namespace

Functor full_subcategory_inclusion(const FullSubcategory& s) {
    auto in = membership(s);
    CategoryBuilder b;
    std::vector<int> obj_map(s.parent->object_count(), -1);
    std::vector<int> obj_to_parent;
    for (int o : s.objects) {
        obj_map[o] = b.add_object();
        obj_to_parent.push_back(o);
    }
    std::vector<int> mor_to_parent;
    std::vector<int> mor_map(s.parent->morphism_count(), -1);
    for (const auto& m : s.parent->morphisms())
        if (in[m.src] && in[m.dst]) {
            int id = b.add_morphism(obj_map[m.src], obj_map[m.dst]);
            mor_map[m.id] = id;
            mor_to_parent.push_back(m.id);
        }
    for (int o : s.objects) b.set_identity(obj_map[o], mor_map[s.parent->identity(o)]);
    for (int f : mor_to_parent)
        for (int g : mor_to_parent) {
            int gf = s.parent->compose(g, f);
            if (gf >= 0 && mor_map[gf] >= 0) b.set_composite(mor_map[g], mor_map[f], mor_map[gf]);
        }
    Functor inc;
    inc.source = b.build();
    inc.target = s.parent;
    inc.on_objects = obj_to_parent;
    inc.on_morphisms = mor_to_parent;
    return inc;
}

Verdict is_sieve(const FullSubcategory& s) {
    auto in = membership(s);
    for (const auto& m : s.parent->morphisms())
        if (in[m.dst] && !in[m.src]) return {false, {m.id}, "incoming morphism from outside"};
    return {true, {}, ""};
}

Verdict is_cosieve(const FullSubcategory& s) {
    auto in = membership(s);
    for (const auto& m : s.parent->morphisms())
        if (in[m.src] && !in[m.dst]) return {false, {m.id}, "outgoing morphism to outside"};
    return {true, {}, ""};
}

Verdict is_interval(const FullSubcategory& s) {
    auto in = membership(s);
    const auto& c = *s.parent;
    for (const auto& f : c.morphisms()) {
        if (!in[f.src]) continue;
        for (const auto& g : c.morphisms()) {
            if (g.src != f.dst || !in[g.dst]) continue;
            if (!in[f.dst]) return {false, {g.id, f.id}, "factorization leaves the subcategory"};
        }
    }
    return {true, {}, ""};
}

namespace {

CommaFiber build_comma(const Functor& f, int d, bool right, bool iso_only) {
    const auto& c = *f.source;
    const auto& t = *f.target;
    if (d < 0 || d >= t.object_count()) throw InvalidInput("comma fiber: unknown object");
    CommaFiber out;
    out.right_oriented = right;
    CategoryBuilder b;
    for (int x = 0; x < c.object_count(); ++x) {
        int fx = f.on_objects[x];
        auto decs = right ? t.hom(fx, d) : t.hom(d, fx);
        for (int phi : decs) {
            if (iso_only && !t.is_iso(phi)) continue;
            b.add_object();
            out.objects.emplace_back(x, phi);
        }
    }
    const int n = static_cast<int>(out.objects.size());
    std::vector<std::vector<std::pair<int, int>>> cells(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [x, phi] = out.objects[i];
            auto [y, psi] = out.objects[j];
            for (int u : c.hom(x, y)) {
                int fu = f.on_morphisms[u];
                bool commutes = right ? (t.compose(psi, fu) == phi)
                                      : (t.compose(fu, phi) == psi);
                if (!commutes) continue;
                int id = b.add_morphism(i, j);
                cells[static_cast<size_t>(i) * n + j].emplace_back(id, u);
            }
        }
    for (int i = 0; i < n; ++i) {
        int idm = c.identity(out.objects[i].first);
        for (auto [id, u] : cells[static_cast<size_t>(i) * n + i])
            if (u == idm) b.set_identity(i, id);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (auto [fid, fu] : cells[static_cast<size_t>(i) * n + j])
                for (int k = 0; k < n; ++k)
                    for (auto [gid, gu] : cells[static_cast<size_t>(j) * n + k]) {
                        int comp = c.compose(gu, fu);
                        for (auto [hid, hu] : cells[static_cast<size_t>(i) * n + k])
                            if (hu == comp) b.set_composite(gid, fid, hid);
                    }
    out.cat = b.build();
    return out;
}

}  // namespace

CommaFiber comma_fiber(const Functor& f, int d, bool right_oriented) {
    return build_comma(f, d, right_oriented, false);
}

CommaFiber iso_fiber(const Functor& f, int d) { return build_comma(f, d, true, true); }

FiberAnalysis analyze_fiber(const Functor& f, int d) {
    FiberAnalysis out;
    auto fib = iso_fiber(f, d);
    auto comp = connected_components(*fib.cat);
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    out.pi0 = ncomp;
    out.components_contractible = true;
    const auto& fc = *fib.cat;
    for (int i = 0; i < fc.object_count() && out.components_contractible; ++i)
        for (int j = 0; j < fc.object_count(); ++j) {
            if (comp[i] != comp[j]) continue;
            if (fc.hom(i, j).size() != 1) {
                out.components_contractible = false;
                out.witness = {i, j};
                break;
            }
        }
    // Count components up to the automorphisms of d acting on decorations.
    const auto& t = *f.target;
    std::vector<int> parent(ncomp);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < fib.objects.size(); ++i) index[fib.objects[i]] = static_cast<int>(i);
    for (int a : t.hom(d, d)) {
        if (!t.is_iso(a)) continue;
        for (size_t i = 0; i < fib.objects.size(); ++i) {
            auto [x, phi] = fib.objects[i];
            int moved = t.compose(a, phi);
            auto it = index.find({x, moved});
            if (it == index.end()) continue;
            int p = find(comp[i]), q = find(comp[it->second]);
            if (p != q) parent[std::max(p, q)] = std::min(p, q);
        }
    }
    std::set<int> roots;
    for (int c = 0; c < ncomp; ++c) roots.insert(find(c));
    out.size = static_cast<int>(roots.size());
    return out;
}

FiniteFibersResult is_finite_fibers(const Functor& f) {
    FiniteFibersResult out;
    out.value = true;
    for (int d = 0; d < f.target->object_count(); ++d) {
        auto a = analyze_fiber(f, d);
        out.sizes.push_back(a.size);
        if (!a.components_contractible && out.value) {
            out.value = false;
            out.witness_object = d;
        }
    }
    return out;
}

namespace {

Verdict fibration_check(const Functor& f, bool right) {
    for (int x = 0; x < f.source->object_count(); ++x) {
        auto sc = right ? slice(f.source, x) : coslice(f.source, x);
        auto sd = right ? slice(f.target, f.on_objects[x])
                        : coslice(f.target, f.on_objects[x]);
        auto sf = right ? slice_functor(f, x, sc, sd) : coslice_functor(f, x, sc, sd);
        auto eq = is_equivalence(sf);
        if (!eq.value) return {false, {x}, eq.reason};
    }
    return {true, {}, ""};
}

}  // namespace

Verdict is_right_fibration(const Functor& f) { return fibration_check(f, true); }
Verdict is_left_fibration(const Functor& f) { return fibration_check(f, false); }

Verdict is_kan_fibration(const Functor& f) {
    auto l = is_left_fibration(f);
    if (!l.value) return {false, l.witness, "left fibration fails: " + l.detail};
    auto r = is_right_fibration(f);
    if (!r.value) return {false, r.witness, "right fibration fails: " + r.detail};
    return {true, {}, ""};
}

Verdict specialization_lifting(const Functor& f) {
    const auto& c = *f.source;
    const auto& t = *f.target;
    for (int xi = 0; xi < c.object_count(); ++xi) {
        int fxi = f.on_objects[xi];
        for (const auto& psi : t.morphisms()) {
            if (psi.dst != fxi) continue;
            bool lifted = false;
            for (int phi : c.morphisms_into(xi)) {
                int fphi = f.on_morphisms[phi];
                int fx = t.morphism(fphi).src;
                for (int v : t.hom(fx, psi.src)) {
                    if (!t.is_iso(v)) continue;
                    if (t.compose(psi.id, v) == fphi) {
                        lifted = true;
                        break;
                    }
                }
                if (lifted) break;
            }
            if (!lifted) return {false, {xi, psi.id}, "specialization with no lift"};
        }
    }
    return {true, {}, ""};
}

ValidationReport validate_diagram(const SetValuedDiagram& g) {
    ValidationReport rep;
    const auto& d = *g.base;
    if (static_cast<int>(g.sizes.size()) != d.object_count() ||
        static_cast<int>(g.transport.size()) != d.morphism_count()) {
        rep.violations.push_back({"diagram-shape-mismatch", {}, ""});
        return rep;
    }
    for (const auto& m : d.morphisms()) {
        const auto& tr = g.transport[m.id];
        if (static_cast<int>(tr.size()) != g.sizes[m.dst])
            rep.violations.push_back({"transport-domain-mismatch", {m.id}, ""});
        else
            for (int v : tr)
                if (v < 0 || v >= g.sizes[m.src])
                    rep.violations.push_back({"transport-value-out-of-range", {m.id, v}, ""});
    }
    if (!rep.ok()) return rep;
    for (int x = 0; x < d.object_count(); ++x) {
        const auto& tr = g.transport[d.identity(x)];
        for (int s = 0; s < g.sizes[x]; ++s)
            if (tr[s] != s) rep.violations.push_back({"identity-transport-not-identity", {x, s}, ""});
    }
    for (const auto& u : d.morphisms())
        for (const auto& v : d.morphisms()) {
            int vu = d.compose(v.id, u.id);
            if (vu < 0) continue;
            // contravariance: G(v∘u) = G(u)∘G(v)
            for (int s = 0; s < g.sizes[v.dst]; ++s)
                if (g.transport[vu][s] != g.transport[u.id][g.transport[v.id][s]])
                    rep.violations.push_back({"transport-not-functorial", {v.id, u.id, s}, ""});
        }
    return rep;
}

GrothendieckResult grothendieck(const SetValuedDiagram& g) {
    auto rep = validate_diagram(g);
    if (!rep.ok())
        throw InvalidInput("grothendieck: diagram not functorial: " + rep.violations.front().kind);
    const auto& d = *g.base;
    GrothendieckResult out;
    CategoryBuilder b;
    std::vector<std::vector<int>> obj_index(d.object_count());
    for (int x = 0; x < d.object_count(); ++x) {
        obj_index[x].resize(g.sizes[x]);
        for (int s = 0; s < g.sizes[x]; ++s) {
            obj_index[x][s] = b.add_object();
            out.objects.emplace_back(x, s);
        }
    }
    // morphisms (d, G(u)(s')) -> (d', s') labeled by (u, s')
    std::vector<std::pair<int, int>> labels;
    std::map<std::pair<int, int>, int> label_index;
    std::vector<int> proj_mor;
    for (const auto& u : d.morphisms())
        for (int s2 = 0; s2 < g.sizes[u.dst]; ++s2) {
            int s1 = g.transport[u.id][s2];
            int id = b.add_morphism(obj_index[u.src][s1], obj_index[u.dst][s2]);
            labels.emplace_back(u.id, s2);
            label_index[{u.id, s2}] = id;
            proj_mor.push_back(u.id);
        }
    for (int x = 0; x < d.object_count(); ++x)
        for (int s = 0; s < g.sizes[x]; ++s)
            b.set_identity(obj_index[x][s], label_index[{d.identity(x), s}]);
    for (size_t m1 = 0; m1 < labels.size(); ++m1) {
        auto [u, s2] = labels[m1];
        for (size_t m2 = 0; m2 < labels.size(); ++m2) {
            auto [v, s3] = labels[m2];
            if (d.morphism(v).src != d.morphism(u).dst) continue;
            if (g.transport[v][s3] != s2) continue;  // middle object must match
            int vu = d.compose(v, u);
            b.set_composite(static_cast<int>(m2), static_cast<int>(m1), label_index[{vu, s3}]);
        }
    }
    auto total = b.build();
    Functor proj;
    proj.source = total;
    proj.target = g.base;
    for (auto [x, s] : out.objects) proj.on_objects.push_back(x);
    proj.on_morphisms = proj_mor;
    out.projection = std::move(proj);
    return out;
}

namespace {

struct FiberData {
    CommaFiber fiber;
    std::vector<int> comp;
    int ncomp = 0;
    std::map<std::pair<int, int>, int> index;
};

FiberData fiber_data(const Functor& f, int d) {
    FiberData out;
    out.fiber = iso_fiber(f, d);
    out.comp = connected_components(*out.fiber.cat);
    for (int c : out.comp) out.ncomp = std::max(out.ncomp, c + 1);
    for (size_t i = 0; i < out.fiber.objects.size(); ++i)
        out.index[out.fiber.objects[i]] = static_cast<int>(i);
    return out;
}

}  // namespace

SetValuedDiagram straighten(const Functor& f) {
    auto rf = is_right_fibration(f);
    if (!rf.value) throw InvalidInput("straighten: not a right fibration");
    const auto& c = *f.source;
    const auto& t = *f.target;
    std::vector<FiberData> fibers;
    for (int d = 0; d < t.object_count(); ++d) {
        fibers.push_back(fiber_data(f, d));
        auto a = analyze_fiber(f, d);
        if (!a.components_contractible)
            throw InvalidInput("straighten: fiber components not contractible");
    }
    SetValuedDiagram g;
    g.base = f.target;
    for (const auto& fd : fibers) g.sizes.push_back(fd.ncomp);
    g.transport.resize(t.morphism_count());
    for (const auto& u : t.morphisms()) {
        const auto& fd2 = fibers[u.dst];
        const auto& fd1 = fibers[u.src];
        auto& tr = g.transport[u.id];
        tr.assign(fd2.ncomp, -1);
        for (size_t j = 0; j < fd2.fiber.objects.size(); ++j) {
            auto [z2, phi2] = fd2.fiber.objects[j];
            int cls2 = fd2.comp[j];
            // candidates (z, ψ, w): φ2 ∘ F(w) = u ∘ ψ
            for (const auto& w : c.morphisms()) {
                if (w.dst != z2) continue;
                int fw = f.on_morphisms[w.id];
                int lhs = t.compose(phi2, fw);
                for (int psi : t.hom(f.on_objects[w.src], u.src)) {
                    if (!t.is_iso(psi)) continue;
                    if (t.compose(u.id, psi) != lhs) continue;
                    int idx = fd1.index.at({w.src, psi});
                    int cls1 = fd1.comp[idx];
                    if (tr[cls2] == -1)
                        tr[cls2] = cls1;
                    else if (tr[cls2] != cls1)
                        throw InvalidInput("straighten: transport not well defined");
                }
            }
        }
        for (int s = 0; s < fd2.ncomp; ++s)
            if (tr[s] < 0) throw InvalidInput("straighten: missing transport (no lift)");
    }
    auto rep = validate_diagram(g);
    if (!rep.ok()) throw InvalidInput("straighten: produced non-functorial diagram");
    return g;
}

namespace {

bool diagram_iso_search(const SetValuedDiagram& a, const SetValuedDiagram& b,
                        std::vector<std::vector<int>>& beta, int obj) {
    const auto& d = *a.base;
    if (obj == d.object_count()) return true;
    std::vector<int> perm(a.sizes[obj]);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        beta[obj] = perm;
        bool ok = true;
        for (const auto& u : d.morphisms()) {
            if (u.src > obj || u.dst > obj) continue;
            // β_src ∘ a.G(u) = b.G(u) ∘ β_dst
            for (int s = 0; s < a.sizes[u.dst] && ok; ++s)
                if (beta[u.src][a.transport[u.id][s]] != b.transport[u.id][beta[u.dst][s]])
                    ok = false;
            if (!ok) break;
        }
        if (ok && diagram_iso_search(a, b, beta, obj + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    beta[obj].clear();
    return false;
}

}  // namespace

bool diagrams_isomorphic(const SetValuedDiagram& a, const SetValuedDiagram& b) {
    if (a.base->object_count() != b.base->object_count() ||
        a.base->morphism_count() != b.base->morphism_count())
        return false;
    if (a.sizes != b.sizes) return false;
    std::vector<std::vector<int>> beta(a.base->object_count());
    return diagram_iso_search(a, b, beta, 0);
}

Functor unstraightening_comparison(const Functor& f, const SetValuedDiagram& g,
                                   const GrothendieckResult& total) {
    const auto& c = *f.source;
    const auto& t = *f.target;
    // component of (z, id) in the fiber over F(z), per source object
    std::vector<FiberData> fibers;
    for (int d = 0; d < t.object_count(); ++d) fibers.push_back(fiber_data(f, d));
    std::map<std::pair<int, int>, int> total_obj;
    for (size_t i = 0; i < total.objects.size(); ++i)
        total_obj[total.objects[i]] = static_cast<int>(i);
    Functor out;
    out.source = f.source;
    out.target = total.projection.source;
    for (int z = 0; z < c.object_count(); ++z) {
        int d = f.on_objects[z];
        const auto& fd = fibers[d];
        int cls = fd.comp[fd.index.at({z, t.identity(d)})];
        out.on_objects.push_back(total_obj.at({d, cls}));
    }
    // total morphisms are labeled (u, s'): from (src, G(u)(s')) to (dst, s')
    std::map<std::pair<int, int>, int> total_mor;
    for (const auto& m : total.projection.source->morphisms()) {
        int u = total.projection.on_morphisms[m.id];
        int s2 = total.objects[m.dst].second;
        total_mor[{u, s2}] = m.id;
    }
    for (const auto& w : c.morphisms()) {
        int u = f.on_morphisms[w.id];
        int d2 = f.on_objects[w.dst];
        const auto& fd2 = fibers[d2];
        int s2 = fd2.comp[fd2.index.at({w.dst, t.identity(d2)})];
        out.on_morphisms.push_back(total_mor.at({u, s2}));
    }
    (void)g;
    return out;
}

Functor restrict_to_target_objects(const Functor& f, const std::vector<int>& target_objects) {
    auto inc_t = full_subcategory_inclusion({f.target, target_objects});
    std::vector<int> t_obj(f.target->object_count(), -1);
    for (size_t i = 0; i < target_objects.size(); ++i) t_obj[target_objects[i]] = static_cast<int>(i);
    std::vector<int> t_mor(f.target->morphism_count(), -1);
    for (size_t i = 0; i < inc_t.on_morphisms.size(); ++i)
        t_mor[inc_t.on_morphisms[i]] = static_cast<int>(i);

    std::vector<int> src_objects;
    for (int x = 0; x < f.source->object_count(); ++x)
        if (t_obj[f.on_objects[x]] >= 0) src_objects.push_back(x);
    auto inc_s = full_subcategory_inclusion({f.source, src_objects});

    Functor out;
    out.source = inc_s.source;
    out.target = inc_t.source;
    for (size_t i = 0; i < src_objects.size(); ++i)
        out.on_objects.push_back(t_obj[f.on_objects[src_objects[i]]]);
    for (int m = 0; m < out.source->morphism_count(); ++m)
        out.on_morphisms.push_back(t_mor[f.on_morphisms[inc_s.on_morphisms[m]]]);
    return out;
}

}  // namespace exo
