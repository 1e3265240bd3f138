#include "galmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "gf.hpp"

namespace exo {

namespace {

std::uint64_t ipow(int b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(b);
    return r;
}

}  // namespace

GaloisCategory gal_finite_ring(RingPtr a, int level) {
    if (level < 1) throw InvalidInput("level must be >= 1");
    GaloisCategory out;
    out.level = level;
    out.ring = a;
    auto dec = local_decomposition(a);
    const int nf = static_cast<int>(dec.factors.size());

    // Zariski space: finite rings have discrete spectra.
    out.zariski.size = nf;
    out.zariski.leq.assign(static_cast<size_t>(nf) * nf, 0);
    for (int i = 0; i < nf; ++i) out.zariski.leq[static_cast<size_t>(i) * nf + i] = 1;
    out.zariski_category = poset_as_category(out.zariski);
    for (int i = 0; i < nf; ++i) {
        const auto& lf = dec.factors[i];
        out.zariski_labels.push_back("m" + std::to_string(i) + "(F_" +
                                     std::to_string(ipow(lf.residue_char, lf.residue_degree)) +
                                     ")");
    }

    CategoryBuilder b;
    std::vector<int> obj_factor;  // object -> factor index
    for (int i = 0; i < nf; ++i) {
        const auto& lf = dec.factors[i];
        const int p = lf.residue_char;
        const int e = lf.residue_degree;
        if (level % e != 0) continue;  // no embeddings into F_{p^level}
        const GF& field = gf_cache(p, level);
        const auto& k = *lf.residue_field;

        // generator of the residue field's multiplicative group + dlog
        int gen = -1;
        std::vector<int> dlog(k.size(), -1);
        for (int cand = 1; cand < k.size() && gen < 0; ++cand) {
            std::fill(dlog.begin(), dlog.end(), -1);
            int acc = k.one();
            int ord = 0;
            do {
                dlog[acc] = ord++;
                acc = k.mul(acc, cand);
            } while (acc != k.one() && ord <= k.size());
            if (ord == k.size() - 1) gen = cand;
        }
        if (gen < 0) throw InvalidInput("residue field has no generator");

        // minimal polynomial of the generator over F_p
        std::vector<int> prime_sub(p);
        std::vector<int> prime_index(k.size(), -1);
        for (int c = 0; c < p; ++c) {
            prime_sub[c] = k.scale(k.one(), static_cast<std::uint64_t>(c));
            prime_index[prime_sub[c]] = c;
        }
        std::vector<int> poly = {k.one()};  // over k, ascending
        for (int j = 0; j < e; ++j) {
            int conj = k.pow(gen, ipow(p, j));
            std::vector<int> next(poly.size() + 1, k.zero());
            for (size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] = k.add(next[t + 1], poly[t]);
                next[t] = k.add(next[t], k.mul(poly[t], k.neg(conj)));
            }
            poly = std::move(next);
        }
        std::vector<int> minpoly;
        for (int c : poly) {
            if (prime_index[c] < 0)
                throw InvalidInput("minimal polynomial not over the prime field");
            minpoly.push_back(prime_index[c]);
        }

        // its roots in GF(p^level) lie in the degree-e subfield
        std::vector<GF::Elem> roots;
        for (auto s : field.subfield(e))
            if (field.eval(minpoly, s) == field.zero()) roots.push_back(s);
        if (static_cast<int>(roots.size()) != e)
            throw InvalidInput("embedding root count mismatch");
        GF::Elem r0 = *std::min_element(roots.begin(), roots.end());

        for (int j = 0; j < e; ++j) {
            GF::Elem rj = field.pow(r0, ipow(p, j));
            int obj = b.add_object();
            obj_factor.push_back(i);
            out.object_char.push_back(p);
            out.object_labels.push_back("pt" + std::to_string(i) + ".f" + std::to_string(j));
            std::vector<std::uint64_t> table(a->size());
            for (int x = 0; x < a->size(); ++x) {
                int r = lf.residue_of[lf.factor_of[x]];
                table[x] = (r == k.zero()) ? field.zero()
                                           : field.pow(rj, static_cast<std::uint64_t>(dlog[r]));
            }
            out.object_tables.push_back(std::move(table));
            (void)obj;
        }
    }

    // morphisms: Frobenius exponents k with sigma^k . x = y
    const int nobj = b.object_count;
    std::map<std::tuple<int, int, int>, int> mor_id;  // (x, y, k) -> id
    std::vector<std::tuple<int, int, int>> mors;
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y) {
            if (obj_factor[x] != obj_factor[y]) continue;
            const auto& lf = dec.factors[obj_factor[x]];
            int e = lf.residue_degree;
            // object twists within a factor are consecutive
            int jx = x, jy = y;
            while (jx > 0 && obj_factor[jx - 1] == obj_factor[x]) --jx;
            jy = y - jx;
            jx = x - jx;
            for (int k = 0; k < level; ++k) {
                if ((jx + k) % e != jy % e) continue;
                int id = b.add_morphism(x, y);
                mor_id[{x, y, k}] = id;
                mors.emplace_back(x, y, k);
                out.frobenius_exponent.push_back(k);
                if (k == 0 && x == y) b.set_identity(x, id);
            }
        }
    for (size_t fi = 0; fi < mors.size(); ++fi) {
        auto [fx, fy, fk] = mors[fi];
        for (size_t gi = 0; gi < mors.size(); ++gi) {
            auto [gx, gy, gk] = mors[gi];
            if (gx != fy) continue;
            b.set_composite(static_cast<int>(gi), static_cast<int>(fi),
                            mor_id.at({fx, gy, (fk + gk) % level}));
        }
    }
    out.category = b.build();

    Functor proj;
    proj.source = out.category;
    proj.target = out.zariski_category;
    for (int x = 0; x < nobj; ++x) proj.on_objects.push_back(obj_factor[x]);
    for (const auto& m : out.category->morphisms())
        proj.on_morphisms.push_back(out.zariski_category->identity(obj_factor[m.src]));
    out.projection = std::move(proj);
    return out;
}

GalFunctor gal_functor(const RingHom& f, int level) {
    GalFunctor out;
    out.source = gal_finite_ring(f.target, level);
    out.target = gal_finite_ring(f.source, level);
    const auto& gb = out.source;
    const auto& ga = out.target;
    Functor fun;
    fun.source = gb.category;
    fun.target = ga.category;
    for (int y = 0; y < gb.category->object_count(); ++y) {
        std::vector<std::uint64_t> composed(f.source->size());
        for (int x = 0; x < f.source->size(); ++x) composed[x] = gb.object_tables[y][f.map[x]];
        int found = -1;
        for (int x = 0; x < ga.category->object_count(); ++x)
            if (ga.object_char[x] == gb.object_char[y] && ga.object_tables[x] == composed)
                found = x;
        if (found < 0) throw InvalidInput("gal_functor: composed point not found");
        fun.on_objects.push_back(found);
    }
    for (const auto& m : gb.category->morphisms()) {
        int k = gb.frobenius_exponent[m.id];
        int x = fun.on_objects[m.src], y = fun.on_objects[m.dst];
        int found = -1;
        for (int cand : ga.category->hom(x, y))
            if (ga.frobenius_exponent[cand] == k) found = cand;
        if (found < 0) throw InvalidInput("gal_functor: image morphism not found");
        fun.on_morphisms.push_back(found);
    }
    out.functor = std::move(fun);
    return out;
}

// ---- cyclotomic models ----

std::vector<int> units_mod(int m) {
    if (m < 1) throw InvalidInput("modulus must be >= 1");
    if (m == 1) return {0};
    std::vector<int> out;
    for (int g = 1; g < m; ++g)
        if (std::gcd(g, m) == 1) out.push_back(g);
    return out;
}

namespace {

int group_identity(int m) { return m == 1 ? 0 : 1; }

std::vector<int> closure(int m, std::vector<int> gens) {
    std::set<int> s = {group_identity(m)};
    for (int g : gens) s.insert(g % m);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(a * b % m).second) grew = true;
    }
    return {s.begin(), s.end()};
}

int coset_rep(int m, int h, const std::vector<int>& sub) {
    int best = m;
    for (int i : sub) best = std::min(best, h * i % m);
    return best;
}

}  // namespace

SplittingDatum cyclotomic_splitting(int m, int p) {
    if (!is_prime(p)) throw InvalidInput("splitting requires a prime");
    SplittingDatum out;
    out.m = m;
    out.p = p;
    auto g = units_mod(m);
    if (m % p != 0) {
        out.inertia = {group_identity(m)};
        out.decomposition = closure(m, {p % m});
    } else {
        int mp = m;
        while (mp % p == 0) mp /= p;
        for (int u : g)
            if (u % mp == group_identity(mp) % mp) out.inertia.push_back(u);
        int lift = -1;
        for (int u : g)
            if (u % mp == p % mp) {
                lift = u;
                break;
            }
        if (lift < 0) throw InvalidInput("no decomposition lift found");
        auto gens = out.inertia;
        gens.push_back(lift);
        out.decomposition = closure(m, gens);
    }
    out.ramification = static_cast<int>(out.inertia.size());
    out.residue_degree =
        static_cast<int>(out.decomposition.size() / out.inertia.size());
    out.prime_count = static_cast<int>(g.size() / out.decomposition.size());
    return out;
}

namespace {

struct CycloData {
    int m = 0;
    std::vector<int> group;  // H
    struct PrimeObj {
        int p;
        int rep;  // coset representative picking the prime over p
        std::vector<int> inertia;        // I_q = H meet I_p
        std::vector<int> decomposition;  // D_q = H meet D_p
    };
    std::vector<PrimeObj> primes;  // objects 0..k-1, eta = k
    int eta = 0;
    std::map<int, int> eta_auto_id;
    std::vector<std::map<int, int>> aut_id;     // per prime: coset rep -> morphism
    std::vector<std::map<int, int>> to_eta_id;  // per prime: coset rep -> morphism
    GaloisCategory model;
};

CycloData build_cyclo(int m, const std::vector<int>& prime_list,
                      const std::vector<int>& subgroup) {
    auto g = units_mod(m);
    std::vector<int> h = subgroup.empty() ? g : subgroup;
    {
        std::set<int> gs(g.begin(), g.end()), hs(h.begin(), h.end());
        for (int x : h)
            if (!gs.count(x)) throw InvalidInput("subgroup element is not a unit");
        for (int x : h)
            for (int y : h)
                if (!hs.count(x * y % m)) throw InvalidInput("subgroup is not closed");
        if (!hs.count(group_identity(m))) throw InvalidInput("subgroup lacks the identity");
    }

    CycloData d;
    d.m = m;
    d.group = h;
    CategoryBuilder b;
    for (int p : prime_list) {
        auto sp = cyclotomic_splitting(m, p);
        std::vector<int> hdp_gens = h;
        hdp_gens.insert(hdp_gens.end(), sp.decomposition.begin(), sp.decomposition.end());
        auto hdp = closure(m, hdp_gens);
        std::set<int> seen;
        for (int u : g) {
            int r = coset_rep(m, u, hdp);
            if (!seen.insert(r).second) continue;
            CycloData::PrimeObj po;
            po.p = p;
            po.rep = r;
            std::set<int> ip(sp.inertia.begin(), sp.inertia.end());
            std::set<int> dp(sp.decomposition.begin(), sp.decomposition.end());
            for (int x : h) {
                if (ip.count(x)) po.inertia.push_back(x);
                if (dp.count(x)) po.decomposition.push_back(x);
            }
            d.primes.push_back(std::move(po));
            b.add_object();
        }
    }
    d.eta = b.add_object();

    for (int x : h) {
        d.eta_auto_id[x] = b.add_morphism(d.eta, d.eta);
        if (x == group_identity(m)) b.set_identity(d.eta, d.eta_auto_id[x]);
    }
    d.aut_id.resize(d.primes.size());
    d.to_eta_id.resize(d.primes.size());
    for (size_t q = 0; q < d.primes.size(); ++q) {
        const auto& po = d.primes[q];
        std::set<int> aut_reps, eta_reps;
        for (int x : po.decomposition) aut_reps.insert(coset_rep(m, x, po.inertia));
        for (int x : h) eta_reps.insert(coset_rep(m, x, po.inertia));
        for (int r : aut_reps) {
            d.aut_id[q][r] = b.add_morphism(static_cast<int>(q), static_cast<int>(q));
            if (r == coset_rep(m, group_identity(m), po.inertia))
                b.set_identity(static_cast<int>(q), d.aut_id[q][r]);
        }
        for (int r : eta_reps) d.to_eta_id[q][r] = b.add_morphism(static_cast<int>(q), d.eta);
    }

    // composition tables
    for (auto [h2, id2] : d.eta_auto_id)
        for (auto [h1, id1] : d.eta_auto_id)
            b.set_composite(id2, id1, d.eta_auto_id.at(h2 * h1 % m));
    for (size_t q = 0; q < d.primes.size(); ++q) {
        const auto& po = d.primes[q];
        for (auto [d2, id2] : d.aut_id[q])
            for (auto [d1, id1] : d.aut_id[q])
                b.set_composite(id2, id1, d.aut_id[q].at(coset_rep(m, d2 * d1 % m, po.inertia)));
        for (auto [hh, idh] : d.to_eta_id[q])
            for (auto [d1, id1] : d.aut_id[q])
                b.set_composite(idh, id1, d.to_eta_id[q].at(coset_rep(m, hh * d1 % m, po.inertia)));
        for (auto [u, idu] : d.eta_auto_id)
            for (auto [hh, idh] : d.to_eta_id[q])
                b.set_composite(idu, idh, d.to_eta_id[q].at(coset_rep(m, u * hh % m, po.inertia)));
    }
    auto cat = b.build();

    GaloisCategory& out = d.model;
    out.category = cat;
    out.modulus = m;
    out.group = h;
    const int nz = static_cast<int>(d.primes.size()) + 1;
    out.zariski.size = nz;
    out.zariski.leq.assign(static_cast<size_t>(nz) * nz, 0);
    for (int i = 0; i < nz; ++i) out.zariski.leq[static_cast<size_t>(i) * nz + i] = 1;
    for (int i = 0; i + 1 < nz; ++i) out.zariski.leq[static_cast<size_t>(i) * nz + (nz - 1)] = 1;
    out.zariski_category = poset_as_category(out.zariski);
    std::map<int, int> per_p;
    for (const auto& po : d.primes) {
        int k = per_p[po.p]++;
        std::string label = "q" + std::to_string(po.p);
        if (k > 0) label += "#" + std::to_string(k);
        out.object_labels.push_back(label);
        out.zariski_labels.push_back(label);
    }
    out.object_labels.push_back("eta");
    out.zariski_labels.push_back("eta");

    Functor proj;
    proj.source = cat;
    proj.target = out.zariski_category;
    for (size_t q = 0; q < d.primes.size(); ++q) proj.on_objects.push_back(static_cast<int>(q));
    proj.on_objects.push_back(nz - 1);
    for (const auto& mo : cat->morphisms()) {
        int zs = proj.on_objects[mo.src], zd = proj.on_objects[mo.dst];
        if (zs == zd)
            proj.on_morphisms.push_back(out.zariski_category->identity(zs));
        else
            proj.on_morphisms.push_back(out.zariski_category->hom(zs, zd).at(0));
    }
    out.projection = std::move(proj);
    return d;
}

}  // namespace

GaloisCategory gal_cyclotomic(int m, const std::vector<int>& primes,
                              const std::vector<int>& subgroup) {
    return build_cyclo(m, primes, subgroup).model;
}

GalFunctor gal_relative_functor(int m, const std::vector<int>& primes,
                                const std::vector<int>& subgroup) {
    auto sub = build_cyclo(m, primes, subgroup);
    auto full = build_cyclo(m, primes, {});
    GalFunctor out;
    out.source = sub.model;
    out.target = full.model;

    // the full model has exactly one prime per rational prime
    std::map<int, int> full_prime;  // p -> object
    for (size_t q = 0; q < full.primes.size(); ++q) {
        if (full_prime.count(full.primes[q].p))
            throw InvalidInput("full cyclotomic model has a split prime");
        full_prime[full.primes[q].p] = static_cast<int>(q);
    }

    Functor f;
    f.source = sub.model.category;
    f.target = full.model.category;
    for (const auto& po : sub.primes) f.on_objects.push_back(full_prime.at(po.p));
    f.on_objects.push_back(full.eta);

    f.on_morphisms.assign(sub.model.category->morphism_count(), -1);
    for (auto [hh, id] : sub.eta_auto_id) f.on_morphisms[id] = full.eta_auto_id.at(hh);
    for (size_t q = 0; q < sub.primes.size(); ++q) {
        const auto& po = sub.primes[q];
        int fq = full_prime.at(po.p);
        const auto& full_inertia = full.primes[fq].inertia;
        for (auto [dd, id] : sub.aut_id[q])
            f.on_morphisms[id] = full.aut_id[fq].at(coset_rep(m, dd, full_inertia));
        for (auto [hh, id] : sub.to_eta_id[q])
            f.on_morphisms[id] =
                full.to_eta_id[fq].at(coset_rep(m, hh * po.rep % m, full_inertia));
    }
    out.functor = std::move(f);
    return out;
}

AxiomReport check_galois_axioms(const GaloisCategory& g) {
    AxiomReport r;
    r.projection_conservative = is_conservative(g.projection);
    r.endos_are_autos = endos_are_autos(*g.category);
    r.all_mono = true;
    for (const auto& m : g.category->morphisms())
        if (!is_mono(*g.category, m.id)) r.all_mono = false;
    r.slice_posets_have_joins = true;
    for (int x = 0; x < g.category->object_count(); ++x) {
        auto s = slice(g.category, x);
        auto icp = iso_class_poset(*s.cat);
        if (!icp.ok || icp.poset.size == 0 || !has_finite_nonempty_joins(icp.poset)) {
            r.slice_posets_have_joins = false;
            r.witness_object = x;
            break;
        }
    }
    return r;
}

}  // namespace exo
