#include "dictionary.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exo {

namespace {

std::string ids(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

DictionaryCase make_case(std::string name, std::string statement) {
    DictionaryCase c;
    c.name = std::move(name);
    c.statement = std::move(statement);
    c.verdict = "pass";
    return c;
}

// category side of "radicial": every fiber empty or a single
// contractible component
bool fibers_empty_or_singleton(const Functor& f, std::string& detail) {
    for (int d = 0; d < f.target->object_count(); ++d) {
        auto fa = analyze_fiber(f, d);
        if (fa.pi0 == 0) continue;
        if (fa.pi0 > 1) {
            detail = "fiber at object " + std::to_string(d) + " has " +
                     std::to_string(fa.pi0) + " components";
            return false;
        }
        if (!fa.components_contractible) {
            detail = "fiber at object " + std::to_string(d) +
                     " is not contractible, witness " + ids(fa.witness);
            return false;
        }
    }
    return true;
}

}  // namespace

void Scorecard::add(DictionaryCase c) { cases.push_back(std::move(c)); }

void Scorecard::finalize() {
    std::sort(cases.begin(), cases.end(),
              [](const DictionaryCase& a, const DictionaryCase& b) { return a.name < b.name; });
    passed = failed = skipped = non_vacuous_passes = 0;
    for (const auto& c : cases) {
        if (c.verdict == "pass") {
            ++passed;
            if (!c.vacuous) ++non_vacuous_passes;
        } else if (c.verdict == "fail") {
            ++failed;
        } else {
            ++skipped;
        }
    }
}

DictionaryCase check_invariance_topologique(const GalFunctor& g, const RingHom& f) {
    auto c = make_case("invariance-topologique/" + f.name,
                       "universal homeomorphism <=> equivalence of point categories");
    bool uh = is_universal_homeomorphism(f);
    auto eq = is_equivalence(g.functor);
    if (uh != eq.value) {
        c.verdict = "fail";
        c.detail = uh ? "universal homeomorphism but not an equivalence: " + eq.reason + " " +
                            ids(eq.witness)
                      : "equivalence but not a universal homeomorphism";
        return c;
    }
    c.vacuous = !uh;
    return c;
}

DictionaryCase check_radicial(const GalFunctor& g, const RingHom& f) {
    auto c = make_case("radicial/" + f.name,
                       "radicial <=> every fiber is empty or a singleton");
    bool rad = is_radicial(f);
    std::string why;
    bool fib = fibers_empty_or_singleton(g.functor, why);
    if (rad != fib) {
        c.verdict = "fail";
        c.detail = rad ? "radicial but fibers are not singletons: " + why
                       : "singleton fibers but not radicial";
        return c;
    }
    c.vacuous = !rad;
    return c;
}

DictionaryCase check_finite(const GalFunctor& g, const RingHom& f) {
    auto c = make_case("finite/" + f.name,
                       "finite (always, for finite rings) => right fibration with finite fibers");
    auto r = is_right_fibration(g.functor);
    if (!r.value) {
        c.verdict = "fail";
        c.detail = "not a right fibration: " + r.detail + " " + ids(r.witness);
        return c;
    }
    auto ff = is_finite_fibers(g.functor);
    if (!ff.value) {
        c.verdict = "fail";
        c.detail = "fiber at object " + std::to_string(ff.witness_object) + " is not finite";
    }
    return c;
}

namespace {

DictionaryCase etale_like(const std::string& prefix, const std::string& statement,
                          const GalFunctor& g, const RingHom& f, bool kan) {
    auto c = make_case(prefix + "/" + f.name, statement);
    bool et = is_etale(f);
    auto fib = kan ? is_kan_fibration(g.functor) : is_left_fibration(g.functor);
    bool ff = is_finite_fibers(g.functor).value;
    bool rhs = fib.value && ff;
    if (et && !rhs) {
        c.verdict = "fail";
        c.detail = "etale but classifier says no: " + fib.detail + " " + ids(fib.witness);
        return c;
    }
    if (!et && rhs) {
        bool gated = !is_perfectly_reduced(*f.source).value || !is_perfectly_reduced(*f.target).value;
        if (gated) {
            c.verdict = "skipped";
            c.detail = "converse gated: source or target is not perfectly reduced";
        } else {
            c.verdict = "fail";
            c.detail = "classifier positive but the map is not etale";
        }
        return c;
    }
    c.vacuous = !et && !rhs;
    return c;
}

}  // namespace

DictionaryCase check_etale(const GalFunctor& g, const RingHom& f) {
    return etale_like("etale", "etale <=> left fibration with finite fibers", g, f, false);
}

DictionaryCase check_finite_etale(const GalFunctor& g, const RingHom& f) {
    return etale_like("finite-etale", "finite etale <=> kan fibration with finite fibers", g, f,
                      true);
}

DictionaryCase check_invariance_topologique(const RingHom& f, int level) {
    return check_invariance_topologique(gal_functor(f, level), f);
}
DictionaryCase check_radicial(const RingHom& f, int level) {
    return check_radicial(gal_functor(f, level), f);
}
DictionaryCase check_finite(const RingHom& f, int level) {
    return check_finite(gal_functor(f, level), f);
}
DictionaryCase check_etale(const RingHom& f, int level) {
    return check_etale(gal_functor(f, level), f);
}
DictionaryCase check_finite_etale(const RingHom& f, int level) {
    return check_finite_etale(gal_functor(f, level), f);
}

DictionaryCase check_open_closed(const std::string& name, const GaloisCategory& model,
                                 const std::vector<LabeledSubset>& subsets) {
    auto c = make_case("open-closed/" + name,
                       "open <=> cosieve, closed <=> sieve, locally closed <=> interval");
    for (const auto& s : subsets) {
        FullSubcategory sub{model.category, s.objects};
        Verdict v;
        if (s.kind == "open")
            v = is_cosieve(sub);
        else if (s.kind == "closed")
            v = is_sieve(sub);
        else if (s.kind == "locally-closed")
            v = is_interval(sub);
        else {
            c.verdict = "fail";
            c.detail = "unknown label kind: " + s.kind;
            return c;
        }
        if (v.value != s.expected) {
            c.verdict = "fail";
            c.detail = s.label + " declared " + s.kind + "=" +
                       (s.expected ? "true" : "false") + " but classifier disagrees " +
                       ids(v.witness);
            return c;
        }
        if (!s.expected && v.witness.empty()) {
            c.verdict = "fail";
            c.detail = s.label + ": negative verdict lacks a witness";
            return c;
        }
    }
    return c;
}

DictionaryCase check_local(const std::string& name, const GaloisCategory& model,
                           bool expect_local) {
    auto c = make_case("local/" + name, "local <=> weakly initial object exists");
    bool wi = has_weakly_initial(*model.category);
    if (wi != expect_local) {
        c.verdict = "fail";
        c.detail = expect_local ? "local but no weakly initial object"
                                : "weakly initial object but not local";
    }
    c.vacuous = !expect_local && c.verdict == "pass";
    return c;
}

DictionaryCase check_irreducible(const std::string& name, const GaloisCategory& model,
                                 bool expect_irreducible) {
    auto c = make_case("irreducible/" + name, "irreducible <=> weakly terminal object exists");
    bool wt = has_weakly_terminal(*model.category);
    if (wt != expect_irreducible) {
        c.verdict = "fail";
        c.detail = expect_irreducible ? "irreducible but no weakly terminal object"
                                      : "weakly terminal object but not irreducible";
    }
    c.vacuous = !expect_irreducible && c.verdict == "pass";
    return c;
}

// ---- default corpus ----

namespace {

RingPtr ring_zmod(int n) { return build_ring(*presentation_zmod(n)); }
RingPtr ring_gf(int p, int e) { return build_ring(*presentation_gf(p, e)); }
RingPtr ring_quot(int n, std::vector<int> poly) {
    return build_ring(*presentation_quotient(n, std::move(poly)));
}
RingPtr ring_prod(PresentationPtr a, PresentationPtr b) {
    return build_ring(*presentation_product({std::move(a), std::move(b)}));
}

}  // namespace

std::vector<CorpusRing> default_corpus_rings() {
    std::vector<CorpusRing> out;
    for (int n = 1; n <= 30; ++n) out.push_back({"Z/" + std::to_string(n), ring_zmod(n)});
    out.push_back({"F_2", ring_gf(2, 1)});
    out.push_back({"F_3", ring_gf(3, 1)});
    out.push_back({"F_4", ring_gf(2, 2)});
    out.push_back({"F_5", ring_gf(5, 1)});
    out.push_back({"F_8", ring_gf(2, 3)});
    out.push_back({"F_9", ring_gf(3, 2)});
    out.push_back({"F_2[x]/(x^2)", ring_quot(2, {0, 0, 1})});
    out.push_back({"F_2[x]/(x^3)", ring_quot(2, {0, 0, 0, 1})});
    out.push_back({"F_3[x]/(x^2)", ring_quot(3, {0, 0, 1})});
    out.push_back({"GR(4,2)", ring_quot(4, {3, 3, 1})});
    out.push_back({"F_2xF_2", ring_prod(presentation_gf(2, 1), presentation_gf(2, 1))});
    out.push_back({"F_2xF_4", ring_prod(presentation_gf(2, 1), presentation_gf(2, 2))});
    out.push_back({"F_4xF_4", ring_prod(presentation_gf(2, 2), presentation_gf(2, 2))});
    out.push_back({"F_8xF_2", ring_prod(presentation_gf(2, 3), presentation_gf(2, 1))});
    out.push_back({"F_3xF_9", ring_prod(presentation_gf(3, 1), presentation_gf(3, 2))});
    out.push_back({"F_3xF_3", ring_prod(presentation_gf(3, 1), presentation_gf(3, 1))});
    out.push_back(
        {"F_2xF_2[x]/(x^2)",
         ring_prod(presentation_gf(2, 1), presentation_quotient(2, {0, 0, 1}))});
    out.push_back({"Z/4xF_2", ring_prod(presentation_zmod(4), presentation_gf(2, 1))});
    out.push_back({"Z/2xZ/3", ring_prod(presentation_zmod(2), presentation_zmod(3))});
    return out;
}

namespace {

RingPtr corpus_ring(const std::vector<CorpusRing>& rings, const std::string& name) {
    for (const auto& r : rings)
        if (r.name == name) return r.ring;
    throw InvalidInput("corpus ring not found: " + name);
}

// c |-> c * 1 is the unique hom out of Z/n whenever char divides n.
RingHom initial_hom(RingPtr src, RingPtr dst, const std::string& name) {
    RingHom h;
    h.source = std::move(src);
    h.target = std::move(dst);
    for (int c = 0; c < h.source->size(); ++c)
        h.map.push_back(h.target->scale(h.target->one(), static_cast<std::uint64_t>(c)));
    h.name = name;
    auto rep = validate_ring_hom(h);
    if (!rep.ok()) throw InvalidInput("not a ring hom: " + name);
    return h;
}

RingHom mod_quotient(RingPtr src, RingPtr dst, const std::string& name) {
    // Z/n -> Z/m, a -> a mod m
    RingHom h;
    h.source = std::move(src);
    h.target = std::move(dst);
    for (int a = 0; a < h.source->size(); ++a) h.map.push_back(a % h.target->size());
    h.name = name;
    return h;
}

}  // namespace

std::vector<RingHom> default_corpus_homs() {
    auto rings = default_corpus_rings();
    auto R = [&](const std::string& n) { return corpus_ring(rings, n); };
    std::vector<RingHom> out;
    for (const auto& r : rings) {
        auto h = perfection(r.ring);
        h.name = "perfection " + r.name;
        out.push_back(std::move(h));
    }
    for (const char* n : {"Z/6", "F_4", "GR(4,2)"}) {
        auto h = identity_hom(R(n));
        h.name = std::string("id ") + n;
        out.push_back(std::move(h));
    }
    const int quots[][2] = {{4, 2},  {8, 4},  {8, 2},  {9, 3},  {12, 6}, {12, 4}, {12, 3},
                            {6, 3},  {6, 2},  {30, 6}, {27, 3}, {16, 4}, {25, 5}, {18, 6}};
    for (auto [n, m] : quots)
        out.push_back(mod_quotient(R("Z/" + std::to_string(n)), R("Z/" + std::to_string(m)),
                                   "Z/" + std::to_string(n) + "->Z/" + std::to_string(m)));
    out.push_back(initial_hom(R("Z/4"), R("GR(4,2)"), "Z/4->GR(4,2)"));
    out.push_back(initial_hom(R("F_2"), R("F_4"), "F_2->F_4"));
    out.push_back(initial_hom(R("F_2"), R("F_8"), "F_2->F_8"));
    out.push_back(initial_hom(R("F_3"), R("F_9"), "F_3->F_9"));
    out.push_back(initial_hom(R("F_2"), R("F_2[x]/(x^2)"), "F_2->F_2[x]/(x^2)"));
    out.push_back(initial_hom(R("F_3"), R("F_3[x]/(x^2)"), "F_3->F_3[x]/(x^2)"));
    out.push_back(initial_hom(R("F_2"), R("F_2xF_2"), "F_2->F_2xF_2"));
    out.push_back(initial_hom(R("F_2"), R("F_2xF_4"), "F_2->F_2xF_4"));
    out.push_back(initial_hom(R("F_2"), R("F_4xF_4"), "F_2->F_4xF_4"));
    out.push_back(initial_hom(R("F_3"), R("F_3xF_9"), "F_3->F_3xF_9"));
    out.push_back(initial_hom(R("F_2"), R("F_2xF_2[x]/(x^2)"), "F_2->F_2xF_2[x]/(x^2)"));
    out.push_back(initial_hom(R("Z/12"), R("F_4"), "Z/12->F_4"));
    out.push_back(initial_hom(R("Z/4"), R("Z/4xF_2"), "Z/4->Z/4xF_2"));
    for (const char* n : {"F_4", "F_8", "F_9"}) {
        auto h = frobenius(R(n));
        h.name = std::string("frobenius ") + n;
        out.push_back(std::move(h));
    }
    // projections onto local factors of split rings
    for (const char* n : {"F_2xF_4", "F_3xF_9", "Z/6"}) {
        auto dec = local_decomposition(R(n));
        for (size_t i = 0; i < dec.factors.size(); ++i) {
            RingHom h;
            h.source = R(n);
            h.target = dec.factors[i].ring;
            h.map = dec.factors[i].factor_of;
            h.name = std::string("proj ") + n + "#" + std::to_string(i);
            out.push_back(std::move(h));
        }
    }
    return out;
}

std::vector<CycloSpec> default_corpus_models() {
    std::vector<int> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    std::vector<CycloSpec> out;
    for (int m : {1, 3, 4, 5, 8})
        out.push_back({m, primes, {}, "Q(zeta_" + std::to_string(m) + ") over Q"});
    out.push_back({3, primes, {1}, "Z[zeta_3]"});
    out.push_back({4, primes, {1}, "Z[i]"});
    out.push_back({5, primes, {1}, "Z[zeta_5]"});
    out.push_back({8, primes, {1}, "Z[zeta_8]"});
    out.push_back({5, primes, {1, 4}, "Z[(1+sqrt5)/2]"});
    out.push_back({8, primes, {1, 5}, "Z[i] via m=8"});
    out.push_back({8, primes, {1, 7}, "Z[sqrt2]"});
    out.push_back({8, primes, {1, 3}, "Z[sqrt-2]"});
    return out;
}

std::vector<CycloSpec> default_relative_functors() {
    std::vector<CycloSpec> out;
    for (const auto& s : default_corpus_models())
        if (!s.subgroup.empty()) out.push_back(s);
    return out;
}

namespace {

void add_relative_cases(Scorecard& sc, const CycloSpec& spec) {
    auto rel = gal_relative_functor(spec.m, spec.primes, spec.subgroup);
    {
        auto c = make_case("finite/rel/" + spec.name,
                           "integral closures are finite: right fibration, finite fibers");
        auto r = is_right_fibration(rel.functor);
        auto ff = is_finite_fibers(rel.functor);
        if (!r.value || !ff.value) {
            c.verdict = "fail";
            c.detail = !r.value ? "not a right fibration " + ids(r.witness)
                                : "infinite fiber at " + std::to_string(ff.witness_object);
        }
        sc.add(std::move(c));
    }
    {
        auto c = make_case("lifting/rel/" + spec.name,
                           "right fibrations lift specializations");
        auto v = specialization_lifting(rel.functor);
        if (!v.value) {
            c.verdict = "fail";
            c.detail = "no lift, witness " + ids(v.witness);
        }
        sc.add(std::move(c));
    }

    // ramified primes: inertia drops when intersected with the subgroup
    std::vector<int> unramified_objects;
    std::vector<int> ramified;
    for (size_t i = 0; i < spec.primes.size(); ++i) {
        auto sp = cyclotomic_splitting(spec.m, spec.primes[i]);
        std::set<int> h(spec.subgroup.begin(), spec.subgroup.end());
        int kept = 0;
        for (int x : sp.inertia)
            if (h.count(x)) ++kept;
        if (kept == static_cast<int>(sp.inertia.size()))
            unramified_objects.push_back(static_cast<int>(i));
        else
            ramified.push_back(spec.primes[i]);
    }
    unramified_objects.push_back(rel.target.category->object_count() - 1);  // eta

    if (!ramified.empty()) {
        auto c = make_case("etale-counterexample/rel/" + spec.name,
                           "ramification breaks the left fibration property");
        auto l = is_left_fibration(rel.functor);
        if (l.value || l.witness.empty()) {
            c.verdict = "fail";
            c.detail = "expected a witnessed left-fibration failure at a ramified prime";
        }
        sc.add(std::move(c));
    }
    {
        auto c = make_case("etale-localized/rel/" + spec.name,
                           "away from ramification the cover is finite etale");
        auto loc = restrict_to_target_objects(rel.functor, unramified_objects);
        auto k = is_kan_fibration(loc);
        auto ff = is_finite_fibers(loc);
        if (!k.value || !ff.value) {
            c.verdict = "fail";
            c.detail = !k.value ? "not a kan fibration " + ids(k.witness) : "infinite fiber";
        }
        sc.add(std::move(c));
    }
}

void add_soundness_cases(Scorecard& sc) {
    auto model = gal_cyclotomic(4, {2, 3, 5, 7, 11, 13, 17, 19, 23});
    int eta = model.category->object_count() - 1;

    sc.add(check_open_closed("soundness-negatives", model,
                             {{"generic point", {eta}, "closed", false},
                              {"generic point", {eta}, "open", true},
                              {"prime over 2", {0}, "open", false},
                              {"prime over 2", {0}, "closed", true},
                              {"all closed points minus one", [&] {
                                   std::vector<int> v;
                                   for (int i = 1; i < eta; ++i) v.push_back(i);
                                   return v;
                               }(), "open", false}}));

    {
        // interval failure needs a three-step chain; use a chain poset
        FinPoset p;
        p.size = 3;
        p.leq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
        auto chain = poset_as_category(p);
        auto c = make_case("soundness/interval",
                           "ends of a chain without the middle are not locally closed");
        auto v = is_interval({chain, {0, 2}});
        if (v.value || v.witness.empty()) {
            c.verdict = "fail";
            c.detail = "expected a witnessed interval failure";
        }
        sc.add(std::move(c));
    }

    auto expect_false = [&](const std::string& name, const std::string& statement,
                            const Verdict& v) {
        auto c = make_case("soundness/" + name, statement);
        if (v.value || v.witness.empty()) {
            c.verdict = "fail";
            c.detail = "expected a witnessed negative verdict";
        }
        sc.add(std::move(c));
    };

    auto open_inc = full_subcategory_inclusion({model.category, {eta}});
    auto closed_inc = full_subcategory_inclusion({model.category, {0}});
    expect_false("right", "an open immersion is not a right fibration",
                 is_right_fibration(open_inc));
    expect_false("left", "a closed immersion is not a left fibration",
                 is_left_fibration(closed_inc));
    expect_false("kan", "a closed immersion is not a kan fibration",
                 is_kan_fibration(closed_inc));
    expect_false("lifting", "open immersions do not lift specializations",
                 specialization_lifting(open_inc));
    {
        auto c = make_case("soundness/equivalence",
                           "a proper open immersion is not an equivalence");
        auto v = is_equivalence(open_inc);
        if (v.value || v.witness.empty()) {
            c.verdict = "fail";
            c.detail = "expected a witnessed equivalence failure";
        }
        sc.add(std::move(c));
    }
}

}  // namespace

namespace {

void add_ring_cases(Scorecard& sc, const std::vector<CorpusRing>& rings, int level,
                    int required_prime_char) {
    int prime_char_rings = 0;
    int criterion_mismatches = 0;
    for (const auto& r : rings) {
        auto rep = validate_ring(*r.ring);
        if (!rep.ok()) {
            auto c = make_case("validate/ring/" + r.name, "corpus rings are rings");
            c.verdict = "fail";
            c.detail = rep.violations.front().kind;
            sc.add(std::move(c));
            continue;  // fail fast: no checks on an invalid ring
        }
        auto model = gal_finite_ring(r.ring, level);
        {
            auto c = make_case("axioms/ring/" + r.name,
                               "point categories satisfy the Galois-category axioms");
            auto ax = check_galois_axioms(model);
            if (!ax.ok()) {
                c.verdict = "fail";
                c.detail = "axiom failure at object " + std::to_string(ax.witness_object);
            }
            sc.add(std::move(c));
        }
        int nfac = static_cast<int>(local_decomposition(r.ring).factors.size());
        sc.add(check_local("ring/" + r.name, model, nfac == 1));
        sc.add(check_irreducible("ring/" + r.name, model, nfac == 1));

        int ch = r.ring->characteristic();
        if (is_prime(ch)) {
            ++prime_char_rings;
            bool pr = is_perfectly_reduced(*r.ring).value;
            auto fr = frobenius(r.ring);
            std::set<int> image(fr.map.begin(), fr.map.end());
            bool bij = static_cast<int>(image.size()) == r.ring->size();
            if (pr != (is_reduced(*r.ring) && bij)) ++criterion_mismatches;
        }
    }
    {
        auto c = make_case("perfectly-reduced-criterion/corpus",
                           "perfectly reduced <=> reduced with bijective Frobenius");
        c.detail = std::to_string(prime_char_rings) + " prime-characteristic rings";
        if (criterion_mismatches > 0 || prime_char_rings < required_prime_char) {
            c.verdict = "fail";
            c.detail += ", " + std::to_string(criterion_mismatches) + " mismatches";
        }
        sc.add(std::move(c));
    }
}

}  // namespace

Scorecard run_ring_suite(const std::vector<CorpusRing>& rings, int level) {
    Scorecard sc;
    sc.level = level;
    add_ring_cases(sc, rings, level, 0);
    sc.finalize();
    return sc;
}

Scorecard run_suite(int level) {
    Scorecard sc;
    sc.level = level;

    add_ring_cases(sc, default_corpus_rings(), level, 25);

    for (const auto& h : default_corpus_homs()) {
        auto g = gal_functor(h, level);
        sc.add(check_invariance_topologique(g, h));
        sc.add(check_radicial(g, h));
        sc.add(check_finite(g, h));
        sc.add(check_etale(g, h));
        sc.add(check_finite_etale(g, h));
    }

    for (const auto& spec : default_corpus_models()) {
        auto model = gal_cyclotomic(spec.m, spec.primes, spec.subgroup);
        {
            auto c = make_case("axioms/model/" + spec.name,
                               "number-ring models satisfy the Galois-category axioms");
            auto ax = check_galois_axioms(model);
            if (!ax.ok()) {
                c.verdict = "fail";
                c.detail = "axiom failure at object " + std::to_string(ax.witness_object);
            }
            sc.add(std::move(c));
        }
        sc.add(check_local("model/" + spec.name, model, false));
        sc.add(check_irreducible("model/" + spec.name, model, true));

        int eta = model.category->object_count() - 1;
        std::vector<int> closed_points;
        for (int i = 0; i < eta; ++i) closed_points.push_back(i);
        std::vector<LabeledSubset> subsets = {
            {"generic point", {eta}, "open", true},
            {"all closed points", closed_points, "closed", true},
            {"everything", [&] {
                 auto v = closed_points;
                 v.push_back(eta);
                 return v;
             }(), "open", true},
        };
        if (eta > 0) {
            subsets.push_back({"first closed point", {0}, "closed", true});
            subsets.push_back({"point with generic point", {0, eta}, "locally-closed", true});
        }
        sc.add(check_open_closed(spec.name, model, subsets));
    }

    for (const auto& spec : default_relative_functors()) add_relative_cases(sc, spec);

    add_soundness_cases(sc);

    sc.finalize();
    return sc;
}

}  // namespace exo
