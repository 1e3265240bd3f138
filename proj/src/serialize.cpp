#include "serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace exo {

namespace {

int require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidInput(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<int> int_vector(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InvalidInput(std::string("missing or non-array field '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw InvalidInput(std::string("non-integer entry in '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

// {"0": v0, "1": v1, ...} -> dense vector of the given length
std::vector<int> int_map_vector(const Json& j, const char* key, int length) {
    if (!j.contains(key) || !j[key].is_object())
        throw InvalidInput(std::string("missing or non-object field '") + key + "'");
    std::vector<int> out(static_cast<size_t>(length), -1);
    for (const auto& [k, v] : j[key].items()) {
        int idx;
        try {
            idx = std::stoi(k);
        } catch (...) {
            throw InvalidInput(std::string("non-numeric key in '") + key + "'");
        }
        if (idx < 0 || idx >= length || !v.is_number_integer())
            throw InvalidInput(std::string("bad entry in '") + key + "'");
        out[static_cast<size_t>(idx)] = v.get<int>();
    }
    for (int v : out)
        if (v < 0) throw InvalidInput(std::string("incomplete map in '") + key + "'");
    return out;
}

Json vector_as_int_map(const std::vector<int>& v) {
    Json out = Json::object();
    for (size_t i = 0; i < v.size(); ++i) out[std::to_string(i)] = v[i];
    return out;
}

Json witness_json(const std::vector<int>& w) { return Json(w); }

}  // namespace

// ---- category.v1 ----

Json category_to_json(const FinCategory& c) {
    Json j;
    j["schema"] = "category.v1";
    Json objects = Json::array();
    for (int x = 0; x < c.object_count(); ++x) objects.push_back(x);
    j["objects"] = std::move(objects);
    Json morphisms = Json::array();
    for (const auto& m : c.morphisms())
        morphisms.push_back(Json{{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
    j["morphisms"] = std::move(morphisms);
    j["identities"] = vector_as_int_map(c.identities());
    Json composition = Json::array();
    for (int g = 0; g < c.morphism_count(); ++g)
        for (int f = 0; f < c.morphism_count(); ++f) {
            int gf = c.compose(g, f);
            if (gf >= 0) composition.push_back(Json::array({g, f, gf}));
        }
    j["composition"] = std::move(composition);
    return j;
}

CatPtr category_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("category: not a JSON object");
    auto objects = int_vector(j, "objects");
    int n = static_cast<int>(objects.size());
    for (int i = 0; i < n; ++i)
        if (objects[static_cast<size_t>(i)] != i)
            throw InvalidInput("category: objects must be 0..n-1");
    if (!j.contains("morphisms") || !j["morphisms"].is_array())
        throw InvalidInput("category: missing morphisms");
    std::vector<Morphism> morphisms;
    for (const auto& m : j["morphisms"]) {
        Morphism mor{require_int(m, "id"), require_int(m, "src"), require_int(m, "dst")};
        if (mor.id != static_cast<int>(morphisms.size()))
            throw InvalidInput("category: morphism ids must be dense and ascending");
        morphisms.push_back(mor);
    }
    auto identities = int_map_vector(j, "identities", n);
    if (!j.contains("composition") || !j["composition"].is_array())
        throw InvalidInput("category: missing composition");
    std::vector<std::array<int, 3>> composites;
    for (const auto& t : j["composition"]) {
        if (!t.is_array() || t.size() != 3)
            throw InvalidInput("category: composition entries must be [g,f,gf]");
        composites.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return make_category(n, std::move(morphisms), std::move(identities), composites);
}

// ---- functor.v1 ----

Json functor_to_json(const Functor& f) {
    Json j;
    j["schema"] = "functor.v1";
    j["source"] = category_to_json(*f.source);
    j["target"] = category_to_json(*f.target);
    j["on_objects"] = vector_as_int_map(f.on_objects);
    j["on_morphisms"] = vector_as_int_map(f.on_morphisms);
    return j;
}

Functor functor_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("functor: not a JSON object");
    if (!j.contains("source") || !j.contains("target"))
        throw InvalidInput("functor: missing source or target category");
    Functor f;
    f.source = category_from_json(j["source"]);
    f.target = category_from_json(j["target"]);
    f.on_objects = int_map_vector(j, "on_objects", f.source->object_count());
    f.on_morphisms = int_map_vector(j, "on_morphisms", f.source->morphism_count());
    for (int x : f.on_objects)
        if (x >= f.target->object_count()) throw InvalidInput("functor: object image out of range");
    for (int m : f.on_morphisms)
        if (m >= f.target->morphism_count())
            throw InvalidInput("functor: morphism image out of range");
    return f;
}

// ---- ring.v1 ----

Json ring_to_json(const FinCommRing& a) {
    Json j;
    j["schema"] = "ring.v1";
    j["name"] = a.name();
    int n = a.size();
    Json add = Json::array(), mul = Json::array();
    for (int x = 0; x < n; ++x) {
        Json ra = Json::array(), rm = Json::array();
        for (int y = 0; y < n; ++y) {
            ra.push_back(a.add(x, y));
            rm.push_back(a.mul(x, y));
        }
        add.push_back(std::move(ra));
        mul.push_back(std::move(rm));
    }
    j["tables"] = Json{{"add", std::move(add)}, {"mul", std::move(mul)}};
    return j;
}

Json presentation_to_json(const Presentation& p) {
    Json j;
    switch (p.kind) {
        case Presentation::Kind::Modular:
            j["kind"] = "zmod";
            j["modulus"] = p.modulus;
            break;
        case Presentation::Kind::MonicQuotient:
            j["kind"] = "quotient";
            j["modulus"] = p.modulus;
            j["poly"] = p.poly;
            break;
        case Presentation::Kind::Product: {
            j["kind"] = "product";
            Json factors = Json::array();
            for (const auto& f : p.factors) factors.push_back(presentation_to_json(*f));
            j["factors"] = std::move(factors);
            break;
        }
    }
    return j;
}

PresentationPtr presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidInput("presentation: missing kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "zmod") return presentation_zmod(require_int(j, "modulus"));
    if (kind == "quotient")
        return presentation_quotient(require_int(j, "modulus"), int_vector(j, "poly"));
    if (kind == "gf") return presentation_gf(require_int(j, "p"), require_int(j, "e"));
    if (kind == "product") {
        if (!j.contains("factors") || !j["factors"].is_array())
            throw InvalidInput("presentation: product needs factors");
        std::vector<PresentationPtr> factors;
        for (const auto& f : j["factors"]) factors.push_back(presentation_from_json(f));
        return presentation_product(std::move(factors));
    }
    throw InvalidInput("presentation: unknown kind '" + kind + "'");
}

RingPtr ring_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("ring: not a JSON object");
    std::string name = j.contains("name") && j["name"].is_string()
                           ? j["name"].get<std::string>()
                           : std::string("ring");
    if (j.contains("presentation")) {
        auto p = presentation_from_json(j["presentation"]);
        auto r = build_ring(*p);
        if (name != "ring") r = std::make_shared<FinCommRing>(r->add_table(), r->mul_table(), name);
        return r;
    }
    if (!j.contains("tables") || !j["tables"].is_object())
        throw InvalidInput("ring: need 'tables' or 'presentation'");
    const Json& t = j["tables"];
    if (!t.contains("add") || !t.contains("mul"))
        throw InvalidInput("ring: tables need 'add' and 'mul'");
    auto flatten = [](const Json& rows, const char* what) {
        if (!rows.is_array()) throw InvalidInput(std::string("ring: bad ") + what + " table");
        size_t n = rows.size();
        std::vector<int> out;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != n)
                throw InvalidInput(std::string("ring: non-square ") + what + " table");
            for (const auto& v : row) {
                if (!v.is_number_integer() || v.get<int>() < 0 ||
                    v.get<int>() >= static_cast<int>(n))
                    throw InvalidInput(std::string("ring: out-of-range entry in ") + what);
                out.push_back(v.get<int>());
            }
        }
        return out;
    };
    auto add = flatten(t["add"], "add");
    auto mul = flatten(t["mul"], "mul");
    if (add.size() != mul.size()) throw InvalidInput("ring: table sizes differ");
    auto r = std::make_shared<FinCommRing>(std::move(add), std::move(mul), name);
    auto report = validate_ring(*r);
    if (!report.ok())
        throw InvalidInput("ring: " + report.violations.front().kind + " — " +
                           report.violations.front().detail);
    return r;
}

// ---- ringhom.v1 ----

Json ringhom_to_json(const RingHom& f) {
    Json j;
    j["schema"] = "ringhom.v1";
    j["name"] = f.name;
    j["source"] = ring_to_json(*f.source);
    j["target"] = ring_to_json(*f.target);
    j["map"] = f.map;
    return j;
}

RingHom ringhom_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target"))
        throw InvalidInput("ringhom: missing source or target ring");
    RingHom f;
    f.source = ring_from_json(j["source"]);
    f.target = ring_from_json(j["target"]);
    f.map = int_vector(j, "map");
    f.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                         : std::string("hom");
    auto report = validate_ring_hom(f);
    if (!report.ok())
        throw InvalidInput("ringhom: " + report.violations.front().kind + " — " +
                           report.violations.front().detail);
    return f;
}

// ---- galmodel.v1 ----

Json galmodel_to_json(const GaloisCategory& g) {
    Json j;
    j["schema"] = "galmodel.v1";
    j["level"] = g.level;
    j["modulus"] = g.modulus;
    j["group"] = g.group;
    j["category"] = category_to_json(*g.category);
    j["object_labels"] = g.object_labels;
    j["zariski"] = category_to_json(*g.zariski_category);
    j["zariski_labels"] = g.zariski_labels;
    j["projection"] = Json{{"on_objects", g.projection.on_objects},
                           {"on_morphisms", g.projection.on_morphisms}};
    return j;
}

GaloisCategory galmodel_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("category") || !j.contains("zariski") ||
        !j.contains("projection"))
        throw InvalidInput("galmodel: missing category, zariski, or projection");
    GaloisCategory g;
    g.level = j.contains("level") ? require_int(j, "level") : 0;
    g.modulus = j.contains("modulus") ? require_int(j, "modulus") : 0;
    if (j.contains("group")) g.group = int_vector(j, "group");
    g.category = category_from_json(j["category"]);
    g.zariski_category = category_from_json(j["zariski"]);
    int zn = g.zariski_category->object_count();
    g.zariski.size = zn;
    g.zariski.leq.assign(static_cast<size_t>(zn) * zn, 0);
    for (int a = 0; a < zn; ++a)
        for (int b = 0; b < zn; ++b)
            if (!g.zariski_category->hom(a, b).empty())
                g.zariski.leq[static_cast<size_t>(a) * zn + b] = 1;
    auto vr = validate_poset(g.zariski);
    if (!vr.ok()) throw InvalidInput("galmodel: zariski category is not a poset");
    g.projection.source = g.category;
    g.projection.target = g.zariski_category;
    g.projection.on_objects = int_vector(j["projection"], "on_objects");
    g.projection.on_morphisms = int_vector(j["projection"], "on_morphisms");
    auto fr = validate_functor(g.projection);
    if (!fr.ok()) throw InvalidInput("galmodel: projection is not a functor");
    if (j.contains("object_labels"))
        g.object_labels = j["object_labels"].get<std::vector<std::string>>();
    if (j.contains("zariski_labels"))
        g.zariski_labels = j["zariski_labels"].get<std::vector<std::string>>();
    return g;
}

// ---- splitting.v1 ----

Json splitting_to_json(const SplittingDatum& s) {
    Json j;
    j["schema"] = "splitting.v1";
    j["m"] = s.m;
    j["p"] = s.p;
    j["inertia"] = s.inertia;
    j["decomposition"] = s.decomposition;
    j["ramification"] = s.ramification;
    j["residue_degree"] = s.residue_degree;
    j["prime_count"] = s.prime_count;
    return j;
}

// ---- structure results ----

Json decomposition_to_json(const LocalDecomposition& d) {
    Json j;
    j["schema"] = "decomposition.v1";
    j["ring"] = d.ring->name();
    j["size"] = d.ring->size();
    j["local_factor_count"] = static_cast<int>(d.factors.size());
    Json factors = Json::array();
    for (const auto& f : d.factors) {
        factors.push_back(Json{{"idempotent", f.idempotent},
                               {"size", f.ring->size()},
                               {"maximal_ideal_size", static_cast<int>(f.maximal_ideal.size())},
                               {"residue_char", f.residue_char},
                               {"residue_degree", f.residue_degree},
                               {"residue_field_size", f.residue_field->size()}});
    }
    j["factors"] = std::move(factors);
    return j;
}

Json perfectly_reduced_to_json(const FinCommRing& a, const PerfectlyReducedResult& r) {
    Json j;
    j["schema"] = "perfect.v1";
    j["ring"] = a.name();
    j["value"] = r.value;
    if (r.value) {
        j["certificate"] = nullptr;
    } else {
        j["certificate"] = Json{{"clause", r.clause},
                                {"p", r.p},
                                {"f", r.f},
                                {"g", r.g},
                                {"solutions", r.solutions}};
    }
    return j;
}

// ---- report.v1 ----

ClassificationReport classify_functor(const Functor& f) {
    ClassificationReport r;
    // full subcategory inclusion: injective on objects and bijective on
    // every hom-set into the image
    std::set<int> image(f.on_objects.begin(), f.on_objects.end());
    bool inclusion = static_cast<int>(image.size()) ==
                     static_cast<int>(f.on_objects.size());
    if (inclusion) {
        std::set<int> mor_image(f.on_morphisms.begin(), f.on_morphisms.end());
        inclusion = mor_image.size() == f.on_morphisms.size();
    }
    if (inclusion) {
        for (int x = 0; x < f.source->object_count() && inclusion; ++x)
            for (int y = 0; y < f.source->object_count() && inclusion; ++y)
                if (f.source->hom(x, y).size() !=
                    f.target->hom(f.on_objects[static_cast<size_t>(x)],
                                  f.on_objects[static_cast<size_t>(y)])
                        .size())
                    inclusion = false;
    }
    r.is_inclusion = inclusion;
    if (inclusion) {
        std::vector<int> objs(image.begin(), image.end());
        FullSubcategory s{f.target, objs};
        r.sieve = is_sieve(s);
        r.cosieve = is_cosieve(s);
        r.interval = is_interval(s);
    }
    r.right = is_right_fibration(f);
    r.left = is_left_fibration(f);
    r.kan = is_kan_fibration(f);
    r.lifting = specialization_lifting(f);
    r.equivalence = is_equivalence(f);
    for (int d = 0; d < f.target->object_count(); ++d)
        r.fibers.push_back(analyze_fiber(f, d));
    return r;
}

Json report_to_json(const Functor& f, const ClassificationReport& r) {
    Json j;
    j["schema"] = "report.v1";
    j["functor"] = functor_to_json(f);
    Json witnesses = Json::object();
    auto put = [&](const char* key, const Verdict& v, bool applicable) {
        if (!applicable) {
            j[key] = nullptr;
            return;
        }
        j[key] = v.value;
        if (!v.value) witnesses[key] = witness_json(v.witness);
    };
    put("sieve", r.sieve, r.is_inclusion);
    put("cosieve", r.cosieve, r.is_inclusion);
    put("interval", r.interval, r.is_inclusion);
    put("left", r.left, true);
    put("right", r.right, true);
    put("kan", r.kan, true);
    j["equivalence"] = r.equivalence.value;
    if (!r.equivalence.value)
        witnesses["equivalence"] =
            Json{{"reason", r.equivalence.reason}, {"ids", r.equivalence.witness}};
    Json fibers = Json::object();
    for (size_t d = 0; d < r.fibers.size(); ++d) {
        const auto& fa = r.fibers[d];
        if (fa.components_contractible)
            fibers[std::to_string(d)] = fa.size;
        else
            fibers[std::to_string(d)] = Json{{"nonfinite", witness_json(fa.witness)}};
    }
    j["fibers"] = std::move(fibers);
    put("lifting", r.lifting, true);
    j["witnesses"] = std::move(witnesses);
    return j;
}

// ---- scorecard.v1 ----

Json scorecard_to_json(const Scorecard& s) {
    Json j;
    j["schema"] = "scorecard.v1";
    j["level"] = s.level;
    j["summary"] = Json{{"total", static_cast<int>(s.cases.size())},
                        {"passed", s.passed},
                        {"failed", s.failed},
                        {"skipped", s.skipped},
                        {"non_vacuous_passes", s.non_vacuous_passes}};
    Json cases = Json::array();
    for (const auto& c : s.cases)
        cases.push_back(Json{{"name", c.name},
                             {"statement", c.statement},
                             {"verdict", c.verdict},
                             {"vacuous", c.vacuous},
                             {"detail", c.detail}});
    j["cases"] = std::move(cases);
    return j;
}

Scorecard run_corpus_from_json(const Json& corpus, int level) {
    if (!corpus.is_object() || !corpus.contains("rings") || !corpus["rings"].is_array())
        throw InvalidInput("corpus: need an object with a 'rings' array");
    std::vector<CorpusRing> rings;
    std::vector<DictionaryCase> broken;
    int index = 0;
    for (const auto& rj : corpus["rings"]) {
        std::string name = rj.is_object() && rj.contains("name") && rj["name"].is_string()
                               ? rj["name"].get<std::string>()
                               : "#" + std::to_string(index);
        try {
            rings.push_back({name, ring_from_json(rj)});
        } catch (const std::exception& e) {
            DictionaryCase c;
            c.name = "validate/ring/" + name;
            c.statement = "corpus rings are rings";
            c.verdict = "fail";
            c.detail = e.what();
            broken.push_back(std::move(c));
        }
        ++index;
    }
    auto sc = run_ring_suite(rings, level);
    for (auto& c : broken) sc.add(std::move(c));
    sc.finalize();
    return sc;
}

// ---- DOT ----

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}
}  // namespace

std::string category_to_dot(const FinCategory& c, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "digraph category {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int x = 0; x < c.object_count(); ++x) {
        std::string name = x < static_cast<int>(labels.size())
                               ? labels[static_cast<size_t>(x)]
                               : "x" + std::to_string(x);
        int autos = 0;
        for (int m : c.hom(x, x))
            if (c.is_iso(m)) ++autos;
        os << "  o" << x << " [label=\"" << dot_escape(name) << "\\nAut order " << autos
           << "\"];\n";
    }
    for (int x = 0; x < c.object_count(); ++x)
        for (int y = 0; y < c.object_count(); ++y) {
            if (x == y) continue;
            size_t k = c.hom(x, y).size();
            if (k > 0) os << "  o" << x << " -> o" << y << " [label=\"" << k << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

std::string galmodel_to_dot(const GaloisCategory& g) {
    return category_to_dot(*g.category, g.object_labels);
}

}  // namespace exo
