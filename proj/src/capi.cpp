#include "exodromy.h"

#include <cstring>
#include <string>

#include "serialize.hpp"

using namespace exo;

struct exo_ring {
    RingPtr ring;
};

struct exo_gal {
    GaloisCategory model;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

exo_status fail(const std::string& message) {
    g_last_error = message;
    return EXO_INVALID;
}

template <typename Fn>
exo_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return fail(e.what());
    } catch (...) {
        return fail("unknown error");
    }
}

Json parse_json(const char* text, const char* what) {
    if (text == nullptr) throw InvalidInput(std::string(what) + ": null input");
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput(std::string(what) + ": malformed JSON");
    return j;
}

}  // namespace

extern "C" {

const char* exo_last_error(void) { return g_last_error.c_str(); }

void exo_free(char* s) { std::free(s); }

exo_status exo_set_caps(int max_objects, int max_morphisms, int max_ring_elements) {
    return guarded([&] {
        if (max_objects > 0) caps().max_objects = max_objects;
        if (max_morphisms > 0) caps().max_morphisms = max_morphisms;
        if (max_ring_elements > 0) caps().max_ring_elements = max_ring_elements;
        return EXO_OK;
    });
}

exo_status exo_ring_parse(const char* json, exo_ring** out) {
    return guarded([&] {
        if (out == nullptr) throw InvalidInput("ring: null output handle");
        auto r = ring_from_json(parse_json(json, "ring"));
        *out = new exo_ring{std::move(r)};
        return EXO_OK;
    });
}

void exo_ring_release(exo_ring* r) { delete r; }

exo_status exo_ring_to_json(const exo_ring* r, char** out_json) {
    return guarded([&] {
        if (r == nullptr || out_json == nullptr) throw InvalidInput("ring: null argument");
        *out_json = dup_string(ring_to_json(*r->ring).dump(2));
        return EXO_OK;
    });
}

exo_status exo_ring_decompose(const exo_ring* r, char** out_json) {
    return guarded([&] {
        if (r == nullptr || out_json == nullptr) throw InvalidInput("ring: null argument");
        *out_json = dup_string(decomposition_to_json(local_decomposition(r->ring)).dump(2));
        return EXO_OK;
    });
}

exo_status exo_ring_perfect(const exo_ring* r, char** out_json) {
    return guarded([&] {
        if (r == nullptr || out_json == nullptr) throw InvalidInput("ring: null argument");
        auto result = is_perfectly_reduced(*r->ring);
        *out_json = dup_string(perfectly_reduced_to_json(*r->ring, result).dump(2));
        return result.value ? EXO_OK : EXO_PROPERTY_FALSE;
    });
}

exo_status exo_gal_from_ring(const exo_ring* r, int level, exo_gal** out) {
    return guarded([&] {
        if (r == nullptr || out == nullptr) throw InvalidInput("gal: null argument");
        if (level < 1) throw InvalidInput("gal: level must be >= 1");
        auto dec = local_decomposition(r->ring);
        for (const auto& f : dec.factors)
            if (level % f.residue_degree != 0)
                throw InvalidInput("gal: level must be divisible by residue degree " +
                                   std::to_string(f.residue_degree) + " of ring " +
                                   r->ring->name());
        *out = new exo_gal{gal_finite_ring(r->ring, level)};
        return EXO_OK;
    });
}

exo_status exo_gal_cyclotomic(int m, const int* primes, int prime_count,
                              const int* subgroup, int subgroup_count, exo_gal** out) {
    return guarded([&] {
        if (out == nullptr) throw InvalidInput("gal: null output handle");
        if (m < 1) throw InvalidInput("gal: cyclotomic modulus must be >= 1");
        if (prime_count < 0 || (prime_count > 0 && primes == nullptr))
            throw InvalidInput("gal: bad prime list");
        std::vector<int> ps(primes, primes + prime_count);
        for (int p : ps)
            if (p < 2 || !is_prime(p))
                throw InvalidInput("gal: " + std::to_string(p) + " is not prime");
        std::vector<int> sub;
        if (subgroup_count > 0) {
            if (subgroup == nullptr) throw InvalidInput("gal: bad subgroup list");
            sub.assign(subgroup, subgroup + subgroup_count);
        }
        *out = new exo_gal{gal_cyclotomic(m, ps, sub)};
        return EXO_OK;
    });
}

void exo_gal_release(exo_gal* g) { delete g; }

exo_status exo_gal_to_json(const exo_gal* g, char** out_json) {
    return guarded([&] {
        if (g == nullptr || out_json == nullptr) throw InvalidInput("gal: null argument");
        *out_json = dup_string(galmodel_to_json(g->model).dump(2));
        return EXO_OK;
    });
}

exo_status exo_gal_to_dot(const exo_gal* g, char** out_dot) {
    return guarded([&] {
        if (g == nullptr || out_dot == nullptr) throw InvalidInput("gal: null argument");
        *out_dot = dup_string(galmodel_to_dot(g->model));
        return EXO_OK;
    });
}

exo_status exo_classify(const char* functor_json, char** report_json) {
    return guarded([&] {
        if (report_json == nullptr) throw InvalidInput("classify: null output");
        auto f = functor_from_json(parse_json(functor_json, "classify"));
        auto report = validate_functor(f);
        if (!report.ok())
            throw InvalidInput("classify: not a functor: " + report.violations.front().kind +
                               " — " + report.violations.front().detail);
        auto r = classify_functor(f);
        *report_json = dup_string(report_to_json(f, r).dump(2));
        return EXO_OK;
    });
}

exo_status exo_check_suite(int level, char** scorecard_json) {
    return guarded([&] {
        if (scorecard_json == nullptr) throw InvalidInput("check: null output");
        if (level < 1) throw InvalidInput("check: level must be >= 1");
        auto sc = run_suite(level);
        *scorecard_json = dup_string(scorecard_to_json(sc).dump(2));
        return sc.ok() ? EXO_OK : EXO_PROPERTY_FALSE;
    });
}

exo_status exo_check_corpus(const char* corpus_json, int level, char** scorecard_json) {
    return guarded([&] {
        if (scorecard_json == nullptr) throw InvalidInput("check: null output");
        if (level < 1) throw InvalidInput("check: level must be >= 1");
        auto sc = run_corpus_from_json(parse_json(corpus_json, "corpus"), level);
        *scorecard_json = dup_string(scorecard_to_json(sc).dump(2));
        return sc.ok() ? EXO_OK : EXO_PROPERTY_FALSE;
    });
}

exo_status exo_check_list(int level, char** names_json) {
    return guarded([&] {
        if (names_json == nullptr) throw InvalidInput("check: null output");
        if (level < 1) throw InvalidInput("check: level must be >= 1");
        auto sc = run_suite(level);
        Json names = Json::array();
        for (const auto& c : sc.cases) names.push_back(c.name);
        *names_json = dup_string(names.dump(2));
        return EXO_OK;
    });
}

}  // extern "C"
