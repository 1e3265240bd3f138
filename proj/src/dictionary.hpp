#pragma once

// The theorem runner: each check pairs a ring-side predicate with a
// category-side classifier and records the outcome as a scorecard case.

#include <string>
#include <vector>

#include "fibrations.hpp"
#include "finring.hpp"
#include "galmodel.hpp"

namespace exo {

struct DictionaryCase {
    std::string name;
    std::string statement;  // the dictionary entry being exercised
    std::string verdict;    // "pass" | "fail" | "skipped"
    bool vacuous = false;   // every asserted implication had a false hypothesis
    std::string detail;     // failure witness or skip reason
    bool passed() const { return verdict == "pass"; }
    bool failed() const { return verdict == "fail"; }
};

struct Scorecard {
    int level = 0;
    std::vector<DictionaryCase> cases;  // sorted by name
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    int non_vacuous_passes = 0;
    bool ok() const { return failed == 0; }
    void add(DictionaryCase c);
    void finalize();  // sorts and recounts
};

// Universal homeomorphism <=> equivalence of point categories.
DictionaryCase check_invariance_topologique(const RingHom& f, int level);
// Radicial <=> every fiber is empty or a single contractible component.
DictionaryCase check_radicial(const RingHom& f, int level);
// Finite ring maps are finite: right fibration with finite fibers.
DictionaryCase check_finite(const RingHom& f, int level);
// Etale <=> left fibration with finite fibers; the converse is gated on
// perfectly reduced source and target.
DictionaryCase check_etale(const RingHom& f, int level);
// Finite etale <=> Kan fibration with finite fibers; same gating.
DictionaryCase check_finite_etale(const RingHom& f, int level);

// Faster variants when the point functor is already built.
DictionaryCase check_invariance_topologique(const GalFunctor& g, const RingHom& f);
DictionaryCase check_radicial(const GalFunctor& g, const RingHom& f);
DictionaryCase check_finite(const GalFunctor& g, const RingHom& f);
DictionaryCase check_etale(const GalFunctor& g, const RingHom& f);
DictionaryCase check_finite_etale(const GalFunctor& g, const RingHom& f);

struct LabeledSubset {
    std::string label;
    std::vector<int> objects;  // model objects, ascending
    std::string kind;          // "open" | "closed" | "locally-closed"
    bool expected = true;
};

// Declared open/closed/locally-closed subsets vs cosieve/sieve/interval.
DictionaryCase check_open_closed(const std::string& name, const GaloisCategory& model,
                                 const std::vector<LabeledSubset>& subsets);

// Local <=> weakly initial object; irreducible <=> weakly terminal.
DictionaryCase check_local(const std::string& name, const GaloisCategory& model,
                           bool expect_local);
DictionaryCase check_irreducible(const std::string& name, const GaloisCategory& model,
                                 bool expect_irreducible);

// ---- default corpus ----

struct CorpusRing {
    std::string name;
    RingPtr ring;
};

std::vector<CorpusRing> default_corpus_rings();
// Homs among corpus rings: perfections, quotients, base extensions,
// diagonals, projections, Frobenii. RingHom::name identifies each.
std::vector<RingHom> default_corpus_homs();

struct CycloSpec {
    int m;
    std::vector<int> primes;
    std::vector<int> subgroup;  // empty = full group
    std::string name;
};

std::vector<CycloSpec> default_corpus_models();
// Subfield inclusions exercised as relative functors.
std::vector<CycloSpec> default_relative_functors();

// Runs every check over the default corpus.
Scorecard run_suite(int level);
// Per-ring checks only, over a caller-supplied corpus.
Scorecard run_ring_suite(const std::vector<CorpusRing>& rings, int level);

}  // namespace exo
