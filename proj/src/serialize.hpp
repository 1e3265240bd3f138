#pragma once

// JSON (de)serialization with deterministic field order for every
// public structure, the functor classification report, and DOT export.

#include <json.hpp>

#include "dictionary.hpp"
#include "fibrations.hpp"
#include "fincat.hpp"
#include "finring.hpp"
#include "galmodel.hpp"

namespace exo {

using Json = nlohmann::ordered_json;

// ---- category.v1 ----
Json category_to_json(const FinCategory& c);
CatPtr category_from_json(const Json& j);  // throws InvalidInput

// ---- functor.v1 (source and target inlined) ----
Json functor_to_json(const Functor& f);
Functor functor_from_json(const Json& j);

// ---- ring.v1: {"tables": ...} or {"presentation": ...} ----
Json ring_to_json(const FinCommRing& a);
Json presentation_to_json(const Presentation& p);
PresentationPtr presentation_from_json(const Json& j);
RingPtr ring_from_json(const Json& j);

// ---- ringhom.v1 ----
Json ringhom_to_json(const RingHom& f);
RingHom ringhom_from_json(const Json& j);

// ---- galmodel.v1 ----
Json galmodel_to_json(const GaloisCategory& g);
GaloisCategory galmodel_from_json(const Json& j);

// ---- splitting.v1 ----
Json splitting_to_json(const SplittingDatum& s);

// ---- decomposition / perfect-reducedness results ----
Json decomposition_to_json(const LocalDecomposition& d);
Json perfectly_reduced_to_json(const FinCommRing& a, const PerfectlyReducedResult& r);

// ---- report.v1 ----
struct ClassificationReport {
    // sieve/cosieve/interval apply only when the functor is a full
    // subcategory inclusion; absent (is_inclusion false) otherwise
    bool is_inclusion = false;
    Verdict sieve, cosieve, interval;
    Verdict left, right, kan, lifting;
    EquivalenceVerdict equivalence;
    std::vector<FiberAnalysis> fibers;  // per target object
};

ClassificationReport classify_functor(const Functor& f);
Json report_to_json(const Functor& f, const ClassificationReport& r);

// ---- scorecard.v1 ----
Json scorecard_to_json(const Scorecard& s);

// Corpus override {"rings":[ring.v1...]}: per-ring checks only; rings
// failing validation become failed cases and are not checked further.
Scorecard run_corpus_from_json(const Json& corpus, int level);

// ---- DOT export ----
std::string category_to_dot(const FinCategory& c,
                            const std::vector<std::string>& labels = {});
std::string galmodel_to_dot(const GaloisCategory& g);

}  // namespace exo
