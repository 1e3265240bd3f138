/* C interface to the finite Galois-category toolkit.
 *
 * Conventions:
 *  - All structured input and output is JSON text (UTF-8, NUL-terminated).
 *  - Functions return exo_status; on EXO_INVALID the message is available
 *    via exo_last_error() until the next call on the same thread.
 *  - Strings returned through char** are heap-allocated; release them
 *    with exo_free().  Handles are released with their *_release call.
 */

#ifndef EXODROMY_H
#define EXODROMY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    EXO_OK = 0,             /* success */
    EXO_PROPERTY_FALSE = 1, /* the queried property fails; output carries a certificate */
    EXO_INVALID = 2         /* malformed or invalid input; see exo_last_error() */
} exo_status;

/* Message for the most recent failing call on this thread; never NULL. */
const char* exo_last_error(void);

/* Release a string returned through a char** out-parameter. */
void exo_free(char* s);

/* Override the global size caps (objects, morphisms, ring elements).
 * Non-positive values leave the corresponding cap unchanged. */
exo_status exo_set_caps(int max_objects, int max_morphisms, int max_ring_elements);

/* ---- rings (schema ring.v1) ---- */

typedef struct exo_ring exo_ring;

/* Parse {"tables":...} or {"presentation":...}; validates the ring laws. */
exo_status exo_ring_parse(const char* json, exo_ring** out);
void exo_ring_release(exo_ring* r);

/* Normalized tables form of the ring. */
exo_status exo_ring_to_json(const exo_ring* r, char** out_json);

/* Decomposition into local factors with residue fields (decomposition.v1). */
exo_status exo_ring_decompose(const exo_ring* r, char** out_json);

/* Perfect-reducedness (perfect.v1).  EXO_OK when the ring is perfectly
 * reduced, EXO_PROPERTY_FALSE with an equational certificate otherwise. */
exo_status exo_ring_perfect(const exo_ring* r, char** out_json);

/* ---- Galois-category models (schema galmodel.v1) ---- */

typedef struct exo_gal exo_gal;

/* Level-N category of points of a finite ring.  The level must be a
 * multiple of every residue degree; otherwise EXO_INVALID names the
 * required divisor. */
exo_status exo_gal_from_ring(const exo_ring* r, int level, exo_gal** out);

/* Number-ring model inside the m-th cyclotomic field: the subring fixed
 * by the given subgroup of (Z/m)^x (pass count 0 for the full group,
 * i.e. the integers).  Objects are the primes over the listed rational
 * primes plus a generic point. */
exo_status exo_gal_cyclotomic(int m, const int* primes, int prime_count,
                              const int* subgroup, int subgroup_count, exo_gal** out);

void exo_gal_release(exo_gal* g);

exo_status exo_gal_to_json(const exo_gal* g, char** out_json);
exo_status exo_gal_to_dot(const exo_gal* g, char** out_dot);

/* ---- functor classification (schemas functor.v1 / report.v1) ---- */

/* Classify a functor between finite categories: sieve/cosieve/interval
 * (for full subcategory inclusions), left/right/Kan fibration,
 * equivalence, fibers, specialization lifting.  EXO_INVALID with the
 * violated law named when the input is not a functor. */
exo_status exo_classify(const char* functor_json, char** report_json);

/* ---- dictionary suite (schema scorecard.v1) ---- */

/* Run the default suite.  EXO_OK when every case passes,
 * EXO_PROPERTY_FALSE when any case fails; the scorecard is written
 * either way. */
exo_status exo_check_suite(int level, char** scorecard_json);

/* As above over a caller-supplied corpus {"rings":[ring.v1...]}
 * (per-ring checks only). */
exo_status exo_check_corpus(const char* corpus_json, int level, char** scorecard_json);

/* JSON array of the case names of the default suite. */
exo_status exo_check_list(int level, char** names_json);

#ifdef __cplusplus
}
#endif

#endif /* EXODROMY_H */
