#pragma once

// Finite commutative rings as explicit element tables: construction from
// presentations, decomposition into local factors, Frobenius, the
// equational perfect-reducedness criterion, perfection, and the
// morphism predicates feeding the dictionary (radicial, surjective on
// Spec, universal homeomorphism, etale).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat.hpp"  // Caps, error types

namespace exo {

class FinCommRing;
using RingPtr = std::shared_ptr<const FinCommRing>;

// Elements are ids 0..n-1 with 0 = zero and 1 = one (n >= 2); the zero
// ring has the single element 0.
class FinCommRing {
public:
    FinCommRing(std::vector<int> add, std::vector<int> mul, std::string name);

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int zero() const { return 0; }
    int one() const { return n_ == 1 ? 0 : 1; }
    int neg(int a) const;
    int pow(int a, std::uint64_t k) const;
    // a + a + ... (k times)
    int scale(int a, std::uint64_t k) const;
    // additive order of 1
    int characteristic() const { return characteristic_; }
    bool is_unit(int a) const;
    const std::vector<int>& add_table() const { return add_; }
    const std::vector<int>& mul_table() const { return mul_; }

private:
    int n_;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::string name_;
    int characteristic_;
};

ValidationReport validate_ring(const FinCommRing& a, bool exhaustive_cap_64 = true);

struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<int> map;
    std::string name;
};

ValidationReport validate_ring_hom(const RingHom& f);
RingHom identity_hom(RingPtr a);
RingHom compose_homs(const RingHom& g, const RingHom& f);

// ---- presentations ----

struct Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

// Z/n; (Z/n)[x]/(f) for monic f (covers F_q and Galois rings); finite
// products of presentations.
struct Presentation {
    enum class Kind { Modular, MonicQuotient, Product } kind;
    int modulus = 0;                  // Z/n, or the coefficient modulus
    std::vector<int> poly;            // monic: poly[deg]=1, ascending
    std::vector<PresentationPtr> factors;
};

PresentationPtr presentation_zmod(int n);
PresentationPtr presentation_quotient(int n, std::vector<int> monic_poly);
// F_{p^e} with a default irreducible polynomial (deterministic search).
PresentationPtr presentation_gf(int p, int e);
PresentationPtr presentation_product(std::vector<PresentationPtr> factors);

RingPtr build_ring(const Presentation& p);

// Element order matches the presentation: Z/n ascending; quotients in
// lexicographic coefficient order (constant coefficient fastest);
// products lexicographic with the first factor slowest.

// ---- structure ----

struct LocalFactor {
    int idempotent;                  // primitive idempotent in the parent
    RingPtr ring;                    // the factor eA with identity e
    std::vector<int> parent_of;      // factor element -> parent element
    std::vector<int> factor_of;      // parent element -> factor element (e*a)
    std::vector<int> maximal_ideal;  // factor element ids
    RingPtr residue_field;
    std::vector<int> residue_of;     // factor element -> residue element
    int residue_char = 0;            // p
    int residue_degree = 0;          // e with |kappa| = p^e
};

struct LocalDecomposition {
    RingPtr ring;
    std::vector<LocalFactor> factors;
};

LocalDecomposition local_decomposition(RingPtr a);

bool is_reduced(const FinCommRing& a);
std::vector<int> nilradical(const FinCommRing& a);

// x -> x^p; characteristic must be prime.
RingHom frobenius(RingPtr a);
bool is_prime(int n);

struct PerfectlyReducedResult {
    bool value = true;
    // clause, f, g: "cusp" means f^2=g^3 without a unique h;
    // "p-power" means f^p = p^p g without a unique h
    std::string clause;
    int p = 0;
    int f = -1, g = -1;
    int solutions = 0;
};

PerfectlyReducedResult is_perfectly_reduced(const FinCommRing& a);

// Quotient map A -> A/nil; the target is perfectly reduced.
RingHom perfection(RingPtr a);

// Quotient by an ideal given as an element subset.
RingHom quotient_by_ideal(RingPtr a, const std::vector<int>& ideal);

bool is_radicial(const RingHom& f);
bool is_spec_surjective(const RingHom& f);
bool is_universal_homeomorphism(const RingHom& f);
bool is_etale(const RingHom& f);

}  // namespace exo
