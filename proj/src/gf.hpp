#pragma once

// On-demand arithmetic in GF(p^n) without materializing tables.
// Elements are polynomials over F_p of degree < n modulo a fixed
// irreducible, packed into a u64 as base-p digits (constant digit
// first), so p^n must fit in 64 bits.

#include <cstdint>
#include <vector>

#include "fincat.hpp"  // InvalidInput

namespace exo {

class GF {
public:
    using Elem = std::uint64_t;

    // Deterministic: the first monic irreducible of degree n in the
    // base-p counting order.
    GF(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::uint64_t order() const { return order_; }  // p^n

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(int c) const;  // prime-subfield element c mod p
    Elem x() const { return n_ == 1 ? from_int(0) : static_cast<Elem>(p_); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t k) const;
    Elem frobenius(Elem a) const { return pow(a, static_cast<std::uint64_t>(p_)); }

    // A generator of the multiplicative group.
    Elem generator() const;

    // All p^e elements fixed by frobenius^e; requires e | n and p^e small.
    std::vector<Elem> subfield(int e) const;

    // Evaluate a polynomial with coefficients in 0..p-1 (ascending).
    Elem eval(const std::vector<int>& poly, Elem at) const;

private:
    int p_;
    int n_;
    std::vector<int> modulus_;  // ascending, monic, size n+1
    std::uint64_t order_;
    mutable Elem generator_ = 0;  // cached

    std::vector<int> unpack(Elem a) const;
    Elem pack(const std::vector<int>& c) const;
};

// Shared per-process instance (construction involves polynomial and
// integer factoring searches worth caching).
const GF& gf_cache(int p, int n);

// Miller-Rabin, deterministic for u64.
bool is_prime_u64(std::uint64_t n);
// Prime factorization by Pollard rho (ascending, with multiplicity).
std::vector<std::uint64_t> factorize_u64(std::uint64_t n);

}  // namespace exo
