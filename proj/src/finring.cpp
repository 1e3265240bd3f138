#include "finring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace exo {

namespace {

int table_at(const std::vector<int>& t, int n, int a, int b) {
    return t[static_cast<size_t>(a) * n + b];
}

// Relabel elements so that zero gets id 0 and one gets id 1.
void normalize_tables(std::vector<int>& add, std::vector<int>& mul, int zero, int one,
                      std::vector<int>* perm_out = nullptr) {
    const int n = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(add.size())))));
    // perm: old id -> new id; zero->0, one->1, rest in ascending old id
    std::vector<int> perm(n, -1);
    perm[zero] = 0;
    if (one != zero) perm[one] = 1;
    int next = (one != zero) ? 2 : 1;
    for (int i = 0; i < n; ++i)
        if (perm[i] < 0) perm[i] = next++;
    std::vector<int> nadd(add.size()), nmul(mul.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            nadd[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[table_at(add, n, a, b)];
            nmul[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[table_at(mul, n, a, b)];
        }
    add = std::move(nadd);
    mul = std::move(nmul);
    if (perm_out) *perm_out = perm;
}

}  // namespace

FinCommRing::FinCommRing(std::vector<int> add, std::vector<int> mul, std::string name)
    : add_(std::move(add)), mul_(std::move(mul)), name_(std::move(name)) {
    n_ = static_cast<int>(std::max<size_t>(1, static_cast<size_t>(std::sqrt(add_.size() + 0.5))));
    if (static_cast<size_t>(n_) * n_ != add_.size() || add_.size() != mul_.size())
        throw InvalidInput("ring tables must be square and of equal size");
    if (n_ > caps().max_ring_elements) throw CapExceeded("ring exceeds element cap");
    // characteristic: additive order of 1
    characteristic_ = 1;
    int acc = one();
    while (acc != zero()) {
        acc = this->add(acc, one());
        ++characteristic_;
        if (characteristic_ > n_) throw InvalidInput("additive order of 1 exceeds ring size");
    }
    if (n_ == 1) characteristic_ = 1;
}

int FinCommRing::neg(int a) const {
    for (int b = 0; b < n_; ++b)
        if (add(a, b) == zero()) return b;
    throw InvalidInput("element has no additive inverse");
}

int FinCommRing::pow(int a, std::uint64_t k) const {
    int r = one();
    int base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int FinCommRing::scale(int a, std::uint64_t k) const {
    int r = zero();
    int base = a;
    while (k) {
        if (k & 1) r = add(r, base);
        base = add(base, base);
        k >>= 1;
    }
    return r;
}

bool FinCommRing::is_unit(int a) const {
    for (int b = 0; b < n_; ++b)
        if (mul(a, b) == one()) return true;
    return false;
}

ValidationReport validate_ring(const FinCommRing& a, bool exhaustive_cap_64) {
    ValidationReport rep;
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        if (a.add(x, a.zero()) != x) rep.violations.push_back({"additive-identity", {x}, ""});
        if (a.mul(x, a.one()) != x) rep.violations.push_back({"multiplicative-identity", {x}, ""});
        bool has_neg = false;
        for (int y = 0; y < n; ++y)
            if (a.add(x, y) == a.zero()) has_neg = true;
        if (!has_neg) rep.violations.push_back({"no-additive-inverse", {x}, ""});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (a.add(x, y) != a.add(y, x)) rep.violations.push_back({"add-not-commutative", {x, y}, ""});
            if (a.mul(x, y) != a.mul(y, x)) rep.violations.push_back({"mul-not-commutative", {x, y}, ""});
        }
    int step = (exhaustive_cap_64 && n > 64) ? std::max(1, n / 17) : 1;
    for (int x = 0; x < n; x += (n > 64 ? step : 1))
        for (int y = 0; y < n; y += (n > 64 ? step : 1))
            for (int z = 0; z < n; z += (n > 64 ? step : 1)) {
                if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z)))
                    rep.violations.push_back({"add-not-associative", {x, y, z}, ""});
                if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)))
                    rep.violations.push_back({"mul-not-associative", {x, y, z}, ""});
                if (a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)))
                    rep.violations.push_back({"not-distributive", {x, y, z}, ""});
            }
    return rep;
}

ValidationReport validate_ring_hom(const RingHom& f) {
    ValidationReport rep;
    const auto& s = *f.source;
    const auto& t = *f.target;
    if (static_cast<int>(f.map.size()) != s.size()) {
        rep.violations.push_back({"hom-map-wrong-size", {}, ""});
        return rep;
    }
    if (f.map[s.zero()] != t.zero()) rep.violations.push_back({"zero-not-preserved", {}, ""});
    if (f.map[s.one()] != t.one()) rep.violations.push_back({"one-not-preserved", {}, ""});
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            if (f.map[s.add(x, y)] != t.add(f.map[x], f.map[y]))
                rep.violations.push_back({"addition-not-preserved", {x, y}, ""});
            if (f.map[s.mul(x, y)] != t.mul(f.map[x], f.map[y]))
                rep.violations.push_back({"multiplication-not-preserved", {x, y}, ""});
        }
    return rep;
}

RingHom identity_hom(RingPtr a) {
    RingHom f;
    f.source = a;
    f.target = a;
    f.map.resize(a->size());
    std::iota(f.map.begin(), f.map.end(), 0);
    f.name = "id_" + a->name();
    return f;
}

RingHom compose_homs(const RingHom& g, const RingHom& f) {
    RingHom h;
    h.source = f.source;
    h.target = g.target;
    for (int v : f.map) h.map.push_back(g.map.at(v));
    h.name = g.name + "∘" + f.name;
    return h;
}

// ---- presentations ----

PresentationPtr presentation_zmod(int n) {
    if (n < 1) throw InvalidInput("Z/n requires n >= 1");
    auto p = std::make_shared<Presentation>();
    p->kind = Presentation::Kind::Modular;
    p->modulus = n;
    return p;
}

PresentationPtr presentation_quotient(int n, std::vector<int> monic_poly) {
    if (n < 2 || monic_poly.size() < 2 || monic_poly.back() != 1)
        throw InvalidInput("quotient presentation requires modulus >= 2 and a monic polynomial");
    auto p = std::make_shared<Presentation>();
    p->kind = Presentation::Kind::MonicQuotient;
    p->modulus = n;
    p->poly = std::move(monic_poly);
    for (auto& c : p->poly) c = ((c % n) + n) % n;
    p->poly.back() = 1;
    return p;
}

namespace {

// polynomial arithmetic over Z/p for the irreducibility search
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int deg_m = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > deg_m) {
        int lead = a.back();
        if (lead != 0) {
            int shift = static_cast<int>(a.size()) - 1 - deg_m;
            for (int i = 0; i <= deg_m; ++i)
                a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        }
        a.pop_back();
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool poly_divides(const std::vector<int>& d, const std::vector<int>& f, int p) {
    // d monic; check remainder of f by d is zero
    auto r = poly_mod(f, d, p);
    for (int c : r)
        if (c != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    // trial division by all monic polynomials of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        std::vector<int> g(d + 1, 0);
        g[d] = 1;
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::int64_t v = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

PresentationPtr presentation_gf(int p, int e) {
    if (!is_prime(p)) throw InvalidInput("GF(p^e) requires prime p");
    if (e == 1) return presentation_zmod(p);
    // deterministic search for the first monic irreducible of degree e
    std::vector<int> f(e + 1, 0);
    f[e] = 1;
    std::int64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t v = idx;
        for (int i = 0; i < e; ++i) {
            f[i] = static_cast<int>(v % p);
            v /= p;
        }
        if (is_irreducible(f, p)) return presentation_quotient(p, f);
    }
    throw InvalidInput("no irreducible polynomial found");
}

PresentationPtr presentation_product(std::vector<PresentationPtr> factors) {
    if (factors.empty()) throw InvalidInput("product presentation needs at least one factor");
    auto p = std::make_shared<Presentation>();
    p->kind = Presentation::Kind::Product;
    p->factors = std::move(factors);
    return p;
}

namespace {

std::string describe(const Presentation& p) {
    switch (p.kind) {
        case Presentation::Kind::Modular:
            return "Z/" + std::to_string(p.modulus);
        case Presentation::Kind::MonicQuotient: {
            std::string s = "(Z/" + std::to_string(p.modulus) + ")[x]/(";
            bool first = true;
            for (int i = static_cast<int>(p.poly.size()) - 1; i >= 0; --i) {
                if (p.poly[i] == 0) continue;
                if (!first) s += "+";
                first = false;
                if (i == 0 || p.poly[i] != 1) s += std::to_string(p.poly[i]);
                if (i >= 1) s += "x";
                if (i >= 2) s += "^" + std::to_string(i);
            }
            return s + ")";
        }
        case Presentation::Kind::Product: {
            std::string s;
            for (size_t i = 0; i < p.factors.size(); ++i) {
                if (i) s += "x";
                s += describe(*p.factors[i]);
            }
            return s;
        }
    }
    return "?";
}

}  // namespace

RingPtr build_ring(const Presentation& p) {
    switch (p.kind) {
        case Presentation::Kind::Modular: {
            int n = p.modulus;
            std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    add[static_cast<size_t>(a) * n + b] = (a + b) % n;
                    mul[static_cast<size_t>(a) * n + b] = (a * b) % n;
                }
            return std::make_shared<FinCommRing>(std::move(add), std::move(mul), describe(p));
        }
        case Presentation::Kind::MonicQuotient: {
            int n = p.modulus;
            int e = static_cast<int>(p.poly.size()) - 1;
            std::int64_t size = 1;
            for (int i = 0; i < e; ++i) {
                size *= n;
                if (size > caps().max_ring_elements)
                    throw CapExceeded("quotient ring exceeds element cap");
            }
            int sz = static_cast<int>(size);
            auto decode = [&](int id) {
                std::vector<int> c(e);
                for (int i = 0; i < e; ++i) {
                    c[i] = id % n;
                    id /= n;
                }
                return c;
            };
            auto encode = [&](const std::vector<int>& c) {
                int id = 0;
                for (int i = e - 1; i >= 0; --i) id = id * n + c[i];
                return id;
            };
            auto reduce = [&](std::vector<int> c) {
                // reduce degree >= e using x^e = -(poly[0..e-1])
                for (int d = static_cast<int>(c.size()) - 1; d >= e; --d) {
                    int lead = c[d];
                    if (lead) {
                        for (int i = 0; i < e; ++i)
                            c[d - e + i] = ((c[d - e + i] - lead * p.poly[i]) % n + n) % n;
                    }
                    c.pop_back();
                }
                c.resize(e, 0);
                return c;
            };
            std::vector<int> add(static_cast<size_t>(sz) * sz), mul(static_cast<size_t>(sz) * sz);
            for (int a = 0; a < sz; ++a) {
                auto ca = decode(a);
                for (int b = 0; b < sz; ++b) {
                    auto cb = decode(b);
                    std::vector<int> s(e);
                    for (int i = 0; i < e; ++i) s[i] = (ca[i] + cb[i]) % n;
                    add[static_cast<size_t>(a) * sz + b] = encode(s);
                    std::vector<int> m(2 * e - 1, 0);
                    for (int i = 0; i < e; ++i)
                        for (int j = 0; j < e; ++j) m[i + j] = (m[i + j] + ca[i] * cb[j]) % n;
                    mul[static_cast<size_t>(a) * sz + b] = encode(reduce(std::move(m)));
                }
            }
            return std::make_shared<FinCommRing>(std::move(add), std::move(mul), describe(p));
        }
        case Presentation::Kind::Product: {
            std::vector<RingPtr> parts;
            std::int64_t size = 1;
            for (const auto& f : p.factors) {
                parts.push_back(build_ring(*f));
                size *= parts.back()->size();
                if (size > caps().max_ring_elements)
                    throw CapExceeded("product ring exceeds element cap");
            }
            int sz = static_cast<int>(size);
            auto decode = [&](int id) {
                std::vector<int> c(parts.size());
                for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
                    c[i] = id % parts[i]->size();
                    id /= parts[i]->size();
                }
                return c;
            };
            auto encode = [&](const std::vector<int>& c) {
                int id = 0;
                for (size_t i = 0; i < parts.size(); ++i) id = id * parts[i]->size() + c[i];
                return id;
            };
            std::vector<int> add(static_cast<size_t>(sz) * sz), mul(static_cast<size_t>(sz) * sz);
            for (int a = 0; a < sz; ++a) {
                auto ca = decode(a);
                for (int b = 0; b < sz; ++b) {
                    auto cb = decode(b);
                    std::vector<int> s(parts.size()), m(parts.size());
                    for (size_t i = 0; i < parts.size(); ++i) {
                        s[i] = parts[i]->add(ca[i], cb[i]);
                        m[i] = parts[i]->mul(ca[i], cb[i]);
                    }
                    add[static_cast<size_t>(a) * sz + b] = encode(s);
                    mul[static_cast<size_t>(a) * sz + b] = encode(m);
                }
            }
            std::vector<int> ones(parts.size());
            for (size_t i = 0; i < parts.size(); ++i) ones[i] = parts[i]->one();
            normalize_tables(add, mul, 0, encode(ones));
            return std::make_shared<FinCommRing>(std::move(add), std::move(mul), describe(p));
        }
    }
    throw InvalidInput("unknown presentation kind");
}

// ---- structure ----

std::vector<int> nilradical(const FinCommRing& a) {
    std::vector<int> out;
    for (int x = 0; x < a.size(); ++x) {
        int acc = x;
        bool nil = (x == a.zero());
        for (int k = 1; k <= a.size() && !nil; ++k) {
            if (acc == a.zero()) nil = true;
            acc = a.mul(acc, x);
        }
        if (nil) out.push_back(x);
    }
    return out;
}

bool is_reduced(const FinCommRing& a) { return nilradical(a).size() == 1; }

RingHom quotient_by_ideal(RingPtr a, const std::vector<int>& ideal) {
    const auto& r = *a;
    std::set<int> ideal_set(ideal.begin(), ideal.end());
    if (!ideal_set.count(r.zero())) throw InvalidInput("ideal must contain zero");
    // coset representative: least element of x + I
    std::vector<int> rep(r.size());
    for (int x = 0; x < r.size(); ++x) {
        int best = x;
        for (int i : ideal_set) best = std::min(best, r.add(x, i));
        rep[x] = best;
    }
    std::vector<int> reps;
    for (int x = 0; x < r.size(); ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<int> idx(r.size(), -1);
    for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
    int m = static_cast<int>(reps.size());
    std::vector<int> add(static_cast<size_t>(m) * m), mul(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            add[static_cast<size_t>(i) * m + j] = idx[rep[r.add(reps[i], reps[j])]];
            mul[static_cast<size_t>(i) * m + j] = idx[rep[r.mul(reps[i], reps[j])]];
        }
    std::vector<int> perm;
    normalize_tables(add, mul, idx[rep[r.zero()]], idx[rep[r.one()]], &perm);
    auto q = std::make_shared<FinCommRing>(std::move(add), std::move(mul), a->name() + "/I");
    RingHom h;
    h.source = a;
    h.target = q;
    for (int x = 0; x < r.size(); ++x) h.map.push_back(perm[idx[rep[x]]]);
    h.name = a->name() + "->quotient";
    return h;
}

LocalDecomposition local_decomposition(RingPtr a) {
    LocalDecomposition out;
    out.ring = a;
    const auto& r = *a;
    if (r.size() == 1) return out;  // zero ring: empty spectrum
    std::vector<int> idem;
    for (int x = 0; x < r.size(); ++x)
        if (r.mul(x, x) == x && x != r.zero()) idem.push_back(x);
    // primitive = minimal nonzero in the order e <= f iff ef = e
    std::vector<int> prims;
    for (int e : idem) {
        bool minimal = true;
        for (int f : idem)
            if (f != e && r.mul(e, f) == f) minimal = false;
        if (minimal) prims.push_back(e);
    }
    for (int e : prims) {
        LocalFactor lf;
        lf.idempotent = e;
        std::set<int> elems;
        for (int x = 0; x < r.size(); ++x) elems.insert(r.mul(e, x));
        std::vector<int> parent_of(elems.begin(), elems.end());
        std::vector<int> idx(r.size(), -1);
        for (size_t i = 0; i < parent_of.size(); ++i) idx[parent_of[i]] = static_cast<int>(i);
        int m = static_cast<int>(parent_of.size());
        std::vector<int> add(static_cast<size_t>(m) * m), mul(static_cast<size_t>(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                add[static_cast<size_t>(i) * m + j] = idx[r.add(parent_of[i], parent_of[j])];
                mul[static_cast<size_t>(i) * m + j] = idx[r.mul(parent_of[i], parent_of[j])];
            }
        std::vector<int> perm;
        normalize_tables(add, mul, idx[r.zero()], idx[e], &perm);
        // reorder parent_of to the normalized ids
        std::vector<int> parent2(m);
        for (int i = 0; i < m; ++i) parent2[perm[i]] = parent_of[i];
        lf.parent_of = std::move(parent2);
        lf.ring = std::make_shared<FinCommRing>(std::move(add), std::move(mul),
                                                a->name() + "@e" + std::to_string(e));
        lf.factor_of.resize(r.size());
        for (int x = 0; x < r.size(); ++x) lf.factor_of[x] = perm[idx[r.mul(e, x)]];
        const auto& fr = *lf.ring;
        for (int x = 0; x < fr.size(); ++x)
            if (!fr.is_unit(x)) lf.maximal_ideal.push_back(x);
        // local check: non-units closed under addition
        std::set<int> mi(lf.maximal_ideal.begin(), lf.maximal_ideal.end());
        for (int x : lf.maximal_ideal)
            for (int y : lf.maximal_ideal)
                if (!mi.count(fr.add(x, y)))
                    throw InvalidInput("local decomposition: factor is not local");
        auto q = quotient_by_ideal(lf.ring, lf.maximal_ideal);
        lf.residue_field = q.target;
        lf.residue_of = q.map;
        lf.residue_char = lf.residue_field->characteristic();
        int sz = lf.residue_field->size();
        lf.residue_degree = 0;
        int acc = 1;
        while (acc < sz) {
            acc *= lf.residue_char;
            ++lf.residue_degree;
        }
        if (acc != sz || !is_prime(lf.residue_char))
            throw InvalidInput("local decomposition: residue field size is not a prime power");
        out.factors.push_back(std::move(lf));
    }
    // completeness: primitive idempotents are orthogonal and sum to 1
    int sum = r.zero();
    for (const auto& f : out.factors) sum = r.add(sum, f.idempotent);
    if (sum != r.one()) throw InvalidInput("local decomposition: idempotents do not sum to 1");
    for (size_t i = 0; i < out.factors.size(); ++i)
        for (size_t j = i + 1; j < out.factors.size(); ++j)
            if (r.mul(out.factors[i].idempotent, out.factors[j].idempotent) != r.zero())
                throw InvalidInput("local decomposition: idempotents not orthogonal");
    return out;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingHom frobenius(RingPtr a) {
    int p = a->characteristic();
    if (!is_prime(p)) throw InvalidInput("frobenius: characteristic is not prime");
    RingHom f;
    f.source = a;
    f.target = a;
    for (int x = 0; x < a->size(); ++x) f.map.push_back(a->pow(x, p));
    f.name = "frob_" + a->name();
    return f;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

PerfectlyReducedResult is_perfectly_reduced(const FinCommRing& a) {
    PerfectlyReducedResult out;
    const int n = a.size();
    // clause (i): f^2 = g^3 needs a unique h with f = h^3, g = h^2
    std::vector<int> sq(n), cb(n);
    for (int x = 0; x < n; ++x) {
        sq[x] = a.mul(x, x);
        cb[x] = a.mul(sq[x], x);
    }
    std::map<std::pair<int, int>, int> cube_square_count;
    for (int h = 0; h < n; ++h) ++cube_square_count[{cb[h], sq[h]}];
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            if (sq[f] != cb[g]) continue;
            auto it = cube_square_count.find({f, g});
            int cnt = it == cube_square_count.end() ? 0 : it->second;
            if (cnt != 1) return {false, "cusp", 0, f, g, cnt};
        }
    // clause (ii): per prime p | char, f^p = p^p g needs a unique h with
    // f = p h, g = h^p
    int ch = a.characteristic();
    for (int p = 2; p <= ch; ++p) {
        if (!is_prime(p) || ch % p != 0) continue;
        int pp = a.scale(a.one(), powmod(p, p, static_cast<std::uint64_t>(ch)));
        std::vector<int> powp(n), scalep(n);
        for (int x = 0; x < n; ++x) {
            powp[x] = a.pow(x, p);
            scalep[x] = a.scale(x, p);
        }
        std::map<std::pair<int, int>, int> count;
        for (int h = 0; h < n; ++h) ++count[{scalep[h], powp[h]}];
        for (int f = 0; f < n; ++f)
            for (int g = 0; g < n; ++g) {
                if (powp[f] != a.mul(pp, g)) continue;
                auto it = count.find({f, g});
                int cnt = it == count.end() ? 0 : it->second;
                if (cnt != 1) return {false, "p-power", p, f, g, cnt};
            }
    }
    return out;
}

RingHom perfection(RingPtr a) {
    auto h = quotient_by_ideal(a, nilradical(*a));
    h.name = a->name() + "->perfection";
    return h;
}

namespace {

struct SpecMap {
    LocalDecomposition src;   // of the hom's source ring
    LocalDecomposition dst;   // of the hom's target ring
    std::vector<int> over;    // target factor index -> source factor index
};

SpecMap spec_map(const RingHom& f) {
    SpecMap out;
    out.src = local_decomposition(f.source);
    out.dst = local_decomposition(f.target);
    for (const auto& tj : out.dst.factors) {
        int found = -1;
        for (size_t i = 0; i < out.src.factors.size(); ++i) {
            int img = tj.factor_of[f.map[out.src.factors[i].idempotent]];
            if (img == tj.ring->one()) {
                if (found >= 0) throw InvalidInput("spec map: idempotent image ambiguous");
                found = static_cast<int>(i);
            }
        }
        if (found < 0) throw InvalidInput("spec map: no source factor under target factor");
        out.over.push_back(found);
    }
    return out;
}

}  // namespace

bool is_radicial(const RingHom& f) {
    auto sm = spec_map(f);
    std::vector<char> hit(sm.src.factors.size(), 0);
    for (size_t j = 0; j < sm.dst.factors.size(); ++j) {
        int i = sm.over[j];
        if (hit[i]) return false;  // Spec not injective
        hit[i] = 1;
        const auto& si = sm.src.factors[i];
        const auto& tj = sm.dst.factors[j];
        // purely inseparable over finite fields means degree 1
        if (si.residue_char != tj.residue_char || si.residue_degree != tj.residue_degree)
            return false;
    }
    return true;
}

bool is_spec_surjective(const RingHom& f) {
    auto sm = spec_map(f);
    std::vector<char> hit(sm.src.factors.size(), 0);
    for (int i : sm.over) hit[i] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_universal_homeomorphism(const RingHom& f) {
    return is_radicial(f) && is_spec_surjective(f);
}

bool is_etale(const RingHom& f) {
    auto sm = spec_map(f);
    for (size_t j = 0; j < sm.dst.factors.size(); ++j) {
        const auto& si = sm.src.factors[sm.over[j]];
        const auto& tj = sm.dst.factors[j];
        const auto& b = *tj.ring;
        // structure map S_i -> T_j
        std::vector<int> phi;
        for (int s : si.parent_of) phi.push_back(tj.factor_of[f.map[s]]);
        // m_i * B as a subgroup closed under addition
        std::set<int> mb;
        mb.insert(b.zero());
        std::vector<int> frontier;
        for (int m : si.maximal_ideal)
            for (int x = 0; x < b.size(); ++x) {
                int v = b.mul(phi[m], x);
                if (mb.insert(v).second) frontier.push_back(v);
            }
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            for (int w : std::vector<int>(mb.begin(), mb.end())) {
                int s = b.add(v, w);
                if (mb.insert(s).second) frontier.push_back(s);
            }
        }
        // unramified: m_i B = m_j
        std::set<int> mj(tj.maximal_ideal.begin(), tj.maximal_ideal.end());
        if (mb != mj) return false;
        // free of finite rank: |B/m_i B| = q_i^d and |B| = |S_i|^d
        std::int64_t cosets = b.size() / static_cast<std::int64_t>(mb.size());
        std::int64_t q = 1;
        int qi = 1;
        for (int k = 0; k < si.residue_degree; ++k) qi *= si.residue_char;
        int d = 0;
        while (q < cosets) {
            q *= qi;
            ++d;
        }
        if (q != cosets) return false;
        std::int64_t expect = 1;
        for (int k = 0; k < d; ++k) expect *= si.ring->size();
        if (expect != b.size()) return false;
    }
    return true;
}

}  // namespace exo
