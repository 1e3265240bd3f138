#include "gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace exo {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

int inv_mod_p(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<int>(static_cast<std::int64_t>(r) * b % p);
        b = static_cast<int>(static_cast<std::int64_t>(b) * b % p);
        e >>= 1;
    }
    return r;
}

using Poly = std::vector<int>;  // ascending coefficients in 0..p-1

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
    // reduce by monic m
    int dm = static_cast<int>(m.size()) - 1;
    for (int d = static_cast<int>(c.size()) - 1; d >= dm; --d) {
        int lead = c[d];
        if (lead) {
            for (int i = 0; i < dm; ++i)
                c[d - dm + i] =
                    static_cast<int>(((c[d - dm + i] - static_cast<std::int64_t>(lead) * m[i]) % p + p) % p);
            c[d] = 0;
        }
    }
    c.resize(dm);
    trim(c);
    return c;
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& m, int p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, m, p);
        a = poly_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, int p) {
    // remainder of a by b (b nonzero, not necessarily monic)
    int db = static_cast<int>(b.size()) - 1;
    int inv = inv_mod_p(b[db], p);
    trim(a);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int d = static_cast<int>(a.size()) - 1;
        int q = static_cast<int>(static_cast<std::int64_t>(a[d]) * inv % p);
        for (int i = 0; i <= db; ++i)
            a[d - db + i] =
                static_cast<int>(((a[d - db + i] - static_cast<std::int64_t>(q) * b[i]) % p + p) % p);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible(const Poly& f, int p) {
    int n = static_cast<int>(f.size()) - 1;
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
    Poly x = {0, 1};
    // x^(p^n) == x mod f
    auto xpn = poly_powmod(x, q, f, p);
    Poly xr = x;
    trim(xr);
    if (xpn != xr) return false;
    // gcd(x^(p^(n/r)) - x, f) == 1 for each prime r | n
    for (int r = 2; r <= n; ++r) {
        if (!is_prime_u64(static_cast<std::uint64_t>(r)) || n % r != 0) continue;
        std::uint64_t qe = 1;
        for (int i = 0; i < n / r; ++i) qe *= static_cast<std::uint64_t>(p);
        auto g = poly_powmod(x, qe, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        auto d = poly_gcd(f, g, p);
        if (static_cast<int>(d.size()) - 1 != 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    auto d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> factorize_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p < 100 && p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

GF::GF(int p, int n) : p_(p), n_(n) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)) || n < 1)
        throw InvalidInput("GF(p^n) requires prime p and n >= 1");
    order_ = 1;
    for (int i = 0; i < n; ++i) {
        if (order_ > UINT64_MAX / static_cast<std::uint64_t>(p) / static_cast<std::uint64_t>(p))
            throw InvalidInput("GF(p^n) does not fit in 64 bits");
        order_ *= static_cast<std::uint64_t>(p);
    }
    if (n == 1) {
        modulus_ = {0, 1};  // unused
        return;
    }
    Poly f(n + 1, 0);
    f[n] = 1;
    std::uint64_t count = order_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (irreducible(f, p)) {
            modulus_ = f;
            return;
        }
    }
    throw InvalidInput("no irreducible polynomial found");
}

std::vector<int> GF::unpack(Elem a) const {
    std::vector<int> c(n_);
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(a % static_cast<std::uint64_t>(p_));
        a /= static_cast<std::uint64_t>(p_);
    }
    return c;
}

GF::Elem GF::pack(const std::vector<int>& c) const {
    Elem a = 0;
    for (int i = n_ - 1; i >= 0; --i)
        a = a * static_cast<std::uint64_t>(p_) + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return a;
}

GF::Elem GF::from_int(int c) const {
    int v = ((c % p_) + p_) % p_;
    return static_cast<Elem>(v);
}

GF::Elem GF::add(Elem a, Elem b) const {
    auto ca = unpack(a), cb = unpack(b);
    for (int i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return pack(ca);
}

GF::Elem GF::sub(Elem a, Elem b) const {
    auto ca = unpack(a), cb = unpack(b);
    for (int i = 0; i < n_; ++i) ca[i] = ((ca[i] - cb[i]) % p_ + p_) % p_;
    return pack(ca);
}

GF::Elem GF::mul(Elem a, Elem b) const {
    if (n_ == 1)
        return static_cast<Elem>(a * b % static_cast<std::uint64_t>(p_));
    return pack(poly_mulmod(unpack(a), unpack(b), modulus_, p_));
}

GF::Elem GF::pow(Elem a, std::uint64_t k) const {
    Elem r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

GF::Elem GF::generator() const {
    if (generator_) return generator_;
    std::uint64_t m = order_ - 1;
    auto fac = factorize_u64(m);
    fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
    for (Elem g = 2; g < order_; ++g) {
        bool ok = true;
        for (auto q : fac)
            if (pow(g, m / q) == one()) {
                ok = false;
                break;
            }
        if (ok) {
            generator_ = g;
            return g;
        }
    }
    throw InvalidInput("no multiplicative generator found");
}

std::vector<GF::Elem> GF::subfield(int e) const {
    if (e < 1 || n_ % e != 0) throw InvalidInput("subfield degree must divide n");
    std::uint64_t sub_order = 1;
    for (int i = 0; i < e; ++i) sub_order *= static_cast<std::uint64_t>(p_);
    std::vector<Elem> out = {zero()};
    if (e == n_) {
        if (order_ > (1u << 16)) throw InvalidInput("subfield too large to enumerate");
        for (Elem a = 1; a < order_; ++a) out.push_back(a);
        return out;
    }
    Elem w = pow(generator(), (order_ - 1) / (sub_order - 1));
    Elem acc = one();
    for (std::uint64_t k = 0; k + 1 < sub_order; ++k) {
        out.push_back(acc);
        acc = mul(acc, w);
    }
    return out;
}

const GF& gf_cache(int p, int n) {
    static std::map<std::pair<int, int>, GF> cache;
    auto it = cache.find({p, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(p, n), GF(p, n)).first;
    return it->second;
}

GF::Elem GF::eval(const std::vector<int>& poly, Elem at) const {
    Elem r = zero();
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        r = add(mul(r, at), from_int(poly[i]));
    return r;
}

}  // namespace exo
