#include "qpolya/arith.hpp"

#include <cmath>
#include <stdexcept>

#include "qpolya/error.hpp"

namespace qpolya {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

std::uint64_t Factorization::reassemble() const {
    u64 r = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) r *= p;
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // this base set is deterministic for n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw Error(ErrorKind::DomainError, "factorize: n = 0");
    Factorization f;
    f.n = n;
    auto strip = [&](u64 p) {
        if (n % p) return;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
        if (n > 1 && d > 300 && is_prime_u64(n)) break;
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

u64 tau(u64 n) {
    u64 t = 1;
    for (auto [p, e] : factorize(n).factors) t *= u64(e) + 1;
    return t;
}

int omega(u64 n) { return int(factorize(n).factors.size()); }

bool is_squarefree(u64 n) {
    if (n == 0) throw Error(ErrorKind::DomainError, "is_squarefree: n = 0");
    for (auto [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (auto [p, e] : f.factors) {
        std::size_t m = ds.size();
        u64 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pe);
        }
    }
    return ds;
}

std::vector<bool> squarefree_sieve(u64 limit) {
    if (limit == 0) throw Error(ErrorKind::DomainError, "squarefree_sieve: limit = 0");
    std::vector<bool> sf(limit + 1, true);
    sf[0] = false;
    // composite p are redundant here (their multiples are already covered by
    // a prime square), so no primality filter is needed
    for (u64 p = 2; p * p <= limit; ++p)
        for (u64 k = p * p; k <= limit; k += p * p) sf[k] = false;
    return sf;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) throw Error(ErrorKind::DomainError, "kronecker: n = 0");
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int t = 0;
        while (n % 2 == 0) n /= 2, ++t;
        int am8 = int(((a % 8) + 8) % 8);
        if (t % 2 == 1 && (am8 == 3 || am8 == 5)) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int nm8 = int(n % 8);
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = u64(std::sqrt(double(n)));
    while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
    while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

SpfSieve::SpfSieve(std::uint32_t limit) : limit_(limit), spf_(limit + 1, 0) {
    if (limit_ >= 1) spf_[1] = 1;
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = i;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            u64 v = u64(p) * i;
            if (p > spf_[i] || v > limit_) break;
            spf_[std::uint32_t(v)] = p;
        }
    }
}

Factorization SpfSieve::factorize(std::uint32_t n) const {
    if (n == 0) throw Error(ErrorKind::DomainError, "SpfSieve::factorize: n = 0");
    if (n > limit_) throw Error(ErrorKind::DomainError, "SpfSieve::factorize: n beyond sieve");
    Factorization f;
    f.n = n;
    while (n > 1) {
        std::uint32_t p = spf_[n];
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.factors.emplace_back(p, e);
    }
    return f;
}

u64 SpfSieve::tau(std::uint32_t n) const {
    u64 t = 1;
    for (auto [p, e] : factorize(n).factors) t *= u64(e) + 1;
    return t;
}

int SpfSieve::omega(std::uint32_t n) const {
    return int(factorize(n).factors.size());
}

bool SpfSieve::is_squarefree(std::uint32_t n) const {
    for (auto [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

} // namespace qpolya
