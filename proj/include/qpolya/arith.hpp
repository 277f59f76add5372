#ifndef QPOLYA_ARITH_HPP
#define QPOLYA_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qpolya {

// Prime factorization of n, primes strictly increasing, exponents >= 1.
// factorize(1) has an empty factor list.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t reassemble() const;
};

// Deterministic for the whole 64-bit range (Miller-Rabin base set).
bool is_prime_u64(std::uint64_t n);

// Trial division with a primality early-exit on the remaining cofactor.
// Rejects n = 0.
Factorization factorize(std::uint64_t n);

std::uint64_t tau(std::uint64_t n);   // number of divisors
int omega(std::uint64_t n);           // number of distinct primes
bool is_squarefree(std::uint64_t n);

// All divisors of a factored integer, unsorted.
std::vector<std::uint64_t> divisors(const Factorization& f);

// sieve[k] == is_squarefree(k) for 1 <= k <= limit; sieve[0] unused (false).
std::vector<bool> squarefree_sieve(std::uint64_t limit);

// Kronecker symbol (a|n) with the usual 2-adic and sign conventions.
// Rejects n = 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

std::uint64_t isqrt_u64(std::uint64_t n);

// Smallest-prime-factor table, immutable once built; factorize() through it is
// O(log n). Bulk callers (sieves, sweeps) build one sized to their range.
class SpfSieve {
  public:
    explicit SpfSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
    Factorization factorize(std::uint32_t n) const;
    std::uint64_t tau(std::uint32_t n) const;
    int omega(std::uint32_t n) const;
    bool is_squarefree(std::uint32_t n) const;

  private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

} // namespace qpolya

#endif
