#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "qpolya/arith.hpp"
#include "qpolya/error.hpp"

using namespace qpolya;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());

    auto f = factorize(84);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<std::uint64_t, int>{2, 2});
    CHECK(f.factors[1] == std::pair<std::uint64_t, int>{3, 1});
    CHECK(f.factors[2] == std::pair<std::uint64_t, int>{7, 1});

    // 163020 = 4 * 40755 = 2^2 * 3 * 5 * 11 * 13 * 19
    auto g = factorize(163020);
    std::vector<std::pair<std::uint64_t, int>> want{{2, 2}, {3, 1}, {5, 1},
                                                    {11, 1}, {13, 1}, {19, 1}};
    CHECK(g.factors == want);

    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("factorize reassembles and tau/omega match brute force") {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        auto f = factorize(n);
        REQUIRE(f.reassemble() == n);
        for (std::size_t i = 1; i < f.factors.size(); ++i)
            REQUIRE(f.factors[i - 1].first < f.factors[i].first);
    }
    // brute-force divisor counts
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        std::uint64_t t = 0, w = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                t += (d * d == n) ? 1 : 2;
                if (is_prime_u64(d)) ++w;
                if (d * d != n && is_prime_u64(n / d)) ++w;
            }
        }
        CHECK(tau(n) == t);
        CHECK(omega(n) == int(w));
    }
}

TEST_CASE("tau and omega examples") {
    CHECK(tau(40) == 8);
    CHECK(omega(40) == 2);
    CHECK(tau(1) == 1);
    CHECK(omega(1) == 0);
    CHECK(tau(136) == 8);
    CHECK_THROWS_AS(tau(0), Error);
}

TEST_CASE("squarefree predicate and sieve") {
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(40755));

    auto sf = squarefree_sieve(20);
    std::set<std::uint64_t> got;
    for (std::uint64_t k = 1; k <= 20; ++k)
        if (sf[k]) got.insert(k);
    CHECK(got == std::set<std::uint64_t>{1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19});

    auto big = squarefree_sieve(1000000);
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000000);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t n = pick(rng);
        CHECK(big[n] == is_squarefree(n));
    }
}

TEST_CASE("kronecker symbol") {
    for (std::int64_t n = -8; n <= 8; ++n)
        if (n != 0) CHECK(kronecker_symbol(1, n) == 1);
    CHECK(kronecker_symbol(-20, 3) == 1);
    CHECK(kronecker_symbol(8, 7) == 1);
    CHECK(kronecker_symbol(2, 2) == 0);
    CHECK_THROWS_AS(kronecker_symbol(3, 0), Error);

    // small table against Legendre symbols via Euler's criterion
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t a = 0; a < p; ++a) {
            std::int64_t e = 1, base = a % p;
            for (std::int64_t k = 0; k < (p - 1) / 2; ++k) e = e * base % p;
            int legendre = e == 1 ? 1 : e == 0 ? 0 : -1;
            CHECK(kronecker_symbol(a, p) == legendre);
        }
    }
}

TEST_CASE("kronecker is completely multiplicative in the top argument") {
    // a = 0 is excluded: (0|-1) = 1 by convention, which breaks the identity
    // in the degenerate corner n = -1
    for (std::int64_t n = -200; n <= 200; ++n) {
        if (n == 0) continue;
        for (std::int64_t a = -200; a <= 200; ++a) {
            if (a == 0) continue;
            for (std::int64_t b : {-9, -3, -2, 2, 5, 11, 36, 175})
                CHECK(kronecker_symbol(a * b, n) ==
                      kronecker_symbol(a, n) * kronecker_symbol(b, n));
        }
    }
}

TEST_CASE("spf sieve agrees with trial division") {
    SpfSieve sieve(100000);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(1, 100000);
    for (int i = 0; i < 5000; ++i) {
        std::uint32_t n = pick(rng);
        auto a = sieve.factorize(n);
        auto b = factorize(n);
        CHECK(a.factors == b.factors);
        CHECK(sieve.tau(n) == tau(n));
        CHECK(sieve.is_squarefree(n) == is_squarefree(n));
    }
}

TEST_CASE("64-bit primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(40755 / 3 / 5 / 11 / 13)); // 19
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64(2147483647ull));          // 2^31 - 1
    CHECK(is_prime_u64(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(3215031751ull));     // strong pseudoprime to 2,3,5,7
}
