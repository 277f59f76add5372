#ifndef QPOLYA_QUADFIELD_HPP
#define QPOLYA_QUADFIELD_HPP

#include <cstdint>
#include <vector>

#include "qpolya/arith.hpp"

namespace qpolya {

// The quadratic field Q(sqrt(D)) for a square-free integer D != 0, 1.
// disc is the fundamental discriminant (D or 4D), d_K its absolute value,
// s_K the number of ramified primes, residue = D mod 4 in {1, 2, 3}.
struct QuadField {
    std::int64_t D = 0;
    std::int64_t disc = 0;
    std::uint64_t abs_disc = 0;
    std::vector<std::uint64_t> ramified_primes;
    int s_K = 0;
    int residue = 0;

    bool is_real() const { return D > 0; }
    bool is_imaginary() const { return D < 0; }
};

// Throws NotSquarefree / DegenerateD.
QuadField make_field(std::int64_t D);

// Exact rational c_K of the Polya-order divisor identity:
// 1/2, 1/3, 1/4 for D = 1, 3, 2 mod 4. Returned as the denominator (2, 3, 4).
int c_factor_denominator(const QuadField& f);

// c'_K of the explicit divisor bound tau(d_K) < c'_K d_K^{1/4}:
// 2.8908 / 7.2927 / 9.7235 for D = 1 / 3 / 2 mod 4.
double c_prime_factor(const QuadField& f);

// Same constants keyed by the residue class alone (used by the bound curves).
int c_factor_denominator(int residue);
double c_prime_factor(int residue);

bool has_prime_3mod4(const QuadField& f);

} // namespace qpolya

#endif
