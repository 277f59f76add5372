#ifndef QPOLYA_POLYA_HPP
#define QPOLYA_POLYA_HPP

#include <cstdint>
#include <optional>

#include "qpolya/classno.hpp"
#include "qpolya/quadfield.hpp"

namespace qpolya {

// The invariant bundle of one quadratic field. Every divisibility identity
// (Po | Cl, g | h, g+ | h+, #Po/h = g+/h+) is verified before a value is
// returned; a violation throws InternalCheck since these are theorems.
struct ClassInvariants {
    QuadField field;
    std::uint64_t h = 0;
    std::uint64_t h_plus = 0;
    std::optional<int> unit_norm; // engaged iff real
    std::uint64_t polya_order = 0;
    std::uint64_t g = 0;
    std::uint64_t g_plus = 0;
    std::uint64_t polya_index = 0; // h / #Po
    std::uint64_t genus_index = 0; // h / g
    double regulator = 0.0;        // 0 for imaginary fields
};

// #Po(K) = 2^{s-2} if D > 0 and N(eps) = +1, else 2^{s-1}.
// unit_norm must be supplied exactly for real fields (MissingUnitNorm).
std::uint64_t polya_order(const QuadField& f, std::optional<int> unit_norm);

// g_K = 2^{s-2} when D > 0, N(eps) = +1 and some p | D has p = 3 mod 4,
// else 2^{s-1}.
std::uint64_t genus_number(const QuadField& f, std::optional<int> unit_norm);

// g_K^+ = prod e_p / [K:Q] = 2^{s-1} for quadratic fields.
std::uint64_t narrow_genus_number(const QuadField& f);

// #Po via the divisor function: c_K tau(d_K), halved for real norm +1.
// Exact integer arithmetic; NonIntegerResult flags an implementation bug.
std::uint64_t polya_order_via_tau(const QuadField& f, std::optional<int> unit_norm);

ClassInvariants invariants(const QuadField& f, const SpfSieve* sieve = nullptr);

} // namespace qpolya

#endif
