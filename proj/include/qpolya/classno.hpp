#ifndef QPOLYA_CLASSNO_HPP
#define QPOLYA_CLASSNO_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpolya/quadfield.hpp"

namespace qpolya {

using BigInt = boost::multiprecision::cpp_int;

// Fundamental unit (a + b sqrt(D)) / q of the maximal order, q in {1, 2},
// with a^2 - D b^2 = q^2 * norm and regulator = ln of the unit.
struct UnitData {
    BigInt a;
    BigInt b;
    int q = 1;
    int norm = 0; // +1 or -1
    double regulator = 0.0;
};

// Norm sign and regulator alone, computed without big-integer convergents;
// cheap enough for million-field sweeps.
struct UnitSummary {
    int norm = 0;
    double regulator = 0.0;
    int period = 0;
};

struct ClassData {
    std::uint64_t h = 0;
    std::uint64_t h_plus = 0;
};

// Number of reduced forms (a,b,c) of discriminant -d, counted with the Gauss
// boundary conventions (-a < b <= a <= c, b >= 0 when |b| = a or a = c).
// d must be a positive fundamental |discriminant|.
std::uint64_t class_number_imaginary(const QuadField& f);

// count[d] = number of reduced forms of discriminant -d for every 3 <= d <= X
// (only fundamental entries are class numbers; others include imprimitive
// forms). Triple loop over (a, b, c), optionally sharded by `a` across workers.
std::vector<std::uint32_t> batch_class_numbers_imaginary(
    std::uint64_t X, int workers = 1,
    std::uint64_t memory_budget_bytes = std::uint64_t(1) << 31);

// Continued fraction of omega_Delta = (Delta mod 2 + sqrt(Delta)) / 2.
UnitSummary unit_summary_cf(std::int64_t D);
UnitData fundamental_unit_cf(std::int64_t D);

// Narrow class number of a positive nonsquare discriminant: the number of
// cycles of reduced indefinite forms. `sieve` (covering disc/4) accelerates
// the divisor enumeration; pass nullptr for trial division.
std::uint64_t narrow_class_number_cycles(std::uint64_t disc,
                                         const SpfSieve* sieve = nullptr);

// h and h+ for a real field; h+ = h * [U+ : U^2] with the index read from the
// fundamental-unit norm.
ClassData class_number_real(const QuadField& f, const SpfSieve* sieve = nullptr);

// Dirichlet class number formula with the exact finite character sum;
// independent of the form-based counts. Requires d_K <= 1e7.
std::uint64_t class_number_analytic(const QuadField& f);

} // namespace qpolya

#endif
