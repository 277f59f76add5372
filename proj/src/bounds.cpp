#include "qpolya/bounds.hpp"

#include <cmath>

#include "qpolya/error.hpp"

namespace qpolya {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kB2 = -0.49480L;

long double b1_of(long double x) {
    // e^{-pi sqrt(x)} underflows to exact 0 for x beyond ~500; error < 1e-300
    return -0.34037L - 4.0L * std::exp(-kPi * std::sqrt(x));
}

long double cc(int residue) {
    return (long double)(c_prime_factor(residue)) / c_factor_denominator(residue);
}

} // namespace

long double ihara_lower_bound(long double d_K) {
    if (!(d_K >= 11.0L))
        throw Error(ErrorKind::DomainError, "Ihara bound requires d_K >= 11");
    const long double alpha = 0.5L * std::log(d_K);
    const long double c = (4.0L * std::log(alpha) + 2.0L) / (alpha - 1.0L);
    const long double num = kPi / 6.0L * std::sqrt(d_K) - alpha + b1_of(d_K);
    const long double den = alpha + 2.0L * std::log(alpha) + kB2 + c;
    return num / den;
}

long double mw_lower_bound(const QuadField& f) {
    if (!f.is_real())
        throw Error(ErrorKind::WrongSignature, "Mollin-Williams bound needs D > 0");
    const long double d = (long double)f.abs_disc;
    const long double D = (long double)f.D;
    return 0.655L * std::pow(d, 7.0L / 16.0L) / (32.0L * std::log(3.0L * D));
}

long double f_imag_index2(int residue, long double x) {
    if (!(x > std::exp(2.0L)))
        throw Error(ErrorKind::DomainError, "f_imag_index2 requires x > e^2");
    const long double ls = 0.5L * std::log(x); // ln sqrt(x)
    const long double num =
        2.0L * cc(residue) * std::pow(x, 0.25L) *
        (ls + 2.0L * std::log(ls) + kB2 + (4.0L * std::log(ls) + 2.0L) / (ls - 1.0L));
    const long double den = kPi / 6.0L * std::sqrt(x) - ls + b1_of(x);
    return num / den;
}

long double f_rd(int residue, int unit_norm, long double x) {
    if (!(x >= 2.0L)) throw Error(ErrorKind::DomainError, "f_rd requires x >= 2");
    if (unit_norm != 1 && unit_norm != -1)
        throw Error(ErrorKind::DomainError, "unit norm must be +-1");
    const long double D = residue == 1 ? x : x / 4.0L; // x is d_K
    long double v = 32.0L * cc(residue) * std::log(3.0L * D) /
                    (0.655L * std::pow(x, 3.0L / 16.0L));
    if (unit_norm == +1) v *= 0.5L;
    return v;
}

BoundReport solve_threshold(const BoundCurve& curve) {
    // multiplicative grid scan for the last f >= 1 point
    const long double ratio = 1.01L;
    long double last_ge = -1.0L, first_lt = -1.0L;
    bool any_lt = false;
    for (long double x = curve.scan_lo; x <= curve.scan_hi; x *= ratio) {
        if (curve.f(x) >= 1.0L) {
            last_ge = x;
            first_lt = -1.0L;
        } else {
            any_lt = true;
            if (first_lt < 0) first_lt = x;
        }
    }
    if (!any_lt)
        throw Error(ErrorKind::NoCrossing, "f >= 1 on the entire scanned range");
    if (last_ge < 0)
        throw Error(ErrorKind::NoCrossing, "f < 1 on the entire scanned range");

    long double lo = last_ge, hi = first_lt;
    while ((hi - lo) / lo > 1e-6L) {
        const long double mid = 0.5L * (lo + hi);
        (curve.f(mid) >= 1.0L ? lo : hi) = mid;
    }
    BoundReport rep;
    rep.case_label = curve.label;
    rep.threshold = 0.5L * (lo + hi);
    rep.f_at_threshold = curve.f(rep.threshold);
    rep.paper_threshold = curve.paper_threshold;
    rep.f_at_paper = curve.f(curve.paper_threshold);
    return rep;
}

std::vector<BoundReport> all_threshold_reports() {
    // the (norm -1, D = 3 mod 4) pairing has no curve: such D always has a
    // prime divisor p = 3 mod 4, forcing norm +1
    const std::vector<BoundCurve> curves = {
        {"imaginary index 2, D = 1 mod 4",
         [](long double x) { return f_imag_index2(1, x); }, 1e3L, 1e12L, 3.6e7L},
        {"imaginary index 2, D = 3 mod 4",
         [](long double x) { return f_imag_index2(3, x); }, 1e3L, 1e12L, 4.1e8L},
        {"imaginary index 2, D = 2 mod 4",
         [](long double x) { return f_imag_index2(2, x); }, 1e3L, 1e12L, 4.1e8L},
        {"R-D Polya index 1, norm -1, D = 1 mod 4",
         [](long double x) { return f_rd(1, -1, x); }, 1e2L, 1e24L, 4.3e18L},
        {"R-D Polya index 1, norm -1, D = 2 mod 4",
         [](long double x) { return f_rd(2, -1, x); }, 1e2L, 1e24L, 8.14e19L},
        {"R-D Polya index 1, norm +1, D = 1 mod 4",
         [](long double x) { return f_rd(1, +1, x); }, 1e2L, 1e24L, 6.3e16L},
        {"R-D Polya index 1, norm +1, D = 3 mod 4",
         [](long double x) { return f_rd(3, +1, x); }, 1e2L, 1e24L, 1.3e18L},
        {"R-D Polya index 1, norm +1, D = 2 mod 4",
         [](long double x) { return f_rd(2, +1, x); }, 1e2L, 1e24L, 1.3e18L},
    };
    std::vector<BoundReport> reports;
    for (const auto& c : curves) reports.push_back(solve_threshold(c));
    return reports;
}

} // namespace qpolya
