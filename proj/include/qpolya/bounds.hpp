#ifndef QPOLYA_BOUNDS_HPP
#define QPOLYA_BOUNDS_HPP

#include <string>
#include <vector>

#include "qpolya/quadfield.hpp"

namespace qpolya {

// GRH-conditional lower bound for h_K of an imaginary quadratic field,
//   ((pi/6) sqrt(d) - alpha + b1) / (alpha + 2 ln alpha + b2 + c(alpha)),
// alpha = (1/2) ln d, b1 = -0.34037 - 4 e^{-pi sqrt(d)}, b2 = -0.49480,
// c(t) = (4 ln t + 2)/(t - 1). Requires d >= 11.
long double ihara_lower_bound(long double d_K);

// Unconditional (one possible exception) lower bound for h_K of a real
// extended R-D field: 0.655 d_K^{7/16} / (32 ln(3D)).
long double mw_lower_bound(const QuadField& f);

// Upper bound for 2#Po/h of an imaginary field with |disc| = x, from the
// divisor identity, the tau bound and the Ihara bound. Index two is ruled out
// wherever this falls below 1. residue is the class of the signed D mod 4.
// Requires x > e^2.
long double f_imag_index2(int residue, long double x);

// Upper bound for #Po/h of a real extended R-D field with d_K = x:
// 32 c_K c'_K ln(3D) / (0.655 x^{3/16}), D = x or x/4 by residue, halved for
// unit norm +1. Polya index one is ruled out below 1. Requires x >= 2.
long double f_rd(int residue, int unit_norm, long double x);

struct BoundReport {
    std::string case_label;
    long double threshold = 0;       // solver's f = 1 crossing
    long double f_at_threshold = 0;  // f(threshold), ~1 by construction
    long double paper_threshold = 0; // published cutoff
    long double f_at_paper = 0;      // f(paper_threshold)
};

struct BoundCurve {
    std::string label;
    long double (*f)(long double) = nullptr;
    long double scan_lo = 0;
    long double scan_hi = 0;
    long double paper_threshold = 0;
};

// Largest f = 1 crossing: multiplicative grid scan (ratio 1.01) over
// [scan_lo, scan_hi], then bisection to relative precision 1e-6. NoCrossing
// if f >= 1 on the whole range.
BoundReport solve_threshold(const BoundCurve& curve);

// One report per published cutoff case: two imaginary residue-1/-3/-2 curves
// and the four non-vacuous (residue, unit-norm) R-D curves. (D = 3 mod 4
// forces norm +1, so that pairing has no curve.)
std::vector<BoundReport> all_threshold_reports();

} // namespace qpolya

#endif
