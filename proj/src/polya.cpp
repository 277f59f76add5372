#include "qpolya/polya.hpp"

#include "qpolya/error.hpp"

namespace qpolya {

namespace {

using u64 = std::uint64_t;

int norm_for(const QuadField& f, std::optional<int> unit_norm) {
    if (!f.is_real()) return 0;
    if (!unit_norm)
        throw Error(ErrorKind::MissingUnitNorm, "real field needs the unit norm");
    if (*unit_norm != 1 && *unit_norm != -1)
        throw Error(ErrorKind::DomainError, "unit norm must be +-1");
    return *unit_norm;
}

u64 pow2(int e) {
    if (e < 0) throw Error(ErrorKind::InternalCheck, "2^negative in a group order");
    return u64(1) << e;
}

} // namespace

u64 polya_order(const QuadField& f, std::optional<int> unit_norm) {
    const int n = norm_for(f, unit_norm);
    if (f.is_real() && n == +1) return pow2(f.s_K - 2);
    return pow2(f.s_K - 1);
}

u64 genus_number(const QuadField& f, std::optional<int> unit_norm) {
    const int n = norm_for(f, unit_norm);
    if (f.is_real() && n == +1 && has_prime_3mod4(f)) return pow2(f.s_K - 2);
    return pow2(f.s_K - 1);
}

u64 narrow_genus_number(const QuadField& f) {
    // prod e_p / [K:Q] = 2^{s_K} / 2
    return pow2(f.s_K - 1);
}

u64 polya_order_via_tau(const QuadField& f, std::optional<int> unit_norm) {
    const int n = norm_for(f, unit_norm);
    u64 num = tau(f.abs_disc);
    u64 den = u64(c_factor_denominator(f));
    if (f.is_real() && n == +1) den *= 2;
    if (num % den != 0)
        throw Error(ErrorKind::NonIntegerResult, "c_K tau(d_K) not an integer");
    return num / den;
}

ClassInvariants invariants(const QuadField& f, const SpfSieve* sieve) {
    ClassInvariants inv;
    inv.field = f;

    if (f.is_real()) {
        UnitSummary u = unit_summary_cf(f.D);
        inv.unit_norm = u.norm;
        inv.regulator = u.regulator;
        ClassData cd = class_number_real(f, sieve);
        inv.h = cd.h;
        inv.h_plus = cd.h_plus;
    } else {
        inv.h = class_number_imaginary(f);
        inv.h_plus = inv.h; // no real place to relax
    }

    inv.polya_order = polya_order(f, inv.unit_norm);
    inv.g = genus_number(f, inv.unit_norm);
    inv.g_plus = narrow_genus_number(f);

    // These identities are theorems; a breach means a unit-norm or
    // class-number bug, so fail loudly instead of emitting a wrong row.
    auto check = [&](bool ok, const char* what) {
        if (!ok) throw Error(ErrorKind::InternalCheck, what);
    };
    check(inv.polya_order == polya_order_via_tau(f, inv.unit_norm),
          "#Po != c_K tau(d_K) identity");
    check(inv.h % inv.polya_order == 0, "#Po does not divide h");
    check(inv.h % inv.g == 0, "g does not divide h");
    check(inv.h_plus % inv.g_plus == 0, "g+ does not divide h+");
    check(inv.polya_order * inv.h_plus == inv.g_plus * inv.h,
          "#Po/h != g+/h+ index relation");
    if (f.is_imaginary())
        check(inv.polya_order == inv.g, "#Po != g for an imaginary field");

    inv.polya_index = inv.h / inv.polya_order;
    inv.genus_index = inv.h / inv.g;
    return inv;
}

} // namespace qpolya
