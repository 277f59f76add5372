#include "qpolya/quadfield.hpp"

#include "qpolya/error.hpp"

namespace qpolya {

QuadField make_field(std::int64_t D) {
    if (D == 0 || D == 1)
        throw Error(ErrorKind::DegenerateD, "D must not be 0 or 1");
    std::uint64_t absD = D < 0 ? std::uint64_t(-D) : std::uint64_t(D);
    Factorization fac = factorize(absD);
    for (auto [p, e] : fac.factors)
        if (e > 1) throw Error(ErrorKind::NotSquarefree, "D has a square factor");

    QuadField f;
    f.D = D;
    f.residue = int(((D % 4) + 4) % 4); // 1, 2 or 3 for square-free D != 1
    f.disc = f.residue == 1 ? D : 4 * D;
    f.abs_disc = f.disc < 0 ? std::uint64_t(-f.disc) : std::uint64_t(f.disc);
    for (auto [p, e] : fac.factors) f.ramified_primes.push_back(p);
    if (f.residue != 1 && absD % 2 == 1) {
        f.ramified_primes.insert(f.ramified_primes.begin(), 2);
    }
    f.s_K = int(f.ramified_primes.size());
    return f;
}

int c_factor_denominator(int residue) {
    switch (residue) {
        case 1: return 2;
        case 3: return 3;
        case 2: return 4;
    }
    throw Error(ErrorKind::DomainError, "residue must be 1, 2 or 3");
}

double c_prime_factor(int residue) {
    // The residue-1 constant is sup tau(n)/n^{1/4} over odd square-free n,
    // attained at n = 3*5*7*11*13 = 15015 where the ratio is 2.89080394...;
    // it must be rounded up or the strict bound fails at the extremum.
    switch (residue) {
        case 1: return 2.8909;
        case 3: return 7.2927;
        case 2: return 9.7235;
    }
    throw Error(ErrorKind::DomainError, "residue must be 1, 2 or 3");
}

int c_factor_denominator(const QuadField& f) { return c_factor_denominator(f.residue); }

double c_prime_factor(const QuadField& f) { return c_prime_factor(f.residue); }

bool has_prime_3mod4(const QuadField& f) {
    // every odd ramified prime divides D itself
    for (std::uint64_t p : f.ramified_primes)
        if (p % 4 == 3) return true;
    return false;
}

} // namespace qpolya
