#ifndef QPOLYA_RDTYPE_HPP
#define QPOLYA_RDTYPE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpolya/classno.hpp"

namespace qpolya {

// D = ell^2 + r with r | 4 ell.
//   NARROW:   r in {+-1, +-4}, -ell < r <= ell, D != 5
//   RD:       -ell < r <= ell, D != 5
//   EXTENDED: only r | 4 ell (D = 5 admitted)
enum class RdKind { Extended = 0, RD = 1, Narrow = 2 };

const char* rd_kind_name(RdKind k);

struct RDWitness {
    std::uint64_t ell = 0;
    std::int64_t r = 0;
    RdKind kind = RdKind::Extended;

    std::uint64_t D() const {
        return std::uint64_t(std::int64_t(ell * ell) + r);
    }

    bool operator==(const RDWitness&) const = default;
};

// Every representation (ell, r) with 1 <= ell <= ceil(sqrt(D)) + 2, each
// tagged with the strongest kind it satisfies. Empty <=> not extended R-D.
std::vector<RDWitness> rd_representations(std::uint64_t D);

// Strongest kind over all representations, or nullopt.
std::optional<RdKind> classify_rd(std::uint64_t D);

// Best witness (strongest kind, then smallest ell), or nullopt.
std::optional<RDWitness> best_rd_witness(std::uint64_t D);

// All square-free 2 <= D <= limit of extended R-D type with their best
// witness, ascending; generated from ell <= sqrt(limit) + 2 and r | 4 ell.
std::vector<std::pair<std::uint64_t, RDWitness>>
enumerate_extended_rd(std::uint64_t limit);

// The Degert unit for a witness: ell + sqrt(D), (ell + sqrt(D))/2, or
// (2 ell^2 + r + 2 ell sqrt(D)) / |r| according to |r|; verified integral of
// norm +-1 by exact arithmetic (NotAUnit otherwise).
UnitData degert_unit(const RDWitness& w);

// R_K < ln(3 D) for extended R-D fields (with the CF regulator).
bool regulator_bound_holds(std::uint64_t D);

} // namespace qpolya

#endif
