#include "qpolya/rdtype.hpp"

#include <algorithm>
#include <cmath>

#include "qpolya/error.hpp"

namespace qpolya {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

RdKind kind_of(u64 D, u64 ell, i64 r) {
    if (D != 5 && -i64(ell) < r && r <= i64(ell))
        return (r == 1 || r == -1 || r == 4 || r == -4) ? RdKind::Narrow : RdKind::RD;
    return RdKind::Extended;
}

bool stronger(const RDWitness& a, const RDWitness& b) {
    if (a.kind != b.kind) return int(a.kind) > int(b.kind);
    return a.ell < b.ell;
}

} // namespace

const char* rd_kind_name(RdKind k) {
    switch (k) {
        case RdKind::Narrow: return "narrow";
        case RdKind::RD: return "rd";
        case RdKind::Extended: return "extended";
    }
    return "?";
}

std::vector<RDWitness> rd_representations(u64 D) {
    if (D < 2) throw Error(ErrorKind::DomainError, "rd_representations: D < 2");
    if (!is_squarefree(D))
        throw Error(ErrorKind::NotSquarefree, "rd_representations: D not square-free");
    std::vector<RDWitness> reps;
    const u64 s = isqrt_u64(D);
    const u64 ell_max = s + (s * s == D ? 0 : 1) + 2; // ceil(sqrt(D)) + 2
    for (u64 ell = 1; ell <= ell_max; ++ell) {
        const i64 r = i64(D) - i64(ell * ell);
        if (r == 0) continue;
        const u64 ar = u64(r < 0 ? -r : r);
        if ((4 * ell) % ar != 0) continue;
        reps.push_back({ell, r, kind_of(D, ell, r)});
    }
    return reps;
}

std::optional<RdKind> classify_rd(u64 D) {
    auto w = best_rd_witness(D);
    if (!w) return std::nullopt;
    return w->kind;
}

std::optional<RDWitness> best_rd_witness(u64 D) {
    auto reps = rd_representations(D);
    if (reps.empty()) return std::nullopt;
    RDWitness best = reps.front();
    for (const auto& w : reps)
        if (stronger(w, best)) best = w;
    return best;
}

std::vector<std::pair<u64, RDWitness>> enumerate_extended_rd(u64 limit) {
    if (limit < 2) throw Error(ErrorKind::DomainError, "enumerate_extended_rd: limit < 2");
    std::vector<bool> sf = squarefree_sieve(limit);
    std::vector<std::pair<u64, RDWitness>> all;
    const u64 ell_max = isqrt_u64(limit) + 2;
    for (u64 ell = 1; ell <= ell_max; ++ell) {
        for (u64 v : divisors(factorize(4 * ell))) {
            for (i64 r : {i64(v), -i64(v)}) {
                const i64 Ds = i64(ell * ell) + r;
                if (Ds < 2 || u64(Ds) > limit) continue;
                const u64 D = u64(Ds);
                if (!sf[D]) continue;
                all.emplace_back(D, RDWitness{ell, r, kind_of(D, ell, r)});
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return stronger(x.second, y.second);
    });
    // keep the best witness per D
    std::vector<std::pair<u64, RDWitness>> out;
    for (const auto& e : all)
        if (out.empty() || out.back().first != e.first) out.push_back(e);
    return out;
}

UnitData degert_unit(const RDWitness& w) {
    const u64 D = w.D();
    const i64 ell = i64(w.ell);
    const i64 r = w.r;
    const i64 ar = r < 0 ? -r : r;
    if (ar == 0 || (4 * ell) % ar != 0)
        throw Error(ErrorKind::NotAUnit, "witness violates r | 4 ell");

    // element (A + B sqrt(D)) / q by the three-case formula
    i64 A, B, q;
    if (ar == 1) {
        A = ell, B = 1, q = 1;
    } else if (ar == 4) {
        A = ell, B = 1, q = 2;
    } else {
        A = 2 * ell * ell + r, B = 2 * ell, q = ar;
    }

    // integrality in O_K via the half-integer basis: x = (t + s sqrt(D)) / 2
    if ((2 * A) % q != 0 || (2 * B) % q != 0)
        throw Error(ErrorKind::NotAUnit, "Degert element is not an algebraic integer");
    const i64 t = 2 * A / q, s2 = 2 * B / q;
    const bool d1mod4 = D % 4 == 1;
    if (d1mod4 ? ((t - s2) % 2 != 0) : (t % 2 != 0 || s2 % 2 != 0))
        throw Error(ErrorKind::NotAUnit, "Degert element is not an algebraic integer");

    UnitData u;
    if (t % 2 == 0 && s2 % 2 == 0) {
        u.a = t / 2;
        u.b = s2 / 2;
        u.q = 1;
    } else {
        u.a = t;
        u.b = s2;
        u.q = 2;
    }
    const BigInt nrm = (u.a * u.a - i64(D) * u.b * u.b) / (u.q * u.q);
    if (nrm != 1 && nrm != -1)
        throw Error(ErrorKind::NotAUnit, "Degert element has norm != +-1");
    u.norm = int(nrm);
    u.regulator = std::log((u.a.convert_to<double>() +
                            u.b.convert_to<double>() * std::sqrt(double(D))) /
                           u.q);
    return u;
}

bool regulator_bound_holds(u64 D) {
    if (!classify_rd(D))
        throw Error(ErrorKind::DomainError, "D is not of extended R-D type");
    const double reg = unit_summary_cf(i64(D)).regulator;
    return reg < std::log(3.0 * double(D));
}

} // namespace qpolya
