#include "qpolya/classno.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <thread>

#include "qpolya/error.hpp"

namespace qpolya {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

void require_real(const QuadField& f) {
    if (!f.is_real())
        throw Error(ErrorKind::WrongSignature, "expected a real field (D > 0)");
}

void require_imaginary(const QuadField& f) {
    if (!f.is_imaginary())
        throw Error(ErrorKind::WrongSignature, "expected an imaginary field (D < 0)");
}

} // namespace

u64 class_number_imaginary(const QuadField& f) {
    require_imaginary(f);
    const u64 d = f.abs_disc;
    u64 h = 0;
    for (u64 a = 1; 3 * a * a <= d; ++a) {
        for (u64 b = (d & 1); b <= a; b += 2) {
            u64 num = b * b + d; // 4ac
            if (num % (4 * a)) continue;
            u64 c = num / (4 * a);
            if (c < a) continue;
            // For fundamental discriminants every reduced form is primitive:
            // gcd(a,b,c) > 1 would force a square factor into the discriminant.
            assert(std::gcd(std::gcd(a, b), c) == 1);
            h += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return h;
}

std::vector<std::uint32_t> batch_class_numbers_imaginary(u64 X, int workers,
                                                         u64 memory_budget_bytes) {
    if (X < 3) throw Error(ErrorKind::DomainError, "batch: X < 3");
    if (workers < 1) workers = 1;
    const u64 bytes = (X + 1) * sizeof(std::uint32_t) * u64(workers);
    if (bytes > memory_budget_bytes)
        throw Error(ErrorKind::ResourceLimit,
                    "batch: count tables exceed the memory budget");

    const u64 a_max = isqrt_u64(X / 3);
    std::vector<std::vector<std::uint32_t>> parts(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        auto& count = parts[std::size_t(w)];
        count.assign(X + 1, 0);
        for (u64 a = u64(w) + 1; a <= a_max; a += u64(workers)) {
            for (u64 b = 0; b <= a; ++b) {
                const u64 bb = b * b;
                const u64 step = 4 * a;
                u64 d = 4 * a * a - bb; // c = a
                for (u64 c = a; d <= X; ++c, d += step) {
                    count[d] += (b == 0 || b == a || a == c) ? 1 : 2;
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
        return std::move(parts[0]);
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    auto result = std::move(parts[0]);
    for (int w = 1; w < workers; ++w)
        for (u64 d = 0; d <= X; ++d) result[d] += parts[std::size_t(w)][d];
    return result;
}

// --- continued fractions -----------------------------------------------------

namespace {

// One PQa state (P + sqrt(Delta)) / Q of the expansion of omega_Delta.
struct CfCycle {
    std::vector<std::pair<i64, i64>> pq; // states of the periodic cycle
    std::vector<i64> partials;           // partial quotients over the cycle
    int period = 0;
};

CfCycle cf_cycle(i64 Delta) {
    const i64 s = i64(isqrt_u64(u64(Delta)));
    i64 P = Delta & 1, Q = 2;
    std::vector<std::pair<i64, i64>> seen;
    std::vector<i64> quots;
    std::size_t k = 0;
    while (true) {
        auto it = std::find(seen.begin(), seen.end(), std::make_pair(P, Q));
        if (it != seen.end()) {
            k = std::size_t(it - seen.begin());
            break;
        }
        seen.emplace_back(P, Q);
        i64 a = (P + s) / Q;
        quots.push_back(a);
        P = a * Q - P;
        Q = (Delta - P * P) / Q;
        if (Q <= 0)
            throw Error(ErrorKind::InternalCheck, "CF state left the positive cone");
    }
    CfCycle cyc;
    cyc.period = int(seen.size() - k);
    for (std::size_t i = k; i < seen.size(); ++i) {
        cyc.pq.push_back(seen[i]);
        cyc.partials.push_back(quots[i]);
    }
    return cyc;
}

i64 checked_delta(i64 D) {
    if (D <= 1) throw Error(ErrorKind::DomainError, "real CF requires D > 1");
    if (!is_squarefree(u64(D)))
        throw Error(ErrorKind::NotSquarefree, "D has a square factor");
    return (((D % 4) + 4) % 4) == 1 ? D : 4 * D;
}

} // namespace

UnitSummary unit_summary_cf(i64 D) {
    const i64 Delta = checked_delta(D);
    CfCycle cyc = cf_cycle(Delta);
    UnitSummary u;
    u.period = cyc.period;
    u.norm = (cyc.period % 2 == 0) ? +1 : -1;
    const double sq = std::sqrt(double(Delta));
    double reg = 0.0;
    for (auto [P, Q] : cyc.pq) reg += std::log((double(P) + sq) / double(Q));
    u.regulator = reg;
    return u;
}

UnitData fundamental_unit_cf(i64 D) {
    const i64 Delta = checked_delta(D);
    CfCycle cyc = cf_cycle(Delta);

    // eps = q1 * omega_k + q0 where q are continuants of the cycle's partial
    // quotients and omega_k = (P_k + sqrt(Delta)) / Q_k opens the cycle.
    BigInt q1 = 0, q0 = 1;
    for (i64 a : cyc.partials) {
        BigInt next = a * q1 + q0;
        q0 = q1;
        q1 = next;
    }
    const i64 Pk = cyc.pq.front().first;
    const i64 Qk = cyc.pq.front().second;
    BigInt num_rat = q1 * Pk + q0 * Qk;
    BigInt num_irr = q1; // coefficient of sqrt(Delta)
    BigInt den = Qk;
    if (Delta == 4 * D) num_irr *= 2; // sqrt(Delta) = 2 sqrt(D)

    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(num_rat, num_irr), den);
    num_rat /= g;
    num_irr /= g;
    den /= g;
    if (den != 1 && den != 2)
        throw Error(ErrorKind::InternalCheck, "CF unit: denominator not 1 or 2");

    UnitData u;
    u.a = num_rat;
    u.b = num_irr;
    u.q = int(den);
    BigInt nrm = (num_rat * num_rat - D * num_irr * num_irr) / (den * den);
    if (nrm != 1 && nrm != -1)
        throw Error(ErrorKind::InternalCheck, "CF unit: norm not +-1");
    u.norm = int(nrm);

    const double sq = std::sqrt(double(Delta));
    double reg = 0.0;
    for (auto [P, Q] : cyc.pq) reg += std::log((double(P) + sq) / double(Q));
    u.regulator = reg;
    return u;
}

// --- reduced indefinite forms -------------------------------------------------

namespace {

// reduced <=> 0 < b < sqrt(Delta) and sqrt(Delta) - b < 2|a| < sqrt(Delta) + b
bool in_window(u64 two_a, u64 b, u64 Delta) {
    const u64 hi = two_a + b;
    if (hi * hi <= Delta) return false; // 2|a| <= sqrt(D) - b
    if (two_a > b) {
        const u64 lo = two_a - b;
        if (lo * lo >= Delta) return false; // 2|a| >= sqrt(D) + b
    }
    return true;
}

struct Form {
    i64 a;
    i64 b;
    bool operator<(const Form& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
    bool operator==(const Form& o) const = default;
};

} // namespace

u64 narrow_class_number_cycles(u64 disc, const SpfSieve* sieve) {
    const u64 s = isqrt_u64(disc);
    if (s * s == disc)
        throw Error(ErrorKind::DomainError, "discriminant must not be a square");

    std::vector<Form> forms;
    for (u64 b = (disc & 1) ? 1 : 2; b <= s; b += 2) {
        const u64 N = (disc - b * b) / 4; // = -ac
        std::vector<u64> divs;
        if (sieve && N <= sieve->limit()) {
            divs = divisors(sieve->factorize(std::uint32_t(N)));
        } else {
            divs = divisors(factorize(N));
        }
        for (u64 a : divs) {
            if (!in_window(2 * a, b, disc)) continue;
            forms.push_back({i64(a), i64(b)});
            forms.push_back({-i64(a), i64(b)});
        }
    }
    std::sort(forms.begin(), forms.end());

    auto index_of = [&](Form f) {
        auto it = std::lower_bound(forms.begin(), forms.end(), f);
        if (it == forms.end() || !(*it == f))
            throw Error(ErrorKind::InternalCheck, "rho left the reduced set");
        return std::size_t(it - forms.begin());
    };
    auto c_of = [&](Form f) {
        return (i64(f.b) * f.b - i64(disc)) / (4 * i64(f.a));
    };

    std::vector<bool> visited(forms.size(), false);
    u64 cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (visited[i]) continue;
        ++cycles;
        Form f = forms[i];
        std::size_t j = i;
        while (!visited[j]) {
            visited[j] = true;
            const i64 c = c_of(f);
            const i64 ac = c < 0 ? -c : c;
            const i64 delta = (f.b + i64(s)) / (2 * ac);
            const i64 b2 = 2 * ac * delta - f.b;
            f = {c, b2};
            j = index_of(f);
        }
    }
    return cycles;
}

ClassData class_number_real(const QuadField& f, const SpfSieve* sieve) {
    require_real(f);
    UnitSummary u = unit_summary_cf(f.D);
    ClassData cd;
    cd.h_plus = narrow_class_number_cycles(f.abs_disc, sieve);
    if (u.norm == -1) {
        cd.h = cd.h_plus;
    } else {
        if (cd.h_plus % 2 != 0)
            throw Error(ErrorKind::InternalCheck, "h+ odd with unit norm +1");
        cd.h = cd.h_plus / 2;
    }
    return cd;
}

// --- analytic class number ----------------------------------------------------

u64 class_number_analytic(const QuadField& f) {
    if (f.abs_disc > 10'000'000)
        throw Error(ErrorKind::DomainError, "analytic oracle requires d_K <= 1e7");
    const i64 disc = f.disc;
    const u64 d = f.abs_disc;

    if (f.is_imaginary()) {
        // h = w |sum chi(r) r| / (2 d), exact in integers
        i64 S = 0;
        for (u64 r = 1; r < d; ++r) S += i64(kronecker_symbol(disc, i64(r))) * i64(r);
        if (S < 0) S = -S;
        const i64 w = d == 3 ? 6 : d == 4 ? 4 : 2;
        const i64 num = w * S;
        if (num % i64(2 * d) != 0)
            throw Error(ErrorKind::PrecisionFailure, "imaginary character sum not integral");
        return u64(num / i64(2 * d));
    }

    // real: h = -sum chi(r) ln sin(pi r / d) / (2 R)
    double S = 0.0;
    for (u64 r = 1; r < d; ++r) {
        int chi = kronecker_symbol(disc, i64(r));
        if (chi) S -= chi * std::log(std::sin(M_PI * double(r) / double(d)));
    }
    const double R = unit_summary_cf(f.D).regulator;
    const double val = S / (2.0 * R);
    const double rounded = std::round(val);
    if (std::abs(val - rounded) > 0.2)
        throw Error(ErrorKind::PrecisionFailure, "analytic value too far from an integer");
    return u64(rounded);
}

} // namespace qpolya
