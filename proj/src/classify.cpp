#include "qpolya/classify.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qpolya/error.hpp"

namespace qpolya {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 pow2u(int e) { return u64(1) << e; }

// omega[k] = number of distinct primes of k, 0 <= k <= limit
std::vector<std::uint8_t> omega_sieve(u64 limit) {
    std::vector<std::uint8_t> om(limit + 1, 0);
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (u64 k = p; k <= limit; k += p) {
            ++om[k];
            if (k > p) composite[k] = true;
        }
    }
    return om;
}

SweepRecord imaginary_record(u64 m, u64 d, int s, u64 h) {
    const u64 po = pow2u(s - 1);
    if (h % po != 0)
        throw Error(ErrorKind::InternalCheck, "#Po does not divide h in sweep");
    SweepRecord rec;
    rec.D = -i64(m);
    rec.d_K = d;
    rec.h = h;
    rec.h_plus = h;
    rec.polya = po;
    rec.g = po; // #Po(K) = g_K for imaginary fields
    rec.g_plus = po;
    rec.index = h / po;
    return rec;
}

template <class Fn>
void parallel_chunks(std::size_t n, int workers, Fn fn) {
    if (workers <= 1 || n == 0) {
        fn(std::size_t(0), n, 0);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + std::size_t(workers) - 1) / std::size_t(workers);
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = std::size_t(w) * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi, w);
    }
    for (auto& t : pool) t.join();
}

void sort_records(std::vector<SweepRecord>& recs) {
    std::sort(recs.begin(), recs.end(), [](const SweepRecord& a, const SweepRecord& b) {
        if (a.d_K != b.d_K) return a.d_K < b.d_K;
        return a.D < b.D;
    });
}

} // namespace

std::vector<SweepRecord> sweep_imaginary_index(u64 limit, u64 t,
                                               const SweepOptions& opt) {
    if (limit < 3) throw Error(ErrorKind::DomainError, "sweep: limit < 3");
    if (t < 1) throw Error(ErrorKind::DomainError, "sweep: index t < 1");
    const auto count =
        batch_class_numbers_imaginary(limit, opt.workers, opt.memory_budget_bytes);
    const auto sf = squarefree_sieve(limit);
    const auto om = omega_sieve(limit);

    std::vector<SweepRecord> out;
    for (u64 m = 1; m <= limit; ++m) {
        if (!sf[m]) continue;
        // field Q(sqrt(-m)): disc = -m when -m = 1 mod 4, else -4m
        const bool odd_disc = (m % 4 == 3);
        const u64 d = odd_disc ? m : 4 * m;
        if (d > limit) continue;
        const int s = om[m] + ((m % 2 == 1 && !odd_disc) ? 1 : 0);
        SweepRecord rec = imaginary_record(m, d, s, count[d]);
        if (rec.index != t) continue;
        // the divisor-function identity must hold on every emitted record
        QuadField f = make_field(rec.D);
        if (polya_order_via_tau(f, std::nullopt) != rec.polya)
            throw Error(ErrorKind::InternalCheck, "#Po != c_K tau(d_K) on a record");
        out.push_back(rec);
    }
    sort_records(out);
    return out;
}

namespace {

enum class RdMode { PolyaIndex1, GenusEqClass };

std::vector<SweepRecord> sweep_rd(u64 limit, RdMode mode, const SweepOptions& opt) {
    if (limit < 5) throw Error(ErrorKind::DomainError, "sweep: limit < 5");
    auto candidates = enumerate_extended_rd(limit);
    const u64 sieve_limit = limit / 4 + 2;
    if (sieve_limit * sizeof(std::uint32_t) > opt.memory_budget_bytes)
        throw Error(ErrorKind::ResourceLimit, "sweep: SPF sieve exceeds memory budget");
    const SpfSieve sieve(static_cast<std::uint32_t>(sieve_limit));

    std::vector<std::vector<SweepRecord>> parts(
        std::size_t(std::max(1, opt.workers)));
    parallel_chunks(candidates.size(), opt.workers,
                    [&](std::size_t lo, std::size_t hi, int w) {
        auto& local = parts[std::size_t(w)];
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& [D, witness] = candidates[i];
            QuadField f = make_field(i64(D));
            if (f.abs_disc > limit) continue;
            if (mode == RdMode::GenusEqClass) {
                // Case-2 prefilter: norm +1 and no prime divisor p = 3 mod 4;
                // fields with such a divisor can never land in this table
                if (has_prime_3mod4(f)) continue;
            }
            ClassInvariants inv = invariants(f, &sieve);
            bool keep = false;
            if (mode == RdMode::PolyaIndex1) {
                keep = inv.polya_order == inv.h;
            } else {
                keep = inv.g == inv.h && inv.g_plus != inv.h_plus;
            }
            if (!keep) continue;
            SweepRecord rec;
            rec.D = i64(D);
            rec.d_K = f.abs_disc;
            rec.h = inv.h;
            rec.h_plus = inv.h_plus;
            rec.polya = inv.polya_order;
            rec.g = inv.g;
            rec.g_plus = inv.g_plus;
            rec.norm = inv.unit_norm;
            rec.index = inv.polya_index;
            rec.witness = witness;
            local.push_back(rec);
        }
    });
    std::vector<SweepRecord> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    sort_records(out);
    return out;
}

} // namespace

std::vector<SweepRecord> sweep_rd_polya_index1(u64 limit, const SweepOptions& opt) {
    return sweep_rd(limit, RdMode::PolyaIndex1, opt);
}

std::vector<SweepRecord> sweep_rd_genus_eq_class(u64 limit, const SweepOptions& opt) {
    return sweep_rd(limit, RdMode::GenusEqClass, opt);
}

// --- reference tables ---------------------------------------------------------

std::vector<TableRow> load_reference_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::DataFileMissing, "cannot open " + path);
    std::vector<TableRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ss(line);
        TableRow row;
        std::string dstr;
        if (!std::getline(ss, row.table, ',') || !std::getline(ss, row.group, ',') ||
            !std::getline(ss, dstr))
            throw Error(ErrorKind::DataFileMissing, "malformed row in " + path);
        row.D = std::stoull(dstr);
        rows.push_back(row);
    }
    if (rows.empty()) throw Error(ErrorKind::DataFileMissing, "no rows in " + path);
    return rows;
}

std::string record_group(const std::string& table_id, const SweepRecord& rec) {
    if (table_id == "T6")
        return std::to_string(rec.h) + ":" + std::to_string(rec.h_plus);
    return std::to_string(rec.h);
}

TableDiff verify_table(const std::string& table_id, const std::string& data_path,
                       const SweepOptions& opt) {
    if (table_id != "T1" && table_id != "T5" && table_id != "T6" && table_id != "T7")
        throw Error(ErrorKind::DomainError, "unknown table " + table_id);

    std::vector<TableRow> rows;
    for (const auto& r : load_reference_tables(data_path))
        if (r.table == table_id) rows.push_back(r);
    if (rows.empty())
        throw Error(ErrorKind::DataFileMissing, "no rows for " + table_id);

    const bool imaginary = table_id == "T1" || table_id == "T5";
    u64 max_d = 0;
    for (const auto& r : rows) {
        const u64 res = r.D % 4;
        const u64 d = imaginary ? (res == 3 ? r.D : 4 * r.D)
                                : (res == 1 ? r.D : 4 * r.D);
        max_d = std::max(max_d, d);
    }

    std::vector<SweepRecord> recs;
    if (table_id == "T1")
        recs = sweep_imaginary_index(max_d, 1, opt);
    else if (table_id == "T5")
        recs = sweep_imaginary_index(max_d, 2, opt);
    else if (table_id == "T6")
        recs = sweep_rd_polya_index1(max_d, opt);
    else
        recs = sweep_rd_genus_eq_class(max_d, opt);

    std::vector<std::pair<u64, std::string>> computed; // |D| -> group
    for (const auto& rec : recs)
        computed.emplace_back(u64(rec.D < 0 ? -rec.D : rec.D),
                              record_group(table_id, rec));
    std::sort(computed.begin(), computed.end());

    TableDiff diff;
    diff.table_id = table_id;
    for (const auto& row : rows) {
        auto it = std::lower_bound(computed.begin(), computed.end(),
                                   std::make_pair(row.D, std::string()));
        if (it == computed.end() || it->first != row.D) {
            diff.missing.push_back(row.D);
        } else if (it->second != row.group) {
            diff.mismatched.emplace_back(
                row.D, "table says " + row.group + ", computed " + it->second);
        }
    }
    for (const auto& [D, group] : computed) {
        bool found = false;
        for (const auto& row : rows)
            if (row.D == D) {
                found = true;
                break;
            }
        if (!found) diff.extra.push_back(D);
    }
    return diff;
}

// --- serialization --------------------------------------------------------------

const char* const kSweepCsvHeader = "D,d_K,h,h_plus,polya,g,g_plus,norm,index,kind,ell,r";

std::string to_csv_line(const SweepRecord& rec) {
    std::ostringstream os;
    os << rec.D << ',' << rec.d_K << ',' << rec.h << ',' << rec.h_plus << ','
       << rec.polya << ',' << rec.g << ',' << rec.g_plus << ',';
    if (rec.norm) os << (*rec.norm > 0 ? "+1" : "-1");
    os << ',' << rec.index << ',';
    if (rec.witness) os << rd_kind_name(rec.witness->kind);
    os << ',';
    if (rec.witness) os << rec.witness->ell;
    os << ',';
    if (rec.witness) os << rec.witness->r;
    return os.str();
}

SweepRecord parse_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    while (cells.size() < 12) cells.emplace_back();
    SweepRecord rec;
    rec.D = std::stoll(cells[0]);
    rec.d_K = std::stoull(cells[1]);
    rec.h = std::stoull(cells[2]);
    rec.h_plus = std::stoull(cells[3]);
    rec.polya = std::stoull(cells[4]);
    rec.g = std::stoull(cells[5]);
    rec.g_plus = std::stoull(cells[6]);
    if (!cells[7].empty()) rec.norm = std::stoi(cells[7]);
    rec.index = std::stoull(cells[8]);
    if (!cells[9].empty()) {
        RDWitness w;
        w.kind = cells[9] == "narrow" ? RdKind::Narrow
               : cells[9] == "rd"     ? RdKind::RD
                                      : RdKind::Extended;
        w.ell = std::stoull(cells[10]);
        w.r = std::stoll(cells[11]);
        rec.witness = w;
    }
    return rec;
}

std::string to_json_line(const SweepRecord& rec) {
    nlohmann::json j;
    j["D"] = rec.D;
    j["d_K"] = rec.d_K;
    j["h"] = rec.h;
    j["h_plus"] = rec.h_plus;
    j["polya"] = rec.polya;
    j["g"] = rec.g;
    j["g_plus"] = rec.g_plus;
    j["norm"] = rec.norm ? nlohmann::json(*rec.norm) : nlohmann::json(nullptr);
    j["index"] = rec.index;
    if (rec.witness) {
        j["kind"] = rd_kind_name(rec.witness->kind);
        j["ell"] = rec.witness->ell;
        j["r"] = rec.witness->r;
    } else {
        j["kind"] = nullptr;
        j["ell"] = nullptr;
        j["r"] = nullptr;
    }
    return j.dump();
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& recs) {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : recs) os << to_csv_line(r) << '\n';
}

std::vector<SweepRecord> read_csv(std::istream& is) {
    std::vector<SweepRecord> recs;
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        recs.push_back(parse_csv_line(line));
    }
    return recs;
}

} // namespace qpolya
