#ifndef QPOLYA_CLASSIFY_HPP
#define QPOLYA_CLASSIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpolya/polya.hpp"
#include "qpolya/rdtype.hpp"

namespace qpolya {

// One classified field. D is signed (negative for imaginary sweeps); the
// reference tables print |D|.
struct SweepRecord {
    std::int64_t D = 0;
    std::uint64_t d_K = 0;
    std::uint64_t h = 0;
    std::uint64_t h_plus = 0;
    std::uint64_t polya = 0;
    std::uint64_t g = 0;
    std::uint64_t g_plus = 0;
    std::optional<int> norm;          // real fields only
    std::uint64_t index = 0;          // Polya index h / #Po
    std::optional<RDWitness> witness; // real sweeps only

    bool operator==(const SweepRecord&) const = default;
};

struct SweepOptions {
    int workers = 1;
    std::uint64_t memory_budget_bytes = std::uint64_t(1) << 31;
};

// All imaginary quadratic D with d_K <= limit and h / #Po = t, ascending by
// d_K; backed by the batch form sieve.
std::vector<SweepRecord> sweep_imaginary_index(std::uint64_t limit,
                                               std::uint64_t t,
                                               const SweepOptions& opt = {});

// All real extended R-D fields with d_K <= limit and #Po = h.
std::vector<SweepRecord> sweep_rd_polya_index1(std::uint64_t limit,
                                               const SweepOptions& opt = {});

// All real extended R-D fields with d_K <= limit, g = h and g+ != h+;
// equivalently norm +1, no prime divisor = 3 mod 4, and h = 2^{s-1}.
std::vector<SweepRecord> sweep_rd_genus_eq_class(std::uint64_t limit,
                                                 const SweepOptions& opt = {});

// --- reference tables ------------------------------------------------------

// data/tables.csv rows: table,group,D (group is "h" or "h:h_plus").
struct TableRow {
    std::string table;
    std::string group;
    std::uint64_t D = 0;
};

std::vector<TableRow> load_reference_tables(const std::string& path);

struct TableDiff {
    std::string table_id;
    std::vector<std::uint64_t> missing;                    // in table, not computed
    std::vector<std::uint64_t> extra;                      // computed, not in table
    std::vector<std::pair<std::uint64_t, std::string>> mismatched; // D, detail

    bool empty() const {
        return missing.empty() && extra.empty() && mismatched.empty();
    }
};

// Recomputes the named table by sweeping up to its own maximal d_K and diffs
// set membership and row-group values. table_id in {T1, T5, T6, T7}.
TableDiff verify_table(const std::string& table_id, const std::string& data_path,
                       const SweepOptions& opt = {});

// Group string a record belongs to in a given table's row scheme.
std::string record_group(const std::string& table_id, const SweepRecord& rec);

// --- serialization ---------------------------------------------------------

extern const char* const kSweepCsvHeader; // D,d_K,h,h_plus,polya,g,g_plus,norm,index,kind,ell,r

std::string to_csv_line(const SweepRecord& rec);
std::string to_json_line(const SweepRecord& rec);
SweepRecord parse_csv_line(const std::string& line);

void write_csv(std::ostream& os, const std::vector<SweepRecord>& recs);
std::vector<SweepRecord> read_csv(std::istream& is);

} // namespace qpolya

#endif
