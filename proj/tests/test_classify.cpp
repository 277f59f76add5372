#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "qpolya/classify.hpp"
#include "qpolya/error.hpp"

using namespace qpolya;

#ifndef QPOLYA_TABLES_CSV
#define QPOLYA_TABLES_CSV "data/tables.csv"
#endif

namespace {

std::set<std::int64_t> field_set(const std::vector<SweepRecord>& recs) {
    std::set<std::int64_t> s;
    for (const auto& r : recs) s.insert(r.D);
    return s;
}

} // namespace

TEST_CASE("imaginary index sweeps") {
    auto t1 = sweep_imaginary_index(170, 1);
    auto s1 = field_set(t1);
    CHECK(s1.count(-163) == 1);

    // exactly the Table-1 rows with d_K <= 170
    std::set<std::int64_t> want;
    for (const auto& row : load_reference_tables(QPOLYA_TABLES_CSV)) {
        if (row.table != "T1") continue;
        const std::uint64_t d = row.D % 4 == 3 ? row.D : 4 * row.D;
        if (d <= 170) want.insert(-std::int64_t(row.D));
    }
    CHECK(s1 == want);

    auto t2 = sweep_imaginary_index(60, 2);
    CHECK(field_set(t2).count(-14) == 1);

    CHECK(sweep_imaginary_index(10, 3).empty());
}

TEST_CASE("rd polya-index-one sweep") {
    auto recs = sweep_rd_polya_index1(120); // covers D <= 30 for even residues
    auto s = field_set(recs);
    for (std::int64_t D : {2, 5, 13, 17, 3, 6, 7, 11, 14, 21, 10, 26})
        CHECK(s.count(D) == 1);
    CHECK(s.count(34) == 0);
}

TEST_CASE("rd genus-eq-class sweep") {
    auto recs = sweep_rd_genus_eq_class(2400); // d_K limit covers D <= 600 evens
    auto s = field_set(recs);
    for (std::int64_t D : {34, 146, 194, 205, 221, 482})
        CHECK(s.count(D) == 1);
    CHECK(s.count(10) == 0);

    auto big = sweep_rd_genus_eq_class(330000);
    auto sb = field_set(big);
    CHECK(sb.count(81770) == 1);
    for (const auto& r : big)
        if (r.D == 81770) {
            CHECK(r.g == 16);
            CHECK(r.h == 16);
        }
}

TEST_CASE("reference table transcription checksum") {
    auto rows = load_reference_tables(QPOLYA_TABLES_CSV);
    std::map<std::string, int> counts;
    for (const auto& r : rows) ++counts[r.table];
    CHECK(counts["T1"] == 65);
    CHECK(counts["T5"] == 161);
    CHECK(counts["T6"] == 269);
    CHECK(counts["T7"] == 29);
    CHECK_THROWS_AS(load_reference_tables("/nonexistent/tables.csv"), Error);
}

TEST_CASE("verify_table reproduces every table") {
    for (const char* id : {"T1", "T5", "T6", "T7"}) {
        CAPTURE(id);
        TableDiff diff = verify_table(id, QPOLYA_TABLES_CSV);
        CHECK(diff.missing.empty());
        CHECK(diff.extra.empty());
        CHECK(diff.mismatched.empty());
    }
}

TEST_CASE("csv round trip") {
    auto recs = sweep_rd_polya_index1(500);
    REQUIRE(!recs.empty());
    std::ostringstream os;
    write_csv(os, recs);
    std::istringstream is(os.str());
    auto back = read_csv(is);
    CHECK(back == recs);

    auto imag = sweep_imaginary_index(500, 1);
    std::ostringstream os2;
    write_csv(os2, imag);
    std::istringstream is2(os2.str());
    CHECK(read_csv(is2) == imag);
}

TEST_CASE("json lines carry the same fields") {
    auto recs = sweep_rd_polya_index1(200);
    REQUIRE(!recs.empty());
    const SweepRecord* two = nullptr;
    for (const auto& r : recs)
        if (r.D == 2) two = &r;
    REQUIRE(two != nullptr);
    const std::string line = to_json_line(*two);
    CHECK(line.find("\"D\":2") != std::string::npos);
    CHECK(line.find("\"norm\":-1") != std::string::npos);
    CHECK(line.find("\"kind\":\"narrow\"") != std::string::npos);
}

TEST_CASE("worker count does not change output") {
    SweepOptions one;
    one.workers = 1;
    SweepOptions three;
    three.workers = 3;

    auto a = sweep_imaginary_index(5460, 1, one);
    auto b = sweep_imaginary_index(5460, 1, three);
    std::ostringstream osa, osb;
    write_csv(osa, a);
    write_csv(osb, b);
    CHECK(osa.str() == osb.str());

    auto c = sweep_rd_polya_index1(25000, one);
    auto d = sweep_rd_polya_index1(25000, three);
    std::ostringstream osc, osd;
    write_csv(osc, c);
    write_csv(osd, d);
    CHECK(osc.str() == osd.str());
}
