// Command-line front end: field inspection, classification sweeps, explicit
// lower-bound reports and golden-table verification for quadratic fields.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qpolya/bounds.hpp"
#include "qpolya/classify.hpp"
#include "qpolya/error.hpp"
#include "qpolya/polya.hpp"
#include "qpolya/rdtype.hpp"

#ifndef QPOLYA_DEFAULT_TABLES
#define QPOLYA_DEFAULT_TABLES "data/tables.csv"
#endif

namespace {

using qpolya::SweepRecord;

int default_workers() {
    if (const char* env = std::getenv("QPOLYA_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

std::string default_tables() {
    if (const char* env = std::getenv("QPOLYA_DATA")) return env;
    std::ifstream local("data/tables.csv");
    if (local) return "data/tables.csv";
    return QPOLYA_DEFAULT_TABLES;
}

void print_records(const std::vector<SweepRecord>& recs, const std::string& format) {
    if (format == "csv") {
        qpolya::write_csv(std::cout, recs);
        return;
    }
    if (format == "json") {
        for (const auto& r : recs) std::cout << qpolya::to_json_line(r) << '\n';
        return;
    }
    std::printf("%10s %10s %6s %6s %6s %6s %6s %5s %5s %9s %6s %6s\n", "D", "d_K",
                "h", "h+", "#Po", "g", "g+", "norm", "index", "kind", "ell", "r");
    for (const auto& r : recs) {
        std::printf("%10" PRId64 " %10" PRIu64 " %6" PRIu64 " %6" PRIu64
                    " %6" PRIu64 " %6" PRIu64 " %6" PRIu64 " %5s %5" PRIu64
                    " %9s %6s %6s\n",
                    r.D, r.d_K, r.h, r.h_plus, r.polya, r.g, r.g_plus,
                    r.norm ? (*r.norm > 0 ? "+1" : "-1") : "-", r.index,
                    r.witness ? qpolya::rd_kind_name(r.witness->kind) : "-",
                    r.witness ? std::to_string(r.witness->ell).c_str() : "-",
                    r.witness ? std::to_string(r.witness->r).c_str() : "-");
    }
}

void print_field(std::int64_t D, const std::string& format) {
    qpolya::QuadField f = qpolya::make_field(D);
    qpolya::ClassInvariants inv = qpolya::invariants(f);
    SweepRecord rec;
    rec.D = D;
    rec.d_K = f.abs_disc;
    rec.h = inv.h;
    rec.h_plus = inv.h_plus;
    rec.polya = inv.polya_order;
    rec.g = inv.g;
    rec.g_plus = inv.g_plus;
    rec.norm = inv.unit_norm;
    rec.index = inv.polya_index;
    if (D > 1) rec.witness = qpolya::best_rd_witness(std::uint64_t(D));

    if (format == "csv") {
        std::cout << qpolya::kSweepCsvHeader << '\n' << qpolya::to_csv_line(rec) << '\n';
        return;
    }
    if (format == "json") {
        std::cout << qpolya::to_json_line(rec) << '\n';
        return;
    }
    std::printf("Q(sqrt(%" PRId64 ")): disc = %" PRId64 ", d_K = %" PRIu64
                ", ramified primes =",
                D, f.disc, f.abs_disc);
    for (auto p : f.ramified_primes) std::printf(" %" PRIu64, p);
    std::printf(" (s_K = %d)\n", f.s_K);
    std::printf("  h = %" PRIu64 ", h+ = %" PRIu64 ", #Po = %" PRIu64
                ", g = %" PRIu64 ", g+ = %" PRIu64 "\n",
                inv.h, inv.h_plus, inv.polya_order, inv.g, inv.g_plus);
    std::printf("  Polya index [Cl:Po] = %" PRIu64 ", genus index = %" PRIu64 "\n",
                inv.polya_index, inv.genus_index);
    if (f.is_real()) {
        std::printf("  unit norm = %+d, regulator = %.9f\n", *inv.unit_norm,
                    inv.regulator);
        auto w = qpolya::best_rd_witness(std::uint64_t(D));
        if (w)
            std::printf("  R-D type: %s (ell = %" PRIu64 ", r = %" PRId64 ")\n",
                        qpolya::rd_kind_name(w->kind), w->ell, w->r);
        else
            std::printf("  R-D type: none\n");
    }
}

void print_reports(const std::vector<qpolya::BoundReport>& reports,
                   const std::string& format) {
    if (format == "csv") {
        std::cout << "case,threshold,f_at_threshold,paper_threshold,f_at_paper\n";
        for (const auto& r : reports)
            std::printf("%s,%.8Le,%.8Lf,%.4Le,%.8Lf\n", r.case_label.c_str(),
                        r.threshold, r.f_at_threshold, r.paper_threshold, r.f_at_paper);
        return;
    }
    for (const auto& r : reports) {
        std::printf("%-42s crossing %.6Le  (paper %.4Le, f(paper) = %.6Lf)\n",
                    r.case_label.c_str(), r.threshold, r.paper_threshold, r.f_at_paper);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polya-group, genus and class-number toolkit for quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow a subcommand
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    int workers = default_workers();
    app.add_option("--workers,-j", workers, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    double budget = 2147483648.0;
    app.add_option("--memory-budget", budget, "sweep memory budget in bytes");

    auto* cmd_field = app.add_subcommand("field", "invariants of one field Q(sqrt(D))");
    std::int64_t field_D = 0;
    cmd_field->add_option("D", field_D, "square-free integer D != 0, 1")->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "classification sweeps");
    cmd_sweep->require_subcommand(1);
    double max_d = 0;
    double index_t = 1;
    std::string rd_mode = "polya1";
    auto* sw_imag = cmd_sweep->add_subcommand(
        "imaginary", "imaginary fields with d_K <= max and h/#Po = index");
    sw_imag->add_option("--max", max_d, "d_K limit")->required();
    sw_imag->add_option("--index", index_t, "Polya index t");
    auto* sw_rd = cmd_sweep->add_subcommand(
        "rd", "real extended R-D fields with d_K <= max");
    sw_rd->add_option("--max", max_d, "d_K limit")->required();
    sw_rd->add_option("--mode", rd_mode, "polya1: #Po = h; genus-eq-class: g = h, g+ != h+")
        ->check(CLI::IsMember({"polya1", "genus-eq-class"}));

    auto* cmd_bounds = app.add_subcommand("bounds", "explicit lower-bound machinery");
    cmd_bounds->require_subcommand(1);
    auto* b_thresh = cmd_bounds->add_subcommand(
        "thresholds", "re-derive the search cutoffs (f = 1 crossings)");
    auto* b_eval = cmd_bounds->add_subcommand("eval", "evaluate one bound at d_K");
    std::string which = "ihara";
    double eval_d = 0;
    b_eval->add_option("--which", which, "ihara or mw")
        ->check(CLI::IsMember({"ihara", "mw"}))
        ->required();
    b_eval->add_option("--d", eval_d, "absolute discriminant d_K")->required();

    auto* cmd_verify = app.add_subcommand("verify", "diff recomputation against tables");
    std::string table = "all";
    std::string data_path = default_tables();
    cmd_verify->add_option("--table", table, "T1, T5, T6, T7 or all")
        ->check(CLI::IsMember({"T1", "T5", "T6", "T7", "all"}));
    cmd_verify->add_option("--data", data_path, "reference CSV path")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "usage error: " << e.what() << '\n';
        return 64;
    }

    qpolya::SweepOptions opt;
    opt.workers = workers;
    opt.memory_budget_bytes = std::uint64_t(budget);

    try {
        if (cmd_field->parsed()) {
            print_field(field_D, format);
        } else if (sw_imag->parsed()) {
            auto recs = qpolya::sweep_imaginary_index(std::uint64_t(max_d),
                                                      std::uint64_t(index_t), opt);
            std::fprintf(stderr, "%zu fields\n", recs.size());
            print_records(recs, format);
        } else if (sw_rd->parsed()) {
            auto recs = rd_mode == "polya1"
                            ? qpolya::sweep_rd_polya_index1(std::uint64_t(max_d), opt)
                            : qpolya::sweep_rd_genus_eq_class(std::uint64_t(max_d), opt);
            std::fprintf(stderr, "%zu fields\n", recs.size());
            print_records(recs, format);
        } else if (b_thresh->parsed()) {
            print_reports(qpolya::all_threshold_reports(), format);
        } else if (b_eval->parsed()) {
            long double v;
            if (which == "ihara") {
                v = qpolya::ihara_lower_bound((long double)eval_d);
            } else {
                const auto d = std::uint64_t(eval_d);
                const std::int64_t D = d % 4 == 1 ? std::int64_t(d) : std::int64_t(d / 4);
                v = qpolya::mw_lower_bound(qpolya::make_field(D));
            }
            std::printf("%.10Lg\n", v);
        } else if (cmd_verify->parsed()) {
            std::vector<std::string> ids =
                table == "all" ? std::vector<std::string>{"T1", "T5", "T6", "T7"}
                               : std::vector<std::string>{table};
            bool clean = true;
            for (const auto& id : ids) {
                auto diff = qpolya::verify_table(id, data_path, opt);
                if (diff.empty()) {
                    std::printf("%s: ok\n", id.c_str());
                    continue;
                }
                clean = false;
                std::printf("%s: diff\n", id.c_str());
                for (auto D : diff.missing)
                    std::printf("  missing D = %" PRIu64 "\n", D);
                for (auto D : diff.extra)
                    std::printf("  extra D = %" PRIu64 "\n", D);
                for (const auto& [D, what] : diff.mismatched)
                    std::printf("  mismatch D = %" PRIu64 ": %s\n", D, what.c_str());
            }
            if (!clean) return 2;
        }
    } catch (const qpolya::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
