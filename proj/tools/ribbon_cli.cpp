// Batch/single-knot classifier. Exit codes: 0 success, 1 input error,
// 2 internal error.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ribbon/batch.hpp"
#include "ribbon/certificate.hpp"

using namespace ribbon;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"ribbon: algorithmic ribbonness of alternating knots"};
    std::string input, format = "dt", summary_file, cert_dir, render;
    RunConfig cfg;
    bool quiet = false;
    app.add_option("--input", input, "input file (or a literal code with --format dt|pd)")
        ->required();
    app.add_option("--format", format, "dt | pd | csv")
        ->check(CLI::IsMember({"dt", "pd", "csv"}));
    app.add_option("--min-crossings", cfg.min_crossings, "skip table rows below");
    app.add_option("--max-crossings", cfg.max_crossings, "skip table rows above");
    app.add_option("--max-bands", cfg.search.max_bands, "band search depth cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-nodes", cfg.search.max_nodes, "search node cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--certificates", cfg.certificate_dir, "directory for .cert files");
    app.add_flag("--verify", cfg.verify, "verify certificates before writing");
    app.add_option("--summary", summary_file, "write per-crossing summary CSV here");
    app.add_option("--render", cfg.render, "also render certificates: svg | text")
        ->check(CLI::IsMember({"svg", "text"}));
    app.add_flag("--quiet", quiet, "suppress per-knot lines");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    std::vector<KnotEntry> table;
    if (format == "csv") {
        try {
            table = load_knot_csv(input);
        } catch (const std::exception& e) {
            throw std::invalid_argument(e.what());
        }
    } else {
        // literal code or a file of codes, one per line
        std::vector<std::string> lines;
        std::ifstream f(input);
        if (f) {
            for (std::string l; std::getline(f, l);)
                if (!l.empty() && l[0] != '#') lines.push_back(l);
        } else {
            lines.push_back(input);
        }
        int i = 0;
        for (const auto& l : lines) {
            KnotEntry e;
            e.name = "input" + std::to_string(++i);
            if (format == "dt") {
                e.dt = parse_int_list(l);
            } else {
                e.dt = minimal_dt(parse_pd(l));  // normalise PD to DT for the pipeline
            }
            table.push_back(std::move(e));
        }
    }

    auto rows = run_batch(table, cfg);
    int errors = 0;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            ++errors;
            std::cout << r.name << ": ERROR " << r.error << "\n";
            continue;
        }
        if (quiet) continue;
        std::cout << r.name << ": " << to_string(r.verdict);
        if (r.verdict == VerdictKind::AlgorithmicallyRibbon)
            std::cout << ", " << r.band_count << " band" << (r.band_count == 1 ? "" : "s");
        if (!r.square_det)
            std::cout << " (non-square determinant)";
        std::cout << "\n";
    }
    auto summary = summarise(rows);
    std::string csv = summary_csv(summary);
    if (!summary_file.empty()) {
        std::ofstream f(summary_file);
        if (!f) { std::cerr << "cannot write " << summary_file << "\n"; return 1; }
        f << csv;
    }
    if (rows.size() > 1 || !summary_file.empty()) std::cout << csv;
    return errors ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
