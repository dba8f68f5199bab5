#include "ribbon/batch.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ribbon/certificate.hpp"
#include "ribbon/goeritz.hpp"

namespace ribbon {

namespace {

std::string safe_name(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum((unsigned char)c) || c == '_' || c == '-') ? c : '_';
    return out.empty() ? "unnamed" : out;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << body;
}

}  // namespace

bool has_square_determinant(const PlanarDiagram& d) {
    BigInt det_b = BigInt(abs(det(goeritz_matrices(d).G_b)));
    if (det_b == 0) return false;
    BigInt r = sqrt(det_b);
    return r * r == det_b;
}

std::string band_signature(const std::vector<std::pair<int, int>>& bands) {
    std::string s;
    for (auto [b, mult] : bands) {
        if (!s.empty()) s += "·";
        s += std::to_string(b) + "^" + std::to_string(mult);
    }
    return s;
}

RowResult run_single(const KnotEntry& entry, const RunConfig& cfg) {
    RowResult row;
    row.name = entry.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        PlanarDiagram d = parse_dt(entry.dt);
        row.crossings = d.crossings();
        row.square_det = has_square_determinant(d);
        if (!row.square_det) {
            row.verdict = VerdictKind::NonSlice;
        } else {
            Verdict v = classify(d, cfg.search);
            row.verdict = v.kind;
            row.bifactorisable = v.kind != VerdictKind::NonSlice;
            row.band_count = v.band_count;
            if (v.kind == VerdictKind::AlgorithmicallyRibbon && !cfg.certificate_dir.empty()) {
                Certificate c = v.certificate;
                c.name = entry.name;
                if (cfg.verify) {
                    auto vr = verify_certificate(c, cfg.search.lattice_budget);
                    if (!vr.ok) throw std::runtime_error("certificate failed verification: " + vr.diagnostic);
                }
                std::string base = cfg.certificate_dir + "/" + safe_name(entry.name);
                write_file(base + ".cert", serialize_certificate(c));
                if (cfg.render == "svg") write_file(base + ".svg", render_svg(c));
                if (cfg.render == "text") write_file(base + ".txt", render_text(c));
            }
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

std::vector<RowResult> run_batch(const std::vector<KnotEntry>& table, const RunConfig& cfg) {
    std::vector<const KnotEntry*> todo;
    for (const auto& e : table) {
        int n = (int)e.dt.size();
        if (n >= cfg.min_crossings && n <= cfg.max_crossings) todo.push_back(&e);
    }
    std::vector<RowResult> rows(todo.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= todo.size()) return;
            rows[i] = run_single(*todo[i], cfg);
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

std::vector<SummaryRow> summarise(const std::vector<RowResult>& rows) {
    std::map<int, SummaryRow> by_n;
    std::map<int, std::map<int, int>> bands;
    for (const auto& r : rows) {
        if (!r.error.empty()) continue;
        SummaryRow& s = by_n[r.crossings];
        s.crossings = r.crossings;
        ++s.knots;
        s.square_det += r.square_det;
        s.bifactorisable += r.bifactorisable;
        if (r.verdict == VerdictKind::AlgorithmicallyRibbon) {
            ++s.ribbon;
            ++bands[r.crossings][r.band_count];
        }
    }
    std::vector<SummaryRow> out;
    for (auto& [n, s] : by_n) {
        s.bands.assign(bands[n].begin(), bands[n].end());
        out.push_back(std::move(s));
    }
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream s;
    s << "crossings,knots,square_det,bifactorisable,ribbon,bands\n";
    for (const auto& r : rows)
        s << r.crossings << ',' << r.knots << ',' << r.square_det << ','
          << r.bifactorisable << ',' << r.ribbon << ',' << band_signature(r.bands) << '\n';
    return s.str();
}

}  // namespace ribbon
