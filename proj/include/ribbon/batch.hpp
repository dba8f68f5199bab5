#pragma once
// Batch classification of knot tables and Table-1-shaped summaries.
#include <string>
#include <vector>

#include "ribbon/codes.hpp"
#include "ribbon/search.hpp"

namespace ribbon {

struct RunConfig {
    int min_crossings = 0;
    int max_crossings = 1 << 30;
    int jobs = 1;
    SearchConfig search;
    std::string certificate_dir;  // empty: no certificate files
    bool verify = false;          // verify certificates before writing
    std::string render;           // "", "svg" or "text"
};

struct RowResult {
    std::string name;
    int crossings = 0;
    bool square_det = false;
    bool bifactorisable = false;
    VerdictKind verdict = VerdictKind::NonSlice;
    int band_count = 0;
    double seconds = 0;
    std::string error;  // nonempty: row failed, other fields meaningless
};

struct SummaryRow {
    int crossings = 0;
    int knots = 0;
    int square_det = 0;
    int bifactorisable = 0;
    int ribbon = 0;
    std::vector<std::pair<int, int>> bands;  // (band count, multiplicity)
};

std::string band_signature(const std::vector<std::pair<int, int>>& bands);

// |det| of the knot is a perfect square (cheap prefilter: a finite-index
// diagonal embedding forces this)
bool has_square_determinant(const PlanarDiagram& d);

RowResult run_single(const KnotEntry& entry, const RunConfig& cfg);

// classify every table row in [min_crossings, max_crossings]; parallel over
// rows, per-row isolation (failures become error records)
std::vector<RowResult> run_batch(const std::vector<KnotEntry>& table, const RunConfig& cfg);

std::vector<SummaryRow> summarise(const std::vector<RowResult>& rows);
std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace ribbon
