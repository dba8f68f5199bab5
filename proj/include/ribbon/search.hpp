#pragma once
// Breadth-first search over (diagram, bifactorisation) states.
#include <functional>
#include <string>
#include <vector>

#include "ribbon/certificate.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/lattice.hpp"
#include "ribbon/moves.hpp"

namespace ribbon {

enum class VerdictKind {
    NonSlice,                 // no bifactorisation of the input diagram
    AlgorithmicallyRibbon,    // certificate found
    AlgorithmicallyNonRibbon, // search exhausted without a certificate
    BudgetExceeded,           // node/depth/lattice budget hit first
};

std::string to_string(VerdictKind k);

struct SearchStats {
    unsigned long long nodes_explored = 0;  // dequeued search nodes
    unsigned long long children = 0;        // accepted band children
    unsigned long long dedup_hits = 0;
    unsigned long long dead_ends = 0;
    int max_depth = 0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::AlgorithmicallyNonRibbon;
    int band_count = 0;           // AlgorithmicallyRibbon only
    Certificate certificate;      // AlgorithmicallyRibbon only
    SearchStats stats;
};

struct SearchConfig {
    int max_bands = 4;
    unsigned long long max_nodes = 1'000'000;
    unsigned long long lattice_budget = kDefaultLatticeBudget;
    int max_flype_orbit = 4096;  // cap on flype-equivalent forms per node
    // optional progress sink: (nodes explored, frontier size)
    std::function<void(unsigned long long, std::size_t)> progress;
};

// The algorithm: bifactorise the input (empty -> NonSlice); breadth-first
// over algorithmic band moves, AA-simplifying every accepted child and
// deduplicating by canonical code across the whole search; a crossingless
// child with depth+components(input) circles yields AlgorithmicallyRibbon.
// Throws std::invalid_argument unless the input is minimally nonalternating.
Verdict classify(const PlanarDiagram& d, const SearchConfig& cfg = {});

}  // namespace ribbon
