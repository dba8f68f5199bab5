#pragma once
// Candidate algorithmic bands and generalised Tsukamoto moves.
#include <string>
#include <vector>

#include "ribbon/diagram.hpp"
#include "ribbon/lattice.hpp"

namespace ribbon {

// A point where a band attaches to or crosses the link: either the side of
// an edge facing region(edge), or one side of a crossingless circle.
struct BandSite {
    Half edge = -1;             // >= 0: edge side h (band approaches from region(h))
    int circle = -1;            // >= 0: circle index
    bool circle_inside = false; // approach the circle from its interior region
    bool is_circle() const { return circle >= 0; }
    auto operator<=>(const BandSite&) const = default;
};

int region_of_site(const PlanarDiagram& d, const BandSite& s);

enum class BandKind { Length1, Length2 };

struct BandCandidate {
    BandKind kind = BandKind::Length1;
    BandSite a, b;        // attachments; a == b allowed for a circle cut twice
    BandSite across;      // Length2 only: the crossed strand, seen from region(a)
    bool band_over = false;  // Length2: band passes over the crossed strand
    int twist = 0;           // Length1: +-1, sign making the new crossing nonalternating
    auto operator<=>(const BandCandidate&) const = default;
};

std::vector<BandCandidate> enumerate_candidate_bands(const PlanarDiagram& d);

enum class MoveKind { Band, Flype, R1, R2, Untongue, Clasp, Untongue2, FloatingLoop3Flype };

struct MoveRecord {
    MoveKind kind = MoveKind::Band;
    BandCandidate band;      // kind == Band
    std::vector<int> loc;    // kind-specific addressing in the pre-move diagram
    int variant = 0;         // wiring variant chosen during application (replay)
};

// Applies the band; throws std::invalid_argument if the candidate is not
// realisable in d.  The returned record replays to the same diagram.
struct AppliedMove {
    PlanarDiagram diagram;
    MoveRecord record;
    // old crossing id -> new crossing id (-1 if removed); identity for bands
    std::vector<int> crossing_map;
};
AppliedMove apply_band(const PlanarDiagram& d, const BandCandidate& b);

// Re-derive a bifactorisation of `after` from one of `before` by pinning the
// vectors of regions whose corner sets are unchanged and extending.  Fails
// (ok = false) when no extension exists.  If the target ranks changed,
// falls back to a fresh bifactorisation when `recompute_on_rank_change`.
struct TransportResult {
    bool ok = false;
    Bifactorisation bf;
    bool budget_exceeded = false;
};
TransportResult transport_by_extension(const PlanarDiagram& before, const Bifactorisation& bf,
                                       const PlanarDiagram& after,
                                       const std::vector<int>& crossing_map,
                                       bool recompute_on_rank_change = false,
                                       unsigned long long node_budget = kDefaultLatticeBudget);

struct BandTest {
    bool ok = false;
    bool budget_exceeded = false;
    PlanarDiagram result;
    MoveRecord record;
    Bifactorisation extended;  // bifactorisation of result when ok
};
BandTest is_algorithmic_band(const PlanarDiagram& d, const Bifactorisation& bf,
                             const BandCandidate& b,
                             unsigned long long node_budget = kDefaultLatticeBudget);

// --- generalised Tsukamoto moves ---------------------------------------

// All applicable reducing moves of one kind, as replayable records.
std::vector<MoveRecord> find_r1(const PlanarDiagram& d);
std::vector<MoveRecord> find_r2(const PlanarDiagram& d);
std::vector<MoveRecord> find_untongue(const PlanarDiagram& d);
std::vector<MoveRecord> find_clasp(const PlanarDiagram& d);
std::vector<MoveRecord> find_untongue2(const PlanarDiagram& d);
std::vector<MoveRecord> find_floating_loop_3flype(const PlanarDiagram& d);
// crossing-count-preserving flypes
std::vector<MoveRecord> enumerate_flypes(const PlanarDiagram& d);

// Applies a Tsukamoto move or flype; throws std::invalid_argument on pattern
// mismatch.  crossing_map records index compaction for removed crossings.
AppliedMove apply_move(const PlanarDiagram& d, const MoveRecord& m);

// Move plus bifactorisation transport (flype: tangle negation rule, with
// pinned re-extension as fallback; others: pinned re-extension).
struct AppliedTsukamoto {
    PlanarDiagram diagram;
    Bifactorisation bf;
    MoveRecord record;
};
AppliedTsukamoto apply_tsukamoto(const PlanarDiagram& d, const Bifactorisation& bf,
                                 const MoveRecord& m,
                                 unsigned long long node_budget = kDefaultLatticeBudget);

// Greedy simplification to a fixpoint: R1, R2, Untongue, Clasp, Untongue2,
// FloatingLoop3Flype in priority order, then flypes that newly enable a
// reducing move (one-step lookahead).  Returns the trace for certificates.
struct SimplifyResult {
    PlanarDiagram diagram;
    Bifactorisation bf;
    std::vector<MoveRecord> trace;
};
SimplifyResult aa_simplify(const PlanarDiagram& d, const Bifactorisation& bf,
                           unsigned long long node_budget = kDefaultLatticeBudget);

// --- escape bands (length 3, enumerate-and-apply only) ------------------
struct EscapeBand {
    BandSite a, b;        // attachments
    BandSite across1, across2;  // the two crossed strands, in order from a
    int mode = 0;  // 0: over both, 1: under both, 2/3: over-then-under with +-half-twist
};
std::vector<EscapeBand> enumerate_escape_bands(const PlanarDiagram& d);
PlanarDiagram apply_escape_band(const PlanarDiagram& d, const EscapeBand& b);

}  // namespace ribbon
