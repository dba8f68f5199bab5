#pragma once
// Ribbon-disk movie certificates: serialisation, independent verification,
// and rendering (text storyboard / SVG).
#include <iosfwd>
#include <string>
#include <vector>

#include "ribbon/diagram.hpp"
#include "ribbon/moves.hpp"

namespace ribbon {

// A replayable movie from an initial diagram to a crossingless unlink.  The
// file format is versioned line-oriented text (see docs in certificate.cpp);
// the initial diagram is embedded in full, so no external table is needed.
struct Certificate {
    int version = 1;
    std::string name;                // free-form label (knot name), optional
    DiagramData initial;             // full encoding of the starting diagram
    std::vector<MoveRecord> moves;   // bands and generalised Tsukamoto moves
    int final_components = 1;        // circles of the claimed final diagram
};

std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;  // names the offending step and condition
};

// Replays the movie move by move, re-checking at every step that the move is
// a generalised Tsukamoto move or an algorithmic band (crossing budget, sum
// k+l bookkeeping, Gram/bifactorisability conditions) independently of the
// search's acceptance bookkeeping, and that the final diagram is crossingless
// with the claimed component count and Euler characteristic one.
VerifyResult verify_certificate(const Certificate& c,
                                unsigned long long node_budget = kDefaultLatticeBudget);

// Rendering: one frame per move plus the initial frame.  `render_text` draws
// a storyboard of region/crossing tables; `render_svg` emits a single SVG 1.1
// document with the frames side by side (Tutte embedding of each diagram).
// Both refuse certificates that do not verify.
std::string render_text(const Certificate& c);
std::string render_svg(const Certificate& c);

}  // namespace ribbon
