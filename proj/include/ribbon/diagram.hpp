#pragma once
// Planar link diagrams as combinatorial maps.
//
// A crossing has 4 half-edge slots in counterclockwise order; half-edge
// h = 4c + s is slot s of crossing c.  The strand entering at slot s leaves
// at slot s+2.  over[c] is the parity (0 or 1) of the pair of slots carrying
// the over-strand.  Corner h lies between slots s and s+1 (ccw); its colour
// is col0[c] ^ (s & 1), with 1 = white.
//
// Crossingless circles are not given half-edges; each records the region it
// floats in (a corner of that region, the ambient region, or the interior of
// another circle).  Split diagrams (several 4-valent pieces sharing a region
// of S^2) carry "glue" corner pairs identifying faces across pieces.
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ribbon {

using Half = int;

inline int cross_of(Half h) { return h >> 2; }
inline int slot_of(Half h) { return h & 3; }
inline Half half_of(int c, int s) { return 4 * c + (s & 3); }
inline Half rot(Half h) { return (h & ~3) | ((h + 1) & 3); }
inline Half opp(Half h) { return h ^ 2; }

constexpr int kHostAmbient = -1;  // circle_host value: floats in ambient region
inline int host_circle(int j) { return -2 - j; }  // floats inside circle j
inline bool host_is_circle(int v) { return v <= -2; }
inline int host_circle_index(int v) { return -2 - v; }

// Raw mutable diagram data, used while performing surgery.
struct DiagramData {
    std::vector<Half> twin;
    std::vector<std::uint8_t> over;   // parity of over slots
    std::vector<std::uint8_t> col0;   // colour of corner (c,0); 1 = white
    std::vector<int> circle_host;
    bool ambient_white = false;
    std::vector<std::pair<Half, Half>> glue;

    int crossings() const { return (int)over.size(); }
    int add_crossing(int over_parity, int colour0);
    void weld(Half a, Half b);
    // Delete the given crossings (caller has already rewired all half-edges
    // away from them) and compact indices.
    void remove_crossings(std::vector<int> dead);
};

struct DiagramStats {
    int m_plus_1 = 0;     // white regions
    int n_plus_1 = 0;     // black regions
    int k = 0;            // nonalternating crossings
    int l = 0;            // diagram components
    int l_b = 0;          // black surface components
    int l_w = 0;          // white surface components
    int crossing_count = 0;
    bool operator==(const DiagramStats&) const = default;
};

struct CanonicalCode {
    std::vector<int> code;
    auto operator<=>(const CanonicalCode&) const = default;
    std::string to_string() const;
};

class PlanarDiagram {
public:
    PlanarDiagram() = default;               // empty diagram (no link)
    explicit PlanarDiagram(DiagramData d);   // validates; throws on bad data

    const DiagramData& data() const { return d_; }
    int crossings() const { return (int)d_.over.size(); }
    int halfedges() const { return (int)d_.twin.size(); }
    int circles() const { return (int)d_.circle_host.size(); }

    Half twin(Half h) const { return d_.twin[h]; }
    int over(int c) const { return d_.over[c]; }
    bool corner_white(Half h) const { return (d_.col0[cross_of(h)] ^ (h & 1)) & 1; }
    // +1 alternating, -1 nonalternating
    int eps(int c) const { return eps_[c]; }

    // faces (per piece) and regions (faces after glue, plus circle interiors
    // and, for crossingless diagrams, the ambient region)
    int face_count() const { return face_count_; }
    int face(Half h) const { return face_[h]; }
    int region_count() const { return (int)region_white_.size(); }
    int region(Half h) const { return region_of_face_[face_[h]]; }
    int region_of_face(int f) const { return region_of_face_[f]; }
    int region_of_circle(int j) const { return region_of_circle_[j]; }
    int ambient_region() const { return ambient_region_; }
    bool region_is_white(int r) const { return region_white_[r]; }
    // corners on the boundary of a region, in increasing half-edge order
    const std::vector<Half>& region_corners(int r) const { return region_corners_[r]; }

    int pieces() const { return piece_count_; }
    int piece(int c) const { return piece_[c]; }

    const DiagramStats& stats() const { return stats_; }

private:
    void finalize();  // build derived structures + validate

    DiagramData d_;
    std::vector<int> eps_;
    std::vector<int> face_;
    int face_count_ = 0;
    std::vector<int> region_of_face_;
    std::vector<int> region_of_circle_;
    int ambient_region_ = -1;
    std::vector<std::uint8_t> region_white_;
    std::vector<std::vector<Half>> region_corners_;
    std::vector<int> piece_;
    int piece_count_ = 0;
    DiagramStats stats_;
};

DiagramStats stats(const PlanarDiagram& d);
// components of the underlying link (strand count); stats().l counts
// projection components instead
int link_components(const PlanarDiagram& d);
PlanarDiagram mirror(const PlanarDiagram& d);
// Turn the sphere over: reverse the rotation at every crossing and swap all
// over bits.  Same link as d, but in general a distinct combinatorial map.
PlanarDiagram flip(const PlanarDiagram& d);
CanonicalCode canonical_code(const PlanarDiagram& d);

// Plain connected sum of the two diagrams at the given edges (joins the two
// strands by cutting each edge and splicing, keeping both pieces alternating
// when the inputs are).  Colour labels of b are adjusted to match a across
// the splice.
PlanarDiagram connected_sum(const PlanarDiagram& a, Half edge_a,
                            const PlanarDiagram& b, Half edge_b);
// K # mirror(K), spliced at a given edge of d (the spec's component_mark).
PlanarDiagram connected_sum_mirror(const PlanarDiagram& d, Half edge = 0);

}  // namespace ribbon
