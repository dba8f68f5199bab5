#pragma once
// Diagram input/output: DT and PD codes, two-bridge plats, braid closures,
// knot-table CSV, and an enumerator of reduced prime alternating diagrams.
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ribbon/diagram.hpp"

namespace ribbon {

// "4 6 2" / "4,6,2" -> integers
std::vector<int> parse_int_list(const std::string& text);

// Dowker-Thistlethwaite code of a knot.  Entry i pairs odd label 2i+1 with
// even label |code[i]|; a positive entry means the pass at the even label is
// the over-strand.  The empty code gives the 0-crossing unknot.
PlanarDiagram parse_dt(const std::vector<int>& code);

// PD code, e.g. "X[1,4,2,5] X[3,8,4,9] ...": four edge labels per crossing in
// cyclic order starting with the incoming under-strand.
PlanarDiagram parse_pd(const std::string& text);

// Alternating 4-plat for the negative continued fraction
// m/q = a1 - 1/(a2 - 1/(... - 1/ak)), all a_i >= 2.
PlanarDiagram two_bridge_diagram(const std::vector<int>& a);

// Closure of a braid word on `strands` strands; letters +-1..+-(strands-1).
// Every consecutive pair of strands must be crossed by some letter.
PlanarDiagram braid_closure(int strands, const std::vector<int>& word);

// Random (not necessarily alternating) connected diagram with at most
// max_crossings crossings, for property tests.
PlanarDiagram random_diagram(std::mt19937& rng, int max_crossings);

// Lexicographically minimal DT code of a knot diagram (over all basepoints
// and directions); empty for the crossingless unknot.
std::vector<int> minimal_dt(const PlanarDiagram& d);

struct KnotEntry {
    std::string name;
    std::vector<int> dt;
};

// CSV with columns (name, dt_code), dt_code space-separated.
std::vector<KnotEntry> load_knot_csv(const std::string& path);

// Calls fn once for each reduced prime alternating knot diagram with exactly
// n crossings, up to relabelling and mirror image.
void enumerate_alternating_diagrams(int n, const std::function<void(const PlanarDiagram&)>& fn);

}  // namespace ribbon
