#pragma once
// Goeritz matrices, nullity, and rank bookkeeping.
#include <vector>

#include "ribbon/diagram.hpp"
#include "ribbon/intmat.hpp"

namespace ribbon {

struct GoeritzPair {
    IntMat G_b;                   // m x m, from white regions, row/col 0 deleted
    IntMat G_w;                   // n x n, from black regions of the mirror
    std::vector<int> white_index; // region id -> row of \hat G_b, R0 = index 0
    std::vector<int> black_index; // region id -> row of \hat G_w (-1 if other colour)
};

GoeritzPair goeritz_matrices(const PlanarDiagram& d);

// full \hat G over the regions of one colour (no row deleted); fills
// index with region id -> row (-1 for the other colour)
IntMat goeritz_hat(const PlanarDiagram& d, bool white, std::vector<int>& index);

// nullity of the link: corank of the black Goeritz lattice plus l_b - 1
int nullity(const PlanarDiagram& d);

bool is_positive_semidefinite(const IntMat& G);

// equality in eta <= k + l - 1, equivalently both Goeritz matrices PSD
bool is_minimally_nonalternating(const PlanarDiagram& d);

struct RankData {
    int nullity_b = 0;  // rank of the nullspace of G_b
    int nullity_w = 0;
    int m_prime = 0;    // target diagonal rank for the black lattice
    int n_prime = 0;
    int eta = 0;        // link nullity
    bool operator==(const RankData&) const = default;
};

RankData rank_data(const PlanarDiagram& d);

}  // namespace ribbon
