#pragma once
// Integer lattice factorisations G = A^T A and diagram bifactorisations.
#include <optional>
#include <string>
#include <vector>

#include "ribbon/diagram.hpp"
#include "ribbon/goeritz.hpp"
#include "ribbon/intmat.hpp"

namespace ribbon {

inline constexpr unsigned long long kDefaultLatticeBudget = 5'000'000;

// One solution of A^T A = G: columns[i] is the vector in Z^r attached to
// row/column i of G. `canonical` marks the representative reduced under
// signed permutations of the r coordinates.
struct Factorisation {
    int r = 0;
    std::vector<std::vector<long long>> columns;
    bool canonical = false;
    bool operator==(const Factorisation& o) const {
        return r == o.r && columns == o.columns;
    }
    bool operator<(const Factorisation& o) const {
        if (r != o.r) return r < o.r;
        return columns < o.columns;
    }
};

// reduce under signed coordinate permutations: each coordinate row is sign
// normalised (first nonzero entry positive) and the rows are sorted
Factorisation canonicalise(const Factorisation& f);

struct FactoriseResult {
    std::vector<Factorisation> orbits;
    bool budget_exceeded = false;
    unsigned long long nodes = 0;
};

// all solutions of A^T A = G with A of r rows, one per signed-permutation
// orbit; throws std::invalid_argument unless G is symmetric PSD
FactoriseResult factorise_all(const IntMat& G, int r,
                              unsigned long long node_budget = kDefaultLatticeBudget);

// vectors for every region of both colours, indexed by Goeritz row
// (row 0 = the deleted region R0, whose vector is minus the sum of the rest)
struct Bifactorisation {
    std::vector<std::vector<long long>> white;  // row of \hat G_b -> Z^{m'}
    std::vector<std::vector<long long>> black;  // row of \hat G_w -> Z^{n'}
    std::vector<int> white_index;               // region id -> white row (-1 otherwise)
    std::vector<int> black_index;
    int m_prime = 0;
    int n_prime = 0;
};

struct BifactoriseResult {
    std::vector<Bifactorisation> items;
    bool budget_exceeded = false;
};

BifactoriseResult bifactorise(const PlanarDiagram& d,
                              unsigned long long node_budget = kDefaultLatticeBudget);

struct ExtendResult {
    bool ok = false;
    std::vector<std::vector<std::vector<long long>>> witnesses;  // complete column sets
    bool budget_exceeded = false;
    std::string diagnostic;  // set when the fixed assignment is inconsistent
};

// decide whether a partial assignment of columns extends to a full
// factorisation; fixed vectors are pinned (no symmetry quotient)
ExtendResult extend_factorisation(const IntMat& G, int r,
                                  const std::vector<std::optional<std::vector<long long>>>& fixed,
                                  std::size_t max_witnesses = 1,
                                  unsigned long long node_budget = kDefaultLatticeBudget);

}  // namespace ribbon
