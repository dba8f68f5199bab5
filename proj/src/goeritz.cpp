#include "ribbon/goeritz.hpp"

namespace ribbon {

IntMat goeritz_hat(const PlanarDiagram& d, bool white, std::vector<int>& index) {
    int R = d.region_count();
    index.assign(R, -1);
    int cnt = 0;
    for (int r = 0; r < R; ++r)
        if (d.region_is_white(r) == white) index[r] = cnt++;
    IntMat ghat(cnt, cnt);
    for (int c = 0; c < d.crossings(); ++c) {
        // the two corners of this colour at crossing c
        int s0 = (d.data().col0[c] ^ (white ? 1 : 0)) & 1;
        int i = index[d.region(half_of(c, s0))];
        int j = index[d.region(half_of(c, s0 + 2))];
        if (i == j) continue;
        ghat.at(i, j) -= d.eps(c);
        ghat.at(j, i) -= d.eps(c);
    }
    for (int i = 0; i < cnt; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < cnt; ++j)
            if (j != i) s += ghat.at(i, j);
        ghat.at(i, i) = -s;
    }
    return ghat;
}

namespace {

// \hat G over the regions of the given colour, then delete row/col 0.
IntMat goeritz_of_colour(const PlanarDiagram& d, bool white, std::vector<int>& index) {
    IntMat ghat = goeritz_hat(d, white, index);
    int cnt = ghat.rows;
    IntMat g(cnt - 1, cnt - 1);
    for (int i = 1; i < cnt; ++i)
        for (int j = 1; j < cnt; ++j) g.at(i - 1, j - 1) = ghat.at(i, j);
    return g;
}

}  // namespace

GoeritzPair goeritz_matrices(const PlanarDiagram& d) {
    GoeritzPair p;
    p.G_b = goeritz_of_colour(d, true, p.white_index);
    // white matrix = black Goeritz matrix of the mirror; the mirror has the
    // same faces and regions with colours swapped, so this equals the matrix
    // built from the black regions of d with the same crossing signs
    p.G_w = goeritz_of_colour(mirror(d), true, p.black_index);
    return p;
}

int nullity(const PlanarDiagram& d) {
    auto g = goeritz_matrices(d);
    int corank_b = g.G_b.rows - rank(g.G_b);
    return corank_b + d.stats().l_b - 1;
}

bool is_positive_semidefinite(const IntMat& G) { return is_psd(G); }

bool is_minimally_nonalternating(const PlanarDiagram& d) {
    auto g = goeritz_matrices(d);
    return is_psd(g.G_b) && is_psd(g.G_w);
}

RankData rank_data(const PlanarDiagram& d) {
    auto g = goeritz_matrices(d);
    auto s = d.stats();
    RankData r;
    r.nullity_b = g.G_b.rows - rank(g.G_b);
    r.nullity_w = g.G_w.rows - rank(g.G_w);
    int m = s.m_plus_1 - 1, n = s.n_plus_1 - 1;
    r.m_prime = m - s.k - s.l_w + 1;
    r.n_prime = n - s.k - s.l_b + 1;
    r.eta = r.nullity_b + s.l_b - 1;
    return r;
}

}  // namespace ribbon
