#include "ribbon/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ribbon {
namespace {

using Vec = std::vector<long long>;
using I128 = __int128;

// backtracking solver for A^T A = G, shared by factorise_all (with the
// first-use canonical prune) and extend_factorisation (with pinned columns)
struct Solver {
    const IntMat& G;
    int n, r;
    unsigned long long budget;
    bool canonical_prune;

    std::vector<int> order;              // columns still to place, best first
    std::vector<Vec> cols;               // by original column index
    std::vector<char> placed;
    std::vector<std::vector<long long>> suffix;  // suffix[c][t] = sum of cols[c][t..]^2
    int used = 0;                        // coordinates touched so far (prefix)
    unsigned long long nodes = 0;
    bool exceeded = false;
    bool stop = false;
    std::function<void(const std::vector<Vec>&)> on_solution;

    Solver(const IntMat& g, int rank, unsigned long long b, bool canon)
        : G(g), n(g.rows), r(rank), budget(b), canonical_prune(canon),
          cols(g.rows, Vec(rank, 0)), placed(g.rows, 0), suffix(g.rows) {}

    void pin(int c, const Vec& v) {
        cols[c] = v;
        placed[c] = 1;
        make_suffix(c);
        for (int t = 0; t < r; ++t)
            if (v[t] != 0) used = std::max(used, t + 1);
    }

    void make_suffix(int c) {
        auto& s = suffix[c];
        s.assign(r + 1, 0);
        for (int t = r - 1; t >= 0; --t) s[t] = s[t + 1] + cols[c][t] * cols[c][t];
    }

    void run() {
        std::vector<int> others;
        for (int c : order)
            if (!placed[c]) others.push_back(c);
        std::stable_sort(others.begin(), others.end(),
                         [&](int a, int b) { return G.at(a, a) > G.at(b, b); });
        order = std::move(others);
        place(0);
    }

    void place(std::size_t idx) {
        if (stop) return;
        if (idx == order.size()) {
            on_solution(cols);
            return;
        }
        int c = order[idx];
        std::vector<int> prev;
        for (int p = 0; p < n; ++p)
            if (placed[p]) prev.push_back(p);
        Vec v(r, 0), dot(prev.size(), 0);
        descend(idx, c, prev, v, dot, 0, G.at(c, c));
    }

    // choose v[t..] with remaining norm `rem`
    void descend(std::size_t idx, int c, const std::vector<int>& prev, Vec& v,
                 Vec& dot, int t, long long rem) {
        if (stop) return;
        if (++nodes > budget) {
            exceeded = true;
            stop = true;
            return;
        }
        // Cauchy-Schwarz prune against every placed column
        for (std::size_t j = 0; j < prev.size(); ++j) {
            I128 diff = G.at(c, prev[j]) - dot[j];
            if (diff * diff > (I128)rem * suffix[prev[j]][t]) return;
        }
        if (t == r) {
            if (rem != 0) return;
            cols[c] = v;
            placed[c] = 1;
            make_suffix(c);
            int old_used = used;
            for (int s = 0; s < r; ++s)
                if (v[s] != 0) used = std::max(used, s + 1);
            place(idx + 1);
            placed[c] = 0;
            used = old_used;
            return;
        }
        long long b = 0;
        while ((b + 1) * (b + 1) <= rem) ++b;
        long long lo = -b, hi = b;
        if (canonical_prune && t >= used) {
            // fresh coordinates: nonnegative, nonincreasing, zeros trailing
            lo = 0;
            if (t > used) hi = std::min(hi, v[t - 1]);
        }
        for (long long x = hi; x >= lo; --x) {
            v[t] = x;
            for (std::size_t j = 0; j < prev.size(); ++j) dot[j] += x * cols[prev[j]][t];
            descend(idx, c, prev, v, dot, t + 1, rem - x * x);
            for (std::size_t j = 0; j < prev.size(); ++j) dot[j] -= x * cols[prev[j]][t];
            if (stop) return;
        }
        v[t] = 0;
    }
};

bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt s = boost::multiprecision::sqrt(v);
    return s * s == v;
}

}  // namespace

Factorisation canonicalise(const Factorisation& f) {
    std::size_t n = f.columns.size();
    std::vector<Vec> rows(f.r, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (int t = 0; t < f.r; ++t) rows[t][i] = f.columns[i][t];
    for (auto& row : rows) {
        for (long long x : row) {
            if (x > 0) break;
            if (x < 0) {
                for (auto& y : row) y = -y;
                break;
            }
        }
    }
    std::sort(rows.begin(), rows.end());
    Factorisation out;
    out.r = f.r;
    out.canonical = true;
    out.columns.assign(n, Vec(f.r, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (int t = 0; t < f.r; ++t) out.columns[i][t] = rows[t][i];
    return out;
}

FactoriseResult factorise_all(const IntMat& G, int r, unsigned long long node_budget) {
    if (r < 0) throw std::invalid_argument("factorise_all: negative rank");
    if (!G.is_symmetric()) throw std::invalid_argument("factorise_all: matrix not symmetric");
    if (!is_psd(G)) throw std::invalid_argument("factorise_all: matrix not positive semidefinite");

    FactoriseResult res;
    if (G.rows == 0) {
        res.orbits.push_back(Factorisation{r, {}, true});
        return res;
    }
    Solver s(G, r, node_budget, true);
    s.order.resize(G.rows);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::set<Factorisation> seen;
    s.on_solution = [&](const std::vector<Vec>& cols) {
        seen.insert(canonicalise(Factorisation{r, cols, false}));
    };
    s.run();
    res.nodes = s.nodes;
    res.budget_exceeded = s.exceeded;
    res.orbits.assign(seen.begin(), seen.end());
    return res;
}

BifactoriseResult bifactorise(const PlanarDiagram& d, unsigned long long node_budget) {
    BifactoriseResult res;
    if (!is_minimally_nonalternating(d)) return res;
    auto g = goeritz_matrices(d);
    auto rd = rank_data(d);
    // finite-index embedding in a diagonal lattice forces a square determinant
    if (rd.nullity_b == 0 && rd.m_prime == g.G_b.rows && !is_perfect_square(det(g.G_b)))
        return res;
    if (rd.nullity_w == 0 && rd.n_prime == g.G_w.rows && !is_perfect_square(det(g.G_w)))
        return res;

    auto fb = factorise_all(g.G_b, rd.m_prime, node_budget);
    res.budget_exceeded = fb.budget_exceeded;
    if (fb.orbits.empty()) return res;
    auto fw = factorise_all(g.G_w, rd.n_prime, node_budget);
    res.budget_exceeded = res.budget_exceeded || fw.budget_exceeded;
    if (fw.orbits.empty()) return res;

    auto with_r0 = [](const Factorisation& f) {
        std::vector<Vec> v;
        v.reserve(f.columns.size() + 1);
        Vec r0(f.r, 0);
        for (const auto& c : f.columns)
            for (int t = 0; t < f.r; ++t) r0[t] -= c[t];
        v.push_back(std::move(r0));
        v.insert(v.end(), f.columns.begin(), f.columns.end());
        return v;
    };
    for (const auto& a : fb.orbits)
        for (const auto& b : fw.orbits) {
            Bifactorisation bf;
            bf.white = with_r0(a);
            bf.black = with_r0(b);
            bf.white_index = g.white_index;
            bf.black_index = g.black_index;
            bf.m_prime = rd.m_prime;
            bf.n_prime = rd.n_prime;
            res.items.push_back(std::move(bf));
        }
    return res;
}

ExtendResult extend_factorisation(const IntMat& G, int r,
                                  const std::vector<std::optional<std::vector<long long>>>& fixed,
                                  std::size_t max_witnesses,
                                  unsigned long long node_budget) {
    ExtendResult res;
    if (r < 0 || !G.is_symmetric()) {
        res.diagnostic = "invalid matrix or rank";
        return res;
    }
    if ((int)fixed.size() != G.rows) {
        res.diagnostic = "fixed assignment has wrong length";
        return res;
    }
    for (int i = 0; i < G.rows; ++i) {
        if (!fixed[i]) continue;
        if ((int)fixed[i]->size() != r) {
            res.diagnostic = "fixed vector " + std::to_string(i) + " has wrong dimension";
            return res;
        }
        for (int j = 0; j <= i; ++j) {
            if (!fixed[j]) continue;
            long long dot = 0;
            for (int t = 0; t < r; ++t) dot += (*fixed[i])[t] * (*fixed[j])[t];
            if (dot != G.at(i, j)) {
                res.diagnostic = "fixed vectors " + std::to_string(j) + "," +
                                 std::to_string(i) + " violate the Gram condition";
                return res;
            }
        }
    }
    Solver s(G, r, node_budget, false);
    for (int i = 0; i < G.rows; ++i)
        if (fixed[i]) s.pin(i, *fixed[i]);
    s.order.resize(G.rows);
    std::iota(s.order.begin(), s.order.end(), 0);
    s.on_solution = [&](const std::vector<Vec>& cols) {
        res.witnesses.push_back(cols);
        if (res.witnesses.size() >= max_witnesses) s.stop = true;
    };
    s.run();
    res.budget_exceeded = s.exceeded;
    res.ok = !res.witnesses.empty();
    return res;
}

}  // namespace ribbon
