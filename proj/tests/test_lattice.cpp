#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ribbon/codes.hpp"
#include "ribbon/lattice.hpp"

using namespace ribbon;

namespace {

IntMat mat(int n, std::vector<long long> vals) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = vals[i * n + j];
    return m;
}

bool gram_ok(const IntMat& G, const std::vector<std::vector<long long>>& cols) {
    for (int i = 0; i < G.rows; ++i)
        for (int j = 0; j < G.rows; ++j) {
            long long dot = 0;
            for (std::size_t t = 0; t < cols[i].size(); ++t) dot += cols[i][t] * cols[j][t];
            if (dot != G.at(i, j)) return false;
        }
    return true;
}

// exhaust every integer matrix with entries in [-b, b] as a factorisation oracle
std::set<Factorisation> naive_orbits(const IntMat& G, int r) {
    long long b = 0;
    for (int i = 0; i < G.rows; ++i)
        while ((b + 1) * (b + 1) <= G.at(i, i)) ++b;
    int cells = r * G.rows;
    std::set<Factorisation> out;
    std::vector<long long> flat(cells, -b);
    while (true) {
        Factorisation f;
        f.r = r;
        f.columns.assign(G.rows, std::vector<long long>(r, 0));
        for (int i = 0; i < G.rows; ++i)
            for (int t = 0; t < r; ++t) f.columns[i][t] = flat[i * r + t];
        if (gram_ok(G, f.columns)) out.insert(canonicalise(f));
        int p = 0;
        while (p < cells && flat[p] == b) flat[p++] = -b;
        if (p == cells) break;
        ++flat[p];
    }
    return out;
}

}  // namespace

TEST_CASE("factorise_all base cases") {
    auto empty = factorise_all(IntMat(0, 0), 0);
    CHECK(empty.orbits.size() == 1);
    CHECK(empty.orbits[0].columns.empty());

    auto four = factorise_all(mat(1, {4}), 1);
    REQUIRE(four.orbits.size() == 1);
    CHECK(four.orbits[0].columns[0] == std::vector<long long>{2});

    auto det5 = factorise_all(mat(2, {2, -1, -1, 3}), 2);
    CHECK(det5.orbits.empty());

    auto id2 = factorise_all(mat(2, {1, 0, 0, 1}), 2);
    REQUIRE(id2.orbits.size() == 1);
    CHECK(gram_ok(mat(2, {1, 0, 0, 1}), id2.orbits[0].columns));

    CHECK_THROWS_AS(factorise_all(mat(1, {-1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(factorise_all(mat(2, {0, 1, 0, 0}), 2), std::invalid_argument);
}

TEST_CASE("factorise_all soundness and determinism") {
    auto G = mat(3, {2, 1, 0, 1, 2, 1, 0, 1, 2});  // A_3, det 4
    auto res = factorise_all(G, 3);
    CHECK(!res.orbits.empty());
    for (const auto& f : res.orbits) {
        CHECK(gram_ok(G, f.columns));
        CHECK(f.canonical);
    }
    auto res2 = factorise_all(G, 3);
    CHECK(res.orbits == res2.orbits);
}

TEST_CASE("factorise_all matches the naive oracle on small PSD matrices") {
    std::mt19937 rng(7);
    int tried = 0;
    while (tried < 40) {
        int r = 1 + (int)(rng() % 3);
        int n = 1 + (int)(rng() % 3);
        IntMat A(r, n);
        for (auto& v : A.a) v = (long long)(rng() % 3) - 1;
        IntMat G = A.transpose().mul(A);
        bool small = true;
        for (auto v : G.a) small = small && v >= -3 && v <= 3;
        if (!small) continue;
        ++tried;
        auto fast = factorise_all(G, r);
        REQUIRE(!fast.budget_exceeded);
        auto slow = naive_orbits(G, r);
        CHECK(std::set<Factorisation>(fast.orbits.begin(), fast.orbits.end()) == slow);
    }
}

TEST_CASE("canonicalisation is a signed-permutation invariant") {
    std::mt19937 rng(11);
    auto G = mat(3, {2, 1, 0, 1, 2, 1, 0, 1, 2});
    auto res = factorise_all(G, 3);
    REQUIRE(!res.orbits.empty());
    for (const auto& f : res.orbits) {
        std::vector<int> perm{0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> sign(3);
        for (auto& s : sign) s = rng() % 2 ? 1 : -1;
        Factorisation g = f;
        for (auto& col : g.columns) {
            std::vector<long long> w(3);
            for (int t = 0; t < 3; ++t) w[perm[t]] = sign[t] * col[t];
            col = w;
        }
        CHECK(canonicalise(g) == f);
    }
}

TEST_CASE("factorise_all budget flag") {
    auto G = mat(3, {4, 0, 0, 0, 4, 0, 0, 0, 4});
    auto res = factorise_all(G, 3, 5);
    CHECK(res.budget_exceeded);
}

TEST_CASE("bifactorise") {
    auto unknot = parse_dt({});
    auto u = bifactorise(unknot);
    CHECK(u.items.size() == 1);

    auto trefoil = parse_dt({4, 6, 2});
    CHECK(bifactorise(trefoil).items.empty());

    auto f8 = two_bridge_diagram({3, 2});  // det 5, not a square
    CHECK(bifactorise(f8).items.empty());

    auto stevedore = two_bridge_diagram({5, 2});
    auto s = bifactorise(stevedore);
    CHECK(!s.items.empty());
    for (const auto& bf : s.items) {
        // region vectors of each colour sum to zero
        for (int t = 0; t < bf.m_prime; ++t) {
            long long sum = 0;
            for (const auto& v : bf.white) sum += v[t];
            CHECK(sum == 0);
        }
        for (int t = 0; t < bf.n_prime; ++t) {
            long long sum = 0;
            for (const auto& v : bf.black) sum += v[t];
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("bifactorisable implies square determinant") {
    std::vector<PlanarDiagram> pool;
    pool.push_back(parse_dt({4, 6, 2}));
    pool.push_back(two_bridge_diagram({3, 2}));
    pool.push_back(two_bridge_diagram({5, 2}));
    pool.push_back(two_bridge_diagram({4, 4}));
    pool.push_back(connected_sum_mirror(parse_dt({4, 6, 2})));
    for (const auto& d : pool) {
        auto r = bifactorise(d);
        if (r.items.empty()) continue;
        BigInt dd = det(goeritz_matrices(d).G_b);
        BigInt ad = abs(dd);
        BigInt s = boost::multiprecision::sqrt(ad);
        CHECK(s * s == ad);
    }
}

TEST_CASE("extend_factorisation") {
    auto id2 = mat(2, {1, 0, 0, 1});
    std::vector<std::optional<std::vector<long long>>> fixed(2);
    fixed[0] = std::vector<long long>{1, 0};
    auto r = extend_factorisation(id2, 2, fixed, 10);
    CHECK(r.ok);
    REQUIRE(r.witnesses.size() == 2);
    std::set<std::vector<long long>> second;
    for (const auto& w : r.witnesses) second.insert(w[1]);
    CHECK(second == std::set<std::vector<long long>>{{0, 1}, {0, -1}});

    // pin a non-axis vector: the completion must be found by exhaustion
    auto D2 = mat(2, {2, 0, 0, 2});
    std::vector<std::optional<std::vector<long long>>> f2(2);
    f2[0] = std::vector<long long>{1, 1};
    auto r2 = extend_factorisation(D2, 2, f2, 10);
    CHECK(r2.ok);
    REQUIRE(!r2.witnesses.empty());
    for (const auto& w : r2.witnesses) CHECK(gram_ok(D2, w));
    CHECK(r2.witnesses.size() == 2);  // (1,-1) and (-1,1)

    // A2 = [[2,-1],[-1,2]] has det 3: no rank-2 factorisation, pinned or not
    auto A2 = mat(2, {2, -1, -1, 2});
    std::vector<std::optional<std::vector<long long>>> f3(2);
    f3[0] = std::vector<long long>{1, 1};
    CHECK(!extend_factorisation(A2, 2, f3).ok);

    // inconsistent pin: wrong norm
    std::vector<std::optional<std::vector<long long>>> bad(2);
    bad[0] = std::vector<long long>{2, 0};
    auto rb = extend_factorisation(A2, 2, bad);
    CHECK(!rb.ok);
    CHECK(!rb.diagnostic.empty());

    // no pins: existence agrees with factorise_all
    std::vector<std::optional<std::vector<long long>>> none(2);
    CHECK(extend_factorisation(A2, 2, none).ok == !factorise_all(A2, 2).orbits.empty());
    CHECK(extend_factorisation(D2, 2, none).ok == !factorise_all(D2, 2).orbits.empty());
    auto det5 = mat(2, {2, -1, -1, 3});
    CHECK(!extend_factorisation(det5, 2, none).ok);
}
