#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/codes.hpp"
#include "ribbon/goeritz.hpp"

using namespace ribbon;
using boost::multiprecision::abs;

static BigInt knot_det(const PlanarDiagram& d) { return abs(det(goeritz_matrices(d).G_b)); }

TEST_CASE("trefoil Goeritz pair") {
    auto d = parse_dt({4, 6, 2});
    auto g = goeritz_matrices(d);
    // one colour gives [3], the other the A_2 form of determinant 3
    CHECK(g.G_b.rows + g.G_w.rows == 3);
    CHECK(abs(det(g.G_b)) == 3);
    CHECK(abs(det(g.G_w)) == 3);
    CHECK(is_psd(g.G_b));
    CHECK(is_psd(g.G_w));
    CHECK(is_minimally_nonalternating(d));
    CHECK(nullity(d) == 0);
}

TEST_CASE("determinants of standard knots") {
    CHECK(knot_det(parse_dt({6, 10, 12, 14, 4, 2, 8})) == 15);  // 7_4
    CHECK(knot_det(parse_dt({4, 8, 12, 2, 14, 6, 10})) == 19);
    CHECK(knot_det(two_bridge_diagram({4, 4})) == 15);  // S(15,4) = 7_4
    CHECK(knot_det(two_bridge_diagram({3})) == 3);
    CHECK(knot_det(two_bridge_diagram({3, 2})) == 5);   // figure-eight
    CHECK(knot_det(two_bridge_diagram({5, 2})) == 9);   // stevedore
    CHECK(knot_det(two_bridge_diagram({2, 2})) == 3);
    CHECK(knot_det(connected_sum_mirror(parse_dt({4, 6, 2}))) == 9);
    CHECK(knot_det(connected_sum_mirror(two_bridge_diagram({3, 2}))) == 25);
}

TEST_CASE("rank data") {
    auto d = parse_dt({4, 6, 2});
    auto r = rank_data(d);
    auto s = d.stats();
    CHECK(r.eta == 0);
    CHECK(r.nullity_b == 0);
    CHECK(r.nullity_w == 0);
    CHECK(r.m_prime == s.m_plus_1 - 1);  // connected alternating: m' = m
    CHECK(r.n_prime == s.n_plus_1 - 1);
}

TEST_CASE("nullity of unlinks") {
    CHECK(nullity(parse_dt({})) == 0);
    DiagramData v;
    v.circle_host = {kHostAmbient, kHostAmbient};
    PlanarDiagram two(std::move(v));
    CHECK(nullity(two) == 1);
}

TEST_CASE("eta bound and PSD equivalence on random diagrams") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto d = random_diagram(rng, 8);
        auto s = d.stats();
        int eta = nullity(d);
        CHECK(eta <= s.k + s.l - 1);
        CHECK((eta == s.k + s.l - 1) == is_minimally_nonalternating(d));
        // nullity is colour-symmetric
        auto r = rank_data(d);
        CHECK(r.nullity_b + s.l_b == r.nullity_w + s.l_w);
    }
}
