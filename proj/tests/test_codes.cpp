#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ribbon/codes.hpp"

using namespace ribbon;

TEST_CASE("parse_dt basics") {
    auto u = parse_dt({});
    CHECK(u.crossings() == 0);
    CHECK(u.stats().l == 1);
    CHECK(u.stats().m_plus_1 == 1);
    CHECK(u.stats().n_plus_1 == 1);

    auto t = parse_dt({4, 6, 2});
    CHECK(t.crossings() == 3);
    CHECK(t.region_count() == 5);
    CHECK(t.stats().k == 0);
    CHECK(t.stats().l == 1);

    auto k74 = parse_dt({4, 8, 12, 2, 14, 6, 10});
    CHECK(k74.crossings() == 7);
    CHECK(k74.stats().k == 0);
    CHECK(k74.stats().l == 1);
}

TEST_CASE("parse_dt errors") {
    CHECK_THROWS(parse_dt({3, 6, 2}));     // odd entry
    CHECK_THROWS(parse_dt({4, 4, 2}));     // repeated label
    CHECK_THROWS(parse_dt({8, 6, 2}));     // label out of range
}

TEST_CASE("parse_dt round trip via minimal_dt") {
    for (auto code : {std::vector<int>{4, 6, 2}, {4, 6, 8, 2}, {4, 8, 12, 2, 14, 6, 10}}) {
        auto d = parse_dt(code);
        auto m = minimal_dt(d);
        CHECK(parse_dt(m).crossings() == d.crossings());
        // minimal code realizes an isomorphic or mirror diagram
        auto d2 = parse_dt(m);
        auto c2 = std::min(canonical_code(d2).code, canonical_code(mirror(d2)).code);
        auto c1 = std::min(canonical_code(d).code, canonical_code(mirror(d)).code);
        CHECK(c1 == c2);
    }
}

TEST_CASE("parse_pd") {
    auto kink = parse_pd("X[1,2,2,1]");
    CHECK(kink.crossings() == 1);
    CHECK(kink.stats().l == 1);
    CHECK(kink.region_count() == 3);

    auto f8 = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
    CHECK(f8.crossings() == 4);
    CHECK(f8.stats().k == 0);
    CHECK(f8.stats().l == 1);

    CHECK_THROWS(parse_pd("X[1,2,3,4]"));          // labels appear once
    CHECK_THROWS(parse_pd("X[1,2,2,1] frog"));     // junk
}

TEST_CASE("two_bridge_diagram") {
    auto f8 = two_bridge_diagram({3, 2});  // S(5,2), figure-eight
    CHECK(f8.crossings() == 4);
    CHECK(f8.stats().k == 0);
    CHECK(f8.stats().l == 1);
    CHECK(link_components(f8) == 1);

    auto hopf = two_bridge_diagram({2});  // S(2,1), Hopf link
    CHECK(hopf.crossings() == 2);
    CHECK(link_components(hopf) == 2);

    auto stevedore = two_bridge_diagram({5, 2});  // S(9,2), stevedore
    CHECK(stevedore.crossings() == 6);
    CHECK(stevedore.stats().l == 1);
    CHECK(link_components(stevedore) == 1);

    CHECK_THROWS(two_bridge_diagram({1, 2}));
    CHECK_THROWS(two_bridge_diagram({}));
}

TEST_CASE("braid closure and random diagrams") {
    auto t = braid_closure(2, {1, 1, 1});
    CHECK(t.crossings() == 3);
    CHECK(t.stats().l == 1);

    std::mt19937 rng(12345);
    for (int i = 0; i < 50; ++i) {
        auto d = random_diagram(rng, 10);
        auto s = d.stats();
        CHECK(s.l == s.l_b + s.l_w - 1);
        CHECK(s.crossing_count == (s.m_plus_1 - 1) + (s.n_plus_1 - 1) - s.l + 1);
    }
}

TEST_CASE("enumerate alternating diagrams (small)") {
    std::vector<int> counts;
    for (int n = 3; n <= 6; ++n) {
        int c = 0;
        enumerate_alternating_diagrams(n, [&](const PlanarDiagram& d) {
            ++c;
            CHECK(d.crossings() == n);
            CHECK(d.stats().k == 0);
            CHECK(d.stats().l == 1);
        });
        counts.push_back(c);
    }
    CHECK(counts[0] == 1);  // trefoil
    CHECK(counts[1] == 1);  // figure-eight
    CHECK(counts[2] >= 2);  // at least the two 5-crossing knots
    CHECK(counts[3] >= 3);
}
