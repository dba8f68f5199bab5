#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/diagram.hpp"

using namespace ribbon;

// standard alternating trefoil: crossing i connects to crossing i+1 by two
// edges (slot2 -> slot1 and slot3 -> slot0), all over parities equal
static PlanarDiagram trefoil() {
    DiagramData d;
    for (int i = 0; i < 3; ++i) d.add_crossing(1, 1);
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        d.weld(half_of(i, 2), half_of(j, 1));
        d.weld(half_of(i, 3), half_of(j, 0));
    }
    return PlanarDiagram(std::move(d));
}

TEST_CASE("trefoil fixture") {
    auto d = trefoil();
    auto s = d.stats();
    CHECK(s.crossing_count == 3);
    CHECK(s.m_plus_1 == 2);
    CHECK(s.n_plus_1 == 3);
    CHECK(s.k == 0);
    CHECK(s.l == 1);
    CHECK(s.l_b == 1);
    CHECK(s.l_w == 1);
    CHECK(d.region_count() == 5);
    CHECK(d.face_count() == 5);
    for (int c = 0; c < 3; ++c) CHECK(d.eps(c) == 1);
    // invariants: l = l_b + l_w - 1; crossings = m + n - l + 1
    CHECK(s.l == s.l_b + s.l_w - 1);
    CHECK(s.crossing_count == (s.m_plus_1 - 1) + (s.n_plus_1 - 1) - s.l + 1);
}

TEST_CASE("unknots and circles") {
    DiagramData u;
    u.circle_host = {kHostAmbient};
    u.ambient_white = false;
    PlanarDiagram d(std::move(u));
    auto s = d.stats();
    CHECK(s.m_plus_1 == 1);
    CHECK(s.n_plus_1 == 1);
    CHECK(s.l == 1);
    CHECK(s.l_b == 1);
    CHECK(s.l_w == 1);

    DiagramData v;
    v.circle_host = {kHostAmbient, kHostAmbient};
    v.ambient_white = false;
    PlanarDiagram d2(std::move(v));
    auto s2 = d2.stats();
    CHECK(s2.l == 2);
    CHECK(s2.l_b + s2.l_w - 1 == 2);
    CHECK(s2.m_plus_1 == 2);  // two white interiors
    CHECK(s2.n_plus_1 == 1);

    // nested: circle inside a circle
    DiagramData w;
    w.circle_host = {kHostAmbient, host_circle(0)};
    w.ambient_white = true;
    PlanarDiagram d3(std::move(w));
    CHECK(d3.stats().m_plus_1 == 2);  // ambient + inner interior
    CHECK(d3.stats().n_plus_1 == 1);
}

TEST_CASE("mirror") {
    auto d = trefoil();
    auto m = mirror(d);
    CHECK(m.stats().m_plus_1 == 3);
    CHECK(m.stats().n_plus_1 == 2);
    CHECK(m.stats().k == 0);
    CHECK(canonical_code(mirror(m)) == canonical_code(d));
    CHECK(canonical_code(m) != canonical_code(d));
}

TEST_CASE("canonical code invariant under relabelling") {
    auto d = trefoil();
    // relabel: shift crossing indices and rotate slots
    DiagramData r;
    for (int i = 0; i < 3; ++i) r.add_crossing(0, 0);
    auto remap = [](Half h) {
        int c = (cross_of(h) + 1) % 3;
        int s = (slot_of(h) + 2) & 3;
        return half_of(c, s);
    };
    r.twin.assign(12, -1);
    const auto& dd = d.data();
    for (Half h = 0; h < 12; ++h) r.twin[remap(h)] = remap(dd.twin[h]);
    for (int i = 0; i < 3; ++i) {
        r.over[(i + 1) % 3] = dd.over[i] ^ (2 & 1) ^ 0;  // slot shift 2: parity unchanged
        r.over[(i + 1) % 3] = dd.over[i];
        r.col0[(i + 1) % 3] = dd.col0[i];  // shift by 2 keeps corner-0 colour
    }
    PlanarDiagram d2(std::move(r));
    CHECK(canonical_code(d2) == canonical_code(d));
}

TEST_CASE("validation rejects garbage") {
    DiagramData d;
    d.add_crossing(0, 0);
    d.weld(0, 1);
    d.weld(2, 3);  // 1-crossing, twin ok; planar kink: should be fine
    CHECK_NOTHROW(PlanarDiagram(d));
    d.twin = {1, 0, 3, 3};  // not an involution
    CHECK_THROWS(PlanarDiagram(d));
}

TEST_CASE("connected sum with mirror") {
    auto d = trefoil();
    auto s = connected_sum_mirror(d);
    CHECK(s.crossings() == 6);
    CHECK(s.stats().k == 0);
    CHECK(s.stats().l == 1);
    CHECK(s.stats().m_plus_1 + s.stats().n_plus_1 == 6 + s.stats().l + 1);
    CHECK_THROWS(connected_sum_mirror(PlanarDiagram{}));
}
