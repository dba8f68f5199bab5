#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/certificate.hpp"
#include "ribbon/codes.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/goeritz.hpp"
#include "ribbon/search.hpp"

using namespace ribbon;

TEST_CASE("figure-eight is NonSlice (det 5 has no bifactorisation)") {
    auto v = classify(parse_dt({4, 6, 8, 2}));
    CHECK(v.kind == VerdictKind::NonSlice);
    CHECK(v.stats.nodes_explored == 0);
}

TEST_CASE("trefoil is NonSlice") {
    CHECK(classify(parse_dt({4, 6, 2})).kind == VerdictKind::NonSlice);
}

TEST_CASE("stevedore is algorithmically ribbon with one band") {
    auto v = classify(two_bridge_diagram({5, 2}));
    REQUIRE(v.kind == VerdictKind::AlgorithmicallyRibbon);
    CHECK(v.band_count == 1);
    CHECK(v.certificate.final_components == 2);
    CHECK(verify_certificate(v.certificate).ok);
}

TEST_CASE("square knot is algorithmically ribbon") {
    auto v = classify(connected_sum_mirror(parse_dt({4, 6, 2})));
    REQUIRE(v.kind == VerdictKind::AlgorithmicallyRibbon);
    CHECK(v.band_count == 1);
    CHECK(verify_certificate(v.certificate).ok);
}

TEST_CASE("crossingless unknot is trivially ribbon") {
    DiagramData d;
    d.circle_host.push_back(kHostAmbient);
    auto v = classify(PlanarDiagram(std::move(d)));
    CHECK(v.kind == VerdictKind::AlgorithmicallyRibbon);
    CHECK(v.band_count == 0);
}

TEST_CASE("non-minimally-nonalternating input is rejected") {
    // unknotted diagram with a reducible kink pattern: 4_1 with an over bit
    // flipped is no longer minimally nonalternating
    auto d = parse_dt({4, 6, 8, 2});
    DiagramData raw = d.data();
    raw.over[0] ^= 1;
    PlanarDiagram bad(std::move(raw));
    if (!is_minimally_nonalternating(bad))
        CHECK_THROWS_AS(classify(bad), std::invalid_argument);
}

TEST_CASE("verdicts are deterministic across repeated runs") {
    auto d = two_bridge_diagram({5, 2});
    auto a = classify(d), b = classify(d);
    CHECK(a.kind == b.kind);
    CHECK(a.band_count == b.band_count);
    CHECK(a.stats.nodes_explored == b.stats.nodes_explored);
    CHECK(serialize_certificate(a.certificate) == serialize_certificate(b.certificate));
}

TEST_CASE("budget caps yield BudgetExceeded, not a fabricated verdict") {
    auto d = two_bridge_diagram({5, 2});
    SearchConfig cfg;
    cfg.max_nodes = 0;
    CHECK(classify(d, cfg).kind == VerdictKind::BudgetExceeded);
}

TEST_CASE("search emits progress events") {
    SearchConfig cfg;
    int events = 0;
    cfg.progress = [&](unsigned long long, std::size_t) { ++events; };
    classify(two_bridge_diagram({5, 2}), cfg);
    CHECK(events > 0);
}
