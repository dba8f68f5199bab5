#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ribbon/certificate.hpp"
#include "ribbon/codes.hpp"
#include "ribbon/search.hpp"

using namespace ribbon;

namespace {

Certificate stevedore_cert() {
    auto v = classify(two_bridge_diagram({5, 2}));
    REQUIRE(v.kind == VerdictKind::AlgorithmicallyRibbon);
    return v.certificate;
}

}  // namespace

TEST_CASE("empty certificate on the crossingless unknot") {
    Certificate c;
    c.initial.circle_host.push_back(kHostAmbient);
    c.final_components = 1;
    auto r = verify_certificate(c);
    CHECK(r.ok);
    CHECK(render_text(c).find("frame 0") != std::string::npos);
}

TEST_CASE("stevedore certificate verifies: 1 band, 2 components") {
    auto c = stevedore_cert();
    CHECK(c.final_components == 2);
    int bands = (int)std::count_if(c.moves.begin(), c.moves.end(),
                                   [](const MoveRecord& m) { return m.kind == MoveKind::Band; });
    CHECK(bands == 1);
    CHECK(verify_certificate(c).ok);
}

TEST_CASE("serialisation round-trips") {
    auto c = stevedore_cert();
    auto text = serialize_certificate(c);
    auto c2 = parse_certificate(text);
    CHECK(serialize_certificate(c2) == text);
    CHECK(verify_certificate(c2).ok);
}

TEST_CASE("flipping the band twist invalidates the certificate") {
    auto c = stevedore_cert();
    auto band = std::find_if(c.moves.begin(), c.moves.end(),
                             [](const MoveRecord& m) { return m.kind == MoveKind::Band; });
    REQUIRE(band != c.moves.end());
    if (band->band.kind == BandKind::Length1)
        band->band.twist = -band->band.twist;  // new crossing comes out alternating
    else
        band->band.band_over = !band->band.band_over;
    auto r = verify_certificate(c);
    CHECK(!r.ok);
    CHECK(!r.diagnostic.empty());
}

TEST_CASE("wrong final component count is rejected with a named step") {
    auto c = stevedore_cert();
    c.final_components = 3;
    auto r = verify_certificate(c);
    CHECK(!r.ok);
    CHECK(r.diagnostic.find("final") != std::string::npos);
}

TEST_CASE("truncated movie is rejected") {
    auto c = stevedore_cert();
    c.moves.pop_back();
    CHECK(!verify_certificate(c).ok);
}

TEST_CASE("renderers refuse unverified certificates") {
    auto c = stevedore_cert();
    c.final_components = 3;
    CHECK_THROWS(render_text(c));
    CHECK_THROWS(render_svg(c));
}

TEST_CASE("text storyboard has one frame per move plus the initial frame") {
    auto c = stevedore_cert();
    auto text = render_text(c);
    int frames = 0;
    for (size_t p = text.find("frame "); p != std::string::npos; p = text.find("frame ", p + 1))
        ++frames;
    CHECK(frames == (int)c.moves.size() + 1);
    CHECK(text.find("*") != std::string::npos);  // nonalternating crossings asterisked
}

TEST_CASE("svg output is one well-formed document") {
    auto svg = render_svg(stevedore_cert());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
}

TEST_CASE("parser rejects garbage") {
    CHECK_THROWS(parse_certificate("not a certificate"));
    CHECK_THROWS(parse_certificate("ribbon-certificate v999\n"));
}
