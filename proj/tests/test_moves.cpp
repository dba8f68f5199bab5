#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ribbon/codes.hpp"
#include "ribbon/goeritz.hpp"
#include "ribbon/lattice.hpp"
#include "ribbon/moves.hpp"

using namespace ribbon;

TEST_CASE("band sites and candidates on the stevedore") {
    auto d = two_bridge_diagram({5, 2});
    auto cands = enumerate_candidate_bands(d);
    CHECK(cands.size() > 0);
    for (const auto& c : cands) CHECK((c.kind == BandKind::Length1 || c.kind == BandKind::Length2));
}

TEST_CASE("algorithmic bands on the stevedore") {
    auto d = two_bridge_diagram({5, 2});
    auto bf = bifactorise(d).items.at(0);
    int algorithmic = 0;
    for (const auto& c : enumerate_candidate_bands(d)) {
        auto t = is_algorithmic_band(d, bf, c);
        if (!t.ok) continue;
        ++algorithmic;
        const auto& s0 = d.stats();
        const auto& s1 = t.result.stats();
        // Eq. 3.2 bookkeeping: one new nonalternating crossing, eta up by one
        CHECK(s1.k == s0.k + 1);
        CHECK(s1.l == s0.l);
        CHECK(rank_data(t.result).eta == rank_data(d).eta + 1);
        CHECK(s1.crossing_count == s0.crossing_count + (c.kind == BandKind::Length1 ? 1 : 2));
    }
    CHECK(algorithmic == 36);
}

TEST_CASE("aa_simplify drives stevedore band children to the 2-unlink") {
    auto d = two_bridge_diagram({5, 2});
    auto bf = bifactorise(d).items.at(0);
    int unlinked = 0, total = 0;
    for (const auto& c : enumerate_candidate_bands(d)) {
        auto t = is_algorithmic_band(d, bf, c);
        if (!t.ok) continue;
        ++total;
        auto sr = aa_simplify(t.result, t.extended);
        CHECK(sr.diagram.crossings() <= t.result.crossings());
        const auto& s0 = t.result.stats();
        const auto& s1 = sr.diagram.stats();
        CHECK(s1.k + s1.l == s0.k + s0.l);  // gTsukamoto moves preserve the sum
        if (sr.diagram.crossings() == 0) {
            ++unlinked;
            CHECK(sr.diagram.circles() == 2);
        }
    }
    CHECK(total == 36);
    CHECK(unlinked == 12);
}

TEST_CASE("simplification traces replay move by move") {
    auto d = two_bridge_diagram({5, 2});
    auto bf = bifactorise(d).items.at(0);
    bool replayed = false;
    for (const auto& c : enumerate_candidate_bands(d)) {
        auto t = is_algorithmic_band(d, bf, c);
        if (!t.ok) continue;
        auto sr = aa_simplify(t.result, t.extended);
        if (sr.diagram.crossings() != 0 || sr.trace.empty()) continue;
        PlanarDiagram cur = t.result;
        Bifactorisation cb = t.extended;
        for (const auto& m : sr.trace) {
            auto at = apply_tsukamoto(cur, cb, m);
            cur = std::move(at.diagram);
            cb = std::move(at.bf);
        }
        CHECK(cur.crossings() == 0);
        CHECK(cur.circles() == 2);
        replayed = true;
        break;
    }
    CHECK(replayed);
}

TEST_CASE("successful reductions use the whole move vocabulary") {
    auto d = two_bridge_diagram({5, 2});
    auto bf = bifactorise(d).items.at(0);
    std::set<MoveKind> used;
    for (const auto& c : enumerate_candidate_bands(d)) {
        auto t = is_algorithmic_band(d, bf, c);
        if (!t.ok) continue;
        auto sr = aa_simplify(t.result, t.extended);
        if (sr.diagram.crossings() != 0) continue;
        for (const auto& m : sr.trace) used.insert(m.kind);
    }
    CHECK(used.count(MoveKind::R1) == 1);
    CHECK(used.count(MoveKind::Untongue) == 1);
    CHECK(used.count(MoveKind::Clasp) == 1);
}

TEST_CASE("square-zero bigons must be pokes, not clasps") {
    // alternating diagrams have no square-zero bigons at all
    auto d = two_bridge_diagram({4, 4});
    CHECK(find_r2(d).empty());
    CHECK(find_r1(d).empty());
}

TEST_CASE("dedup of simplified children by canonical code") {
    auto d = two_bridge_diagram({5, 2});
    auto bf = bifactorise(d).items.at(0);
    std::set<CanonicalCode> codes;
    int total = 0;
    for (const auto& c : enumerate_candidate_bands(d)) {
        auto t = is_algorithmic_band(d, bf, c);
        if (!t.ok) continue;
        ++total;
        codes.insert(canonical_code(aa_simplify(t.result, t.extended).diagram));
    }
    CHECK(total == 36);
    CHECK(codes.size() < (size_t)total);  // many bands land on the same child
}
