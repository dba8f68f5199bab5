#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/intmat.hpp"

using namespace ribbon;

static IntMat from(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    IntMat m((int)rows.size(), (int)rows.begin()->size());
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (auto v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

TEST_CASE("rank and determinant") {
    CHECK(det(from({{3}})) == 3);
    CHECK(det(from({{2, -1}, {-1, 2}})) == 3);
    CHECK(det(from({{0, 1}, {1, 0}})) == -1);
    CHECK(rank(from({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from({{1, 2}, {2, 5}})) == 2);
    CHECK(rank(IntMat(3, 3)) == 0);
    CHECK(det(IntMat(0, 0)) == 1);
    // Laplacian of a 4-cycle: rank 3, det 0
    auto L = from({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}});
    CHECK(rank(L) == 3);
    CHECK(det(L) == 0);
}

TEST_CASE("psd") {
    CHECK(is_psd(from({{0}})));
    CHECK(is_psd(from({{2, -1}, {-1, 2}})));
    CHECK(!is_psd(from({{-1}})));
    CHECK(!is_psd(from({{1, 2}, {2, 1}})));           // det < 0
    CHECK(is_psd(from({{1, 1}, {1, 1}})));            // singular PSD
    CHECK(!is_psd(from({{0, 1}, {1, 1}})));           // zero diagonal, nonzero row
    CHECK(is_psd(from({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}})));
    CHECK(!is_psd(from({{2, 3, 0}, {3, 2, 0}, {0, 0, 5}})));
}

TEST_CASE("gram and transpose") {
    auto A = from({{1, 0, -1}, {0, 1, 1}});
    auto G = A.gram();
    CHECK(G.rows == 3);
    CHECK(G.is_symmetric());
    CHECK(G.at(0, 2) == -1);
    CHECK(G.at(2, 2) == 2);
    CHECK(rank(G) == 2);
    CHECK(is_psd(G));
}
