#include <doctest.h>

#include "../oracles.hpp"
#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"
#include "polypair/hull_oracle.hpp"

using namespace polypair;

TEST_SUITE("cyclic") {

TEST_CASE("gale facet counts match the closed form") {
    for (int d = 2; d <= 8; ++d)
        for (int n = d + 1; n <= 13; ++n) {
            auto facets = gale_facets(d, n);
            CHECK(static_cast<std::int64_t>(facets.size()) == oracle::cyclic_facets(d, n));
            CHECK(cyclic_facet_count(d, n) == oracle::cyclic_facets(d, n));
        }
}

TEST_CASE("cyclic 4-polytopes are neighborly") {
    for (int n = 6; n <= 10; ++n) {
        auto p = cyclic_polytope(4, n);
        CHECK(p.vertex_facet_incidences() == 2 * n * (n - 3));
    }
}

TEST_CASE("g-vectors and facet counts") {
    for (int d = 3; d <= 8; ++d)
        for (int n = d + 1; n <= 14; ++n) {
            auto g = cyclic_g_vector(d, n);
            CHECK(m_sequence_valid(g));
            CHECK(simplicial_facet_count(d, g) == cyclic_facet_count(d, n));
        }
    CHECK_FALSE(m_sequence_valid({1, 2, 4}));  // 4 > 2^<2> = 3
    CHECK(m_sequence_valid({1, 2, 3}));
    CHECK(macaulay_pseudopower(3, 1) == 6);
    CHECK(macaulay_pseudopower(5, 2) == 7);  // 5 = C(3,2)+C(2,1) -> C(4,3)+C(3,2)
}

TEST_CASE("facet count spectrum for d=6, n=11") {
    auto spectrum = simplicial_fd_spectrum(6, 11);
    std::vector<BigInt> expected{27, 30, 31};
    for (int m = 33; m <= 77; ++m) expected.push_back(m);
    CHECK(spectrum == expected);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(cyclic_facet_count(4, 4), Error);
    CHECK_THROWS_AS(simplicial_fd_spectrum(12, 30), Error);
}

}

TEST_SUITE("hull_oracle") {

TEST_CASE("determinant") {
    CHECK(bareiss_determinant({{2, 0}, {0, 3}}) == 6);
    CHECK(bareiss_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
    CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("hull of moment-curve points is the cyclic polytope") {
    for (int d = 3; d <= 5; ++d)
        for (int n = d + 1; n <= 8; ++n) CHECK(brute_hull_facets(moment_curve_points(d, n)) == gale_facets(d, n));
}

TEST_CASE("degenerate input") {
    PointSet flat{3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
    CHECK_THROWS_AS(brute_hull_facets(flat), Error);
    PointSet square{2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}};
    CHECK(brute_hull_facets(square).size() == 4);
}

}
