#include <doctest.h>

#include "../oracles.hpp"
#include "polypair/constructions.hpp"
#include "polypair/error.hpp"
#include "polypair/incidence.hpp"
#include "polypair/io.hpp"

using namespace polypair;

namespace {

VertexFacetIncidence cube() {
    return VertexFacetIncidence(3, {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}});
}

void check_against_oracle(const VertexFacetIncidence& p) {
    auto lattice = build_face_lattice(p);
    auto fv = flag_vector(lattice);
    auto faces = oracle::faces_of(p);
    CHECK(lattice.f_vector() == oracle::f_vector(faces));
    for (unsigned mask = 1; mask < (1u << p.dim()); ++mask) {
        std::vector<int> dims;
        for (int i = 0; i < p.dim(); ++i)
            if (mask & (1u << i)) dims.push_back(i);
        CHECK(fv[mask] == oracle::flag_count(faces, dims));
    }
}

} // namespace

TEST_SUITE("incidence") {

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(VertexFacetIncidence(3, {{0, 1, 2}, {0, 1, 3}}), Error);
    CHECK_THROWS_AS(VertexFacetIncidence(2, {{0, 1}, {1, 2}, {0, 1, 2}}), Error);
    CHECK_THROWS_AS(VertexFacetIncidence(2, {{0, 1}, {1, 3}, {3, 0}}), Error);
    try {
        VertexFacetIncidence(3, {{0, 1, 2}, {0, 1, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationError);
    }
}

TEST_CASE("cube lattice") {
    auto p = cube();
    auto lattice = build_face_lattice(p);
    CHECK(lattice.f_vector() == std::vector<std::int64_t>{8, 12, 6});
    CHECK(lattice.euler_poincare_holds());
    check_against_oracle(p);
}

TEST_CASE("non-polytopal complexes are rejected") {
    // two triangles glued at a vertex
    VertexFacetIncidence bowtie(2, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    CHECK_THROWS_AS(build_face_lattice(bowtie), Error);
}

TEST_CASE("flag vectors match brute-force chain counts") {
    check_against_oracle(simplex(4));
    check_against_oracle(polygon_prism(5));
    check_against_oracle(polygon_bipyramid(4));
    check_against_oracle(pyramid_over_polygon(5, 2));
    check_against_oracle(dualize(pyramid_over(polygon_prism(3), 4)));
}

TEST_CASE("simplex flag vector") {
    auto fv = flag_vector(build_face_lattice(simplex(4)));
    CHECK(fv.at({0}) == 5);
    CHECK(fv.at({1}) == 10);
    CHECK(fv.at({0, 3}) == 20);
    CHECK(fv.at({0, 1, 2, 3}) == 120);
}

TEST_CASE("dualize is an involution and reverses flags") {
    auto p = pyramid_over_polygon(4, 2);
    auto d = dualize(p);
    CHECK(dualize(d) == p);
    auto fp = flag_vector(build_face_lattice(p));
    auto fd = flag_vector(build_face_lattice(d));
    for (unsigned mask = 1; mask < 16; ++mask) {
        unsigned rev = 0;
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) rev |= 1u << (3 - i);
        CHECK(fp[mask] == fd[rev]);
    }
}

TEST_CASE("local structure") {
    auto loc = classify_local(pyramid_over(polygon_bipyramid(3), 4));
    CHECK(loc.has_simplex_facet());
    CHECK(loc.bipyramid_facets.size() == 1);
    auto prism = classify_local(pyramid_over(polygon_prism(3), 4));
    CHECK(prism.simple_vertices.size() == 6);
    CHECK(prism.square_pyramid_facets.size() == 3);
}

TEST_CASE("check report on a valid polytope") {
    auto r = check_polytope(parse_bracket_format("[0123][0124][0134][0234][1234]"));
    CHECK(r.all_pass());
    CHECK(r.f_vector == std::vector<std::int64_t>{5, 10, 10, 5});
}

}
