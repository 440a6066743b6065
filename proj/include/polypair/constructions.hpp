#pragma once

#include <utility>
#include <vector>

#include "polypair/incidence.hpp"

namespace polypair {

// Every operation returns a new incidence; new vertices get the next free ids.

VertexFacetIncidence stack_beyond_facet(const VertexFacetIncidence& p, int facet);

/// Removes the beyond facets and cones the new vertex over the boundary
/// ridges (in lattice order). Beneath facets keep their relative order.
VertexFacetIncidence stack_beyond_facet_set(const VertexFacetIncidence& p, std::vector<int> beyond);

VertexFacetIncidence truncate_simple_vertex(const VertexFacetIncidence& p, int vertex);

VertexFacetIncidence split_bipyramid_facet(const VertexFacetIncidence& p, int facet);

/// Sign assignment on the vertices of one facet: `negative` and `zero` are
/// given explicitly, every other vertex of the facet is positive. Edges
/// joining a negative and a positive vertex are crossed by the polygon.
struct FacetCut {
    int facet = 0;
    std::vector<int> negative;
    std::vector<int> zero;
};

struct CutShape {
    std::vector<std::pair<int, int>> crossed;  // sorted edges (u < w)
    int passed_vertices = 0;
    int polygon_size() const { return static_cast<int>(crossed.size()) + passed_vertices; }
};

/// Validates a cut against the facet's 2-faces and returns its shape.
CutShape analyze_cut(const VertexFacetIncidence& p, const FacetCut& cut);

/// Splits the facet along the cut polygon (d = 4).
VertexFacetIncidence facet_split(const VertexFacetIncidence& p, const FacetCut& cut);

// Builders.
VertexFacetIncidence simplex(int d);
VertexFacetIncidence polygon(int k);
VertexFacetIncidence polygon_prism(int k);
VertexFacetIncidence polygon_bipyramid(int k);
VertexFacetIncidence pyramid_over(const VertexFacetIncidence& base, int target_dim);
VertexFacetIncidence pyramid_over_polygon(int k, int folds);

// Families built on cyclic 4-polytopes.

/// Lexicographically smallest edge of p lying in exactly `count` facets.
std::pair<int, int> first_edge_in(const VertexFacetIncidence& p, int count);

/// Facets around an edge of a 4-polytope in ridge-adjacency order, starting
/// from the smallest and stepping first to its smaller neighbour.
std::vector<int> facets_around_edge(const VertexFacetIncidence& p, std::pair<int, int> edge);

/// R_i(n): C_4(n) stacked beyond i consecutive facets around a universal edge.
VertexFacetIncidence generalized_stack(int i, int n);

/// Canonical cut on facet 0 of the dual cyclic polytope C_4^*(n) passing
/// through k vertices and producing an i-gon.
FacetCut wedge_cut(const VertexFacetIncidence& dual_cyclic, int k, int i);
bool delta_legal(int k, int i, int n);

/// delta_k(i, n): split facet of C_4^*(n).
VertexFacetIncidence delta_split(int k, int i, int n);
/// delta^*_k(i, n) = dual of delta_k(i, n).
VertexFacetIncidence delta_star(int k, int i, int n);

/// First pair of simplex facets sharing a ridge, or (-1, -1).
std::pair<int, int> adjacent_simplex_pair(const VertexFacetIncidence& p);

/// delta^*_3(n-3, n) stacked beyond two adjacent simplex facets.
VertexFacetIncidence delta_star3_double_stack(int n);

} // namespace polypair
