#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polypair/vertex_set.hpp"

namespace polypair {

using Facet = std::vector<int>;

/// A combinatorial polytope given by the vertex sets of its facets.
///
/// Vertex ids are dense, 0..num_vertices()-1. Each facet is stored sorted;
/// facet order is preserved as given, so facet indices are stable across
/// copies and `dualize` is an exact involution.
class VertexFacetIncidence {
public:
    VertexFacetIncidence() = default;

    /// Validates and stores. Throws Error(ValidationError) if a vertex lies in
    /// fewer than `dim` facets, a facet contains another, ids are not dense, or
    /// there are fewer than dim+1 facets or vertices.
    VertexFacetIncidence(int dim, std::vector<Facet> facets);

    int dim() const noexcept { return dim_; }
    int num_vertices() const noexcept { return num_vertices_; }
    int num_facets() const noexcept { return static_cast<int>(facets_.size()); }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    const Facet& facet(int i) const { return facets_.at(static_cast<std::size_t>(i)); }

    /// Number of facets containing each vertex.
    std::vector<int> vertex_degrees() const;

    /// Sum of facet sizes; equals f_{0,d-1}.
    std::int64_t vertex_facet_incidences() const;

    /// (f_0, f_{03}) for d = 4, (f_0, f_{0,d-1}) in general.
    std::pair<std::int64_t, std::int64_t> pair() const {
        return {num_vertices_, vertex_facet_incidences()};
    }

    /// Copy with facets sorted lexicographically.
    VertexFacetIncidence canonical() const;

    friend bool operator==(const VertexFacetIncidence&, const VertexFacetIncidence&) = default;

private:
    int dim_ = 0;
    int num_vertices_ = 0;
    std::vector<Facet> facets_;
};

struct Face {
    VertexSet vertices;
    int rank = 0;              // -1 for the empty face, dim for the polytope
    std::vector<int> covers;   // faces this face covers (one rank lower)
    std::vector<int> covered_by;
};

/// Graded poset of all faces, including the empty face and the polytope.
class FaceLattice {
public:
    FaceLattice(int dim, int num_vertices, std::vector<Face> faces);

    int dim() const noexcept { return dim_; }
    int num_vertices() const noexcept { return num_vertices_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const Face& face(int i) const { return faces_.at(static_cast<std::size_t>(i)); }

    /// Indices of faces with the given rank (-1..dim).
    const std::vector<int>& rank_indices(int rank) const { return by_rank_.at(static_cast<std::size_t>(rank + 1)); }

    int bottom() const { return rank_indices(-1).front(); }
    int top() const { return rank_indices(dim_).front(); }

    /// Index of the face with exactly this vertex set, or -1.
    int find(const VertexSet& vertices) const;

    /// Faces contained in face i (inclusive), as a set of face indices.
    const VertexSet& below(int i) const { return below_.at(static_cast<std::size_t>(i)); }

    std::vector<std::int64_t> f_vector() const;

    /// Structural checks; each throws the matching Error on violation.
    void check_graded() const;
    void check_lattice() const;
    void check_diamond() const;
    bool euler_poincare_holds() const;

private:
    int dim_;
    int num_vertices_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> by_rank_;
    std::vector<VertexSet> below_;
};

/// f_S indexed by bitmask (bit i set iff dimension i is in S).
class FlagVector {
public:
    FlagVector() = default;
    FlagVector(int dim, std::vector<std::int64_t> values) : dim_(dim), values_(std::move(values)) {}

    int dim() const noexcept { return dim_; }
    std::int64_t operator[](unsigned mask) const { return values_.at(mask); }
    std::int64_t at(std::initializer_list<int> dims) const;
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    static unsigned mask_of(std::initializer_list<int> dims);

    friend bool operator==(const FlagVector&, const FlagVector&) = default;

private:
    int dim_ = 0;
    std::vector<std::int64_t> values_;
};

/// Builds the face lattice by intersection closure of facet vertex sets and
/// runs the graded, lattice and diamond checks.
FaceLattice build_face_lattice(const VertexFacetIncidence& p);

/// Chain counts by dynamic programming over the containment relation.
FlagVector flag_vector(const FaceLattice& lattice);

VertexFacetIncidence dualize(const VertexFacetIncidence& p);

struct BipyramidFacet {
    int facet = -1;
    int apex[2] = {-1, -1};
    bool apex_simple[2] = {false, false};
};

struct LocalStructure {
    std::vector<int> simple_vertices;
    std::vector<int> simplex_facets;
    std::vector<int> square_pyramid_facets;
    std::vector<BipyramidFacet> bipyramid_facets;

    bool has_simple_vertex() const { return !simple_vertices.empty(); }
    bool has_simplex_facet() const { return !simplex_facets.empty(); }
    /// First bipyramid facet (by index) with a simple apex, or nullptr.
    const BipyramidFacet* splittable_bipyramid() const;
};

LocalStructure classify_local(const VertexFacetIncidence& p);
LocalStructure classify_local(const VertexFacetIncidence& p, const FaceLattice& lattice);

/// Everything `verify` reports about one polytope.
struct CheckReport {
    std::vector<std::int64_t> f_vector;
    FlagVector flags;
    bool euler_poincare = false;
    bool linear_flag_relations = true;  // d = 4 only
    bool incidence_identity = true;     // d = 4 only: f02 = -2f0 + 2f1 + f03
    bool facet_upper = true;            // d = 4 only: -3f0 - 3f3 + f03 + 10 >= 0
    bool edge_lower = true;             // d = 4 only: 4f0 - 4f1 + f03 <= 0
    bool f03_shortcut = true;           // sum of facet sizes equals the chain count

    bool all_pass() const {
        return euler_poincare && linear_flag_relations && incidence_identity && facet_upper && edge_lower &&
               f03_shortcut;
    }
};

/// Builds the lattice (throwing on structural failure) and evaluates the
/// flag-vector identities and inequalities that hold for every polytope.
CheckReport check_polytope(const VertexFacetIncidence& p);
CheckReport check_flags(const VertexFacetIncidence& p, const FlagVector& flags, std::vector<std::int64_t> fvec);

} // namespace polypair
