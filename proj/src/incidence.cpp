#include "polypair/incidence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "polypair/error.hpp"

namespace polypair {

namespace {

bool is_subset(const Facet& a, const Facet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string describe(const Facet& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(f[i]);
    }
    return s + "}";
}

} // namespace

VertexFacetIncidence::VertexFacetIncidence(int dim, std::vector<Facet> facets) : dim_(dim), facets_(std::move(facets)) {
    if (dim_ < 2) throw Error(ErrorCode::ValidationError, "dimension must be at least 2");
    int max_id = -1;
    for (auto& f : facets_) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorCode::ValidationError, "repeated vertex in facet " + describe(f));
        if (f.empty()) throw Error(ErrorCode::ValidationError, "empty facet");
        if (f.front() < 0) throw Error(ErrorCode::ValidationError, "negative vertex id");
        max_id = std::max(max_id, f.back());
    }
    num_vertices_ = max_id + 1;
    if (num_facets() < dim_ + 1)
        throw Error(ErrorCode::ValidationError, "too few facets for dimension " + std::to_string(dim_));
    if (num_vertices_ < dim_ + 1)
        throw Error(ErrorCode::ValidationError, "too few vertices for dimension " + std::to_string(dim_));

    auto degree = vertex_degrees();
    for (int v = 0; v < num_vertices_; ++v) {
        if (degree[static_cast<std::size_t>(v)] < dim_)
            throw Error(ErrorCode::ValidationError,
                        "vertex " + std::to_string(v) + " lies in " + std::to_string(degree[static_cast<std::size_t>(v)]) +
                            " facets, fewer than the dimension");
    }
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        for (std::size_t j = 0; j < facets_.size(); ++j) {
            if (i == j || facets_[i].size() > facets_[j].size()) continue;
            if (is_subset(facets_[i], facets_[j]))
                throw Error(ErrorCode::ValidationError,
                            "facet " + describe(facets_[i]) + " is contained in facet " + describe(facets_[j]));
        }
    }
}

std::vector<int> VertexFacetIncidence::vertex_degrees() const {
    std::vector<int> degree(static_cast<std::size_t>(num_vertices_), 0);
    for (const auto& f : facets_)
        for (int v : f) ++degree[static_cast<std::size_t>(v)];
    return degree;
}

std::int64_t VertexFacetIncidence::vertex_facet_incidences() const {
    std::int64_t total = 0;
    for (const auto& f : facets_) total += static_cast<std::int64_t>(f.size());
    return total;
}

VertexFacetIncidence VertexFacetIncidence::canonical() const {
    auto copy = *this;
    std::sort(copy.facets_.begin(), copy.facets_.end());
    return copy;
}

// ---------------------------------------------------------------------------
// Face lattice

FaceLattice::FaceLattice(int dim, int num_vertices, std::vector<Face> faces)
    : dim_(dim), num_vertices_(num_vertices), faces_(std::move(faces)) {
    by_rank_.assign(static_cast<std::size_t>(dim_ + 2), {});
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        int r = faces_[i].rank;
        if (r < -1 || r > dim_)
            throw Error(ErrorCode::NotGraded, "face rank " + std::to_string(r) + " outside -1.." + std::to_string(dim_));
        by_rank_[static_cast<std::size_t>(r + 1)].push_back(static_cast<int>(i));
    }
    if (by_rank_.front().size() != 1 || by_rank_.back().size() != 1)
        throw Error(ErrorCode::NotGraded, "lattice must have a unique bottom and top");

    // Faces are processed by rank so every cover's closure is ready.
    const std::size_t n = faces_.size();
    below_.assign(n, VertexSet(n));
    for (const auto& level : by_rank_) {
        for (int i : level) {
            auto& b = below_[static_cast<std::size_t>(i)];
            b.insert(i);
            for (int c : faces_[static_cast<std::size_t>(i)].covers) b |= below_[static_cast<std::size_t>(c)];
        }
    }
}

int FaceLattice::find(const VertexSet& vertices) const {
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].vertices == vertices) return static_cast<int>(i);
    return -1;
}

std::vector<std::int64_t> FaceLattice::f_vector() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(dim_), 0);
    for (int r = 0; r < dim_; ++r) f[static_cast<std::size_t>(r)] = static_cast<std::int64_t>(rank_indices(r).size());
    return f;
}

void FaceLattice::check_graded() const {
    for (const auto& f : faces_) {
        for (int c : f.covers) {
            if (faces_[static_cast<std::size_t>(c)].rank != f.rank - 1)
                throw Error(ErrorCode::NotGraded, "cover relation skips a rank");
        }
    }
    if (face(top()).rank != dim_) throw Error(ErrorCode::NotGraded, "top face has wrong rank");
    VertexSet seen(static_cast<std::size_t>(num_vertices_));
    for (int i : rank_indices(0)) {
        const auto& vs = face(i).vertices;
        if (vs.count() != 1) throw Error(ErrorCode::NotGraded, "rank-0 face is not a single vertex");
        seen |= vs;
    }
    if (seen.count() != static_cast<std::size_t>(num_vertices_))
        throw Error(ErrorCode::NotGraded, "some vertex is not a rank-0 face");
}

void FaceLattice::check_lattice() const {
    std::unordered_map<VertexSet, int, VertexSetHash> index;
    index.reserve(faces_.size() * 2);
    for (std::size_t i = 0; i < faces_.size(); ++i) index.emplace(faces_[i].vertices, static_cast<int>(i));

    const int n = static_cast<int>(faces_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (below(i).contains(j) || below(j).contains(i)) continue;
            auto meet = face(i).vertices & face(j).vertices;
            if (index.count(meet)) continue;
            // Not closed under intersection: the poset is still a lattice if the
            // common lower bounds have a single maximal element.
            auto common = below(i) & below(j);
            int maximal = 0;
            common.for_each([&](int k) {
                bool dominated = false;
                common.for_each([&](int other) {
                    if (other != k && below(other).contains(k)) dominated = true;
                });
                if (!dominated) ++maximal;
            });
            if (maximal != 1) throw Error(ErrorCode::NotLattice, "two faces without a unique meet");
        }
    }
}

void FaceLattice::check_diamond() const {
    std::vector<int> count(faces_.size(), 0);
    std::vector<int> touched;
    for (const auto& g : faces_) {
        touched.clear();
        for (int h : g.covers) {
            for (int k : faces_[static_cast<std::size_t>(h)].covers) {
                if (count[static_cast<std::size_t>(k)]++ == 0) touched.push_back(k);
            }
        }
        for (int k : touched) {
            if (count[static_cast<std::size_t>(k)] != 2)
                throw Error(ErrorCode::NotDiamond, "rank-2 interval with " +
                                                       std::to_string(count[static_cast<std::size_t>(k)]) +
                                                       " middle elements");
            count[static_cast<std::size_t>(k)] = 0;
        }
    }
}

bool FaceLattice::euler_poincare_holds() const {
    auto f = f_vector();
    std::int64_t alt = 0;
    for (int i = 0; i < dim_; ++i) alt += (i % 2 == 0 ? 1 : -1) * f[static_cast<std::size_t>(i)];
    return alt == (dim_ % 2 == 0 ? 0 : 2);
}

FaceLattice build_face_lattice(const VertexFacetIncidence& p) {
    const auto n = static_cast<std::size_t>(p.num_vertices());
    std::vector<VertexSet> facet_sets;
    facet_sets.reserve(static_cast<std::size_t>(p.num_facets()));
    for (const auto& f : p.facets()) facet_sets.push_back(VertexSet::from(n, f));

    std::vector<Face> faces;
    std::unordered_map<VertexSet, int, VertexSetHash> index;
    auto intern = [&](const VertexSet& vs, bool& created) {
        auto it = index.find(vs);
        if (it != index.end()) {
            created = false;
            return it->second;
        }
        created = true;
        int id = static_cast<int>(faces.size());
        faces.push_back(Face{vs, 0, {}, {}});
        index.emplace(vs, id);
        return id;
    };

    bool created = false;
    const int top = intern(VertexSet::full(n), created);
    std::deque<int> queue;
    for (const auto& fs : facet_sets) {
        int id = intern(fs, created);
        faces[static_cast<std::size_t>(top)].covers.push_back(id);
        if (created) queue.push_back(id);
    }

    // Maximal proper intersections of a face with the facets are exactly the
    // faces it covers.
    std::vector<VertexSet> candidates;
    while (!queue.empty()) {
        int current = queue.front();
        queue.pop_front();
        const VertexSet vs = faces[static_cast<std::size_t>(current)].vertices;
        candidates.clear();
        for (const auto& fs : facet_sets) {
            auto meet = vs & fs;
            if (meet == vs) continue;
            if (std::find(candidates.begin(), candidates.end(), meet) == candidates.end()) candidates.push_back(meet);
        }
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < candidates.size() && maximal; ++b) {
                if (a != b && candidates[a].is_subset_of(candidates[b])) maximal = false;
            }
            if (!maximal) continue;
            int id = intern(candidates[a], created);
            faces[static_cast<std::size_t>(current)].covers.push_back(id);
            if (created) queue.push_back(id);
        }
    }

    // Rank = length of the longest chain from the empty face.
    std::vector<int> order(faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return faces[static_cast<std::size_t>(a)].vertices.count() < faces[static_cast<std::size_t>(b)].vertices.count();
    });
    if (!faces[static_cast<std::size_t>(order.front())].vertices.empty())
        throw Error(ErrorCode::NotGraded, "facets have a common vertex; no empty face");
    for (int i : order) {
        auto& f = faces[static_cast<std::size_t>(i)];
        int r = -1;
        for (int c : f.covers) r = std::max(r, faces[static_cast<std::size_t>(c)].rank + 1);
        f.rank = f.covers.empty() ? -1 : r;
    }
    if (faces[static_cast<std::size_t>(top)].rank != p.dim())
        throw Error(ErrorCode::NotGraded, "longest chain has length " +
                                              std::to_string(faces[static_cast<std::size_t>(top)].rank + 1) +
                                              ", expected " + std::to_string(p.dim() + 1));

    // Canonical order: by rank, then by sorted vertex list.
    std::vector<std::vector<int>> lists(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) lists[i] = faces[i].vertices.to_vector();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& fa = faces[static_cast<std::size_t>(a)];
        const auto& fb = faces[static_cast<std::size_t>(b)];
        if (fa.rank != fb.rank) return fa.rank < fb.rank;
        return lists[static_cast<std::size_t>(a)] < lists[static_cast<std::size_t>(b)];
    });
    std::vector<int> position(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<Face> sorted;
    sorted.reserve(faces.size());
    for (int old : order) {
        Face f = std::move(faces[static_cast<std::size_t>(old)]);
        for (int& c : f.covers) c = position[static_cast<std::size_t>(c)];
        std::sort(f.covers.begin(), f.covers.end());
        sorted.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (int c : sorted[i].covers) sorted[static_cast<std::size_t>(c)].covered_by.push_back(static_cast<int>(i));

    FaceLattice lattice(p.dim(), p.num_vertices(), std::move(sorted));
    lattice.check_graded();
    lattice.check_diamond();
    lattice.check_lattice();
    return lattice;
}

// ---------------------------------------------------------------------------
// Flag vector

unsigned FlagVector::mask_of(std::initializer_list<int> dims) {
    unsigned m = 0;
    for (int d : dims) m |= 1u << d;
    return m;
}

std::int64_t FlagVector::at(std::initializer_list<int> dims) const { return values_.at(mask_of(dims)); }

FlagVector flag_vector(const FaceLattice& lattice) {
    const int d = lattice.dim();
    const auto nfaces = lattice.faces().size();
    std::vector<std::int64_t> values(std::size_t{1} << d, 0);
    std::vector<std::int64_t> count(nfaces), next(nfaces);

    for (unsigned mask = 0; mask < values.size(); ++mask) {
        if (mask == 0) {
            values[0] = 1;
            continue;
        }
        std::vector<int> dims;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) dims.push_back(i);

        std::fill(count.begin(), count.end(), 0);
        for (int f : lattice.rank_indices(dims.front())) count[static_cast<std::size_t>(f)] = 1;
        for (std::size_t j = 1; j < dims.size(); ++j) {
            std::fill(next.begin(), next.end(), 0);
            const int lower = dims[j - 1];
            for (int f : lattice.rank_indices(dims[j])) {
                std::int64_t total = 0;
                lattice.below(f).for_each([&](int g) {
                    if (lattice.face(g).rank == lower) total += count[static_cast<std::size_t>(g)];
                });
                next[static_cast<std::size_t>(f)] = total;
            }
            std::swap(count, next);
        }
        std::int64_t total = 0;
        for (int f : lattice.rank_indices(dims.back())) total += count[static_cast<std::size_t>(f)];
        values[mask] = total;
    }
    return FlagVector(d, std::move(values));
}

VertexFacetIncidence dualize(const VertexFacetIncidence& p) {
    std::vector<Facet> dual(static_cast<std::size_t>(p.num_vertices()));
    for (int i = 0; i < p.num_facets(); ++i)
        for (int v : p.facet(i)) dual[static_cast<std::size_t>(v)].push_back(i);
    return VertexFacetIncidence(p.dim(), std::move(dual));
}

// ---------------------------------------------------------------------------
// Local structure

const BipyramidFacet* LocalStructure::splittable_bipyramid() const {
    for (const auto& b : bipyramid_facets)
        if (b.apex_simple[0] || b.apex_simple[1]) return &b;
    return nullptr;
}

LocalStructure classify_local(const VertexFacetIncidence& p) { return classify_local(p, build_face_lattice(p)); }

LocalStructure classify_local(const VertexFacetIncidence& p, const FaceLattice& lattice) {
    LocalStructure out;
    const int d = p.dim();
    auto degree = p.vertex_degrees();
    for (int v = 0; v < p.num_vertices(); ++v)
        if (degree[static_cast<std::size_t>(v)] == d) out.simple_vertices.push_back(v);

    const auto n = static_cast<std::size_t>(p.num_vertices());
    for (int i = 0; i < p.num_facets(); ++i) {
        const auto& f = p.facet(i);
        if (static_cast<int>(f.size()) == d) out.simplex_facets.push_back(i);
        if (d != 4 || f.size() != 5) continue;

        int idx = lattice.find(VertexSet::from(n, f));
        const auto& ridges = lattice.face(idx).covers;
        std::vector<std::size_t> sizes;
        for (int r : ridges) sizes.push_back(lattice.face(r).vertices.count());
        auto triangles = std::count(sizes.begin(), sizes.end(), std::size_t{3});
        auto quads = std::count(sizes.begin(), sizes.end(), std::size_t{4});

        if (ridges.size() == 5 && quads == 1 && triangles == 4) {
            out.square_pyramid_facets.push_back(i);
        } else if (ridges.size() == 6 && triangles == 6) {
            BipyramidFacet b;
            b.facet = i;
            int found = 0;
            for (int v : f) {
                int in = 0;
                for (int r : ridges)
                    if (lattice.face(r).vertices.contains(v)) ++in;
                if (in == 3 && found < 2) {
                    b.apex[found] = v;
                    b.apex_simple[found] = degree[static_cast<std::size_t>(v)] == d;
                    ++found;
                }
            }
            if (found == 2) out.bipyramid_facets.push_back(b);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_flags(const VertexFacetIncidence& p, const FlagVector& fl, std::vector<std::int64_t> fvec) {
    CheckReport r;
    r.f_vector = std::move(fvec);
    r.flags = fl;
    const int d = p.dim();
    std::int64_t alt = 0;
    for (int i = 0; i < d; ++i) alt += (i % 2 == 0 ? 1 : -1) * r.f_vector[static_cast<std::size_t>(i)];
    r.euler_poincare = alt == (d % 2 == 0 ? 0 : 2);
    r.f03_shortcut = fl[(1u << 0) | (1u << (d - 1))] == p.vertex_facet_incidences();
    if (d == 4) {
        const auto f0 = fl.at({0}), f1 = fl.at({1}), f2 = fl.at({2}), f3 = fl.at({3});
        const auto f02 = fl.at({0, 2}), f03 = fl.at({0, 3});
        r.linear_flag_relations = fl.at({0, 1}) == 2 * f1 && fl.at({1, 2}) == f02 && fl.at({1, 3}) == f02 &&
                                  fl.at({2, 3}) == 2 * f2 && fl.at({0, 1, 2}) == 2 * f02 &&
                                  fl.at({0, 1, 3}) == 2 * f02 && fl.at({0, 2, 3}) == 2 * f02 &&
                                  fl.at({1, 2, 3}) == 2 * f02 && fl.at({0, 1, 2, 3}) == 4 * f02;
        r.incidence_identity = f02 == -2 * f0 + 2 * f1 + f03;
        r.facet_upper = -3 * f0 - 3 * f3 + f03 + 10 >= 0;
        r.edge_lower = 4 * f0 - 4 * f1 + f03 <= 0;
    }
    return r;
}

CheckReport check_polytope(const VertexFacetIncidence& p) {
    auto lattice = build_face_lattice(p);
    auto fl = flag_vector(lattice);
    return check_flags(p, fl, lattice.f_vector());
}

} // namespace polypair
