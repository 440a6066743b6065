#include "polypair/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "polypair/cyclic.hpp"
#include "polypair/error.hpp"

namespace polypair {

namespace {

std::vector<int> lattice_nodes_of_facets(const VertexFacetIncidence& p, const FaceLattice& lattice) {
    std::unordered_map<VertexSet, int, VertexSetHash> index;
    for (int i : lattice.rank_indices(p.dim() - 1)) index.emplace(lattice.face(i).vertices, i);
    std::vector<int> nodes;
    const auto n = static_cast<std::size_t>(p.num_vertices());
    for (const auto& f : p.facets()) nodes.push_back(index.at(VertexSet::from(n, f)));
    return nodes;
}

void require_facet(const VertexFacetIncidence& p, int facet) {
    if (facet < 0 || facet >= p.num_facets())
        throw Error(ErrorCode::UnknownFacet, "facet " + std::to_string(facet) + " out of range");
}

VertexFacetIncidence rebuild(int dim, std::vector<Facet> facets, ErrorCode on_failure) {
    try {
        VertexFacetIncidence out(dim, std::move(facets));
        build_face_lattice(out);
        return out;
    } catch (const Error& e) {
        throw Error(on_failure, e.what());
    }
}

// Vertices of a 2-face in cyclic order, starting at the smallest id and
// stepping to its smaller neighbour first.
std::vector<int> polygon_cycle(const FaceLattice& lattice, int face) {
    std::map<int, std::vector<int>> adj;
    lattice.below(face).for_each([&](int e) {
        if (lattice.face(e).rank != 1) return;
        auto ends = lattice.face(e).vertices.to_vector();
        adj[ends[0]].push_back(ends[1]);
        adj[ends[1]].push_back(ends[0]);
    });
    std::vector<int> cycle;
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    do {
        cycle.push_back(cur);
        auto& nb = adj[cur];
        int next = prev < 0 ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
        prev = cur;
        cur = next;
    } while (cur != start && cycle.size() <= adj.size());
    return cycle;
}

} // namespace

// ---------------------------------------------------------------------------
// Stacking and truncation

VertexFacetIncidence stack_beyond_facet(const VertexFacetIncidence& p, int facet) {
    require_facet(p, facet);
    return stack_beyond_facet_set(p, {facet});
}

VertexFacetIncidence stack_beyond_facet_set(const VertexFacetIncidence& p, std::vector<int> beyond) {
    if (beyond.empty()) throw Error(ErrorCode::UnknownFacet, "empty beyond set");
    std::sort(beyond.begin(), beyond.end());
    beyond.erase(std::unique(beyond.begin(), beyond.end()), beyond.end());
    for (int f : beyond) require_facet(p, f);

    const auto lattice = build_face_lattice(p);
    const auto nodes = lattice_nodes_of_facets(p, lattice);
    std::unordered_map<int, int> facet_of;
    for (std::size_t i = 0; i < nodes.size(); ++i) facet_of[nodes[i]] = static_cast<int>(i);
    std::vector<char> is_beyond(static_cast<std::size_t>(p.num_facets()), 0);
    for (int f : beyond) is_beyond[static_cast<std::size_t>(f)] = 1;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(p.num_facets()));
    std::vector<int> boundary;
    for (int r : lattice.rank_indices(p.dim() - 2)) {
        const auto& up = lattice.face(r).covered_by;
        if (up.size() != 2) throw Error(ErrorCode::BadBoundary, "ridge not in exactly two facets");
        int a = facet_of.at(up[0]), b = facet_of.at(up[1]);
        bool ba = is_beyond[static_cast<std::size_t>(a)], bb = is_beyond[static_cast<std::size_t>(b)];
        if (ba && bb) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        } else if (ba != bb) {
            boundary.push_back(r);
        }
    }

    std::set<int> reached{beyond.front()};
    std::vector<int> stack{beyond.front()};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[static_cast<std::size_t>(f)])
            if (reached.insert(g).second) stack.push_back(g);
    }
    if (reached.size() != beyond.size())
        throw Error(ErrorCode::DisconnectedBeyondSet, "beyond facets are not connected through ridges");
    if (boundary.empty()) throw Error(ErrorCode::BadBoundary, "no beneath facets remain");

    const int apex = p.num_vertices();
    std::vector<Facet> facets;
    for (int i = 0; i < p.num_facets(); ++i)
        if (!is_beyond[static_cast<std::size_t>(i)]) facets.push_back(p.facet(i));
    for (int r : boundary) {
        auto f = lattice.face(r).vertices.to_vector();
        f.push_back(apex);
        facets.push_back(std::move(f));
    }
    return rebuild(p.dim(), std::move(facets), ErrorCode::BadBoundary);
}

VertexFacetIncidence truncate_simple_vertex(const VertexFacetIncidence& p, int vertex) {
    if (vertex < 0 || vertex >= p.num_vertices())
        throw Error(ErrorCode::NotSimpleVertex, "vertex " + std::to_string(vertex) + " out of range");
    if (p.vertex_degrees()[static_cast<std::size_t>(vertex)] != p.dim())
        throw Error(ErrorCode::NotSimpleVertex, "vertex " + std::to_string(vertex) + " is not simple");
    return dualize(stack_beyond_facet(dualize(p), vertex));
}

VertexFacetIncidence split_bipyramid_facet(const VertexFacetIncidence& p, int facet) {
    require_facet(p, facet);
    auto local = classify_local(p);
    auto it = std::find_if(local.bipyramid_facets.begin(), local.bipyramid_facets.end(),
                           [&](const BipyramidFacet& b) { return b.facet == facet; });
    if (it == local.bipyramid_facets.end())
        throw Error(ErrorCode::NotBipyramid, "facet " + std::to_string(facet) + " is not a triangular bipyramid");
    if (!it->apex_simple[0] && !it->apex_simple[1])
        throw Error(ErrorCode::NoSimpleApex, "neither apex of facet " + std::to_string(facet) + " is simple");

    Facet equator;
    for (int v : p.facet(facet))
        if (v != it->apex[0] && v != it->apex[1]) equator.push_back(v);
    Facet lower = equator, upper = equator;
    lower.push_back(it->apex[0]);
    upper.push_back(it->apex[1]);

    auto facets = p.facets();
    facets[static_cast<std::size_t>(facet)] = lower;
    facets.insert(facets.begin() + facet + 1, upper);
    return VertexFacetIncidence(p.dim(), std::move(facets));
}

// ---------------------------------------------------------------------------
// Facet splitting

CutShape analyze_cut(const VertexFacetIncidence& p, const FacetCut& cut) {
    if (p.dim() != 4) throw Error(ErrorCode::InvalidCut, "facet splitting needs a 4-polytope");
    require_facet(p, cut.facet);
    const auto& facet = p.facet(cut.facet);

    std::map<int, int> sign;
    for (int v : facet) sign[v] = 1;
    auto assign = [&](const std::vector<int>& vs, int s) {
        for (int v : vs) {
            auto it = sign.find(v);
            if (it == sign.end()) throw Error(ErrorCode::InvalidCut, "vertex " + std::to_string(v) + " not in facet");
            if (it->second != 1) throw Error(ErrorCode::InvalidCut, "vertex " + std::to_string(v) + " listed twice");
            it->second = s;
        }
    };
    assign(cut.negative, -1);
    assign(cut.zero, 0);

    const auto lattice = build_face_lattice(p);
    const int node = lattice.find(VertexSet::from(static_cast<std::size_t>(p.num_vertices()), facet));

    std::map<int, std::vector<int>> nbr;
    lattice.below(node).for_each([&](int e) {
        if (lattice.face(e).rank != 1) return;
        auto ends = lattice.face(e).vertices.to_vector();
        nbr[ends[0]].push_back(ends[1]);
        nbr[ends[1]].push_back(ends[0]);
    });

    // Polygon vertices: crossed edges encoded as (u, w), passed vertices as (v, -1).
    using Element = std::pair<int, int>;
    std::map<Element, std::vector<Element>> sides;
    auto link = [&](Element a, Element b) {
        sides[a].push_back(b);
        sides[b].push_back(a);
    };
    auto edge_element = [](int a, int b) { return Element{std::min(a, b), std::max(a, b)}; };

    for (int r : lattice.face(node).covers) {
        auto cycle = polygon_cycle(lattice, r);
        const std::size_t len = cycle.size();
        auto s = [&](std::size_t j) { return sign[cycle[j % len]]; };
        bool has_neg = false, has_pos = false;
        int zeros = 0;
        for (std::size_t j = 0; j < len; ++j) {
            has_neg |= s(j) < 0;
            has_pos |= s(j) > 0;
            zeros += s(j) == 0;
        }
        if (zeros == static_cast<int>(len)) throw Error(ErrorCode::InvalidCut, "a 2-face lies in the cutting plane");
        if (has_neg && has_pos) {
            std::vector<Element> transitions;
            for (std::size_t j = 0; j < len; ++j) {
                int prev = s(j + len - 1), here = s(j), next = s(j + 1);
                if (here == 0) {
                    if (prev == 0 || next == 0 || prev == next)
                        throw Error(ErrorCode::InvalidCut, "cut touches a crossed 2-face tangentially");
                    transitions.push_back({cycle[j], -1});
                } else if (next != 0 && next != here) {
                    transitions.push_back(edge_element(cycle[j], cycle[(j + 1) % len]));
                }
            }
            if (transitions.size() != 2) throw Error(ErrorCode::InvalidCut, "cut crosses a 2-face more than once");
            link(transitions[0], transitions[1]);
        } else if (zeros == 2) {
            std::size_t first = 0;
            while (s(first) != 0) ++first;
            if (s(first + 1) != 0 && s(first + len - 1) != 0)
                throw Error(ErrorCode::InvalidCut, "two non-adjacent touching vertices on one side");
        } else if (zeros > 2) {
            throw Error(ErrorCode::InvalidCut, "too many touching vertices in a 2-face");
        }
    }

    CutShape shape;
    for (const auto& [v, s] : sign) {
        if (s != 0) continue;
        ++shape.passed_vertices;
        int zero_nbrs = 0;
        bool neg = false, pos = false;
        for (int w : nbr[v]) {
            zero_nbrs += sign[w] == 0;
            neg |= sign[w] < 0;
            pos |= sign[w] > 0;
            if (sign[w] == 0 && v < w) link({v, -1}, {w, -1});
        }
        if (zero_nbrs > 1 || !neg || !pos)
            throw Error(ErrorCode::InvalidCut, "passed vertex " + std::to_string(v) + " is not separated");
    }
    for (const auto& [v, s] : sign) {
        if (s >= 0) continue;
        for (int w : nbr[v])
            if (sign[w] > 0) shape.crossed.push_back(edge_element(v, w));
    }
    std::sort(shape.crossed.begin(), shape.crossed.end());

    const std::size_t expected = shape.crossed.size() + static_cast<std::size_t>(shape.passed_vertices);
    if (expected < 3 || sides.size() != expected) throw Error(ErrorCode::InvalidCut, "cut does not form a polygon");
    for (const auto& [e, adj] : sides)
        if (adj.size() != 2) throw Error(ErrorCode::InvalidCut, "cut polygon is not a simple cycle");
    std::set<Element> seen{sides.begin()->first};
    std::vector<Element> todo{sides.begin()->first};
    while (!todo.empty()) {
        auto e = todo.back();
        todo.pop_back();
        for (const auto& f : sides[e])
            if (seen.insert(f).second) todo.push_back(f);
    }
    if (seen.size() != expected) throw Error(ErrorCode::InvalidCut, "cut polygon has several components");

    auto connected_side = [&](int want) {
        std::vector<int> members;
        for (const auto& [v, s] : sign)
            if (s == want) members.push_back(v);
        if (members.empty()) return false;
        std::set<int> reach{members.front()};
        std::vector<int> work{members.front()};
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            for (int w : nbr[v])
                if (sign[w] == want && reach.insert(w).second) work.push_back(w);
        }
        return reach.size() == members.size();
    };
    if (!connected_side(-1) || !connected_side(1))
        throw Error(ErrorCode::InvalidCut, "each side of the cut must be non-empty and connected");

    const auto degree = p.vertex_degrees();
    auto side_simple = [&](int want) {
        for (const auto& [v, s] : sign)
            if (s == want && degree[static_cast<std::size_t>(v)] != p.dim()) return false;
        return true;
    };
    if (!side_simple(-1) && !side_simple(1))
        throw Error(ErrorCode::SimplicityViolation, "both sides of the cut contain non-simple vertices");
    return shape;
}

VertexFacetIncidence facet_split(const VertexFacetIncidence& p, const FacetCut& cut) {
    const auto shape = analyze_cut(p, cut);
    const int base = p.num_vertices();

    std::set<int> neg(cut.negative.begin(), cut.negative.end());
    std::set<int> zero(cut.zero.begin(), cut.zero.end());
    Facet lower, upper;
    for (int v : p.facet(cut.facet)) {
        if (neg.count(v)) lower.push_back(v);
        else if (zero.count(v)) {
            lower.push_back(v);
            upper.push_back(v);
        } else {
            upper.push_back(v);
        }
    }
    for (std::size_t e = 0; e < shape.crossed.size(); ++e) {
        lower.push_back(base + static_cast<int>(e));
        upper.push_back(base + static_cast<int>(e));
    }

    std::vector<Facet> facets;
    for (int i = 0; i < p.num_facets(); ++i) {
        if (i == cut.facet) {
            facets.push_back(lower);
            continue;
        }
        Facet f = p.facet(i);
        for (std::size_t e = 0; e < shape.crossed.size(); ++e) {
            auto [u, w] = shape.crossed[e];
            if (std::binary_search(p.facet(i).begin(), p.facet(i).end(), u) &&
                std::binary_search(p.facet(i).begin(), p.facet(i).end(), w))
                f.push_back(base + static_cast<int>(e));
        }
        facets.push_back(std::move(f));
    }
    facets.push_back(upper);
    return rebuild(p.dim(), std::move(facets), ErrorCode::InvalidCut);
}

// ---------------------------------------------------------------------------
// Builders

VertexFacetIncidence simplex(int d) {
    std::vector<Facet> facets;
    for (int skip = d; skip >= 0; --skip) {
        Facet f;
        for (int v = 0; v <= d; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return VertexFacetIncidence(d, std::move(facets));
}

VertexFacetIncidence polygon(int k) {
    if (k < 3) throw Error(ErrorCode::DimensionMismatch, "polygon needs at least 3 vertices");
    std::vector<Facet> edges;
    for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
    return VertexFacetIncidence(2, std::move(edges));
}

VertexFacetIncidence polygon_prism(int k) {
    if (k < 3) throw Error(ErrorCode::DimensionMismatch, "prism needs a polygon with at least 3 vertices");
    std::vector<Facet> facets;
    Facet bottom, top;
    for (int i = 0; i < k; ++i) {
        bottom.push_back(i);
        top.push_back(k + i);
    }
    facets.push_back(bottom);
    facets.push_back(top);
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        facets.push_back({i, j, k + i, k + j});
    }
    return VertexFacetIncidence(3, std::move(facets));
}

VertexFacetIncidence polygon_bipyramid(int k) {
    if (k < 3) throw Error(ErrorCode::DimensionMismatch, "bipyramid needs a polygon with at least 3 vertices");
    std::vector<Facet> facets;
    for (int apex : {k, k + 1})
        for (int i = 0; i < k; ++i) facets.push_back({i, (i + 1) % k, apex});
    return VertexFacetIncidence(3, std::move(facets));
}

VertexFacetIncidence pyramid_over(const VertexFacetIncidence& base, int target_dim) {
    if (base.dim() + 1 != target_dim)
        throw Error(ErrorCode::DimensionMismatch, "base of dimension " + std::to_string(base.dim()) +
                                                      " cannot give a pyramid of dimension " + std::to_string(target_dim));
    const int apex = base.num_vertices();
    std::vector<Facet> facets;
    Facet all;
    for (int v = 0; v < apex; ++v) all.push_back(v);
    facets.push_back(all);
    for (const auto& f : base.facets()) {
        Facet g = f;
        g.push_back(apex);
        facets.push_back(std::move(g));
    }
    return VertexFacetIncidence(target_dim, std::move(facets));
}

VertexFacetIncidence pyramid_over_polygon(int k, int folds) {
    auto p = polygon(k);
    for (int i = 0; i < folds; ++i) p = pyramid_over(p, p.dim() + 1);
    return p;
}

// ---------------------------------------------------------------------------
// Cyclic families

std::pair<int, int> first_edge_in(const VertexFacetIncidence& p, int count) {
    const auto lattice = build_face_lattice(p);
    std::vector<std::pair<int, int>> hits;
    for (int e : lattice.rank_indices(1)) {
        auto ends = lattice.face(e).vertices.to_vector();
        int in = 0;
        for (const auto& f : p.facets())
            if (std::binary_search(f.begin(), f.end(), ends[0]) && std::binary_search(f.begin(), f.end(), ends[1])) ++in;
        if (in == count) hits.emplace_back(ends[0], ends[1]);
    }
    if (hits.empty()) return {-1, -1};
    return *std::min_element(hits.begin(), hits.end());
}

std::vector<int> facets_around_edge(const VertexFacetIncidence& p, std::pair<int, int> edge) {
    const auto lattice = build_face_lattice(p);
    const auto nodes = lattice_nodes_of_facets(p, lattice);
    std::unordered_map<int, int> facet_of;
    for (std::size_t i = 0; i < nodes.size(); ++i) facet_of[nodes[i]] = static_cast<int>(i);

    std::map<int, std::vector<int>> adj;
    for (int r : lattice.rank_indices(p.dim() - 2)) {
        const auto& vs = lattice.face(r).vertices;
        if (!vs.contains(edge.first) || !vs.contains(edge.second)) continue;
        const auto& up = lattice.face(r).covered_by;
        int a = facet_of.at(up[0]), b = facet_of.at(up[1]);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (adj.empty()) return {};
    auto less_facet = [&](int a, int b) { return p.facet(a) < p.facet(b); };
    int start = adj.begin()->first;
    for (const auto& [f, _] : adj)
        if (less_facet(f, start)) start = f;

    std::vector<int> order{start};
    int prev = start;
    const auto& first = adj[start];
    int cur = less_facet(first[0], first[1]) ? first[0] : first[1];
    while (cur != start && order.size() < adj.size()) {
        order.push_back(cur);
        const auto& nb = adj[cur];
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

VertexFacetIncidence generalized_stack(int i, int n) {
    if (n < 5 || i < 1 || i > n - 3)
        throw Error(ErrorCode::InvalidDimension, "R_i(n) needs n >= 5 and 1 <= i <= n - 3");
    auto c = cyclic_polytope(4, n);
    auto edge = first_edge_in(c, n - 2);
    auto around = facets_around_edge(c, edge);
    around.resize(static_cast<std::size_t>(i));
    return stack_beyond_facet_set(c, around);
}

bool delta_legal(int k, int i, int n) {
    if (n < 7 || k < 0 || k > 3 || i < 3) return false;
    return k == 3 ? i <= n - 3 : i <= n - 2;
}

FacetCut wedge_cut(const VertexFacetIncidence& dual_cyclic, int k, int i) {
    const int n = dual_cyclic.num_facets();
    if (!delta_legal(k, i, n))
        throw Error(ErrorCode::InvalidCut, "no canonical cut for k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                               " n=" + std::to_string(n));
    const auto lattice = build_face_lattice(dual_cyclic);
    const auto& facet = dual_cyclic.facet(0);
    const int node = lattice.find(VertexSet::from(static_cast<std::size_t>(dual_cyclic.num_vertices()), facet));

    std::vector<int> big;
    for (int r : lattice.face(node).covers)
        if (lattice.face(r).vertices.count() == static_cast<std::size_t>(n - 2)) big.push_back(r);
    if (big.size() != 2) throw Error(ErrorCode::InvalidCut, "facet 0 is not a wedge over an (n-2)-gon");
    auto va = lattice.face(big[0]).vertices.to_vector();
    auto vb = lattice.face(big[1]).vertices.to_vector();
    const int bottom = va < vb ? big[0] : big[1];
    const auto& bottom_set = lattice.face(bottom).vertices;
    auto shared = (lattice.face(big[0]).vertices & lattice.face(big[1]).vertices).to_vector();
    if (shared.size() != 2) throw Error(ErrorCode::InvalidCut, "wedge faces do not meet in an edge");
    const int a = shared[0], b = shared[1];

    // Bottom polygon from A away from B: b_1 = A, ..., b_{n-2} = B.
    auto cycle = polygon_cycle(lattice, bottom);
    auto pos = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), a) - cycle.begin());
    const std::size_t len = cycle.size();
    const int step = cycle[(pos + 1) % len] == b ? static_cast<int>(len) - 1 : 1;
    std::vector<int> bot;
    for (std::size_t j = 0; j < len; ++j) bot.push_back(cycle[(pos + static_cast<std::size_t>(step) * j) % len]);

    std::map<int, std::vector<int>> nbr;
    lattice.below(node).for_each([&](int e) {
        if (lattice.face(e).rank != 1) return;
        auto ends = lattice.face(e).vertices.to_vector();
        nbr[ends[0]].push_back(ends[1]);
        nbr[ends[1]].push_back(ends[0]);
    });
    auto top_neighbour = [&](int v) {
        for (int w : nbr[v])
            if (!bottom_set.contains(w)) return w;
        throw Error(ErrorCode::InvalidCut, "wedge vertex without a top neighbour");
    };

    const int r = k == 3 ? i - 1 : i - 2;
    FacetCut cut;
    cut.facet = 0;
    for (int j = 0; j < r; ++j) cut.negative.push_back(bot[static_cast<std::size_t>(j)]);
    if (k >= 1) cut.zero.push_back(bot[static_cast<std::size_t>(r)]);
    if (k >= 2) cut.zero.push_back(b);
    if (k >= 3) cut.zero.push_back(top_neighbour(bot[1]));
    return cut;
}

VertexFacetIncidence delta_split(int k, int i, int n) {
    auto dual = dualize(cyclic_polytope(4, n));
    return facet_split(dual, wedge_cut(dual, k, i));
}

VertexFacetIncidence delta_star(int k, int i, int n) { return dualize(delta_split(k, i, n)); }

std::pair<int, int> adjacent_simplex_pair(const VertexFacetIncidence& p) {
    const auto local = classify_local(p);
    const auto& s = local.simplex_facets;
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = x + 1; y < s.size(); ++y) {
            const auto& f = p.facet(s[x]);
            const auto& g = p.facet(s[y]);
            Facet common;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) == p.dim() - 1) return {s[x], s[y]};
        }
    }
    return {-1, -1};
}

VertexFacetIncidence delta_star3_double_stack(int n) {
    auto base = delta_star(3, n - 3, n);
    auto [f, g] = adjacent_simplex_pair(base);
    if (f < 0) throw Error(ErrorCode::BadBoundary, "no adjacent simplex facets");
    return stack_beyond_facet_set(base, {f, g});
}

} // namespace polypair
